#pragma once

// Affine Cartan data (index set, generalized Cartan matrix, marks/comarks)
// and classical weights in the fundamental-weight basis.

#include <stdexcept>
#include <string>
#include <vector>

namespace gcrystal {

struct CartanData {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> matrix;  // a[i][j]
    std::vector<int> marks;                // null root delta = sum marks[i] * alpha_i
    std::vector<int> comarks;              // central element c = sum comarks[i] * alpha_i^vee

    size_t rank() const { return labels.size(); }
    int a(size_t i, size_t j) const { return matrix[i][j]; }

    void validate() const {
        size_t n = rank();
        if (matrix.size() != n || marks.size() != n || comarks.size() != n)
            throw std::invalid_argument("CartanData: inconsistent sizes");
        for (size_t i = 0; i < n; ++i) {
            if (matrix[i].size() != n) throw std::invalid_argument("CartanData: ragged matrix");
            if (matrix[i][i] != 2) throw std::invalid_argument("CartanData: diagonal must be 2");
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (matrix[i][j] > 0)
                    throw std::invalid_argument("CartanData: off-diagonal must be <= 0");
                if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
                    throw std::invalid_argument("CartanData: zero pattern must be symmetric");
            }
        }
    }
};

// G2^(1): indices 0,1,2 with the triple arrow between 1 and 2 (a_21 = -3).
inline CartanData cartan_g2_affine() {
    CartanData c;
    c.labels = {"0", "1", "2"};
    c.matrix = {{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}};
    c.marks = {1, 2, 3};
    c.comarks = {1, 2, 3};
    c.validate();
    return c;
}

// D4^(3): delta = a0 + 2*a1 + a2, c = a0^vee + 2*a1^vee + 3*a2^vee.
inline CartanData cartan_d43() {
    CartanData c;
    c.labels = {"0", "1", "2"};
    c.matrix = {{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}};
    c.marks = {1, 2, 1};
    c.comarks = {1, 2, 3};
    c.validate();
    return c;
}

// Element of P_cl in the basis of fundamental weights Lambda_i.
struct ClassicalWeight {
    std::vector<int> k;

    static ClassicalWeight zero(size_t rank) { return {std::vector<int>(rank, 0)}; }

    int level(const CartanData& c) const {
        int l = 0;
        for (size_t i = 0; i < k.size(); ++i) l += c.comarks[i] * k[i];
        return l;
    }
    bool dominant() const {
        for (int v : k)
            if (v < 0) return false;
        return true;
    }
    int pairing(size_t i) const { return k[i]; }  // <alpha_i^vee, weight>

    ClassicalWeight operator+(const ClassicalWeight& o) const {
        ClassicalWeight r = *this;
        for (size_t i = 0; i < k.size(); ++i) r.k[i] += o.k[i];
        return r;
    }
    ClassicalWeight operator-(const ClassicalWeight& o) const {
        ClassicalWeight r = *this;
        for (size_t i = 0; i < k.size(); ++i) r.k[i] -= o.k[i];
        return r;
    }
    auto operator<=>(const ClassicalWeight&) const = default;
};

// cl(alpha_j) in the Lambda basis is the j-th column of the Cartan matrix.
inline ClassicalWeight simple_root_cl(const CartanData& c, size_t j) {
    ClassicalWeight w = ClassicalWeight::zero(c.rank());
    for (size_t i = 0; i < c.rank(); ++i) w.k[i] = c.a(i, j);
    return w;
}

// All dominant classical weights of the given level: comarks . k = level.
inline std::vector<ClassicalWeight> dominant_weights_of_level(const CartanData& c, int level) {
    std::vector<ClassicalWeight> out;
    std::vector<int> k(c.rank(), 0);
    // Direct nested enumeration; rank is 3 for everything shipped here.
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (i + 1 == c.rank()) {
            if (remaining % c.comarks[i] == 0) {
                k[i] = remaining / c.comarks[i];
                out.push_back(ClassicalWeight{k});
            }
            return;
        }
        for (int v = 0; v * c.comarks[i] <= remaining; ++v) {
            k[i] = v;
            self(self, i + 1, remaining - v * c.comarks[i]);
        }
    };
    rec(rec, 0, level);
    return out;
}

struct Word {
    std::vector<size_t> indices;  // indices into the Cartan index set

    Word(std::initializer_list<size_t> v) : indices(v) { check(); }
    explicit Word(std::vector<size_t> v) : indices(std::move(v)) { check(); }

    size_t length() const { return indices.size(); }
    size_t at(size_t pos) const { return indices[pos]; }

private:
    void check() const {
        if (indices.empty()) throw std::invalid_argument("Word: must be nonempty");
    }
};

}  // namespace gcrystal
