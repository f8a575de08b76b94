#pragma once

// Max-plus piecewise-linear functions and the degree-valuation map from
// subtraction-free rational expressions.
//
// A PLFunction is a difference of two max-plus polynomials; its value at an
// integer point is max over the plus-forms minus max over the minus-forms.
// Functional equality is decided by exhaustive evaluation over finite boxes,
// never by canonical form (dominated forms are kept).

#include "gcrystal/expr.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gcrystal {

struct LinForm {
    std::map<std::string, std::int64_t> coeffs;  // zero coefficients absent
    std::int64_t constant = 0;

    auto operator<=>(const LinForm&) const = default;

    LinForm operator+(const LinForm& o) const {
        LinForm r = *this;
        r.constant += o.constant;
        for (const auto& [v, k] : o.coeffs) {
            auto c = (r.coeffs.count(v) ? r.coeffs[v] : 0) + k;
            if (c == 0) r.coeffs.erase(v);
            else r.coeffs[v] = c;
        }
        return r;
    }

    std::int64_t eval(const std::map<std::string, std::int64_t>& point) const {
        std::int64_t acc = constant;
        for (const auto& [v, k] : coeffs) {
            auto it = point.find(v);
            if (it == point.end()) throw std::domain_error("unbound tropical variable: " + v);
            acc += k * it->second;
        }
        return acc;
    }
};

class MaxPlusPoly {
public:
    MaxPlusPoly() = default;
    explicit MaxPlusPoly(std::vector<LinForm> forms) : forms_(std::move(forms)) { normalize(); }
    static MaxPlusPoly zero_form() { return MaxPlusPoly({LinForm{}}); }

    const std::vector<LinForm>& forms() const { return forms_; }

    std::int64_t eval(const std::map<std::string, std::int64_t>& point) const {
        check_nonempty();
        std::int64_t best = forms_[0].eval(point);
        for (size_t i = 1; i < forms_.size(); ++i) best = std::max(best, forms_[i].eval(point));
        return best;
    }

    // Tropical product: pointwise sum = Minkowski sum of form sets.
    MaxPlusPoly operator+(const MaxPlusPoly& o) const {
        check_nonempty();
        o.check_nonempty();
        std::vector<LinForm> out;
        out.reserve(forms_.size() * o.forms_.size());
        for (const auto& a : forms_)
            for (const auto& b : o.forms_) out.push_back(a + b);
        return MaxPlusPoly(std::move(out));
    }

    // Tropical sum: pointwise max = union of form sets.
    MaxPlusPoly max_with(const MaxPlusPoly& o) const {
        std::vector<LinForm> out = forms_;
        out.insert(out.end(), o.forms_.begin(), o.forms_.end());
        return MaxPlusPoly(std::move(out));
    }

    MaxPlusPoly substituted(const std::string& var, std::int64_t value) const {
        std::vector<LinForm> out;
        out.reserve(forms_.size());
        for (const auto& f : forms_) {
            LinForm g = f;
            auto it = g.coeffs.find(var);
            if (it != g.coeffs.end()) {
                g.constant += it->second * value;
                g.coeffs.erase(it);
            }
            out.push_back(std::move(g));
        }
        return MaxPlusPoly(std::move(out));
    }

    void collect_variables(std::set<std::string>& out) const {
        for (const auto& f : forms_)
            for (const auto& [v, k] : f.coeffs) out.insert(v);
    }

    bool operator==(const MaxPlusPoly& o) const { return forms_ == o.forms_; }

private:
    void normalize() {
        std::sort(forms_.begin(), forms_.end());
        forms_.erase(std::unique(forms_.begin(), forms_.end()), forms_.end());
        check_nonempty();
    }
    void check_nonempty() const {
        if (forms_.empty()) throw std::invalid_argument("MaxPlusPoly: no forms");
    }
    std::vector<LinForm> forms_;
};

struct PLFunction {
    MaxPlusPoly plus = MaxPlusPoly::zero_form();
    MaxPlusPoly minus = MaxPlusPoly::zero_form();

    std::int64_t eval(const std::map<std::string, std::int64_t>& point) const {
        return plus.eval(point) - minus.eval(point);
    }

    PLFunction substituted(const std::string& var, std::int64_t value) const {
        return {plus.substituted(var, value), minus.substituted(var, value)};
    }

    std::set<std::string> variables() const {
        std::set<std::string> v;
        plus.collect_variables(v);
        minus.collect_variables(v);
        return v;
    }

    bool operator==(const PLFunction& o) const { return plus == o.plus && minus == o.minus; }
};

inline std::int64_t eval_pl(const PLFunction& f, const std::map<std::string, std::int64_t>& point) {
    return f.eval(point);
}

// Degree valuation: a monomial c*x^a maps to the linear form a (positive
// constants have degree zero), a positive sum maps to the max over its
// terms, a quotient to the difference.
inline MaxPlusPoly ultra_discretize(const PosPoly& p) {
    std::vector<LinForm> forms;
    forms.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        LinForm f;
        for (const auto& [v, k] : e) f.coeffs[v] = k;
        forms.push_back(std::move(f));
    }
    return MaxPlusPoly(std::move(forms));
}

inline PLFunction ultra_discretize(const PosRatExpr& expr) {
    PLFunction f{ultra_discretize(expr.num()), ultra_discretize(expr.den())};
    // A single-monomial denominator is a linear form; fold it into the
    // numerator so trivial quotients keep the exponent-difference shape.
    if (f.minus.forms().size() == 1) {
        LinForm d = f.minus.forms()[0];
        d.constant = -d.constant;
        for (auto& [v, k] : d.coeffs) k = -k;
        std::vector<LinForm> shifted;
        for (const auto& p : f.plus.forms()) shifted.push_back(p + d);
        f.plus = MaxPlusPoly(std::move(shifted));
        f.minus = MaxPlusPoly::zero_form();
    }
    return f;
}

inline PLFunction pl_max(const PLFunction& f, const PLFunction& g) {
    // max(a-b, c-d) = max(a+d, c+b) - (b+d)
    return {(f.plus + g.minus).max_with(g.plus + f.minus), f.minus + g.minus};
}
inline PLFunction pl_add(const PLFunction& f, const PLFunction& g) {
    return {f.plus + g.plus, f.minus + g.minus};
}
inline PLFunction pl_sub(const PLFunction& f, const PLFunction& g) {
    return {f.plus + g.minus, f.minus + g.plus};
}
inline PLFunction pl_const(std::int64_t k) {
    PLFunction f;
    if (k >= 0) f.plus = MaxPlusPoly({LinForm{{}, k}});
    else f.minus = MaxPlusPoly({LinForm{{}, -k}});
    return f;
}
inline PLFunction pl_var(const std::string& v) {
    return {MaxPlusPoly({LinForm{{{v, 1}}, 0}}), MaxPlusPoly::zero_form()};
}

// Fixed-variable-order evaluator for hot loops.
class CompiledPL {
public:
    CompiledPL() = default;
    CompiledPL(const PLFunction& f, const std::vector<std::string>& var_order) {
        for (const auto& v : f.variables())
            if (std::find(var_order.begin(), var_order.end(), v) == var_order.end())
                throw std::domain_error("unbound tropical variable: " + v);
        compile(f.plus.forms(), var_order, plus_);
        compile(f.minus.forms(), var_order, minus_);
    }

    std::int64_t eval(const std::int64_t* point) const {
        return best(plus_, point) - best(minus_, point);
    }

private:
    struct Row {
        std::vector<std::pair<size_t, std::int64_t>> entries;  // (var index, coefficient)
        std::int64_t constant;
    };
    static void compile(const std::vector<LinForm>& forms, const std::vector<std::string>& order,
                        std::vector<Row>& out) {
        for (const auto& f : forms) {
            Row r;
            r.constant = f.constant;
            for (size_t i = 0; i < order.size(); ++i) {
                auto it = f.coeffs.find(order[i]);
                if (it != f.coeffs.end()) r.entries.emplace_back(i, it->second);
            }
            out.push_back(std::move(r));
        }
    }
    static std::int64_t best(const std::vector<Row>& rows, const std::int64_t* point) {
        std::int64_t m = INT64_MIN;
        for (const auto& r : rows) {
            std::int64_t acc = r.constant;
            for (const auto& [i, k] : r.entries) acc += k * point[i];
            m = std::max(m, acc);
        }
        return m;
    }
    std::vector<Row> plus_, minus_;
};

using Box = std::map<std::string, std::pair<std::int64_t, std::int64_t>>;

struct BoxCompareResult {
    bool equal = true;
    std::map<std::string, std::int64_t> counterexample;  // valid iff !equal
    std::int64_t lhs_value = 0;
    std::int64_t rhs_value = 0;
    std::uint64_t points = 0;
};

namespace detail {

inline std::uint64_t box_size_checked(const Box& box, std::uint64_t cap) {
    std::uint64_t n = 1;
    for (const auto& [v, r] : box) {
        if (r.second < r.first) throw std::invalid_argument("empty box interval for " + v);
        std::uint64_t w = static_cast<std::uint64_t>(r.second - r.first) + 1;
        if (w != 0 && n > cap / w) throw std::invalid_argument("box exceeds point cap");
        n *= w;
    }
    if (n > cap) throw std::invalid_argument("box exceeds point cap");
    return n;
}

// Scans the box in lexicographic order of the variable names and reports the
// first point where the two compiled functions differ.
inline BoxCompareResult scan_box(const CompiledPL& f, const CompiledPL& g,
                                 const std::vector<std::string>& vars,
                                 const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges) {
    BoxCompareResult res;
    size_t n = vars.size();
    std::vector<std::int64_t> p(n);
    for (size_t i = 0; i < n; ++i) p[i] = ranges[i].first;
    for (;;) {
        ++res.points;
        std::int64_t a = f.eval(p.data());
        std::int64_t b = g.eval(p.data());
        if (a != b) {
            res.equal = false;
            for (size_t i = 0; i < n; ++i) res.counterexample[vars[i]] = p[i];
            res.lhs_value = a;
            res.rhs_value = b;
            return res;
        }
        size_t i = n;
        while (i > 0) {
            --i;
            if (p[i] < ranges[i].second) {
                ++p[i];
                for (size_t j = i + 1; j < n; ++j) p[j] = ranges[j].first;
                break;
            }
            if (i == 0) return res;
        }
        if (n == 0) return res;
    }
}

}  // namespace detail

constexpr std::uint64_t kDefaultBoxCap = 100'000'000;

inline BoxCompareResult pl_equal_on_box(const PLFunction& f, const PLFunction& g, const Box& box,
                                        std::uint64_t cap = kDefaultBoxCap) {
    detail::box_size_checked(box, cap);
    std::vector<std::string> vars;
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    for (const auto& [v, r] : box) {
        vars.push_back(v);
        ranges.push_back(r);
    }
    for (const auto& v : f.variables())
        if (!box.count(v)) throw std::domain_error("box does not cover variable: " + v);
    for (const auto& v : g.variables())
        if (!box.count(v)) throw std::domain_error("box does not cover variable: " + v);
    return detail::scan_box(CompiledPL(f, vars), CompiledPL(g, vars), vars, ranges);
}

// Partitioned variant: slices the first box dimension across workers. The
// winning counterexample is the lexicographically least one regardless of
// completion order (slices are examined in order).
inline BoxCompareResult pl_equal_on_box_parallel(const PLFunction& f, const PLFunction& g,
                                                 const Box& box, unsigned jobs,
                                                 std::uint64_t cap = kDefaultBoxCap) {
    if (jobs <= 1 || box.empty()) return pl_equal_on_box(f, g, box, cap);
    detail::box_size_checked(box, cap);
    std::vector<std::string> vars;
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    for (const auto& [v, r] : box) {
        vars.push_back(v);
        ranges.push_back(r);
    }
    for (const auto& v : f.variables())
        if (!box.count(v)) throw std::domain_error("box does not cover variable: " + v);
    for (const auto& v : g.variables())
        if (!box.count(v)) throw std::domain_error("box does not cover variable: " + v);

    CompiledPL cf(f, vars), cg(g, vars);
    std::int64_t lo = ranges[0].first, hi = ranges[0].second;
    std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
    unsigned n_slices = static_cast<unsigned>(std::min<std::uint64_t>(jobs, width));
    std::vector<BoxCompareResult> results(n_slices);
    std::vector<std::thread> threads;
    for (unsigned s = 0; s < n_slices; ++s) {
        threads.emplace_back([&, s]() {
            auto r = ranges;
            // Slice s takes outer values lo+s, lo+s+n_slices, ... scanned as
            // contiguous sub-ranges to preserve per-slice lexicographic order.
            BoxCompareResult acc;
            for (std::int64_t x = lo + s; x <= hi; x += n_slices) {
                r[0] = {x, x};
                BoxCompareResult part = detail::scan_box(cf, cg, vars, r);
                acc.points += part.points;
                if (!part.equal && acc.equal) {
                    part.points = acc.points;
                    acc = part;
                    break;
                }
            }
            results[s] = acc;
        });
    }
    for (auto& t : threads) t.join();

    // Merge: the least outer coordinate wins; ties cannot happen across slices.
    BoxCompareResult merged;
    for (const auto& r : results) merged.points += r.points;
    const BoxCompareResult* best = nullptr;
    for (const auto& r : results) {
        if (r.equal) continue;
        if (!best || r.counterexample.at(vars[0]) < best->counterexample.at(vars[0])) best = &r;
    }
    if (best) {
        auto pts = merged.points;
        merged = *best;
        merged.points = pts;
    }
    return merged;
}

}  // namespace gcrystal
