#pragma once

// Exact arbitrary-precision rationals on top of GMP.
//
// Invariants: always reduced (gcd(num, den) = 1) and den > 0. Both are
// maintained by mpq canonicalization on every mutating path.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcrystal {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { normalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) { normalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { normalize(); }

    // Accepts "p", "-p", "p/q".
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(s));
            return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational literal: '" + s + "'");
        }
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_positive() const { return sgn(q_) > 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_), already_canonical{}); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_), already_canonical{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_), already_canonical{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_), already_canonical{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return Rational(mpq_class(q_ / o.q_), already_canonical{});
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("reciprocal of zero");
        return Rational(mpq_class(1 / q_), already_canonical{});
    }

    // Integer power, negative exponents via reciprocal.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) return reciprocal().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
        Rational r;
        r.q_ = mpq_class(n, d);  // powers of a canonical fraction stay canonical
        return r;
    }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : q_(std::move(q)) {}
    void normalize() {
        if (sgn(q_.get_den()) == 0) throw std::domain_error("zero denominator");
        q_.canonicalize();
    }
    mpq_class q_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace gcrystal
