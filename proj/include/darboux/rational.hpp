#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace darboux {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (mpq_class canonicalizes on construction and arithmetic).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& n, const Integer& d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational from_decimal(const std::string& s) {
        // integer literal or "a/b"
        return Rational(mpq_class(s, 10));
    }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(std::int64_t n) const {
        return Rational(Integer(static_cast<long>(n)));
    }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_unit() const { return !is_zero(); }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_integer() const { return v_.get_den() == 1; }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer& a, Integer* root = nullptr) {
    if (a < 0) return false;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    if (r * r != a) return false;
    if (root) *root = r;
    return true;
}

} // namespace darboux
