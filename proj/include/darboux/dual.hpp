#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace darboux {

/// Dual number a + b*eps over a base field, eps^2 = 0. Evaluating a
/// polynomial at a + eps yields (f(a), f'(a)) exactly.
template <class K>
class Dual {
public:
    Dual() = default;
    explicit Dual(K a) : a_(a), b_(a.zero()) {}
    Dual(K a, K b) : a_(a), b_(b) {}

    const K& real() const { return a_; }
    const K& eps() const { return b_; }

    Dual zero() const { return Dual(a_.zero(), a_.zero()); }
    Dual one() const { return Dual(a_.one(), a_.zero()); }
    Dual from_int(std::int64_t n) const { return Dual(a_.from_int(n), a_.zero()); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_unit() const { return a_.is_unit(); }

    Dual operator-() const { return Dual(-a_, -b_); }
    Dual operator+(const Dual& o) const { return Dual(a_ + o.a_, b_ + o.b_); }
    Dual operator-(const Dual& o) const { return Dual(a_ - o.a_, b_ - o.b_); }
    Dual operator*(const Dual& o) const {
        return Dual(a_ * o.a_, a_ * o.b_ + b_ * o.a_);
    }
    Dual operator/(const Dual& o) const {
        if (!o.is_unit()) throw std::domain_error("Dual: division by non-unit");
        K ia = o.a_.one() / o.a_;
        // (a+be)/(c+de) = a/c + (b/c - a d/c^2) e
        return Dual(a_ * ia, b_ * ia - a_ * o.b_ * ia * ia);
    }
    Dual& operator+=(const Dual& o) { *this = *this + o; return *this; }
    Dual& operator-=(const Dual& o) { *this = *this - o; return *this; }
    Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
    Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }

    bool operator==(const Dual& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Dual& o) const { return !(*this == o); }

    std::string str() const { return a_.str() + "+" + b_.str() + "e"; }

private:
    K a_{}, b_{};
};

} // namespace darboux
