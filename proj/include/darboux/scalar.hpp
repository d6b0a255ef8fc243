#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "darboux/dual.hpp"
#include "darboux/gfp.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Exact coefficient field (or, for Dual, local ring with exact units).
/// zero()/one()/from_int() are member factories so that values carrying a
/// modulus can mint compatible constants.
template <class K>
concept Scalar = requires(const K& a, const K& b) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_unit() } -> std::convertible_to<bool>;
    { a.zero() } -> std::same_as<K>;
    { a.one() } -> std::same_as<K>;
    { a.from_int(std::int64_t{}) } -> std::same_as<K>;
    { a.str() } -> std::same_as<std::string>;
};

static_assert(Scalar<Rational>);
static_assert(Scalar<GFp>);
static_assert(Scalar<Dual<GFp>>);

/// Reduce a rational mod p; throws if the denominator is divisible by p.
inline GFp reduce_mod(const Rational& q, std::uint64_t p) {
    Integer num = q.numerator() % static_cast<long>(p);
    Integer den = q.denominator() % static_cast<long>(p);
    std::int64_t n = num.get_si(), d = den.get_si();
    if (d % static_cast<std::int64_t>(p) == 0)
        throw std::domain_error("reduce_mod: denominator divisible by p");
    return GFp::from_signed(n, p) / GFp::from_signed(d, p);
}

/// Symmetric lift of a prime-field element to the integers in (-p/2, p/2].
inline Rational lift_balanced(const GFp& a) {
    return Rational(Integer(static_cast<long>(a.balanced())));
}

} // namespace darboux
