#pragma once

#include <optional>
#include <string>

#include "darboux/polynomial.hpp"

namespace darboux {

namespace detail {

/// Last variable with positive degree in f or g, if any.
template <Scalar K>
std::optional<std::string> main_variable(const Polynomial<K>& f,
                                         const Polynomial<K>& g) {
    const auto& vars = f.vars();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        if (f.degree_in(*it) > 0 || g.degree_in(*it) > 0) return *it;
    return std::nullopt;
}

/// Pseudo-remainder of f by g in variable v (deg_v g >= 1, g != 0).
template <Scalar K>
Polynomial<K> pseudo_rem(Polynomial<K> f, const Polynomial<K>& g,
                         const std::string& v) {
    const int dg = g.degree_in(v);
    const Polynomial<K> lg = g.leading_coeff_in(v);
    const Polynomial<K> xv =
        Polynomial<K>::variable(f.vars(), v, f.proto());
    while (!f.is_zero() && f.degree_in(v) >= dg) {
        const int df = f.degree_in(v);
        Polynomial<K> lf = f.leading_coeff_in(v);
        f = f * lg - g * (lf * xv.pow(static_cast<unsigned>(df - dg)));
        if (!f.is_zero() && f.degree_in(v) >= df)
            throw std::logic_error("pseudo_rem: degree did not drop");
    }
    return f;
}

} // namespace detail

template <Scalar K>
Polynomial<K> poly_gcd(Polynomial<K> f, Polynomial<K> g);

/// Content of f with respect to v: gcd of its v-coefficients.
template <Scalar K>
Polynomial<K> content_in(const Polynomial<K>& f, const std::string& v) {
    Polynomial<K> c(f.vars(), f.proto());
    for (const auto& [k, coeff] : f.by_degree_in(v)) c = poly_gcd(c, coeff);
    return c;
}

template <Scalar K>
Polynomial<K> primitive_part_in(const Polynomial<K>& f, const std::string& v) {
    if (f.is_zero()) return f;
    return exact_divide(f, content_in(f, v));
}

/// Gcd over a coefficient field, normalized to lex-leading coefficient 1.
/// Primitive polynomial-remainder sequence, recursing on contents.
template <Scalar K>
Polynomial<K> poly_gcd(Polynomial<K> f, Polynomial<K> g) {
    if (f.is_zero() && g.is_zero()) return f;
    auto normalize = [](Polynomial<K> p) {
        if (p.is_zero()) return p;
        return p / p.lex_leading_coeff();
    };
    if (f.is_zero()) return normalize(g);
    if (g.is_zero()) return normalize(f);
    auto mv = detail::main_variable(f, g);
    if (!mv) return Polynomial<K>::constant(f.vars(), f.proto().one());
    const std::string v = *mv;
    if (f.degree_in(v) <= 0) return poly_gcd(f, content_in(g, v));
    if (g.degree_in(v) <= 0) return poly_gcd(g, content_in(f, v));

    Polynomial<K> cf = content_in(f, v), cg = content_in(g, v);
    Polynomial<K> c = poly_gcd(cf, cg);
    Polynomial<K> a = exact_divide(f, cf), b = exact_divide(g, cg);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial<K> r = detail::pseudo_rem(a, b, v);
        a = b;
        b = r.is_zero() ? r : primitive_part_in(r, v);
    }
    return normalize(c * primitive_part_in(a, v));
}

template <Scalar K>
bool coprime(const Polynomial<K>& f, const Polynomial<K>& g) {
    return poly_gcd(f, g).total_degree() <= 0;
}

/// True iff f has no repeated factors (characteristic 0, or characteristic
/// larger than the degree so derivatives behave classically).
template <Scalar K>
bool is_squarefree(const Polynomial<K>& f) {
    if (f.is_zero()) return false;
    if (f.total_degree() <= 0) return true;
    Polynomial<K> g = f;
    Polynomial<K> acc(f.vars(), f.proto());
    for (const auto& v : f.vars()) {
        acc = poly_gcd(acc, f.derivative(v));
    }
    return poly_gcd(g, acc).total_degree() <= 0;
}

} // namespace darboux
