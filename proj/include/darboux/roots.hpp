#pragma once
#include <algorithm>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "darboux/gfp.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Dense univariate polynomials, ascending coefficients.
template <Scalar K>
using UPoly = std::vector<K>;

namespace upoly {

template <Scalar K>
void trim(UPoly<K>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

template <Scalar K>
int degree(const UPoly<K>& f) {
    return static_cast<int>(f.size()) - 1;
}

template <Scalar K>
K eval(const UPoly<K>& f, const K& t) {
    K acc = t.zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * t + f[i];
    return acc;
}

template <Scalar K>
UPoly<K> derivative(const UPoly<K>& f) {
    UPoly<K> d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * f[i].from_int(static_cast<std::int64_t>(i)));
    trim(d);
    return d;
}

/// Remainder of f by g (field coefficients).
template <Scalar K>
UPoly<K> rem(UPoly<K> f, const UPoly<K>& g) {
    if (g.empty()) throw std::domain_error("upoly::rem by zero");
    while (f.size() >= g.size()) {
        K q = f.back() / g.back();
        std::size_t off = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
            f[off + i] = f[off + i] - q * g[i];
        f.pop_back();
        trim(f);
        if (f.empty()) break;
    }
    return f;
}

template <Scalar K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    trim(a); trim(b);
    while (!b.empty()) {
        UPoly<K> r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        K lead = a.back();
        for (auto& c : a) c = c / lead;
    }
    return a;
}

template <Scalar K>
UPoly<K> divide_exact(const UPoly<K>& f, const UPoly<K>& g) {
    UPoly<K> r = f, q;
    if (g.empty()) throw std::domain_error("upoly::divide_exact by zero");
    q.assign(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, g.back().zero());
    while (r.size() >= g.size() && !r.empty()) {
        K c = r.back() / g.back();
        std::size_t off = r.size() - g.size();
        q[off] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            r[off + i] = r[off + i] - c * g[i];
        trim(r);
        if (degree(r) < degree(g)) break;
    }
    if (!r.empty()) throw std::domain_error("upoly::divide_exact: not divisible");
    trim(q);
    return q;
}

/// Order of vanishing at t (0 if not a root).
template <Scalar K>
int order_at(UPoly<K> f, const K& t) {
    trim(f);
    int ord = 0;
    while (!f.empty() && eval(f, t).is_zero()) {
        // synthetic division by (x - t)
        UPoly<K> q(f.size() - 1, t.zero());
        K carry = t.zero();
        for (std::size_t i = f.size(); i-- > 1;) {
            carry = f[i] + carry * t;
            q[i - 1] = carry;
        }
        f = std::move(q);
        ++ord;
    }
    return ord;
}

} // namespace upoly

/// Extract a univariate view of a polynomial in one named variable; all
/// other variables must be absent.
template <Scalar K>
UPoly<K> as_univariate(const Polynomial<K>& f, const std::string& var) {
    UPoly<K> out(static_cast<std::size_t>(std::max(0, f.degree_in(var)) + 1),
                 f.proto().zero());
    std::size_t vi = f.var_index(var);
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != vi && e[i] != 0)
                throw std::invalid_argument("as_univariate: extra variable present");
        out[static_cast<std::size_t>(e[vi])] = c;
    }
    upoly::trim(out);
    return out;
}

struct RationalRootReport {
    std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
    int unresolved_degree = 0;  // degree left over without rational roots
};

namespace detail_roots {

inline int sign_variations(const std::vector<UPoly<Rational>>& chain, const Rational& t) {
    int var = 0, last = 0;
    for (const auto& f : chain) {
        int s = upoly::eval(f, t).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

inline std::vector<UPoly<Rational>> sturm_chain(const UPoly<Rational>& f) {
    std::vector<UPoly<Rational>> chain{f, upoly::derivative(f)};
    while (upoly::degree(chain.back()) > 0) {
        UPoly<Rational> r = upoly::rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

/// Integer roots of a monic squarefree integer polynomial via Sturm
/// bisection: every isolating interval is narrowed below width 1/2 and the
/// unique integer candidate, if any, is verified exactly.
inline std::vector<Integer> monic_integer_roots(const UPoly<Rational>& g) {
    std::vector<Integer> found;
    if (upoly::degree(g) < 1) return found;
    auto chain = sturm_chain(g);
    Rational bound(1);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        Rational a = g[i].abs();
        if (a > bound) bound = a;
    }
    bound = bound + Rational(1);
    struct Seg { Rational lo, hi; int nroots; };
    std::vector<Seg> stack;
    int total = detail_roots::sign_variations(chain, -bound) -
                detail_roots::sign_variations(chain, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.nroots == 0) continue;
        Rational width = s.hi - s.lo;
        if (s.nroots == 1 && width * Rational(2) <= Rational(1)) {
            // at most one integer in (lo, hi]
            Integer cand;
            mpz_fdiv_q(cand.get_mpz_t(), s.hi.numerator().get_mpz_t(),
                       s.hi.denominator().get_mpz_t());
            Rational c{cand};
            if (c > s.lo && c <= s.hi && upoly::eval(g, c).is_zero())
                found.push_back(cand);
            continue;
        }
        // pick a split point that is not itself a root, so that Sturm
        // counts over half-open intervals stay exact; deg(g)+1 distinct
        // interior candidates always contain a non-root
        Rational mid = (s.lo + s.hi) / Rational(2);
        if (upoly::eval(g, mid).is_zero()) {
            long D = upoly::degree(g);
            for (long i = 1; i <= D + 1; ++i) {
                mid = s.lo + (s.hi - s.lo) * Rational(i, 2 * (D + 2)) +
                      (s.hi - s.lo) / Rational(4);
                if (!upoly::eval(g, mid).is_zero()) break;
            }
        }
        int vlo = detail_roots::sign_variations(chain, s.lo);
        int vmid = detail_roots::sign_variations(chain, mid);
        int vhi = detail_roots::sign_variations(chain, s.hi);
        int left = vlo - vmid, right = vmid - vhi;
        if (left > 0) stack.push_back({s.lo, mid, left});
        if (right > 0) stack.push_back({mid, s.hi, right});
    }
    return found;
}

} // namespace detail_roots

/// All rational roots of f with exact multiplicities, plus the degree of
/// the rational-root-free part of the squarefree kernel. Complete: no
/// rational root is ever missed (monic transform + exact Sturm bisection).
inline RationalRootReport rational_roots(UPoly<Rational> f) {
    RationalRootReport rep;
    upoly::trim(f);
    if (upoly::degree(f) < 1) return rep;
    // root at 0
    std::size_t zshift = 0;
    while (zshift < f.size() && f[zshift].is_zero()) ++zshift;
    if (zshift > 0) {
        rep.roots.emplace_back(Rational(0), static_cast<int>(zshift));
        f.erase(f.begin(), f.begin() + static_cast<long>(zshift));
    }
    if (upoly::degree(f) < 1) return rep;
    UPoly<Rational> fsq = upoly::divide_exact(f, upoly::gcd(f, upoly::derivative(f)));
    // integerize the squarefree part
    Integer den(1);
    for (const auto& c : fsq) den = lcm(den, c.denominator());
    Integer content(0);
    for (auto& c : fsq) {
        c = c * Rational(den);
        content = gcd(content, c.numerator());
    }
    for (auto& c : fsq) c = c / Rational(content);
    // monic transform: roots of fsq are X/a_n for integer roots X of
    // G(X) = a_n^(d-1) fsq(X/a_n)
    Integer an = fsq.back().numerator();
    const int d = upoly::degree(fsq);
    UPoly<Rational> G(fsq.size());
    Integer powv(1);
    for (int i = d; i >= 0; --i) {
        G[static_cast<std::size_t>(i)] =
            Rational(Integer(fsq[static_cast<std::size_t>(i)].numerator() * powv));
        powv *= an;
    }
    // normalize G monic with sign of leading coeff
    if (G.back().sign() < 0)
        for (auto& c : G) c = -c;
    int nrational = 0;
    for (const Integer& X : detail_roots::monic_integer_roots(G)) {
        Rational r(X, an);
        int mult = upoly::order_at(f, r);
        if (mult <= 0) throw std::logic_error("rational_roots: lost root");
        rep.roots.emplace_back(r, mult);
        ++nrational;
    }
    rep.unresolved_degree = d - nrational;
    std::sort(rep.roots.begin(), rep.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return rep;
}

/// Roots over F_p by exhaustive search (desk-scale p).
inline std::vector<std::pair<GFp, int>> gfp_roots(const UPoly<GFp>& f_in) {
    UPoly<GFp> f = f_in;
    upoly::trim(f);
    std::vector<std::pair<GFp, int>> out;
    if (f.empty() || upoly::degree(f) < 1) return out;
    std::uint64_t p = f[0].modulus();
    if (p > 1000003)
        throw std::domain_error("gfp_roots: modulus too large for exhaustive search");
    for (std::uint64_t v = 0; v < p; ++v) {
        GFp t(v, p);
        if (upoly::eval(f, t).is_zero()) {
            int m = upoly::order_at(f, t);
            out.emplace_back(t, m);
        }
    }
    return out;
}

} // namespace darboux
