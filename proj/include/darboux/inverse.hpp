#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/forms.hpp"
#include "darboux/matrix.hpp"
#include "darboux/poly_gcd.hpp"
#include "darboux/projective.hpp"

namespace darboux::inverse {

/// Ordered configuration of reduced plane-curve components, homogeneous in
/// (x,y,z). Validation enforces the standing hypotheses: square-free
/// components, pairwise coprime, none equal to the line at infinity.
template <Scalar K>
struct CurveConfiguration {
    std::vector<std::string> names;
    std::vector<Polynomial<K>> components;
    std::vector<int> degrees;
    Polynomial<K> product;

    static CurveConfiguration make(std::vector<std::string> names,
                                   std::vector<Polynomial<K>> comps) {
        if (comps.empty()) throw std::invalid_argument("configuration: no components");
        if (names.size() != comps.size())
            throw std::invalid_argument("configuration: name/component count mismatch");
        K proto = comps[0].proto();
        CurveConfiguration cfg{std::move(names), std::move(comps), {},
                               Polynomial<K>::constant(proj_vars(), proto.one())};
        for (std::size_t i = 0; i < cfg.components.size(); ++i) {
            const auto& C = cfg.components[i];
            if (C.vars() != proj_vars())
                throw std::invalid_argument("configuration: components live in x,y,z");
            if (!C.is_homogeneous() || C.total_degree() < 1)
                throw std::invalid_argument("configuration: component not homogeneous");
            if (!is_squarefree(C))
                throw std::invalid_argument("configuration: component " +
                                            cfg.names[i] + " has a multiple factor");
            if (C.eval_partial("z", C.proto().zero()).is_zero())
                throw std::invalid_argument("configuration: component " +
                                            cfg.names[i] + " contains the line at infinity");
            for (std::size_t j = 0; j < i; ++j)
                if (!coprime(C, cfg.components[j]))
                    throw std::invalid_argument("configuration: components " +
                                                cfg.names[j] + ", " + cfg.names[i] +
                                                " share a factor");
            cfg.degrees.push_back(C.total_degree());
            cfg.product = cfg.product * C;
        }
        return cfg;
    }

    std::size_t size() const { return components.size(); }
    int total_degree() const { return product.total_degree(); }
    const K& proto() const { return product.proto(); }

    Polynomial<K> affine(std::size_t i) const {
        return dehomogenize_poly(components[i]);
    }
};

/// The r x (r+2) Darboux matrix with rows (C_ix, C_iy, diag C_i).
template <Scalar K>
std::vector<std::vector<Polynomial<K>>>
darboux_matrix(const CurveConfiguration<K>& cfg) {
    const std::size_t r = cfg.size();
    Polynomial<K> zero(proj_vars(), cfg.proto());
    std::vector<std::vector<Polynomial<K>>> m(
        r, std::vector<Polynomial<K>>(r + 2, zero));
    for (std::size_t i = 0; i < r; ++i) {
        m[i][0] = cfg.components[i].derivative("x");
        m[i][1] = cfg.components[i].derivative("y");
        m[i][2 + i] = cfg.components[i];
    }
    return m;
}

/// One homogeneous solution of the inverse problem: a 1-form (P,Q) of
/// degree d together with the cofactor coefficients K_i of degree d-1, all
/// in (x,y,z), satisfying C_ix Q - C_iy P - C_i K_i = 0 exactly.
template <Scalar K>
struct SolutionTriple {
    Polynomial<K> P, Q;
    std::vector<Polynomial<K>> cofactors;

    Form1<K> affine_form() const {
        return Form1<K>(Chart::AffineXY, dehomogenize_poly(P), dehomogenize_poly(Q));
    }
};

template <Scalar K>
struct SolutionSpace {
    int degree = 0;
    std::vector<SolutionTriple<K>> basis;
    std::vector<SolutionTriple<K>> trivial;  // the F * dC subfamily
    int dimension() const { return static_cast<int>(basis.size()); }
    int essential_dimension() const {
        return static_cast<int>(basis.size()) - static_cast<int>(trivial.size());
    }
};

namespace detail {

inline std::vector<std::vector<int>> monomials_of_degree(int d) {
    std::vector<std::vector<int>> out;
    if (d < 0) return out;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
            out.push_back({i, j, d - i - j});
    return out;
}

} // namespace detail

/// Solve the inverse problem in homogeneous degree d by expanding
/// M * (Q, -P, -K_1, ..., -K_r)^t = 0 into a linear system on monomial
/// coefficients and computing an exact nullspace.
template <Scalar K>
SolutionSpace<K> solve_inverse(const CurveConfiguration<K>& cfg, int d) {
    if (d < 0) throw std::invalid_argument("solve_inverse: degree must be >= 0");
    const std::size_t r = cfg.size();
    const K proto = cfg.proto();
    auto mon_d = detail::monomials_of_degree(d);
    auto mon_d1 = detail::monomials_of_degree(d - 1);
    const std::size_t nP = mon_d.size(), nK = mon_d1.size();
    const std::size_t unknowns = 2 * nP + r * nK;

    // row index: per component, monomials of degree e_i + d - 1
    std::vector<std::size_t> row_offsets;
    std::size_t total_rows = 0;
    std::vector<std::vector<std::vector<int>>> row_monomials;
    for (std::size_t i = 0; i < r; ++i) {
        row_offsets.push_back(total_rows);
        row_monomials.push_back(detail::monomials_of_degree(cfg.degrees[i] + d - 1));
        total_rows += row_monomials.back().size();
    }

    Matrix<K> m(total_rows, unknowns, proto);
    auto scatter = [&](std::size_t comp, const Polynomial<K>& contrib,
                       std::size_t col) {
        const auto& mons = row_monomials[comp];
        for (const auto& [e, c] : contrib.terms()) {
            for (std::size_t rix = 0; rix < mons.size(); ++rix)
                if (mons[rix] == e) {
                    m.at(row_offsets[comp] + rix, col) =
                        m.at(row_offsets[comp] + rix, col) + c;
                    break;
                }
        }
    };

    for (std::size_t i = 0; i < r; ++i) {
        Polynomial<K> Cx = cfg.components[i].derivative("x");
        Polynomial<K> Cy = cfg.components[i].derivative("y");
        for (std::size_t k = 0; k < nP; ++k) {
            Polynomial<K> mono(proj_vars(), proto);
            mono.add_term(mon_d[k], proto.one());
            scatter(i, Cy * mono, k);            // -C_iy * P contribution, P coeff
            scatter(i, Cx * mono, nP + k);       // +C_ix * Q contribution? sign below
        }
        for (std::size_t k = 0; k < nK; ++k) {
            Polynomial<K> mono(proj_vars(), proto);
            mono.add_term(mon_d1[k], proto.one());
            scatter(i, cfg.components[i] * mono, 2 * nP + i * nK + k);
        }
    }
    // signs: equation is C_ix Q - C_iy P - C_i K_i = 0. Columns were filled
    // with +C_iy (P), +C_ix (Q), +C_i (K_i); flip P and K columns.
    for (std::size_t row = 0; row < total_rows; ++row) {
        for (std::size_t k = 0; k < nP; ++k)
            m.at(row, k) = -m.at(row, k);
        for (std::size_t k = 2 * nP; k < unknowns; ++k)
            m.at(row, k) = -m.at(row, k);
    }

    std::vector<std::vector<K>> kernel;
    if constexpr (std::is_same_v<K, Rational>) {
        auto res = bareiss_kernel(m);
        for (auto& v : res.kernel)
            kernel.push_back(normalize_to_coprime_integers(std::move(v)));
    } else {
        kernel = m.kernel_basis();
    }

    SolutionSpace<K> out;
    out.degree = d;
    for (const auto& v : kernel) {
        SolutionTriple<K> t{Polynomial<K>(proj_vars(), proto),
                            Polynomial<K>(proj_vars(), proto), {}};
        for (std::size_t k = 0; k < nP; ++k) {
            t.P.add_term(mon_d[k], v[k]);
            t.Q.add_term(mon_d[k], v[nP + k]);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Polynomial<K> Ki(proj_vars(), proto);
            for (std::size_t k = 0; k < nK; ++k)
                Ki.add_term(mon_d1[k], v[2 * nP + i * nK + k]);
            t.cofactors.push_back(std::move(Ki));
        }
        out.basis.push_back(std::move(t));
    }

    // trivial subfamily F * dC, F homogeneous of degree d - e + 1
    const int e = cfg.total_degree();
    for (const auto& fe : detail::monomials_of_degree(d - e + 1)) {
        Polynomial<K> F(proj_vars(), proto);
        F.add_term(fe, proto.one());
        SolutionTriple<K> t{F * cfg.product.derivative("x"),
                            F * cfg.product.derivative("y"), {}};
        for (std::size_t i = 0; i < r; ++i) {
            Polynomial<K> D = exact_divide(cfg.product, cfg.components[i]);
            t.cofactors.push_back(
                F * (cfg.components[i].derivative("x") * D.derivative("y") -
                     cfg.components[i].derivative("y") * D.derivative("x")));
        }
        out.trivial.push_back(std::move(t));
    }
    return out;
}

/// Expected dimension of the solution space:
/// delta = C(d-e+3,2) + C(d+1,2) - (e-1)^2 + degX, first summand 0 if e > d+1.
inline long expected_dimension(int e, int d, int degX) {
    auto binom2 = [](long n) { return n < 2 ? 0L : n * (n - 1) / 2; };
    long first = e > d + 1 ? 0 : binom2(d - e + 3);
    return first + binom2(d + 1) - static_cast<long>(e - 1) * (e - 1) + degX;
}

/// Cofactor K with dC ^ omega = C * K; nullopt (with witness) if C is not
/// an integral curve. Works in either chart.
template <Scalar K>
std::optional<Form2<K>> try_cofactor(const Polynomial<K>& C, const Form1<K>& w,
                                     Polynomial<K>* witness = nullptr) {
    auto num = wedge(gradient_form(C, w.chart), w);
    auto out = try_exact_divide(num.c, C);
    if (!out.exact) {
        if (witness) *witness = out.remainder;
        return std::nullopt;
    }
    return Form2<K>(w.chart, out.quotient);
}

template <Scalar K>
Form2<K> cofactor(const Polynomial<K>& C, const Form1<K>& w) {
    auto k = try_cofactor(C, w);
    if (!k) throw NotDivisibleError("curve is not an integral curve of the form");
    return *k;
}

template <Scalar K>
bool is_integral_curve(const Polynomial<K>& C, const Form1<K>& w) {
    return try_cofactor(C, w).has_value();
}

/// Outcome of checking sum(lambda_i K_i) + lambda_{r+1} d(omega) == 0.
template <Scalar K>
struct RelationCheck {
    bool holds = false;
    Form2<K> remainder;
    std::vector<K> lambda;
    bool gives_integrating_factor = false;  // lambda_{r+1} != 0
    std::vector<K> exponents;               // alpha_i
};

/// Verify the Darboux relation as an exact polynomial identity in the
/// affine chart. With lambda_{r+1} != 0 the integrating-factor exponents
/// alpha_i = lambda_i / lambda_{r+1} are reported, normalized so that
/// sum alpha_i K_i = -d omega and prod C_i^alpha_i is an integrating
/// factor; otherwise lambda itself gives first-integral exponents.
template <Scalar K>
RelationCheck<K> verify_relation(const Form1<K>& w,
                                 const CurveConfiguration<K>& cfg,
                                 const std::vector<K>& lambda) {
    const std::size_t r = cfg.size();
    if (lambda.size() != r + 1)
        throw std::invalid_argument("verify_relation: lambda must have length r+1");
    bool nonzero = false;
    for (const auto& l : lambda) nonzero = nonzero || !l.is_zero();
    if (!nonzero) throw std::invalid_argument("verify_relation: lambda = 0");
    Form2<K> acc = exterior_derivative(w) * lambda[r];
    for (std::size_t i = 0; i < r; ++i) {
        auto Ki = try_cofactor(cfg.affine(i), w);
        if (!Ki)
            throw std::invalid_argument("verify_relation: component " + cfg.names[i] +
                                        " is not an integral curve");
        acc = acc + *Ki * lambda[i];
    }
    RelationCheck<K> out{acc.is_zero(), acc, lambda, false, {}};
    if (!lambda[r].is_zero()) {
        out.gives_integrating_factor = true;
        for (std::size_t i = 0; i < r; ++i)
            out.exponents.push_back(lambda[i] / lambda[r]);
    } else {
        out.exponents = lambda;
        out.exponents.pop_back();
    }
    return out;
}

/// Lemma check: cofactors add across unions of coprime integral curves.
template <Scalar K>
bool cofactor_additivity_check(const Polynomial<K>& C, const Polynomial<K>& D,
                               const Form1<K>& w) {
    if (!coprime(C, D))
        throw std::invalid_argument("cofactor_additivity_check: common component");
    auto kc = try_cofactor(C, w), kd = try_cofactor(D, w);
    if (!kc || !kd)
        throw std::invalid_argument("cofactor_additivity_check: not integral curves");
    auto ku = try_cofactor(C * D, w);
    if (!ku) return false;
    return ku->c == (kc->c + kd->c);
}

} // namespace darboux::inverse
