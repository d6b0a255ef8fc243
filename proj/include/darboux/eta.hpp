#pragma once

#include <optional>
#include <string>
#include <vector>

#include "darboux/geometry.hpp"
#include "darboux/inverse.hpp"
#include "darboux/projective.hpp"

namespace darboux::eta {

using geometry::PointOnConfig;
using inverse::CurveConfiguration;

/// Projective tuple of scalar values. Comparison is up to a common
/// nonzero factor; the all-zero tuple is degenerate and equal only to
/// itself.
template <Scalar K>
struct EtaValue {
    std::vector<K> v;

    bool degenerate() const {
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Proportionality as projective tuples (rank-1 test on the 2xn
    /// stack); degenerate tuples compare equal only to degenerate ones.
    static bool proportional(const EtaValue& a, const EtaValue& b) {
        if (a.v.size() != b.v.size()) return false;
        if (a.degenerate() || b.degenerate())
            return a.degenerate() && b.degenerate();
        for (std::size_t i = 0; i < a.v.size(); ++i)
            for (std::size_t j = i + 1; j < a.v.size(); ++j)
                if (!(a.v[i] * b.v[j] - a.v[j] * b.v[i]).is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ":";
            s += v[i].str();
        }
        return s + ")";
    }
};

/// Cofactor of the line at infinity: K_z = (dz ^ omega') / z. The
/// division is exact for every polynomial 1-form; a failure indicates an
/// internal inconsistency, not bad input.
template <Scalar K>
Form2<K> k_z(const Form1<K>& omega) {
    if (omega.chart != Chart::AffineXY)
        throw std::invalid_argument("k_z: affine input expected");
    Form1<K> wp = prime(omega);
    Polynomial<K> zpoly =
        Polynomial<K>::variable(chart_vars(Chart::InfinityYZ), "z", omega.a.proto());
    auto out = try_exact_divide(wedge(gradient_form(zpoly, Chart::InfinityYZ), wp).c,
                                zpoly);
    if (!out.exact)
        throw std::logic_error("k_z: dz ^ omega' not divisible by z (internal)");
    return Form2<K>(Chart::InfinityYZ, out.quotient);
}

/// Rotate an affine 1-form under a linear change in (X,Y) fixing Z:
/// coefficients transform by substitution and the basis by the chain rule.
template <Scalar K>
Form1<K> rotate_form(const Form1<K>& w, const XYRotation<K>& g) {
    if (w.chart != Chart::AffineXY)
        throw std::invalid_argument("rotate_form: affine input expected");
    std::map<std::string, Polynomial<K>> images;
    auto vars = chart_vars(Chart::AffineXY);
    Polynomial<K> xv = Polynomial<K>::variable(vars, "x", w.a.proto());
    Polynomial<K> yv = Polynomial<K>::variable(vars, "y", w.a.proto());
    images["x"] = xv * g.a + yv * g.b;
    images["y"] = xv * g.c + yv * g.d;
    Polynomial<K> Pt = w.a.substitute(images);
    Polynomial<K> Qt = w.b.substitute(images);
    return Form1<K>(Chart::AffineXY, Pt * g.a + Qt * g.c, Pt * g.b + Qt * g.d);
}

template <Scalar K>
CurveConfiguration<K> rotate_configuration(const CurveConfiguration<K>& cfg,
                                           const XYRotation<K>& g) {
    std::vector<Polynomial<K>> comps;
    comps.reserve(cfg.size());
    for (const auto& C : cfg.components) comps.push_back(g.apply(C));
    return CurveConfiguration<K>::make(cfg.names, std::move(comps));
}

/// eta at a projective point: (K_1^h(a), ..., K_r^h(a), domega^h(a)),
/// every entry homogenized to the common degree deg(omega) - 1.
template <Scalar K>
EtaValue<K> eta_at(const Form1<K>& omega, const CurveConfiguration<K>& cfg,
                   const ProjPoint<K>& a) {
    const int s = omega.degree();
    EtaValue<K> out;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        auto Ki = inverse::try_cofactor(cfg.affine(i), omega);
        if (!Ki)
            throw std::invalid_argument("eta_at: " + cfg.names[i] +
                                        " is not an integral curve");
        out.v.push_back(eval_at_point(homogenize_poly(Ki->c, s - 1), a));
    }
    out.v.push_back(
        eval_at_point(homogenize_poly(exterior_derivative(omega).c, s - 1), a));
    return out;
}

/// eta' at a point at infinity: the tuple
/// (K_z(a), K_{C_1'}(a), ..., K_{C_r'}(a), d(omega')(a)) of chart values
/// in the fixed dy^dz basis. Points with X = 0 are first moved into the
/// X-chart by a rotation; all quantities transform equivariantly, so the
/// tuple changes at most by a common factor.
template <Scalar K>
EtaValue<K> eta_prime_at(const Form1<K>& omega, const CurveConfiguration<K>& cfg,
                         const ProjPoint<K>& a) {
    if (!a.at_infinity())
        throw std::invalid_argument("eta_prime_at: point must lie on z = 0");
    if (!a.h[0].is_unit()) {
        XYRotation<K> g = move_point_into_x_chart(a);
        return eta_prime_at(rotate_form(omega, g), rotate_configuration(cfg, g),
                            g.apply(a));
    }
    Form1<K> wp = prime(omega);
    std::vector<K> chart_pt{a.h[1], a.h[2]};
    EtaValue<K> out;
    out.v.push_back(k_z(omega).c.eval(chart_pt));
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        Polynomial<K> Cp = prime(cfg.affine(i), cfg.degrees[i]);
        auto Ki = inverse::try_cofactor(Cp, wp);
        if (!Ki)
            throw std::invalid_argument("eta_prime_at: " + cfg.names[i] +
                                        "' is not an integral curve of omega'");
        out.v.push_back(Ki->c.eval(chart_pt));
    }
    out.v.push_back(exterior_derivative(wp).c.eval(chart_pt));
    return out;
}

/// Linear projection from the center (1 : deg C_1 : ... : deg C_r : s+2):
/// drop the K_z coordinate after subtracting its multiples.
template <Scalar K>
EtaValue<K> project_eta(const EtaValue<K>& ep, const std::vector<int>& degs, int s) {
    if (ep.v.size() != degs.size() + 2)
        throw std::invalid_argument("project_eta: width mismatch");
    const K kz = ep.v[0];
    EtaValue<K> out;
    for (std::size_t i = 0; i < degs.size(); ++i)
        out.v.push_back(ep.v[i + 1] - kz * kz.from_int(degs[i]));
    out.v.push_back(ep.v.back() - kz * kz.from_int(s + 2));
    return out;
}

/// Row predicted by the singularity type alone: per component the sum of
/// its branches' weighted degrees, K_z column from the line at infinity,
/// last entry w_x + w_y.
template <Scalar K>
EtaValue<K> geometric_row(const PointOnConfig<K>& p, std::size_t r) {
    const K proto = p.point.h[0].zero();
    EtaValue<K> out;
    out.v.assign(r + 2, proto.zero());
    for (const auto& lc : p.comps) {
        std::size_t col = lc.comp < 0 ? 0 : static_cast<std::size_t>(lc.comp) + 1;
        out.v[col] = out.v[col] + proto.from_int(lc.wdeg_sum);
    }
    out.v[r + 1] = proto.from_int(p.type.weight_sum);
    return out;
}

enum class RowProvenance { Computed, Center };

template <Scalar K>
struct EtaRow {
    EtaValue<K> value;
    RowProvenance provenance;
    std::string label;
    std::optional<EtaValue<K>> geometric;  // predicted row, when available
};

template <Scalar K>
struct EtaMatrix {
    std::size_t r = 0;  // number of configuration components
    std::vector<EtaRow<K>> rows;  // point rows then the center row

    Matrix<K> as_matrix(K proto) const {
        Matrix<K> m(rows.size(), r + 2, proto);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < r + 2; ++j)
                m.at(i, j) = rows[i].value.v[j];
        return m;
    }
};

struct EtaConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The matrix of Theorem-style eta' rows: one computed row per
/// eta-geometric point (affine points use the K_z = 0 convention), plus
/// the projection-center row. Each point is checked to be a zero of
/// omega^h, and each computed row is checked proportional-or-zero against
/// the geometric prediction.
template <Scalar K>
EtaMatrix<K> assemble_M(const Form1<K>& omega, const CurveConfiguration<K>& cfg,
                        const std::vector<PointOnConfig<K>>& points) {
    const int s = omega.degree();
    const K proto = cfg.proto();
    EtaMatrix<K> out;
    out.r = cfg.size();
    auto Ph = homogenize_poly(omega.a, s);
    auto Qh = homogenize_poly(omega.b, s);
    for (const auto& p : points) {
        if (!eval_at_point(Ph, p.point).is_zero() ||
            !eval_at_point(Qh, p.point).is_zero())
            throw EtaConsistencyError("assemble_M: point " + p.point.str() +
                                      " is not a zero of omega");
        EtaRow<K> row;
        row.provenance = RowProvenance::Computed;
        row.label = p.type.name() + " at " + p.point.str();
        if (p.point.at_infinity()) {
            row.value = eta_prime_at(omega, cfg, p.point);
        } else {
            EtaValue<K> affine = eta_at(omega, cfg, p.point);
            row.value.v.push_back(proto.zero());
            for (auto& c : affine.v) row.value.v.push_back(c);
        }
        row.geometric = geometric_row(p, cfg.size());
        if (!row.value.degenerate() &&
            !EtaValue<K>::proportional(row.value, *row.geometric))
            throw EtaConsistencyError(
                "assemble_M: computed row " + row.value.str() + " at " +
                p.point.str() + " is not proportional to the geometric row " +
                row.geometric->str());
        out.rows.push_back(std::move(row));
    }
    EtaRow<K> center;
    center.provenance = RowProvenance::Center;
    center.label = "projection center";
    center.value.v.push_back(proto.one());
    for (int d : cfg.degrees) center.value.v.push_back(proto.from_int(d));
    center.value.v.push_back(proto.from_int(s + 2));
    out.rows.push_back(std::move(center));
    return out;
}

/// True iff no curve of degree m passes through all the points: the
/// monomial evaluation matrix has full column rank C(m+2,2).
template <Scalar K>
bool points_not_on_curve(const std::vector<ProjPoint<K>>& pts, int m) {
    if (m < 1) throw std::invalid_argument("points_not_on_curve: m >= 1");
    auto mons = inverse::detail::monomials_of_degree(m);
    if (pts.empty()) return false;
    const K proto = pts[0].h[0].zero();
    Matrix<K> ev(pts.size(), mons.size(), proto);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j) {
            K t = proto.one();
            for (int k = 0; k < 3; ++k)
                for (int c = 0; c < mons[j][static_cast<std::size_t>(k)]; ++c)
                    t = t * pts[i].h[static_cast<std::size_t>(k)];
            ev.at(i, j) = t;
        }
    return ev.rank() == mons.size();
}

/// Darboux-integrability certificate. `verified` requires all four
/// stages; the symbolic identity (stage 4) alone already establishes the
/// linear relation among cofactors unconditionally.
template <Scalar K>
struct IntegrabilityCertificate {
    EtaMatrix<K> matrix;
    std::size_t rank = 0;
    bool rank_ok = false;        // stage 1: rank <= r+1
    bool position_ok = false;    // stage 2: points span all curves of degree s-1
    std::size_t kernel_dimension = 0;
    std::vector<K> kernel_vector;  // stage 3
    inverse::RelationCheck<K> relation;  // stage 4
    std::vector<std::string> notes;

    bool verified() const {
        return rank_ok && position_ok && kernel_dimension >= 1 && relation.holds;
    }
};

template <Scalar K>
IntegrabilityCertificate<K> certify(const Form1<K>& omega,
                                    const CurveConfiguration<K>& cfg,
                                    const std::vector<PointOnConfig<K>>& points) {
    IntegrabilityCertificate<K> cert;
    cert.matrix = assemble_M(omega, cfg, points);
    const K proto = cfg.proto();
    const std::size_t r = cfg.size();
    Matrix<K> m = cert.matrix.as_matrix(proto);

    std::vector<std::vector<K>> kernel;
    if constexpr (std::is_same_v<K, Rational>) {
        auto res = bareiss_kernel(m);
        cert.rank = res.rank;
        for (auto& v : res.kernel)
            kernel.push_back(normalize_to_coprime_integers(std::move(v)));
    } else {
        auto red = m.rref();
        cert.rank = red.rank;
        kernel = m.kernel_basis();
    }
    cert.rank_ok = cert.rank <= r + 1;
    cert.kernel_dimension = kernel.size();

    std::vector<ProjPoint<K>> pts;
    for (const auto& p : points) pts.push_back(p.point);
    cert.position_ok = points_not_on_curve(pts, omega.degree() - 1);
    if (!cert.position_ok)
        cert.notes.push_back("general-position test failed: the points lie on a curve "
                             "of degree " + std::to_string(omega.degree() - 1));

    if (!kernel.empty()) {
        cert.kernel_vector = kernel.front();
        std::vector<K> lambda(cert.kernel_vector.begin() + 1,
                              cert.kernel_vector.end());
        cert.relation = inverse::verify_relation(omega, cfg, lambda);
        if (cert.rank_ok && cert.position_ok && !cert.relation.holds)
            throw EtaConsistencyError(
                "certify: rank and position tests passed but the symbolic "
                "relation fails; this contradicts the criterion");
    } else {
        cert.notes.push_back("eta matrix has trivial kernel");
    }
    return cert;
}

} // namespace darboux::eta
