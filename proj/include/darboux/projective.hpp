#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <variant>

#include "darboux/forms.hpp"
#include "darboux/parse.hpp"
#include "darboux/polynomial.hpp"

namespace darboux {

inline const std::vector<std::string>& proj_vars() {
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}

/// Point of P^2 with homogeneous coordinates (X:Y:Z), stored canonically:
/// first nonzero coordinate scaled to 1.
template <Scalar K>
struct ProjPoint {
    std::array<K, 3> h;

    ProjPoint(K X, K Y, K Z) : h{X, Y, Z} { canonicalize(); }

    static ProjPoint parse(const std::string& text, K proto) {
        auto v = parse_point_coords<K>(text, proto);
        return ProjPoint(v[0], v[1], v[2]);
    }

    void canonicalize() {
        for (auto& c : h)
            if (c.is_unit()) {
                K inv = c.one() / c;
                for (auto& d : h) d = d * inv;
                return;
            }
        bool all_zero = h[0].is_zero() && h[1].is_zero() && h[2].is_zero();
        if (all_zero) throw std::invalid_argument("ProjPoint: (0:0:0)");
        throw std::invalid_argument("ProjPoint: no unit coordinate");
    }

    bool at_infinity() const { return h[2].is_zero(); }

    bool operator==(const ProjPoint& o) const { return h == o.h; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

    std::string str() const {
        return "(" + h[0].str() + ":" + h[1].str() + ":" + h[2].str() + ")";
    }
};

/// Evaluate a homogeneous polynomial in (x,y,z) at a projective point's
/// canonical representative.
template <Scalar K>
K eval_at_point(const Polynomial<K>& f, const ProjPoint<K>& a) {
    return f.eval(std::span<const K>(a.h.data(), 3));
}

enum class FormKind { Polynomial, OneForm, TwoForm };

/// Homogenized coefficients of an affine object of coefficient degree d:
/// a polynomial picks up z^d, a 1-form z^(d+2), a 2-form z^(d+3).
template <Scalar K>
struct HomogeneousForm {
    FormKind kind;
    int degree;                         // the d used for homogenization
    std::vector<Polynomial<K>> coeffs;  // 1 or 2 entries, in x,y,z
};

template <Scalar K>
Polynomial<K> homogenize_poly(const Polynomial<K>& f, int target_degree) {
    if (f.total_degree() > target_degree)
        throw std::invalid_argument("homogenize: target degree below actual degree");
    Polynomial<K> out(proj_vars(), f.proto());
    std::size_t zi = 2;
    for (const auto& [e, c] : f.terms()) {
        int s = 0;
        std::vector<int> e2(3, 0);
        // input is in chart variables; map them into (x,y,z) by name
        for (std::size_t i = 0; i < e.size(); ++i) {
            const std::string& name = f.vars()[i];
            std::size_t j = name == "x" ? 0 : name == "y" ? 1 : 2;
            e2[j] += e[i];
            s += e[i];
        }
        if (e2[zi] != 0)
            throw std::invalid_argument("homogenize: input already involves z");
        e2[zi] = target_degree - s;
        out.add_term(e2, c);
    }
    return out;
}

template <Scalar K>
HomogeneousForm<K> homogenize(const Polynomial<K>& f, int target_degree) {
    return {FormKind::Polynomial, target_degree, {homogenize_poly(f, target_degree)}};
}

template <Scalar K>
HomogeneousForm<K> homogenize(const Form1<K>& w, int target_degree) {
    if (w.chart != Chart::AffineXY)
        throw std::invalid_argument("homogenize: 1-form must be affine");
    auto z2 = Polynomial<K>::variable(proj_vars(), "z", w.a.proto()).pow(2);
    return {FormKind::OneForm, target_degree,
            {homogenize_poly(w.a, target_degree) * z2,
             homogenize_poly(w.b, target_degree) * z2}};
}

template <Scalar K>
HomogeneousForm<K> homogenize(const Form2<K>& w, int target_degree) {
    if (w.chart != Chart::AffineXY)
        throw std::invalid_argument("homogenize: 2-form must be affine");
    auto z3 = Polynomial<K>::variable(proj_vars(), "z", w.c.proto()).pow(3);
    return {FormKind::TwoForm, target_degree,
            {homogenize_poly(w.c, target_degree) * z3}};
}

/// Inverse of homogenize: set z = 1 and read coefficients back in the
/// affine chart.
template <Scalar K>
Polynomial<K> dehomogenize_poly(const Polynomial<K>& F) {
    return F.eval_partial("z", F.proto().one())
        .with_vars(chart_vars(Chart::AffineXY));
}

/// F'(y,z) = F^h(1:y:z) for an affine polynomial of the given degree.
template <Scalar K>
Polynomial<K> prime(const Polynomial<K>& f, int degree) {
    Polynomial<K> Fh = homogenize_poly(f, degree);
    return Fh.eval_partial("x", f.proto().one()).with_vars(chart_vars(Chart::InfinityYZ));
}

/// omega' on the chart at infinity. With P' = P^h(1,y,z), Q' = Q^h(1,y,z)
/// homogenized at the form degree d:
///   omega' = (z Q') dy - (P' + y Q') dz.
template <Scalar K>
Form1<K> prime(const Form1<K>& w) {
    if (w.chart != Chart::AffineXY)
        throw std::invalid_argument("prime: expected affine 1-form");
    int d = std::max(w.degree(), 0);
    auto vars = chart_vars(Chart::InfinityYZ);
    Polynomial<K> Pp = prime(w.a, d);
    Polynomial<K> Qp = prime(w.b, d);
    Polynomial<K> yv = Polynomial<K>::variable(vars, "y", w.a.proto());
    Polynomial<K> zv = Polynomial<K>::variable(vars, "z", w.a.proto());
    return Form1<K>(Chart::InfinityYZ, zv * Qp, -(Pp + yv * Qp));
}

/// (K dx^dy)' = K^h(1,y,z) dy^dz.
template <Scalar K>
Form2<K> prime(const Form2<K>& w) {
    if (w.chart != Chart::AffineXY)
        throw std::invalid_argument("prime: expected affine 2-form");
    int d = std::max(w.degree(), 0);
    return Form2<K>(Chart::InfinityYZ, prime(w.c, d));
}

/// Evaluate a single-coefficient homogeneous form at a point. The value
/// depends on the representative; only ratios of equal-degree entries are
/// scale-invariant, which is how callers use it.
template <Scalar K>
K eval_homogeneous(const HomogeneousForm<K>& f, const ProjPoint<K>& a) {
    if (f.kind == FormKind::OneForm)
        throw std::invalid_argument(
            "eval_homogeneous: ratio semantics undefined for 1-forms");
    return eval_at_point(f.coeffs[0], a);
}

/// Invertible change in (X,Y) fixing Z. new F(X,Y,Z) = F(a X + b Y, c X + d Y, Z);
/// points transform by the inverse so incidence is preserved.
template <Scalar K>
struct XYRotation {
    K a, b, c, d;

    static XYRotation identity(K proto) {
        return {proto.one(), proto.zero(), proto.zero(), proto.one()};
    }
    static XYRotation swap_xy(K proto) {
        return {proto.zero(), proto.one(), proto.one(), proto.zero()};
    }
    /// x -> x + t y (as a coordinate change).
    static XYRotation x_shift(K t) {
        return {t.one(), t, t.zero(), t.one()};
    }

    K det() const { return a * d - b * c; }

    Polynomial<K> apply(const Polynomial<K>& f) const {
        auto vars = f.vars();
        Polynomial<K> xv = Polynomial<K>::variable(vars, "x", f.proto());
        Polynomial<K> yv = Polynomial<K>::variable(vars, "y", f.proto());
        std::map<std::string, Polynomial<K>> images{
            {"x", xv * a + yv * b}, {"y", xv * c + yv * d}};
        return f.substitute(images);
    }

    ProjPoint<K> apply(const ProjPoint<K>& p) const {
        K dt = det();
        if (!dt.is_unit()) throw std::invalid_argument("XYRotation: singular");
        K inv = dt.one() / dt;
        // inverse of [[a,b],[c,d]] is [[d,-b],[-c,a]]/det
        K X = (d * p.h[0] - b * p.h[1]) * inv;
        K Y = (a * p.h[1] - c * p.h[0]) * inv;
        return ProjPoint<K>(X, Y, p.h[2]);
    }
};

/// A linear change in (X,Y) making the point's X coordinate nonzero.
/// Always possible unless the point is (0:0:1)-like with X=Y=0, which the
/// chart at infinity never produces.
template <Scalar K>
XYRotation<K> move_point_into_x_chart(const ProjPoint<K>& p) {
    K proto = p.h[0].zero();
    if (p.h[0].is_unit()) return XYRotation<K>::identity(proto);
    if (p.h[1].is_unit()) return XYRotation<K>::swap_xy(proto);
    throw std::invalid_argument("move_point_into_x_chart: X = Y = 0");
}

} // namespace darboux
