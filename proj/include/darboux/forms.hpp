#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/polynomial.hpp"

namespace darboux {

/// The two charts in play: U_{Z!=0} with coordinates (x,y) and the chart
/// at infinity U_{X!=0} with coordinates (y,z). The 2-form basis is fixed
/// per chart: dx^dy resp. dy^dz.
enum class Chart { AffineXY, InfinityYZ };

inline std::vector<std::string> chart_vars(Chart c) {
    return c == Chart::AffineXY ? std::vector<std::string>{"x", "y"}
                                : std::vector<std::string>{"y", "z"};
}

struct ChartMismatchError : std::invalid_argument {
    ChartMismatchError() : std::invalid_argument("forms live in different charts") {}
};

/// 1-form a*du + b*dv where (u,v) are the chart coordinates.
template <Scalar K>
struct Form1 {
    Chart chart;
    Polynomial<K> a, b;

    Form1(Chart c, Polynomial<K> a_, Polynomial<K> b_)
        : chart(c), a(std::move(a_)), b(std::move(b_)) {}

    static Form1 zero(Chart c, K proto) {
        Polynomial<K> z(chart_vars(c), proto);
        return Form1(c, z, z);
    }

    int degree() const { return std::max(a.total_degree(), b.total_degree()); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    Form1 operator+(const Form1& o) const {
        if (chart != o.chart) throw ChartMismatchError();
        return Form1(chart, a + o.a, b + o.b);
    }
    Form1 operator-(const Form1& o) const {
        if (chart != o.chart) throw ChartMismatchError();
        return Form1(chart, a - o.a, b - o.b);
    }
    Form1 operator*(const K& s) const { return Form1(chart, a * s, b * s); }
    Form1 scaled_by(const Polynomial<K>& f) const { return Form1(chart, a * f, b * f); }
    bool operator==(const Form1& o) const {
        return chart == o.chart && a == o.a && b == o.b;
    }

    std::string str() const {
        auto [du, dv] = basis_names();
        return "(" + a.str() + ") " + du + " + (" + b.str() + ") " + dv;
    }
    std::pair<std::string, std::string> basis_names() const {
        return chart == Chart::AffineXY ? std::pair<std::string, std::string>{"dx", "dy"}
                                        : std::pair<std::string, std::string>{"dy", "dz"};
    }
};

/// 2-form c * du^dv in the chart's fixed basis.
template <Scalar K>
struct Form2 {
    Chart chart;
    Polynomial<K> c;

    Form2(Chart ch, Polynomial<K> c_) : chart(ch), c(std::move(c_)) {}
    static Form2 zero(Chart ch, K proto) {
        return Form2(ch, Polynomial<K>(chart_vars(ch), proto));
    }

    int degree() const { return c.total_degree(); }
    bool is_zero() const { return c.is_zero(); }

    Form2 operator+(const Form2& o) const {
        if (chart != o.chart) throw ChartMismatchError();
        return Form2(chart, c + o.c);
    }
    Form2 operator-(const Form2& o) const {
        if (chart != o.chart) throw ChartMismatchError();
        return Form2(chart, c - o.c);
    }
    Form2 operator*(const K& s) const { return Form2(chart, c * s); }
    bool operator==(const Form2& o) const { return chart == o.chart && c == o.c; }

    std::string str() const {
        std::string basis = chart == Chart::AffineXY ? "dx^dy" : "dy^dz";
        return "(" + c.str() + ") " + basis;
    }
};

/// Antisymmetric wedge product in the chart's fixed basis:
/// (a1 du + b1 dv) ^ (a2 du + b2 dv) = (a1 b2 - b1 a2) du^dv.
template <Scalar K>
Form2<K> wedge(const Form1<K>& f, const Form1<K>& g) {
    if (f.chart != g.chart) throw ChartMismatchError();
    return Form2<K>(f.chart, f.a * g.b - f.b * g.a);
}

/// d(a du + b dv) = (b_u - a_v) du^dv.
template <Scalar K>
Form2<K> exterior_derivative(const Form1<K>& f) {
    auto vars = chart_vars(f.chart);
    return Form2<K>(f.chart, f.b.derivative(vars[0]) - f.a.derivative(vars[1]));
}

/// dC as a 1-form in the chart of C's variables.
template <Scalar K>
Form1<K> gradient_form(const Polynomial<K>& C, Chart chart) {
    auto vars = chart_vars(chart);
    return Form1<K>(chart, C.derivative(vars[0]), C.derivative(vars[1]));
}

} // namespace darboux
