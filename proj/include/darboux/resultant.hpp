#pragma once

#include <stdexcept>
#include <vector>

#include "darboux/polynomial.hpp"

namespace darboux {

/// Determinant by fraction-free (Bareiss) elimination; valid over any
/// integral domain with exact division, here polynomials over a field.
template <Scalar K>
Polynomial<K> determinant_bareiss(std::vector<std::vector<Polynomial<K>>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    const auto& vars = m[0][0].vars();
    K proto = m[0][0].proto();
    Polynomial<K> prev = Polynomial<K>::constant(vars, proto.one());
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t sel = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { sel = i; break; }
        if (sel == n) return Polynomial<K>(vars, proto);  // singular
        if (sel != k) {
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = Polynomial<K>(vars, proto);
        }
        prev = m[k][k];
    }
    Polynomial<K> det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

/// Sylvester resultant eliminating `var`, with the f-block first:
/// deg_g rows of f's coefficients followed by deg_f rows of g's.
template <Scalar K>
Polynomial<K> resultant(const Polynomial<K>& f, const Polynomial<K>& g,
                        const std::string& var) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant of a zero polynomial");
    const int df = f.degree_in(var), dg = g.degree_in(var);
    const auto& vars = f.vars();
    K proto = f.proto();
    auto coeff_of = [&](const Polynomial<K>& p, int k) {
        return p.coeff_in(var, k);
    };
    if (df == 0 && dg == 0)
        return Polynomial<K>::constant(vars, proto.one());
    if (df == 0) return f.pow(static_cast<unsigned>(dg));
    if (dg == 0) return g.pow(static_cast<unsigned>(df));
    const std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<Polynomial<K>>> m(
        n, std::vector<Polynomial<K>>(n, Polynomial<K>(vars, proto)));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                coeff_of(f, df - k);
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k)
            m[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + k)] =
                coeff_of(g, dg - k);
    return determinant_bareiss(std::move(m));
}

} // namespace darboux
