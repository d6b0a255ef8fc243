#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "darboux/scalar.hpp"

namespace darboux {

/// Dense matrix over an exact scalar type.
template <Scalar K>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, K proto)
        : rows_(rows), cols_(cols), a_(rows * cols, proto.zero()), proto_(proto.zero()) {}

    static Matrix identity(std::size_t n, K proto) {
        Matrix m(n, n, proto);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = proto.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const K& proto() const { return proto_; }

    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    std::vector<K> multiply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::multiply: size");
        std::vector<K> out(rows_, proto_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] = out[i] + at(i, j) * v[j];
        return out;
    }

    struct Reduced {
        Matrix m;
        std::vector<std::size_t> pivot_cols;
        std::size_t rank;
    };

    /// Gauss-Jordan reduced row echelon form; pivots must be units (for
    /// fields every nonzero element is).
    Reduced rref() const {
        Matrix m = *this;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = rows_;
            for (std::size_t i = r; i < rows_; ++i)
                if (m.at(i, c).is_unit()) { sel = i; break; }
            if (sel == rows_) continue;
            m.swap_rows(r, sel);
            K inv = proto_.one() / m.at(r, c);
            for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, c).is_zero()) continue;
                K f = m.at(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    m.at(i, j) = m.at(i, j) - f * m.at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return Reduced{std::move(m), std::move(pivots), r};
    }

    std::size_t rank() const { return rref().rank; }

    /// Right kernel basis from the reduced form: one vector per free
    /// column, unit entry at its free column.
    std::vector<std::vector<K>> kernel_basis() const {
        Reduced red = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : red.pivot_cols) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<K> v(cols_, proto_.zero());
            v[f] = proto_.one();
            for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
                v[red.pivot_cols[r]] = -red.m.at(r, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> a_;
    K proto_;
};

/// Fraction-free (Bareiss) row echelon reduction of a rational matrix:
/// rows are scaled to integers first, all intermediate entries stay
/// integral, and the kernel is recovered by exact back-substitution.
struct BareissResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::vector<Rational>> kernel;
};

inline BareissResult bareiss_kernel(const Matrix<Rational>& input) {
    const std::size_t rows = input.rows(), cols = input.cols();
    Matrix<Rational> m = input;
    for (std::size_t i = 0; i < rows; ++i) {
        Integer den(1);
        for (std::size_t j = 0; j < cols; ++j)
            den = lcm(den, m.at(i, j).denominator());
        Rational s{den};
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = m.at(i, j) * s;
    }
    Rational prev(1);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) { sel = i; break; }
        if (sel == rows) continue;
        m.swap_rows(r, sel);
        Rational piv = m.at(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * piv - f * m.at(r, j)) / prev;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    BareissResult out;
    out.rank = r;
    out.pivot_cols = pivots;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational());
        v[f] = Rational(1);
        for (std::size_t i = r; i-- > 0;) {
            // solve row i for its pivot column
            Rational s;
            for (std::size_t j = pivots[i] + 1; j < cols; ++j)
                s = s + m.at(i, j) * v[j];
            v[pivots[i]] = -s / m.at(i, pivots[i]);
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

/// Scale a rational vector to coprime integers with positive leading sign.
inline std::vector<Rational> normalize_to_coprime_integers(std::vector<Rational> v) {
    Integer den(1);
    for (const auto& x : v) den = lcm(den, x.denominator());
    Integer g(0);
    std::vector<Integer> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        Integer n = x.numerator() * (den / x.denominator());
        g = gcd(g, n);
        ints.push_back(n);
    }
    if (g == 0) return v;
    int sign = 0;
    for (const auto& n : ints)
        if (n != 0) { sign = n > 0 ? 1 : -1; break; }
    if (sign < 0) g = -g;
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& n : ints) out.emplace_back(Integer(n / g));
    return out;
}

} // namespace darboux
