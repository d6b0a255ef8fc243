#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "darboux/matrix.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Exact rank (and certified right kernel) of an integer matrix via
/// modular elimination. A nonzero modular pivot minor certifies the rank
/// from below; a CRT-reconstructed kernel, re-verified exactly over the
/// integers, certifies it from above. Falls back to fraction-free
/// elimination if reconstruction keeps failing.
class IntegerKernel {
public:
    struct Result {
        std::size_t rank = 0;
        std::vector<std::vector<Integer>> kernel;  // exact, verified
    };

    static Result compute(const std::vector<std::vector<Integer>>& m) {
        if (m.empty()) return {};
        const std::size_t cols = m[0].size();
        std::uint64_t prime = 2147483647ULL;  // scan downward from 2^31-1
        ModStructure ref;
        std::vector<std::uint64_t> used;
        std::vector<std::vector<Integer>> crt_entries;  // per kernel vec, per pivot row
        Integer modulus = 1;
        int bad = 0;
        for (int iter = 0; iter < 40; ++iter) {
            prime = prev_prime(prime - 1);
            ModStructure s = eliminate_mod(m, prime);
            if (ref.pivots.empty() && ref.rank == 0) {
                ref = s;
            } else if (s.rank > ref.rank) {
                // previous primes were unlucky; restart accumulation
                ref = s;
                used.clear();
                crt_entries.clear();
                modulus = 1;
            } else if (s.rank < ref.rank || s.pivots != ref.pivots) {
                if (++bad > 8) throw std::runtime_error("IntegerKernel: unstable pivots");
                continue;
            }
            accumulate(crt_entries, modulus, s, prime);
            used.push_back(prime);
            auto res = try_reconstruct(m, cols, ref, crt_entries, modulus);
            if (res) return *res;
        }
        return bareiss_fallback(m);
    }

private:
    struct ModStructure {
        std::size_t rank = 0;
        std::vector<std::size_t> pivots;
        std::vector<std::size_t> free_cols;
        // solved[r][f] = value of pivot r's coordinate in free column f's
        // kernel vector (already negated), all mod p
        std::vector<std::vector<std::uint64_t>> solved;
    };

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
    static std::uint64_t prev_prime(std::uint64_t n) {
        while (!is_prime(n)) --n;
        return n;
    }

    static ModStructure eliminate_mod(const std::vector<std::vector<Integer>>& m,
                                      std::uint64_t p) {
        const std::size_t rows = m.size(), cols = m[0].size();
        std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] = mpz_fdiv_ui(m[i][j].get_mpz_t(), p);
        ModStructure s;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t sel = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][c] % p) { sel = i; break; }
            if (sel == rows) { s.free_cols.push_back(c); continue; }
            std::swap(a[r], a[sel]);
            std::uint64_t inv = pow_mod(a[r][c], p - 2, p);
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] = mul_mod(a[r][j], inv, p);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || a[i][c] == 0) continue;
                std::uint64_t f = a[i][c];
                for (std::size_t j = c; j < cols; ++j)
                    a[i][j] = sub_mod(a[i][j], mul_mod(f, a[r][j], p), p);
            }
            s.pivots.push_back(c);
            ++r;
        }
        for (std::size_t c = s.pivots.empty() ? 0 : s.pivots.back() + 1; c < cols; ++c)
            if (std::find(s.pivots.begin(), s.pivots.end(), c) == s.pivots.end() &&
                std::find(s.free_cols.begin(), s.free_cols.end(), c) == s.free_cols.end())
                s.free_cols.push_back(c);
        s.rank = r;
        s.solved.assign(r, std::vector<std::uint64_t>(s.free_cols.size()));
        for (std::size_t fi = 0; fi < s.free_cols.size(); ++fi)
            for (std::size_t i = 0; i < r; ++i)
                s.solved[i][fi] = (p - a[i][s.free_cols[fi]]) % p;
        return s;
    }

    static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    static std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return a >= b ? a - b : a + p - b;
    }
    static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul_mod(r, b, p);
            b = mul_mod(b, b, p);
            e >>= 1;
        }
        return r;
    }

    static void accumulate(std::vector<std::vector<Integer>>& crt, Integer& modulus,
                           const ModStructure& s, std::uint64_t p) {
        const std::size_t nfree = s.free_cols.size();
        if (crt.empty()) crt.assign(nfree, std::vector<Integer>(s.rank, Integer(0)));
        Integer pz(static_cast<unsigned long>(p));
        if (modulus == 1) {
            for (std::size_t f = 0; f < nfree; ++f)
                for (std::size_t r = 0; r < s.rank; ++r)
                    crt[f][r] = Integer(static_cast<unsigned long>(s.solved[r][f]));
            modulus = pz;
            return;
        }
        // x = a mod modulus, x = b mod p  ->  x += modulus * ((b-a)/modulus mod p)
        Integer minv;
        if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw std::logic_error("IntegerKernel: CRT moduli not coprime");
        for (std::size_t f = 0; f < crt.size(); ++f)
            for (std::size_t r = 0; r < crt[f].size(); ++r) {
                Integer a = crt[f][r] % modulus;
                Integer bp(static_cast<unsigned long>(s.solved[r][f]));
                Integer diff = (bp - a) % pz;
                if (diff < 0) diff += pz;
                Integer k = (diff * minv) % pz;
                crt[f][r] = a + modulus * k;
            }
        modulus *= pz;
    }

    static std::optional<Integer> recon_den_bound(const Integer& modulus) {
        Integer b;
        mpz_sqrt(b.get_mpz_t(), Integer(modulus / 2).get_mpz_t());
        return b;
    }

    /// Balanced rational reconstruction n/d with |n|, d <= sqrt(m/2).
    static std::optional<Rational> reconstruct(const Integer& c, const Integer& m) {
        Integer bound = *recon_den_bound(m);
        Integer r0 = m, r1 = c % m;
        if (r1 < 0) r1 += m;
        Integer t0 = 0, t1 = 1;
        while (r1 > bound) {
            Integer q = r0 / r1;
            Integer r2 = r0 - q * r1;
            Integer t2 = t0 - q * t1;
            r0 = r1; r1 = r2;
            t0 = t1; t1 = t2;
        }
        if (t1 == 0) return std::nullopt;
        Integer n = r1, d = t1;
        if (d < 0) { d = -d; n = -n; }
        if (d > bound) return std::nullopt;
        if (gcd(n < 0 ? Integer(-n) : n, d) != 1) return std::nullopt;
        return Rational(n, d);
    }

    static std::optional<Result>
    try_reconstruct(const std::vector<std::vector<Integer>>& m, std::size_t cols,
                    const ModStructure& ref,
                    const std::vector<std::vector<Integer>>& crt,
                    const Integer& modulus) {
        Result out;
        out.rank = ref.rank;
        for (std::size_t f = 0; f < ref.free_cols.size(); ++f) {
            std::vector<Rational> v(cols, Rational());
            v[ref.free_cols[f]] = Rational(1);
            for (std::size_t r = 0; r < ref.rank; ++r) {
                auto q = reconstruct(crt[f][r], modulus);
                if (!q) return std::nullopt;
                v[ref.pivots[r]] = *q;
            }
            // clear denominators and verify exactly
            Integer den(1);
            for (const auto& x : v) den = lcm(den, x.denominator());
            std::vector<Integer> iv(cols);
            for (std::size_t j = 0; j < cols; ++j)
                iv[j] = v[j].numerator() * (den / v[j].denominator());
            for (const auto& row : m) {
                Integer dot(0);
                for (std::size_t j = 0; j < cols; ++j)
                    if (iv[j] != 0 && row[j] != 0) dot += row[j] * iv[j];
                if (dot != 0) return std::nullopt;
            }
            out.kernel.push_back(std::move(iv));
        }
        return out;
    }

    static Result bareiss_fallback(const std::vector<std::vector<Integer>>& m) {
        Matrix<Rational> q(m.size(), m[0].size(), Rational());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m[0].size(); ++j)
                q.at(i, j) = Rational(m[i][j]);
        auto b = bareiss_kernel(q);
        Result out;
        out.rank = b.rank;
        for (auto& v : b.kernel) {
            auto nv = normalize_to_coprime_integers(v);
            std::vector<Integer> iv;
            iv.reserve(nv.size());
            for (auto& x : nv) iv.push_back(x.numerator());
            out.kernel.push_back(std::move(iv));
        }
        return out;
    }
};

} // namespace darboux
