#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace darboux {

/// Prime-field element. The modulus travels with the value so that fields
/// of different characteristic cannot be mixed silently; all binary
/// operations check it in debug-style fashion.
class GFp {
public:
    GFp() : v_(0), p_(0) {}
    GFp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {
        if (p < 2) throw std::domain_error("GFp: modulus must be a prime >= 2");
    }
    static GFp from_signed(std::int64_t v, std::uint64_t p) {
        std::int64_t m = static_cast<std::int64_t>(p);
        std::int64_t r = v % m;
        if (r < 0) r += m;
        return GFp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    /// Representative in (-p/2, p/2].
    std::int64_t balanced() const {
        return v_ * 2 > p_ ? static_cast<std::int64_t>(v_) - static_cast<std::int64_t>(p_)
                           : static_cast<std::int64_t>(v_);
    }

    GFp zero() const { return GFp(0, p_); }
    GFp one() const { return GFp(1, p_); }
    GFp from_int(std::int64_t n) const { return from_signed(n, p_); }

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ != 0; }

    GFp operator-() const { return GFp(v_ == 0 ? 0 : p_ - v_, p_); }
    GFp operator+(const GFp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return GFp(s, p_);
    }
    GFp operator-(const GFp& o) const {
        check(o);
        return GFp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    GFp operator*(const GFp& o) const {
        check(o);
        return GFp(static_cast<std::uint64_t>(
                       (static_cast<unsigned __int128>(v_) * o.v_) % p_),
                   p_);
    }
    GFp operator/(const GFp& o) const { return *this * o.inverse(); }
    GFp& operator+=(const GFp& o) { *this = *this + o; return *this; }
    GFp& operator-=(const GFp& o) { *this = *this - o; return *this; }
    GFp& operator*=(const GFp& o) { *this = *this * o; return *this; }
    GFp& operator/=(const GFp& o) { *this = *this / o; return *this; }

    bool operator==(const GFp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const GFp& o) const { return !(*this == o); }

    GFp pow(std::uint64_t e) const {
        GFp r(1, p_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    GFp inverse() const {
        if (v_ == 0) throw std::domain_error("GFp: division by zero");
        return pow(p_ - 2);
    }

    /// Legendre symbol: 1 (QR), p-1 (non-residue), 0.
    bool is_square() const {
        if (v_ == 0) return true;
        return pow((p_ - 1) / 2).value() == 1;
    }

    /// Tonelli-Shanks square root; nullopt if no root exists.
    std::optional<GFp> sqrt() const {
        if (v_ == 0) return GFp(0, p_);
        if (p_ == 2) return *this;
        if (!is_square()) return std::nullopt;
        if (p_ % 4 == 3) return pow((p_ + 1) / 4);
        std::uint64_t q = p_ - 1, s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        GFp nr(2, p_);
        while (nr.is_square()) nr = nr + one();
        GFp c = nr.pow(q);
        GFp t = pow(q);
        GFp r = pow((q + 1) / 2);
        std::uint64_t m = s;
        while (t.value() != 1) {
            std::uint64_t i = 0;
            GFp t2 = t;
            while (t2.value() != 1) { t2 = t2 * t2; ++i; }
            GFp b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b;
            r = r * b;
            c = b * b;
            t = t * c;
            m = i;
        }
        return r;
    }

    std::string str() const { return std::to_string(v_); }

private:
    void check(const GFp& o) const {
        if (p_ != o.p_) throw std::domain_error("GFp: mixed moduli");
    }
    std::uint64_t v_, p_;
};

} // namespace darboux
