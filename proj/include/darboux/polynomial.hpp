#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/scalar.hpp"

namespace darboux {

/// Sparse multivariate polynomial: ordered variable list plus a map from
/// exponent vectors to nonzero coefficients. Values are immutable in
/// spirit; every operation returns a fresh polynomial.
template <Scalar K>
class Polynomial {
public:
    using Expo = std::vector<int>;

    Polynomial(std::vector<std::string> vars, K proto)
        : vars_(std::move(vars)), proto_(proto.zero()) {}

    static Polynomial constant(std::vector<std::string> vars, K c) {
        Polynomial r(std::move(vars), c);
        if (!c.is_zero()) r.terms_.emplace(Expo(r.vars_.size(), 0), c);
        return r;
    }

    static Polynomial variable(std::vector<std::string> vars,
                               const std::string& name, K proto) {
        Polynomial r(std::move(vars), proto);
        Expo e(r.vars_.size(), 0);
        e[r.var_index(name)] = 1;
        r.terms_.emplace(std::move(e), proto.one());
        return r;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Expo, K>& terms() const { return terms_; }
    const K& proto() const { return proto_; }

    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("Polynomial: unknown variable " + name);
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return total_degree() <= 0; }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }

    int degree_in(const std::string& name) const {
        std::size_t i = var_index(name);
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return is_zero() ? -1 : d;
    }

    bool is_homogeneous() const {
        int d = -2;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            if (d == -2) d = s;
            else if (d != s) return false;
        }
        return true;
    }

    K coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? proto_ : it->second;
    }

    K constant_term() const { return coeff(Expo(vars_.size(), 0)); }

    void add_term(const Expo& e, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(vars_, proto_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_vars(o);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        check_vars(o);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_vars(o);
        Polynomial r(vars_, proto_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Expo e(e1.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    Polynomial operator*(const K& s) const {
        Polynomial r(vars_, proto_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) {
            K v = c * s;
            if (!v.is_zero()) r.terms_.emplace(e, v);
        }
        return r;
    }

    Polynomial operator/(const K& s) const { return *this * (s.one() / s); }

    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned n) const {
        Polynomial r = constant(vars_, proto_.one());
        Polynomial b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    Polynomial derivative(const std::string& name) const {
        std::size_t i = var_index(name);
        Polynomial r(vars_, proto_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Expo e2 = e;
            e2[i] -= 1;
            r.add_term(e2, c * proto_.from_int(e[i]));
        }
        return r;
    }

    K eval(std::span<const K> point) const {
        if (point.size() != vars_.size())
            throw std::invalid_argument("Polynomial::eval: arity mismatch");
        K total = proto_;
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t = t * point[i];
            total = total + t;
        }
        return total;
    }

    /// Substitute one variable by a constant; variable list is unchanged.
    Polynomial eval_partial(const std::string& name, const K& value) const {
        std::size_t i = var_index(name);
        Polynomial r(vars_, proto_);
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (int k = 0; k < e[i]; ++k) t = t * value;
            Expo e2 = e;
            e2[i] = 0;
            r.add_term(e2, t);
        }
        return r;
    }

    /// Simultaneous substitution of variables by polynomials (all images
    /// over the same variable list, which becomes the result's list).
    Polynomial substitute(const std::map<std::string, Polynomial>& images) const {
        std::vector<std::string> out_vars =
            images.empty() ? vars_ : images.begin()->second.vars_;
        std::vector<Polynomial> image_of;
        image_of.reserve(vars_.size());
        for (const auto& v : vars_) {
            auto it = images.find(v);
            if (it != images.end()) {
                image_of.push_back(it->second);
            } else {
                image_of.push_back(variable(out_vars, v, proto_));
            }
        }
        Polynomial r(out_vars, proto_);
        // memoize powers per variable
        std::vector<std::vector<Polynomial>> pows(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            pows[i].push_back(constant(out_vars, proto_.one()));
        for (const auto& [e, c] : terms_) {
            Polynomial t = constant(out_vars, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                while (static_cast<int>(pows[i].size()) <= e[i])
                    pows[i].push_back(pows[i].back() * image_of[i]);
                if (e[i] > 0) t = t * pows[i][e[i]];
            }
            r = r + t;
        }
        return r;
    }

    Polynomial substitute(const std::string& name, const Polynomial& image) const {
        return substitute(std::map<std::string, Polynomial>{{name, image}});
    }

    /// Reinterpret over a different variable list (old variables must all
    /// appear in the new list).
    Polynomial with_vars(std::vector<std::string> new_vars) const {
        std::vector<std::size_t> pos;
        pos.reserve(vars_.size());
        for (const auto& v : vars_) {
            auto it = std::find(new_vars.begin(), new_vars.end(), v);
            if (it == new_vars.end())
                throw std::invalid_argument("with_vars: missing variable " + v);
            pos.push_back(static_cast<std::size_t>(it - new_vars.begin()));
        }
        Polynomial r(new_vars, proto_);
        for (const auto& [e, c] : terms_) {
            Expo e2(new_vars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) e2[pos[i]] = e[i];
            r.terms_.emplace(std::move(e2), c);
        }
        return r;
    }

    /// Rename variables positionally.
    Polynomial renamed(std::vector<std::string> new_vars) const {
        if (new_vars.size() != vars_.size())
            throw std::invalid_argument("renamed: arity mismatch");
        Polynomial r(std::move(new_vars), proto_);
        r.terms_ = terms_;
        return r;
    }

    template <Scalar K2, class Fn>
    Polynomial<K2> map_scalars(Fn&& fn, K2 proto) const {
        Polynomial<K2> r(vars_, proto);
        for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

    /// Coefficients with respect to one variable, as polynomials with the
    /// same variable list (that variable eliminated from each).
    std::map<int, Polynomial> by_degree_in(const std::string& name) const {
        std::size_t i = var_index(name);
        std::map<int, Polynomial> r;
        for (const auto& [e, c] : terms_) {
            Expo e2 = e;
            int k = e2[i];
            e2[i] = 0;
            auto it = r.find(k);
            if (it == r.end())
                it = r.emplace(k, Polynomial(vars_, proto_)).first;
            it->second.add_term(e2, c);
        }
        return r;
    }

    Polynomial coeff_in(const std::string& name, int k) const {
        std::size_t i = var_index(name);
        Polynomial r(vars_, proto_);
        for (const auto& [e, c] : terms_) {
            if (e[i] != k) continue;
            Expo e2 = e;
            e2[i] = 0;
            r.add_term(e2, c);
        }
        return r;
    }

    Polynomial leading_coeff_in(const std::string& name) const {
        return coeff_in(name, degree_in(name));
    }

    /// Leading coefficient in the lexicographic term order.
    K lex_leading_coeff() const {
        if (is_zero()) return proto_;
        return terms_.rbegin()->second;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print highest lex terms first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { os << "-"; cs = cs.substr(1); }
            } else {
                os << (neg ? " - " : " + ");
                if (neg) cs = cs.substr(1);
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << mono;
            } else {
                os << cs << "*" << mono;
            }
        }
        return os.str();
    }

private:
    void check_vars(const Polynomial& o) const {
        if (vars_ != o.vars_)
            throw std::invalid_argument("Polynomial: variable lists differ");
    }

    std::vector<std::string> vars_;
    std::map<Expo, K> terms_;
    K proto_;
};

/// Exact division attempt: on success quotient holds and remainder is 0;
/// otherwise quotient is empty and remainder witnesses the failure.
template <Scalar K>
struct DivisionOutcome {
    bool exact = false;
    Polynomial<K> quotient;
    Polynomial<K> remainder;
};

/// Single-divisor multivariate division in the lexicographic order. When
/// num is an exact multiple of den this terminates with zero remainder
/// regardless of the order used; the first non-divisible leading term is
/// returned as a witness otherwise.
template <Scalar K>
DivisionOutcome<K> try_exact_divide(const Polynomial<K>& num,
                                    const Polynomial<K>& den) {
    if (den.is_zero()) throw std::domain_error("exact division by zero polynomial");
    DivisionOutcome<K> out{true, Polynomial<K>(num.vars(), num.proto()), num};
    const auto& dterms = den.terms();
    const auto& dlead = *dterms.rbegin();
    while (!out.remainder.is_zero()) {
        const auto& rlead = *out.remainder.terms().rbegin();
        typename Polynomial<K>::Expo q(rlead.first.size());
        bool divisible = true;
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = rlead.first[i] - dlead.first[i];
            if (q[i] < 0) { divisible = false; break; }
        }
        if (!divisible) {
            out.exact = false;
            return out;
        }
        K c = rlead.second / dlead.second;
        Polynomial<K> t(num.vars(), num.proto());
        t.add_term(q, c);
        out.quotient = out.quotient + t;
        out.remainder = out.remainder - t * den;
    }
    return out;
}

struct NotDivisibleError : std::runtime_error {
    explicit NotDivisibleError(const std::string& witness)
        : std::runtime_error("not divisible; remainder witness: " + witness) {}
};

template <Scalar K>
Polynomial<K> exact_divide(const Polynomial<K>& num, const Polynomial<K>& den) {
    auto out = try_exact_divide(num, den);
    if (!out.exact) throw NotDivisibleError(out.remainder.str());
    return out.quotient;
}

} // namespace darboux
