#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/polynomial.hpp"

namespace darboux {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Field specification such as "QQ" or "GF(29)".
struct FieldSpec {
    bool rational = true;
    std::uint64_t p = 0;
    static FieldSpec parse(const std::string& s);
    std::string str() const {
        return rational ? "QQ" : "GF(" + std::to_string(p) + ")";
    }
    bool operator==(const FieldSpec&) const = default;
};

inline FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "QQ") return {};
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        std::uint64_t p = std::stoull(s.substr(3, s.size() - 4));
        if (p < 3) throw ParseError("field: prime must be odd, got " + s);
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw ParseError("field: " + s + " is not prime");
        return {false, p};
    }
    throw ParseError("unrecognized field spec: " + s);
}

namespace detail {

/// Recursive-descent parser over the grammar
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ['^' nat]
///   atom   := integer | name | '(' expr ')'
/// Division is only allowed by a constant (checked after parsing the rhs).
template <Scalar K>
class PolyParser {
public:
    PolyParser(std::string_view text, std::vector<std::string> vars, K proto)
        : s_(text), vars_(std::move(vars)), proto_(proto.zero()) {}

    Polynomial<K> parse() {
        auto p = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("trailing input at '" + rest() + "'");
        return p;
    }

private:
    using Poly = Polynomial<K>;

    Poly expr() {
        skip_ws();
        bool neg = accept('-');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                Poly d = factor();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError("division only by a nonzero constant");
                acc = acc / d.constant_term();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_) throw ParseError("expected exponent at '" + rest() + "'");
            unsigned e = static_cast<unsigned>(
                std::stoul(std::string(s_.substr(start, pos_ - start))));
            return base.pow(e);
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (accept('(')) {
            Poly p = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')' at '" + rest() + "'");
            return p;
        }
        if (accept('-')) return -atom();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return Poly::constant(vars_, from_digits(std::string(s_.substr(start, pos_ - start))));
        }
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            return Poly::variable(vars_, name, proto_);
        }
        throw ParseError("unexpected input at '" + rest() + "'");
    }

    K from_digits(const std::string& digits) const {
        // digit-by-digit so that arbitrarily large literals work in any field
        K ten = proto_.from_int(10);
        K acc = proto_.zero();
        for (char ch : digits) acc = acc * ten + proto_.from_int(ch - '0');
        return acc;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    std::string rest() const {
        return std::string(s_.substr(pos_, std::min<std::size_t>(24, s_.size() - pos_)));
    }

    std::string_view s_;
    std::vector<std::string> vars_;
    K proto_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <Scalar K>
Polynomial<K> parse_polynomial(std::string_view text,
                               std::vector<std::string> vars, K proto) {
    return detail::PolyParser<K>(text, std::move(vars), proto).parse();
}

/// Point literal "(a : b : c)" with integer or rational entries.
template <Scalar K>
std::vector<K> parse_point_coords(std::string_view text, K proto) {
    std::string t(text);
    std::vector<K> out;
    std::size_t i = 0;
    auto skip = [&] { while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i; };
    skip();
    if (i >= t.size() || t[i] != '(') throw ParseError("point: expected '('");
    ++i;
    for (;;) {
        std::size_t j = t.find_first_of(":)", i);
        if (j == std::string::npos) throw ParseError("point: unterminated literal");
        std::string entry = t.substr(i, j - i);
        out.push_back(detail::PolyParser<K>(entry, {}, proto).parse().constant_term());
        i = j + 1;
        if (t[j] == ')') break;
    }
    if (out.size() != 3) throw ParseError("point: expected three coordinates");
    return out;
}

} // namespace darboux
