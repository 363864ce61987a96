#ifndef RESOLV_POLY_TEXT_HPP
#define RESOLV_POLY_TEXT_HPP

#include <cctype>
#include <sstream>
#include <string>

#include "resolv/multipoly.hpp"

namespace resolv {

struct syntax_error : error {
    syntax_error(const std::string& what, size_t offset)
        : error(what + " at offset " + std::to_string(offset)), offset(offset) {}
    size_t offset;
};

/// Deterministic canonical form: terms in graded-lex descending order,
/// explicit `*` between factors, `^` for powers, rationals as n/d.
inline std::string format_poly(const MultiPoly& p) {
    auto terms = p.compacted().named_terms();
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [mono, c] : terms) {
        BigRat mag = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool need_coeff = !mag.is_one() || mono.empty();
        if (need_coeff) out << mag.str();
        bool need_star = need_coeff;
        // named_terms keys iterate alphabetically; re-sort by canonical order.
        std::vector<std::pair<std::string, int>> fac(mono.begin(), mono.end());
        std::sort(fac.begin(), fac.end(), [](auto& a, auto& b) {
            return var_name_less(a.first, b.first);
        });
        for (auto& [v, e] : fac) {
            if (need_star) out << "*";
            out << v;
            if (e > 1) out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw syntax_error("unexpected trailing input", pos_);
        return p;
    }

private:
    MultiPoly expr() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (get() == '-') sign = -1;
        }
        MultiPoly acc = BigRat(sign) * term();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                MultiPoly t = term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                get();
                acc *= factor();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
                // implicit multiplication, e.g. "4(x+1)" or "2x"
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        skip_ws();
        if (peek() == '^') {
            size_t at = pos_;
            get();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw syntax_error("expected exponent", pos_);
            long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + (get() - '0');
                if (e > 1000000) throw syntax_error("exponent too large", at);
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MultiPoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            MultiPoly p = expr();
            skip_ws();
            if (peek() != ')') throw syntax_error("expected ')'", pos_);
            get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            name += get();
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                name += get();
            return MultiPoly::var(name);
        }
        throw syntax_error("expected number, variable or '('", pos_);
    }

    MultiPoly number() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        skip_ws();
        if (peek() == '/') {
            size_t save = pos_;
            get();
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string den;
                while (std::isdigit(static_cast<unsigned char>(peek()))) den += get();
                return MultiPoly(BigRat(digits + "/" + den));
            }
            pos_ = save;  // '/' belongs to something else; not our grammar anyway
        }
        return MultiPoly(BigRat(digits));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse_poly(const std::string& text) {
    return detail::PolyParser(text).parse().compacted();
}

}  // namespace resolv

#endif
