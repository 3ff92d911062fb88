#pragma once

#include <cctype>
#include <string>

#include "jacsyz/ring.hpp"

namespace jacsyz {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Grammar (whitespace insignificant):
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := base [ '^' uint ]
//   base   := '(' expr ')' | number | var
//   number := uint [ '/' uint ]          -- a/b is a single rational literal
//   var    := 'x' uint                   -- index < nvars
// '/' anywhere else is rejected (division is not an operator), and
// multiplication is never implicit.
namespace parsedetail {

template <class F>
class Parser {
public:
    Parser(const std::string& text, const Ring<F>& ring) : s_(text), ring_(ring) {}

    Polynomial<F> run() {
        skip_ws();
        if (eof()) throw ParseError("empty input", 0);
        Polynomial<F> p = expr();
        skip_ws();
        if (!eof()) {
            if (peek() == '/') throw ParseError("division token (unsupported)", i_);
            throw ParseError("unexpected character '" + std::string(1, peek()) + "'", i_);
        }
        return p;
    }

private:
    const std::string& s_;
    size_t i_ = 0;
    const Ring<F>& ring_;

    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }
    bool accept(char c) {
        skip_ws();
        if (!eof() && peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }

    mpz_class read_uint() {
        skip_ws();
        size_t start = i_;
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[i_++];
        if (digits.empty()) throw ParseError("expected an integer", start);
        return mpz_class(digits);
    }

    Polynomial<F> expr() {
        bool negate = false;
        skip_ws();
        if (accept('+')) {
        } else if (accept('-')) {
            negate = true;
        }
        Polynomial<F> p = term();
        if (negate) p = -p;
        for (;;) {
            if (accept('+')) {
                p = p + term();
            } else if (accept('-')) {
                p = p - term();
            } else {
                return p;
            }
        }
    }

    Polynomial<F> term() {
        Polynomial<F> p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    Polynomial<F> factor() {
        Polynomial<F> b = base();
        if (accept('^')) {
            mpz_class e = read_uint();
            if (e > 64) throw ParseError("exponent too large", i_);
            b = pow(b, static_cast<int>(e.get_si()));
        }
        return b;
    }

    Polynomial<F> base() {
        skip_ws();
        if (eof()) throw ParseError("unexpected end of input", i_);
        char c = peek();
        if (c == '(') {
            ++i_;
            Polynomial<F> p = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", i_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = read_uint();
            skip_ws();
            if (!eof() && peek() == '/') {
                ++i_;
                size_t dpos = i_;
                skip_ws();
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("division token (unsupported)", dpos - 1);
                mpz_class den = read_uint();
                if (den == 0) throw ParseError("zero denominator", dpos);
                return Polynomial<F>::constant(ring_, ring_.field.from_fraction(num, den));
            }
            return Polynomial<F>::constant(ring_, ring_.field.from_mpz(num));
        }
        if (c == 'x') {
            size_t vpos = i_;
            ++i_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected a variable index after 'x'", i_);
            mpz_class idx = read_uint();
            if (idx >= ring_.nvars)
                throw ParseError("variable index " + idx.get_str() + " out of range (nvars=" +
                                     std::to_string(ring_.nvars) + ")",
                                 vpos);
            return Polynomial<F>::variable(ring_, static_cast<int>(idx.get_si()));
        }
        if (c == '/') throw ParseError("division token (unsupported)", i_);
        throw ParseError("unexpected character '" + std::string(1, c) + "'", i_);
    }
};

}  // namespace parsedetail

template <class F>
Polynomial<F> parse_poly(const std::string& text, const Ring<F>& ring) {
    return parsedetail::Parser<F>(text, ring).run();
}

namespace parsedetail {

inline std::pair<std::string, std::string> coeff_parts(const Rationals&, const mpq_class& c) {
    // sign, magnitude
    mpq_class a = c < 0 ? mpq_class(-c) : c;
    return {c < 0 ? "-" : "+", a.get_str()};
}
inline std::pair<std::string, std::string> coeff_parts(const PrimeField& K, PrimeField::Elem c) {
    return {"+", K.to_string(c)};
}

}  // namespace parsedetail

// Canonical printer; parse(to_string(p)) == p.
template <class F>
std::string to_string(const Polynomial<F>& p) {
    if (p.is_zero()) return "0";
    const F& K = p.ring().field;
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        auto [sign, mag] = parsedetail::coeff_parts(K, t.coeff);
        if (first) {
            if (sign == "-") out += '-';
            first = false;
        } else {
            out += sign;
        }
        if (t.mono.is_one()) {
            out += mag;
        } else if (mag == "1") {
            out += mono_to_string(t.mono);
        } else {
            out += mag;
            out += '*';
            out += mono_to_string(t.mono);
        }
    }
    return out;
}

}  // namespace jacsyz
