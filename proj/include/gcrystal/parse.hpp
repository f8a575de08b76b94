#pragma once

// Text front-end for PosRatExpr.
//
// Grammar (whitespace insignificant):
//   expr   := term ('+' term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' int)?           -- int may be negative (Laurent)
//   base   := var | posint | '(' expr ')'
//
// '-' is rejected everywhere except as the sign of an exponent: the
// expression language is subtraction-free by construction.

#include "gcrystal/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace gcrystal {

enum class ParseErrorKind {
    Syntax,
    UnknownVariable,
    NonPositiveLiteral,
    SubtractionNotAllowed,
};

class parse_error : public std::runtime_error {
public:
    parse_error(ParseErrorKind kind, size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          kind_(kind),
          pos_(pos) {}
    ParseErrorKind kind() const { return kind_; }
    size_t position() const { return pos_; }

private:
    ParseErrorKind kind_;
    size_t pos_;
};

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& variables)
        : text_(text), vars_(variables.begin(), variables.end()) {}

    PosRatExpr parse() {
        PosRatExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error(ParseErrorKind::Syntax, pos_, "unexpected trailing input");
        return e;
    }

private:
    PosRatExpr parse_expr() {
        PosRatExpr e = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                e = e + parse_term();
            } else if (peek() == '-') {
                throw parse_error(ParseErrorKind::SubtractionNotAllowed, pos_,
                                  "subtraction not allowed in positive expressions");
            } else {
                return e;
            }
        }
    }

    PosRatExpr parse_term() {
        PosRatExpr e = parse_factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                e = e * parse_factor();
            } else if (c == '/') {
                ++pos_;
                e = e / parse_factor();
            } else {
                return e;
            }
        }
    }

    PosRatExpr parse_factor() {
        PosRatExpr b = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            return b.pow(parse_int());
        }
        return b;
    }

    PosRatExpr parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            PosRatExpr e = parse_expr();
            skip_ws();
            if (peek() != ')')
                throw parse_error(ParseErrorKind::Syntax, pos_, "expected ')'");
            ++pos_;
            return e;
        }
        if (c == '-')
            throw parse_error(ParseErrorKind::SubtractionNotAllowed, pos_,
                              "unary minus not allowed in positive expressions");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            Rational v = Rational::from_string(text_.substr(start, pos_ - start));
            if (!v.is_positive())
                throw parse_error(ParseErrorKind::NonPositiveLiteral, start,
                                  "literal must be positive");
            return PosRatExpr::constant(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (!vars_.count(name))
                throw parse_error(ParseErrorKind::UnknownVariable, start,
                                  "unknown variable '" + name + "'");
            return PosRatExpr::variable(name);
        }
        throw parse_error(ParseErrorKind::Syntax, pos_, "expected variable, literal or '('");
    }

    int parse_int() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error(ParseErrorKind::Syntax, pos_, "expected integer exponent");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000)
                throw parse_error(ParseErrorKind::Syntax, pos_, "exponent too large");
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const std::string& text_;
    std::set<std::string> vars_;
    size_t pos_ = 0;
};

}  // namespace detail

inline PosRatExpr parse_expr(const std::string& text, const std::vector<std::string>& variables) {
    return detail::ExprParser(text, variables).parse();
}

}  // namespace gcrystal
