#pragma once

#include "fibpoly/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibpoly {

enum class TokenKind {
    Int,
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    VarX,
    End,
};

struct Token {
    TokenKind kind;
    std::size_t begin;  // character offsets into the source, end exclusive
    std::size_t end;
};

/// Lex or syntax error carrying the 0-based character offset it occurred at.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at offset " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Splits src into tokens, skipping whitespace.  The result always ends with
/// an End token.  Throws ParseError on any unrecognized character.
std::vector<Token> tokenize(std::string_view src);

/// Parses the polynomial grammar used by CLI flags and JSON configs:
///
///   expr     := term (("+"|"-") term)*
///   term     := factor (("*")? factor)*
///   factor   := "-" factor | atom ("^" INT)?
///   atom     := rational | "x" | "(" expr ")"
///   rational := INT ("/" INT)?
///
/// Implicit multiplication is permitted only between a numeric literal and a
/// following `x` or `(` (so "3x" and "2(x+1)" parse, "xx" does not).  Unary
/// minus covers the whole factor: "-x^2" is -(x^2).
Poly parse_poly(std::string_view src);

/// Parses an optionally signed rational literal, "p" or "p/q", reduced.
Rational parse_rational(std::string_view src);

}  // namespace fibpoly
