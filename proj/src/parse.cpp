#include "fibpoly/parse.hpp"

#include <cctype>

namespace fibpoly {

namespace {

// Exponents are grammatically unbounded but a dense polynomial of absurd
// degree would exhaust memory long before being useful, so the parser caps
// them; Table-style inputs stay far below this.
constexpr unsigned long long kMaxExponent = 1ULL << 16;

bool is_digit(char ch) {
    return ch >= '0' && ch <= '9';
}

struct Parser {
    std::string_view src;
    std::vector<Token> tokens;
    std::size_t pos = 0;

    const Token& peek() const { return tokens[pos]; }

    Token take() { return tokens[pos++]; }

    bool at(TokenKind kind) const { return tokens[pos].kind == kind; }

    Token expect(TokenKind kind, const char* what) {
        if (!at(kind)) {
            throw ParseError(std::string("expected ") + what, peek().begin);
        }
        return take();
    }

    BigInt int_value(const Token& tok) const {
        return BigInt(std::string(src.substr(tok.begin, tok.end - tok.begin)));
    }

    // rational := INT ("/" INT)?
    Rational rational() {
        Token num = expect(TokenKind::Int, "integer");
        if (at(TokenKind::Slash)) {
            take();
            Token den = expect(TokenKind::Int, "integer denominator");
            BigInt d = int_value(den);
            if (d == 0) {
                throw ParseError("zero denominator in rational literal", den.begin);
            }
            return Rational(int_value(num), std::move(d));
        }
        return Rational(int_value(num));
    }

    // factor := "-" factor | atom ("^" INT)?
    // ends_in_literal reports whether the last consumed token was the INT of a
    // rational atom, which is what licenses implicit multiplication after it.
    Poly factor(bool& ends_in_literal) {
        if (at(TokenKind::Minus)) {
            take();
            return -factor(ends_in_literal);
        }
        Poly base;
        ends_in_literal = false;
        switch (peek().kind) {
            case TokenKind::Int:
                base = Poly(rational());
                ends_in_literal = true;
                break;
            case TokenKind::VarX:
                take();
                base = Poly::x();
                break;
            case TokenKind::LParen: {
                take();
                base = expr();
                expect(TokenKind::RParen, "')'");
                break;
            }
            default:
                throw ParseError("expected a number, 'x' or '('", peek().begin);
        }
        if (at(TokenKind::Caret)) {
            take();
            Token exp = expect(TokenKind::Int, "nonnegative integer exponent");
            BigInt e = int_value(exp);
            if (e > kMaxExponent) {
                throw ParseError("exponent too large", exp.begin);
            }
            base = pow(base, e.convert_to<unsigned long long>());
            ends_in_literal = false;
        }
        return base;
    }

    // term := factor (("*")? factor)*
    Poly term() {
        bool literal = false;
        Poly product = factor(literal);
        for (;;) {
            if (at(TokenKind::Star)) {
                take();
                product = product * factor(literal);
            } else if (literal && (at(TokenKind::VarX) || at(TokenKind::LParen))) {
                product = product * factor(literal);
            } else {
                return product;
            }
        }
    }

    // expr := term (("+"|"-") term)*
    Poly expr() {
        Poly sum = term();
        while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
            if (take().kind == TokenKind::Plus) {
                sum = sum + term();
            } else {
                sum = sum - term();
            }
        }
        return sum;
    }
};

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (is_digit(ch)) {
            std::size_t begin = i;
            while (i < src.size() && is_digit(src[i])) {
                ++i;
            }
            out.push_back({TokenKind::Int, begin, i});
            continue;
        }
        TokenKind kind;
        switch (ch) {
            case '/': kind = TokenKind::Slash; break;
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '^': kind = TokenKind::Caret; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case 'x': kind = TokenKind::VarX; break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", i);
        }
        out.push_back({kind, i, i + 1});
        ++i;
    }
    out.push_back({TokenKind::End, src.size(), src.size()});
    return out;
}

Poly parse_poly(std::string_view src) {
    Parser p{src, tokenize(src)};
    Poly result = p.expr();
    if (!p.at(TokenKind::End)) {
        throw ParseError("unexpected trailing input", p.peek().begin);
    }
    return result;
}

Rational parse_rational(std::string_view src) {
    Parser p{src, tokenize(src)};
    bool negative = false;
    while (p.at(TokenKind::Minus) || p.at(TokenKind::Plus)) {
        if (p.take().kind == TokenKind::Minus) {
            negative = !negative;
        }
    }
    Rational value = p.rational();
    if (!p.at(TokenKind::End)) {
        throw ParseError("unexpected trailing input", p.peek().begin);
    }
    return negative ? -value : value;
}

}  // namespace fibpoly
