#include "fock/parser.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

namespace fock {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, At, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::Number, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({Tok::Name, std::string(src.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case ',': kind = Tok::Comma; break;
            case '@': kind = Tok::At; break;
            default:
                throw SyntaxError(start, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", src.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, std::size_t dim) : toks_(tokenize(text)), dim_(dim) {}

    FieldPoly run() {
        FieldPoly p = parse_expr();
        if (peek().kind != Tok::End) {
            throw SyntaxError(peek().offset, "trailing input after expression");
        }
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) {
            throw SyntaxError(peek().offset, std::string("expected ") + what);
        }
        return toks_[pos_++];
    }

    std::uint64_t parse_small_nat(const char* what, std::uint64_t max) {
        const Token& t = expect(Tok::Number, what);
        if (t.text.size() > 10) {
            throw SyntaxError(t.offset, std::string(what) + " too large");
        }
        std::uint64_t v = std::stoull(t.text);
        if (v > max) {
            throw SyntaxError(t.offset, std::string(what) + " too large");
        }
        return v;
    }

    FieldPoly parse_expr() {
        FieldPoly p = parse_term();
        for (;;) {
            if (accept(Tok::Plus)) {
                p += parse_term();
            } else if (accept(Tok::Minus)) {
                p -= parse_term();
            } else {
                return p;
            }
        }
    }

    FieldPoly parse_term() {
        FieldPoly p = parse_factor();
        while (accept(Tok::Star)) {
            p *= parse_factor();
        }
        return p;
    }

    FieldPoly parse_factor() {
        FieldPoly a = parse_atom();
        if (accept(Tok::Caret)) {
            std::uint64_t n = parse_small_nat("exponent", 64);
            FieldPoly r = FieldPoly::one();
            for (std::uint64_t i = 0; i < n; ++i) r *= a;
            return r;
        }
        return a;
    }

    FieldPoly parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Minus: {
                ++pos_;
                if (peek().kind != Tok::Number) {
                    throw SyntaxError(peek().offset, "expected number after '-'");
                }
                return FieldPoly(-parse_rational());
            }
            case Tok::Number:
                return FieldPoly(parse_rational());
            case Tok::Name:
                return FieldPoly(parse_generator());
            case Tok::LParen: {
                ++pos_;
                FieldPoly p = parse_expr();
                expect(Tok::RParen, "')'");
                return p;
            }
            default:
                throw SyntaxError(t.offset, "expected number, generator or '('");
        }
    }

    Rational parse_rational() {
        const Token& num = expect(Tok::Number, "number");
        BigInt n(num.text);
        if (accept(Tok::Slash)) {
            const Token& den = expect(Tok::Number, "denominator");
            BigInt d(den.text);
            if (d.is_zero()) {
                throw SyntaxError(den.offset, "zero denominator");
            }
            return Rational(std::move(n), std::move(d));
        }
        return Rational(std::move(n));
    }

    Generator parse_generator() {
        MultiIndex deriv(dim_);
        const Token& head = expect(Tok::Name, "generator");
        std::string field = head.text;
        if (field == "D" && peek().kind == Tok::LBracket) {
            std::size_t list_offset = peek().offset;
            ++pos_; // '['
            std::vector<std::uint32_t> entries;
            entries.push_back(static_cast<std::uint32_t>(parse_small_nat("derivative order", 1000)));
            while (accept(Tok::Comma)) {
                entries.push_back(static_cast<std::uint32_t>(parse_small_nat("derivative order", 1000)));
            }
            expect(Tok::RBracket, "']'");
            if (entries.size() != dim_) {
                throw Error("DimensionMismatch",
                            "derivative list at byte " + std::to_string(list_offset) + " has " +
                                std::to_string(entries.size()) + " entries, dimension is " +
                                std::to_string(dim_));
            }
            deriv = MultiIndex(std::move(entries));
            field = expect(Tok::Name, "field name").text;
        }
        const Token& at = expect(Tok::At, "'@'");
        std::uint64_t point = parse_small_nat("point label", 1000000);
        if (point == 0) {
            throw SyntaxError(at.offset + 1, "point label must be at least 1");
        }
        return Generator{std::move(field), static_cast<std::uint32_t>(point), std::move(deriv)};
    }

    std::vector<Token> toks_;
    std::size_t dim_;
    std::size_t pos_ = 0;
};

} // namespace

FieldPoly parse_expression(std::string_view text, std::size_t dim) {
    if (dim == 0) {
        throw Error("BadArgument", "dimension must be at least 1");
    }
    return Parser(text, dim).run();
}

} // namespace fock
