#include "nodelift/poly/parser.hpp"
#include "nodelift/error.hpp"

#include <algorithm>
#include <cctype>

namespace nodelift {

namespace {

constexpr std::uint32_t kMaxExponent = 1000;

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
            throw Error(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, c) + "' at " +
                                                    std::to_string(i), i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars, const Ring& ring)
        : toks_(tokenize(text)), vars_(vars), ring_(ring)
    {
    }

    MultiPoly parse()
    {
        MultiPoly f = expr();
        if (peek().kind != Tok::End)
            fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::SyntaxError, what + " at " + std::to_string(peek().pos), peek().pos);
    }

    MultiPoly expr()
    {
        MultiPoly acc(vars_, ring_);
        if (peek().kind == Tok::Minus) {
            next();
            acc -= term();
        } else {
            acc = term();
        }
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            MultiPoly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    MultiPoly term()
    {
        MultiPoly acc = factor();
        while (peek().kind == Tok::Star) {
            next();
            acc *= factor();
        }
        if (peek().kind == Tok::Number || peek().kind == Tok::Ident || peek().kind == Tok::LParen)
            fail("implicit multiplication is not allowed");
        return acc;
    }

    MultiPoly factor()
    {
        MultiPoly b = base();
        if (peek().kind != Tok::Caret)
            return b;
        next();
        if (peek().kind != Tok::Number)
            fail("exponent must be a non-negative integer literal");
        const Token& t = next();
        if (t.text.size() > 4 || std::stoul(t.text) > kMaxExponent)
            throw Error(ErrorCode::SyntaxError, "exponent too large at " + std::to_string(t.pos), t.pos);
        auto e = static_cast<std::uint32_t>(std::stoul(t.text));
        if (peek().kind == Tok::Caret)
            fail("chained exponents need parentheses");
        return b.pow(e);
    }

    MultiPoly base()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Number: {
            next();
            return MultiPoly::constant(vars_, Scalar::from_int(ring_, BigInt(t.text)));
        }
        case Tok::Ident: {
            next();
            auto it = std::find(vars_.begin(), vars_.end(), t.text);
            if (it == vars_.end())
                throw Error(ErrorCode::UnknownVariable, "unknown variable '" + t.text + "' at " + std::to_string(t.pos),
                            t.pos);
            return MultiPoly::variable(vars_, ring_, static_cast<std::size_t>(it - vars_.begin()));
        }
        case Tok::LParen: {
            next();
            MultiPoly inner = expr();
            if (peek().kind != Tok::RParen)
                fail("expected ')'");
            next();
            return inner;
        }
        case Tok::End: fail("unexpected end of input");
        default: fail("unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const std::vector<std::string>& vars_;
    Ring ring_;
};

} // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, const Ring& ring)
{
    return Parser(text, vars, ring).parse();
}

} // namespace nodelift
