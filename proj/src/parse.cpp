// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#include "orc/parse.hpp"

#include <cctype>
#include <optional>

namespace orc {

namespace {

struct Token {
    enum class Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& msg, std::size_t pos) const {
        fail(errc::ParseError, msg + " at position " + std::to_string(pos) + " in \"" + s_ + "\"");
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::Kind::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Kind::Int, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '~') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '~'))
                ++j;
            tok_ = {Token::Kind::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Kind::Plus, "+", start}; return;
            case '-': tok_ = {Token::Kind::Minus, "-", start}; return;
            case '*': tok_ = {Token::Kind::Star, "*", start}; return;
            case '/': tok_ = {Token::Kind::Slash, "/", start}; return;
            case '^': tok_ = {Token::Kind::Caret, "^", start}; return;
            case '(': tok_ = {Token::Kind::LParen, "(", start}; return;
            case ')': tok_ = {Token::Kind::RParen, ")", start}; return;
            case ',': tok_ = {Token::Kind::Comma, ",", start}; return;
            default: fail(errc::ParseError, std::string("unexpected character '") + c +
                                                "' at position " + std::to_string(start));
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::End, "", 0};
};

/// Resolve an identifier to a scalar of `domain`, descending through the
/// coefficient tower.
std::optional<Value> resolve_scalar(const std::string& name, const DomainPtr& domain) {
    switch (domain->kind()) {
        case DomainKind::PolyRing: {
            int idx = domain->var_index(name);
            if (idx >= 0) {
                Polynomial v = Polynomial::variable(domain, static_cast<std::size_t>(idx));
                return Value(domain, std::make_shared<const Polynomial>(std::move(v)));
            }
            if (auto inner = resolve_scalar(name, domain->coeff())) {
                Polynomial c = Polynomial::constant(domain, *inner);
                return Value(domain, std::make_shared<const Polynomial>(std::move(c)));
            }
            return std::nullopt;
        }
        case DomainKind::Quotient: {
            if (auto amb = resolve_scalar(name, domain->ambient())) return coerce(*amb, domain);
            return std::nullopt;
        }
        case DomainKind::Fraction: {
            if (auto b = resolve_scalar(name, domain->base())) return coerce(*b, domain);
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

class PolyParser {
public:
    PolyParser(const std::string& text, DomainPtr ring) : lex_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        if (lex_.peek().kind != Token::Kind::End)
            lex_.error("trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
        return p;
    }

private:
    Polynomial expr() {
        bool negate = false;
        if (lex_.peek().kind == Token::Kind::Plus) lex_.take();
        else if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = acc.neg();
        while (true) {
            if (lex_.peek().kind == Token::Kind::Plus) {
                lex_.take();
                acc = acc.add(term());
            } else if (lex_.peek().kind == Token::Kind::Minus) {
                lex_.take();
                acc = acc.sub(term());
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::Star) {
                lex_.take();
                acc = acc.mul(factor());
            } else if (k == Token::Kind::Slash) {
                Token slash = lex_.take();
                Polynomial d = factor();
                if (d.is_zero()) lex_.error("division by zero", slash.pos);
                if (!d.is_constant())
                    lex_.error("division by non-constant polynomial", slash.pos);
                acc = acc.divide_coeffs(d.constant_value());
            } else if (k == Token::Kind::Int || k == Token::Kind::Ident ||
                       k == Token::Kind::LParen) {
                acc = acc.mul(factor());  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (lex_.peek().kind == Token::Kind::Caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::Int) lex_.error("expected integer exponent", e.pos);
            base = base.pow(std::stoul(e.text));
        }
        return base;
    }

    Polynomial primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Int:
                return Polynomial::constant(ring_, ring_->coeff()->from_bigint(BigInt(t.text)));
            case Token::Kind::Ident: {
                if (auto v = resolve_scalar(t.text, ring_)) return v->as_poly();
                lex_.error("unknown identifier '" + t.text + "' in " + ring_->describe(), t.pos);
            }
            case Token::Kind::LParen: {
                Polynomial p = expr();
                Token close = lex_.take();
                if (close.kind != Token::Kind::RParen) lex_.error("expected ')'", close.pos);
                return p;
            }
            default:
                lex_.error("unexpected token '" + t.text + "'", t.pos);
        }
    }

    Lexer lex_;
    DomainPtr ring_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const DomainPtr& ring) {
    require(ring->kind() == DomainKind::PolyRing, errc::BadConstruction,
            "parse_polynomial needs a polynomial ring");
    return PolyParser(text, ring).run();
}

Value parse_value(const std::string& text, const DomainPtr& domain) {
    if (domain->kind() == DomainKind::PolyRing) {
        Polynomial p = parse_polynomial(text, domain);
        return Value(domain, std::make_shared<const Polynomial>(std::move(p)));
    }
    // Evaluate inside a scratch one-variable ring over the domain; the
    // variable is unnameable, so any parse result is constant.
    DomainPtr scratch = Domain::poly_ring(domain, {"~scratch"});
    Polynomial p = parse_polynomial(text, scratch);
    return p.constant_value();
}

Ideal parse_ideal(const std::string& text, const DomainPtr& domain) {
    std::string s = text;
    auto trim = [](std::string& x) {
        while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.erase(0, 1);
        while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
    };
    trim(s);
    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        // Strip outer parentheses only when they wrap the whole string.
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') {
                --depth;
                if (depth == 0 && i + 1 != s.size()) {
                    wraps = false;
                    break;
                }
            }
        }
        if (wraps) {
            s = s.substr(1, s.size() - 2);
            trim(s);
        }
    }
    std::vector<Value> gens;
    if (!s.empty()) {
        std::size_t start = 0;
        int depth = 0;
        for (std::size_t i = 0; i <= s.size(); ++i) {
            if (i == s.size() || (s[i] == ',' && depth == 0)) {
                std::string piece = s.substr(start, i - start);
                trim(piece);
                if (piece.empty())
                    fail(errc::ParseError, "empty ideal generator in \"" + text + "\"");
                gens.push_back(parse_value(piece, domain));
                start = i + 1;
            } else if (s[i] == '(') {
                ++depth;
            } else if (s[i] == ')') {
                --depth;
            }
        }
    }
    return Ideal(domain, std::move(gens));
}

}  // namespace orc
