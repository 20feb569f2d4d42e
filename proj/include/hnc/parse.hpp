#ifndef HNC_PARSE_HPP
#define HNC_PARSE_HPP

#include <cctype>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hnc/errors.hpp"
#include "hnc/expr.hpp"

namespace hnc {

namespace detail {

enum class Tok {
    ident,
    integer,
    pipe,
    lparen,
    rparen,
    comma,
    assign,
    equiv,
    range,
    plus,
    minus,
    star,
    slash,
    caret,
    greater,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    long long ival = 0;
    int line = 1;
    int col = 1;
};

inline std::string tok_desc(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    if (t.kind == Tok::integer) return "integer " + t.text;
    return "'" + t.text + "'";
}

inline std::vector<Token> lex(const std::string& text, int line_base = 1) {
    std::vector<Token> out;
    int line = line_base;
    int col = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto ident_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    while (i < n) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < n && text[i] != '\n') ++i;
            continue;
        }
        const int tl = line, tc = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long long v = 0;
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
                v = v * 10 + static_cast<unsigned long long>(text[j] - '0');
                if (v > 0x7fffffffffffffffULL)
                    throw ParseError(tl, tc, "an integer literal below 2^63",
                                     "'" + text.substr(i, j - i + 1) + "...'");
                ++j;
            }
            out.push_back({Tok::integer, text.substr(i, j - i), static_cast<long long>(v), tl, tc});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + 1;
            // '.' joins an identifier only when followed by another ident char,
            // so "1..p" style ranges never collide with dotted ids like "con5.1"
            while (j < n && (ident_char(text[j]) ||
                             (text[j] == '.' && j + 1 < n && ident_char(text[j + 1]))))
                ++j;
            out.push_back({Tok::ident, text.substr(i, j - i), 0, tl, tc});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        auto single = [&](Tok k) {
            out.push_back({k, std::string(1, c), 0, tl, tc});
            ++i;
            ++col;
        };
        switch (c) {
            case '|': single(Tok::pipe); break;
            case '(': single(Tok::lparen); break;
            case ')': single(Tok::rparen); break;
            case ',': single(Tok::comma); break;
            case '+': single(Tok::plus); break;
            case '-': single(Tok::minus); break;
            case '*': single(Tok::star); break;
            case '/': single(Tok::slash); break;
            case '^': single(Tok::caret); break;
            case '>': single(Tok::greater); break;
            case '=': {
                std::size_t j = i;
                while (j < n && text[j] == '=') ++j;
                std::size_t run = j - i;
                if (run == 3)
                    out.push_back({Tok::equiv, "===", 0, tl, tc});
                else if (run == 1)
                    out.push_back({Tok::assign, "=", 0, tl, tc});
                else
                    throw ParseError(tl, tc, "'===' or '='", "'" + text.substr(i, run) + "'");
                i = j;
                col += static_cast<int>(run);
                break;
            }
            case '.': {
                if (i + 1 < n && text[i + 1] == '.') {
                    out.push_back({Tok::range, "..", 0, tl, tc});
                    i += 2;
                    col += 2;
                } else {
                    throw ParseError(tl, tc, "'..'", "'.'");
                }
                break;
            }
            default:
                throw ParseError(tl, tc, "a token", "'" + std::string(1, c) + "'");
        }
    }
    out.push_back({Tok::end, "", 0, line, col});
    return out;
}

inline bool is_keyword(const std::string& s) {
    return s == "p" || s == "q2" || s == "B" || s == "H" || s == "binom" || s == "sum" ||
           s == "forall" || s == "mod";
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    CongruenceSpec congruence() {
        CongruenceSpec spec;
        spec.id = expect_ident("an entry id");
        expect(Tok::pipe, "'|'");
        expect_keyword("p", "precondition 'p > N'");
        expect(Tok::greater, "'>'");
        spec.prime_greater_than = expect_integer("the precondition bound");
        expect(Tok::pipe, "'|'");
        if (cur().kind == Tok::ident && cur().text == "forall") {
            advance();
            expect(Tok::lparen, "'('");
            Quantifier q;
            q.var = binder_name();
            expect(Tok::assign, "'='");
            q.lo = iexpr();
            expect(Tok::range, "'..'");
            q.hi = iexpr();
            expect(Tok::comma, "','");
            scope_.push_back(q.var);
            spec.lhs = expr();
            expect(Tok::equiv, "'==='");
            spec.rhs = expr();
            scope_.pop_back();
            expect(Tok::rparen, "')'");
            spec.quantifier = std::move(q);
        } else {
            spec.lhs = expr();
            expect(Tok::equiv, "'==='");
            spec.rhs = expr();
        }
        expect(Tok::lparen, "'(mod ...)'");
        expect_keyword("mod", "'mod'");
        expect_keyword("p", "'p'");
        if (cur().kind == Tok::caret) {
            advance();
            const Token& t = cur();
            long long d = expect_integer("a modulus exponent");
            if (d < 1 || d > 3)
                throw ParseError(t.line, t.col, "a modulus exponent in 1..3", t.text);
            spec.mod_exponent = static_cast<int>(d);
        } else {
            spec.mod_exponent = 1;
        }
        expect(Tok::rparen, "')'");
        expect(Tok::end, "end of entry");
        return spec;
    }

    ExprPtr expression() {
        ExprPtr e = expr();
        expect(Tok::end, "end of expression");
        return e;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    void advance() {
        if (toks_[pos_].kind != Tok::end) ++pos_;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(cur().line, cur().col, expected, tok_desc(cur()));
    }
    void expect(Tok k, const std::string& what) {
        if (cur().kind != k) fail(what);
        advance();
    }
    std::string expect_ident(const std::string& what) {
        if (cur().kind != Tok::ident) fail(what);
        std::string s = cur().text;
        advance();
        return s;
    }
    void expect_keyword(const std::string& kw, const std::string& what) {
        if (cur().kind != Tok::ident || cur().text != kw) fail(what);
        advance();
    }
    long long expect_integer(const std::string& what) {
        if (cur().kind != Tok::integer) fail(what);
        long long v = cur().ival;
        advance();
        return v;
    }
    std::string binder_name() {
        if (cur().kind != Tok::ident || is_keyword(cur().text)) fail("a variable name");
        std::string s = cur().text;
        advance();
        return s;
    }
    bool bound(const std::string& name) const {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
            if (*it == name) return true;
        return false;
    }

    // value grammar: expr > term > unary > power > atom
    ExprPtr expr() {
        ExprPtr a = term();
        for (;;) {
            if (cur().kind == Tok::plus) {
                advance();
                a = make_binary(ExprKind::add, std::move(a), term());
            } else if (cur().kind == Tok::minus) {
                advance();
                a = make_binary(ExprKind::sub, std::move(a), term());
            } else {
                return a;
            }
        }
    }

    ExprPtr term() {
        ExprPtr a = unary();
        for (;;) {
            if (cur().kind == Tok::star) {
                advance();
                a = make_binary(ExprKind::mul, std::move(a), unary());
            } else if (cur().kind == Tok::slash) {
                advance();
                ExprPtr b = unary();
                // fold integer/integer into one rational constant: "7/24"
                if (a->kind == ExprKind::rational_const && b->kind == ExprKind::rational_const &&
                    rat_den(a->value) == 1 && rat_den(b->value) == 1 && b->value > 0 &&
                    a->value >= 0) {
                    a = make_rational(a->value / b->value);
                } else {
                    a = make_binary(ExprKind::div, std::move(a), std::move(b));
                }
            } else {
                return a;
            }
        }
    }

    ExprPtr unary() {
        if (cur().kind == Tok::minus) {
            advance();
            return make_neg(power());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (cur().kind != Tok::caret) return base;
        advance();
        return make_binary(ExprKind::pow, std::move(base), exponent());
    }

    // The exponent binds tightly: one signed index atom, so "2^k/k" is
    // (2^k)/k.  Anything larger must be parenthesized: "2^(p-1)".
    ExprPtr exponent() {
        bool negd = false;
        if (cur().kind == Tok::minus) {
            advance();
            negd = true;
        }
        ExprPtr e;
        const Token& t = cur();
        if (t.kind == Tok::integer) {
            e = make_integer(t.ival);
            advance();
        } else if (t.kind == Tok::lparen) {
            advance();
            e = iexpr();
            expect(Tok::rparen, "')'");
        } else if (t.kind == Tok::ident && t.text == "p") {
            e = make_p();
            advance();
        } else if (t.kind == Tok::ident && !is_keyword(t.text)) {
            if (!bound(t.text)) throw ParseError(t.line, t.col, "a bound variable", tok_desc(t));
            e = make_var(t.text);
            advance();
        } else {
            fail("an exponent (integer, variable, 'p', or parenthesized index expression)");
        }
        return negd ? make_neg(std::move(e)) : e;
    }

    ExprPtr atom() {
        const Token t = cur();
        if (t.kind == Tok::integer) {
            advance();
            return make_integer(t.ival);
        }
        if (t.kind == Tok::lparen) {
            advance();
            ExprPtr e = expr();
            expect(Tok::rparen, "')'");
            return e;
        }
        if (t.kind == Tok::ident) {
            if (t.text == "p") {
                advance();
                return make_p();
            }
            if (t.text == "q2") {
                advance();
                return make_q2();
            }
            if (t.text == "B") {
                advance();
                expect(Tok::lparen, "'('");
                ExprPtr idx = iexpr();
                expect(Tok::rparen, "')'");
                return make_bernoulli(std::move(idx));
            }
            if (t.text == "H") {
                advance();
                expect(Tok::lparen, "'('");
                ExprPtr idx = iexpr();
                int order = 1;
                if (cur().kind == Tok::comma) {
                    advance();
                    const Token& o = cur();
                    long long d = expect_integer("a harmonic order");
                    if (d < 1 || d > 3)
                        throw ParseError(o.line, o.col, "a harmonic order in 1..3", o.text);
                    order = static_cast<int>(d);
                }
                expect(Tok::rparen, "')'");
                return make_harmonic(std::move(idx), order);
            }
            if (t.text == "binom") {
                advance();
                expect(Tok::lparen, "'('");
                ExprPtr top = iexpr();
                expect(Tok::comma, "','");
                ExprPtr bottom = iexpr();
                expect(Tok::rparen, "')'");
                return make_binomial(std::move(top), std::move(bottom));
            }
            if (t.text == "sum") {
                advance();
                expect(Tok::lparen, "'('");
                std::string var = binder_name();
                expect(Tok::assign, "'='");
                ExprPtr lo = iexpr();
                expect(Tok::range, "'..'");
                ExprPtr hi = iexpr();
                expect(Tok::comma, "','");
                scope_.push_back(var);
                ExprPtr body = expr();
                scope_.pop_back();
                expect(Tok::rparen, "')'");
                return make_sum(std::move(var), std::move(lo), std::move(hi), std::move(body));
            }
            if (is_keyword(t.text)) fail("an expression atom");
            if (!bound(t.text)) throw ParseError(t.line, t.col, "a bound variable", tok_desc(t));
            advance();
            return make_var(t.text);
        }
        fail("an expression atom");
    }

    // index grammar: exact integer arithmetic, no '^'
    ExprPtr iexpr() {
        ExprPtr a = iterm();
        for (;;) {
            if (cur().kind == Tok::plus) {
                advance();
                a = make_binary(ExprKind::add, std::move(a), iterm());
            } else if (cur().kind == Tok::minus) {
                advance();
                a = make_binary(ExprKind::sub, std::move(a), iterm());
            } else {
                return a;
            }
        }
    }

    ExprPtr iterm() {
        ExprPtr a = iunary();
        for (;;) {
            if (cur().kind == Tok::star) {
                advance();
                a = make_binary(ExprKind::mul, std::move(a), iunary());
            } else if (cur().kind == Tok::slash) {
                advance();
                a = make_binary(ExprKind::div, std::move(a), iunary());
            } else {
                return a;
            }
        }
    }

    ExprPtr iunary() {
        if (cur().kind == Tok::minus) {
            advance();
            return make_neg(iatom());
        }
        return iatom();
    }

    ExprPtr iatom() {
        const Token t = cur();
        if (t.kind == Tok::integer) {
            advance();
            return make_integer(t.ival);
        }
        if (t.kind == Tok::lparen) {
            advance();
            ExprPtr e = iexpr();
            expect(Tok::rparen, "')'");
            return e;
        }
        if (t.kind == Tok::ident && t.text == "p") {
            advance();
            return make_p();
        }
        if (t.kind == Tok::ident && !is_keyword(t.text)) {
            if (!bound(t.text)) throw ParseError(t.line, t.col, "a bound variable", tok_desc(t));
            advance();
            return make_var(t.text);
        }
        fail("an index atom (integer, variable, 'p', or '(')");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> scope_;
};

}  // namespace detail

inline CongruenceSpec parse_congruence(const std::string& text, int line_base = 1) {
    detail::Parser p(detail::lex(text, line_base));
    return p.congruence();
}

inline ExprPtr parse_expression(const std::string& text) {
    detail::Parser p(detail::lex(text));
    return p.expression();
}

// One congruence per line; '#' comments and blank lines are skipped.
inline std::vector<CongruenceSpec> parse_catalog(const std::string& text) {
    std::vector<CongruenceSpec> out;
    std::set<std::string> seen;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string line =
            nl == std::string::npos ? text.substr(start) : text.substr(start, nl - start);
        ++line_no;
        std::vector<detail::Token> toks = detail::lex(line, line_no);
        if (toks.front().kind != detail::Tok::end) {
            detail::Parser p(std::move(toks));
            CongruenceSpec spec = p.congruence();
            if (!seen.insert(spec.id).second)
                throw ParseError(line_no, 1, "a unique entry id", "duplicate id '" + spec.id + "'");
            out.push_back(std::move(spec));
        }
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
    return out;
}

}  // namespace hnc

#endif
