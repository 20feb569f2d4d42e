#ifndef HNC_EXPR_HPP
#define HNC_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnc/rational.hpp"

namespace hnc {

enum class ExprKind {
    rational_const,  // value
    prime_p,
    fermat_q2,
    variable,   // name
    bernoulli,  // kids: {index}
    harmonic,   // kids: {index}; order 1..3
    binomial,   // kids: {n, k}
    sum,        // name = binder; kids: {lo, hi, body}
    neg,        // kids: {x}
    add,
    sub,
    mul,
    div,
    pow,  // kids: {base, exponent}; exponent is an index expression
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    Rational value;  // rational_const only; parser keeps it non-negative
    std::string name;
    int order = 1;
    std::vector<ExprPtr> kids;
};

namespace detail {
inline std::shared_ptr<Expr> new_expr(ExprKind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
}
}  // namespace detail

inline ExprPtr make_rational(const Rational& v) {
    auto e = detail::new_expr(ExprKind::rational_const);
    e->value = v;
    return e;
}
inline ExprPtr make_integer(long long v) { return make_rational(Rational(v)); }
inline ExprPtr make_p() { return detail::new_expr(ExprKind::prime_p); }
inline ExprPtr make_q2() { return detail::new_expr(ExprKind::fermat_q2); }
inline ExprPtr make_var(std::string name) {
    auto e = detail::new_expr(ExprKind::variable);
    e->name = std::move(name);
    return e;
}
inline ExprPtr make_bernoulli(ExprPtr idx) {
    auto e = detail::new_expr(ExprKind::bernoulli);
    e->kids = {std::move(idx)};
    return e;
}
inline ExprPtr make_harmonic(ExprPtr idx, int order = 1) {
    auto e = detail::new_expr(ExprKind::harmonic);
    e->order = order;
    e->kids = {std::move(idx)};
    return e;
}
inline ExprPtr make_binomial(ExprPtr n, ExprPtr k) {
    auto e = detail::new_expr(ExprKind::binomial);
    e->kids = {std::move(n), std::move(k)};
    return e;
}
inline ExprPtr make_sum(std::string var, ExprPtr lo, ExprPtr hi, ExprPtr body) {
    auto e = detail::new_expr(ExprKind::sum);
    e->name = std::move(var);
    e->kids = {std::move(lo), std::move(hi), std::move(body)};
    return e;
}
inline ExprPtr make_neg(ExprPtr x) {
    auto e = detail::new_expr(ExprKind::neg);
    e->kids = {std::move(x)};
    return e;
}
inline ExprPtr make_binary(ExprKind k, ExprPtr a, ExprPtr b) {
    auto e = detail::new_expr(k);
    e->kids = {std::move(a), std::move(b)};
    return e;
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->name != b->name || a->order != b->order ||
        a->value != b->value || a->kids.size() != b->kids.size())
        return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!expr_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

struct Quantifier {
    std::string var;
    ExprPtr lo, hi;
};

struct CongruenceSpec {
    std::string id;
    long long prime_greater_than = 0;
    std::optional<Quantifier> quantifier;
    ExprPtr lhs, rhs;
    int mod_exponent = 1;
};

inline bool operator==(const CongruenceSpec& a, const CongruenceSpec& b) {
    if (a.id != b.id || a.prime_greater_than != b.prime_greater_than ||
        a.mod_exponent != b.mod_exponent || a.quantifier.has_value() != b.quantifier.has_value())
        return false;
    if (a.quantifier) {
        if (a.quantifier->var != b.quantifier->var ||
            !expr_equal(a.quantifier->lo, b.quantifier->lo) ||
            !expr_equal(a.quantifier->hi, b.quantifier->hi))
            return false;
    }
    return expr_equal(a.lhs, b.lhs) && expr_equal(a.rhs, b.rhs);
}
inline bool operator!=(const CongruenceSpec& a, const CongruenceSpec& b) { return !(a == b); }

// ---- canonical printing ------------------------------------------------
//
// Precedence levels: +,- = 1; *,/ = 2; unary - = 3; ^ = 4; atoms = 5.
// A rational constant with denominator > 1 prints with '/' and therefore
// behaves like a level-2 node.  Index positions print without spaces.

namespace detail {

inline int value_prec(const Expr& e) {
    switch (e.kind) {
        case ExprKind::add:
        case ExprKind::sub:
            return 1;
        case ExprKind::mul:
        case ExprKind::div:
            return 2;
        case ExprKind::rational_const:
            return rat_den(e.value) == 1 ? 5 : 2;
        case ExprKind::neg:
            return 3;
        case ExprKind::pow:
            return 4;
        default:
            return 5;
    }
}

inline void print_value(const Expr& e, int min_prec, std::string& out);

inline void print_index(const Expr& e, int min_prec, std::string& out) {
    switch (e.kind) {
        case ExprKind::rational_const: {
            out += rat_num(e.value).str();
            if (rat_den(e.value) != 1) {
                out += '/';
                out += rat_den(e.value).str();
            }
            return;
        }
        case ExprKind::prime_p:
            out += 'p';
            return;
        case ExprKind::variable:
            out += e.name;
            return;
        case ExprKind::neg: {
            bool wrap = 3 < min_prec;
            if (wrap) out += '(';
            out += '-';
            print_index(*e.kids[0], 5, out);
            if (wrap) out += ')';
            return;
        }
        case ExprKind::add:
        case ExprKind::sub: {
            bool wrap = 1 < min_prec;
            if (wrap) out += '(';
            print_index(*e.kids[0], 1, out);
            out += e.kind == ExprKind::add ? '+' : '-';
            print_index(*e.kids[1], 2, out);
            if (wrap) out += ')';
            return;
        }
        case ExprKind::mul:
        case ExprKind::div: {
            bool wrap = 2 < min_prec;
            if (wrap) out += '(';
            print_index(*e.kids[0], 2, out);
            out += e.kind == ExprKind::mul ? '*' : '/';
            print_index(*e.kids[1], 3, out);
            if (wrap) out += ')';
            return;
        }
        default:
            // not index material; fall back so printing never throws
            print_value(e, min_prec, out);
            return;
    }
}

inline void print_exponent(const Expr& e, std::string& out) {
    bool bare = false;
    switch (e.kind) {
        case ExprKind::rational_const:
            bare = rat_den(e.value) == 1 && rat_num(e.value) >= 0;
            break;
        case ExprKind::variable:
        case ExprKind::prime_p:
            bare = true;
            break;
        default:
            break;
    }
    if (bare) {
        print_index(e, 1, out);
    } else {
        out += '(';
        print_index(e, 1, out);
        out += ')';
    }
}

inline void print_value(const Expr& e, int min_prec, std::string& out) {
    switch (e.kind) {
        case ExprKind::rational_const: {
            bool frac = rat_den(e.value) != 1;
            bool wrap = (frac ? 2 : 5) < min_prec;
            if (wrap) out += '(';
            out += rat_num(e.value).str();
            if (frac) {
                out += '/';
                out += rat_den(e.value).str();
            }
            if (wrap) out += ')';
            return;
        }
        case ExprKind::prime_p:
            out += 'p';
            return;
        case ExprKind::fermat_q2:
            out += "q2";
            return;
        case ExprKind::variable:
            out += e.name;
            return;
        case ExprKind::bernoulli:
            out += "B(";
            print_index(*e.kids[0], 1, out);
            out += ')';
            return;
        case ExprKind::harmonic:
            out += "H(";
            print_index(*e.kids[0], 1, out);
            if (e.order != 1) {
                out += ',';
                out += std::to_string(e.order);
            }
            out += ')';
            return;
        case ExprKind::binomial:
            out += "binom(";
            print_index(*e.kids[0], 1, out);
            out += ',';
            print_index(*e.kids[1], 1, out);
            out += ')';
            return;
        case ExprKind::sum:
            out += "sum(";
            out += e.name;
            out += '=';
            print_index(*e.kids[0], 1, out);
            out += "..";
            print_index(*e.kids[1], 1, out);
            out += ", ";
            print_value(*e.kids[2], 1, out);
            out += ')';
            return;
        case ExprKind::neg: {
            bool wrap = 3 < min_prec;
            if (wrap) out += '(';
            out += '-';
            print_value(*e.kids[0], 4, out);
            if (wrap) out += ')';
            return;
        }
        case ExprKind::add:
        case ExprKind::sub: {
            bool wrap = 1 < min_prec;
            if (wrap) out += '(';
            print_value(*e.kids[0], 1, out);
            out += e.kind == ExprKind::add ? " + " : " - ";
            print_value(*e.kids[1], 2, out);
            if (wrap) out += ')';
            return;
        }
        case ExprKind::mul:
        case ExprKind::div: {
            bool wrap = 2 < min_prec;
            if (wrap) out += '(';
            print_value(*e.kids[0], 2, out);
            out += e.kind == ExprKind::mul ? '*' : '/';
            print_value(*e.kids[1], 3, out);
            if (wrap) out += ')';
            return;
        }
        case ExprKind::pow: {
            bool wrap = 4 < min_prec;
            if (wrap) out += '(';
            print_value(*e.kids[0], 5, out);
            out += '^';
            print_exponent(*e.kids[1], out);
            if (wrap) out += ')';
            return;
        }
    }
}

}  // namespace detail

inline std::string print_expr(const ExprPtr& e) {
    std::string out;
    detail::print_value(*e, 1, out);
    return out;
}

inline std::string print_congruence(const CongruenceSpec& c) {
    std::string out = c.id;
    out += " | p>";
    out += std::to_string(c.prime_greater_than);
    out += " | ";
    if (c.quantifier) {
        out += "forall(";
        out += c.quantifier->var;
        out += '=';
        detail::print_index(*c.quantifier->lo, 1, out);
        out += "..";
        detail::print_index(*c.quantifier->hi, 1, out);
        out += ", ";
    }
    detail::print_value(*c.lhs, 1, out);
    out += " === ";
    detail::print_value(*c.rhs, 1, out);
    if (c.quantifier) out += ')';
    out += " (mod p";
    if (c.mod_exponent != 1) {
        out += '^';
        out += std::to_string(c.mod_exponent);
    }
    out += ')';
    return out;
}

}  // namespace hnc

#endif
