#ifndef HNC_EVAL_HPP
#define HNC_EVAL_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnc/bernoulli_mod.hpp"
#include "hnc/context.hpp"
#include "hnc/errors.hpp"
#include "hnc/expr.hpp"
#include "hnc/residue.hpp"

namespace hnc {

class Bindings {
public:
    void push(const std::string& name, long long v) { stack_.emplace_back(name, v); }
    void set_top(long long v) { stack_.back().second = v; }
    void pop() { stack_.pop_back(); }
    const long long* find(const std::string& name) const {
        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it)
            if (it->first == name) return &it->second;
        return nullptr;
    }

private:
    std::vector<std::pair<std::string, long long>> stack_;
};

namespace detail {

// index positions: exact checked 64-bit integer arithmetic, never modular
inline long long eval_index(const Expr& e, const PrimeContext& ctx, const Bindings& b) {
    switch (e.kind) {
        case ExprKind::rational_const: {
            if (rat_den(e.value) != 1)
                throw NonIntegerIndex("index literal " + rat_num(e.value).str() + "/" +
                                      rat_den(e.value).str() + " is not an integer");
            BigInt n = rat_num(e.value);
            if (n > std::numeric_limits<long long>::max() ||
                n < std::numeric_limits<long long>::min())
                throw IndexOutOfRange("index literal out of 64-bit range");
            return n.convert_to<long long>();
        }
        case ExprKind::prime_p:
            return static_cast<long long>(ctx.p);
        case ExprKind::variable: {
            const long long* v = b.find(e.name);
            if (!v) throw UnboundVariable("variable '" + e.name + "' is not bound");
            return *v;
        }
        case ExprKind::neg: {
            long long x = eval_index(*e.kids[0], ctx, b);
            long long r;
            if (__builtin_sub_overflow(0LL, x, &r)) throw IndexOutOfRange("index overflow");
            return r;
        }
        case ExprKind::add:
        case ExprKind::sub:
        case ExprKind::mul: {
            long long x = eval_index(*e.kids[0], ctx, b);
            long long y = eval_index(*e.kids[1], ctx, b);
            long long r;
            bool bad = e.kind == ExprKind::add   ? __builtin_add_overflow(x, y, &r)
                       : e.kind == ExprKind::sub ? __builtin_sub_overflow(x, y, &r)
                                                 : __builtin_mul_overflow(x, y, &r);
            if (bad) throw IndexOutOfRange("index overflow");
            return r;
        }
        case ExprKind::div: {
            long long x = eval_index(*e.kids[0], ctx, b);
            long long y = eval_index(*e.kids[1], ctx, b);
            if (y == 0) throw NonIntegerIndex("division by zero in index expression");
            if (x % y != 0)
                throw NonIntegerIndex("index division " + std::to_string(x) + "/" +
                                      std::to_string(y) + " is not exact");
            return x / y;
        }
        default:
            throw NonIntegerIndex("only integer expressions may appear in index position");
    }
}

inline Residue eval_value(const Expr& e, const PrimeContext& ctx, const PrimePowerModulus& M,
                          Bindings& b) {
    switch (e.kind) {
        case ExprKind::rational_const:
            return reduce_rational(e.value, M);
        case ExprKind::prime_p:
            return Residue(M, ctx.p);
        case ExprKind::fermat_q2:
            return Residue(M, ctx.q2.value());
        case ExprKind::variable: {
            const long long* v = b.find(e.name);
            if (!v) throw UnboundVariable("variable '" + e.name + "' is not bound");
            return Residue::from_int(*v, M);
        }
        case ExprKind::bernoulli: {
            long long n = eval_index(*e.kids[0], ctx, b);
            if (n < 0) throw IndexOutOfRange("Bernoulli index " + std::to_string(n));
            if (n == 0) return Residue(M, 1);
            if (n == 1) return reduce_rational(Rational(-1, 2), M);
            if (static_cast<unsigned long long>(n) > ctx.p - 2)
                throw IndexOutOfRange("Bernoulli index " + std::to_string(n) +
                                      " exceeds p-2 for p = " + std::to_string(ctx.p));
            if (static_cast<unsigned long long>(n) == ctx.p - 3)
                return Residue(M, ctx.b_pm3.value());
            if (n % 2 == 1) return Residue(M, 0);
            return bernoulli_mod_recurrence(static_cast<int>(n), M);
        }
        case ExprKind::harmonic: {
            long long n = eval_index(*e.kids[0], ctx, b);
            if (n < 0) throw IndexOutOfRange("harmonic index " + std::to_string(n));
            if (static_cast<unsigned long long>(n) < ctx.p) {
                const std::vector<u128>& tab = e.order == 1 ? ctx.h1
                                               : e.order == 2
                                                   ? ctx.h2
                                                   : ctx.h3;
                return Residue(M, tab[static_cast<std::size_t>(n)]);
            }
            Residue acc(M, 0);
            for (long long k = 1; k <= n; ++k)
                acc += pow_mod(inverse(Residue::from_int(k, M)), e.order);
            return acc;
        }
        case ExprKind::binomial: {
            long long n = eval_index(*e.kids[0], ctx, b);
            long long k = eval_index(*e.kids[1], ctx, b);
            if (n < 0) throw IndexOutOfRange("binomial with negative top " + std::to_string(n));
            if (k < 0 || k > n) return Residue(M, 0);
            if (static_cast<unsigned long long>(n) == ctx.p)
                return Residue(M, ctx.binom_top[static_cast<std::size_t>(k)]);
            if (static_cast<unsigned long long>(n) == ctx.p - 1)
                return Residue(M, ctx.binom_prev[static_cast<std::size_t>(k)]);
            // incremental product with explicit extraction of p factors
            if (k > n - k) k = n - k;
            long long pexp = 0;
            Residue unit(M, 1);
            const long long p = static_cast<long long>(ctx.p);
            for (long long j = 1; j <= k; ++j) {
                long long num = n - k + j;
                while (num % p == 0) {
                    ++pexp;
                    num /= p;
                }
                unit *= Residue::from_int(num, M);
                long long den = j;
                while (den % p == 0) {
                    --pexp;
                    den /= p;
                }
                unit *= inverse(Residue::from_int(den, M));
            }
            for (long long i = 0; i < pexp && i < M.e(); ++i) unit *= Residue(M, ctx.p);
            return unit;
        }
        case ExprKind::sum: {
            long long lo = eval_index(*e.kids[0], ctx, b);
            long long hi = eval_index(*e.kids[1], ctx, b);
            Residue acc(M, 0);
            if (lo > hi) return acc;
            b.push(e.name, lo);
            for (long long k = lo;; ++k) {
                b.set_top(k);
                acc += eval_value(*e.kids[2], ctx, M, b);
                if (k == hi) break;
            }
            b.pop();
            return acc;
        }
        case ExprKind::neg:
            return Residue(M, 0) - eval_value(*e.kids[0], ctx, M, b);
        case ExprKind::add:
            return eval_value(*e.kids[0], ctx, M, b) + eval_value(*e.kids[1], ctx, M, b);
        case ExprKind::sub:
            return eval_value(*e.kids[0], ctx, M, b) - eval_value(*e.kids[1], ctx, M, b);
        case ExprKind::mul:
            return eval_value(*e.kids[0], ctx, M, b) * eval_value(*e.kids[1], ctx, M, b);
        case ExprKind::div: {
            Residue num = eval_value(*e.kids[0], ctx, M, b);
            Residue den = eval_value(*e.kids[1], ctx, M, b);
            u128 dv = den.value();
            if (dv != 0 && dv < ctx.p) return num * Residue(M, ctx.inv[static_cast<std::size_t>(dv)]);
            return num * inverse(den);
        }
        case ExprKind::pow: {
            long long x = eval_index(*e.kids[1], ctx, b);
            Residue base = eval_value(*e.kids[0], ctx, M, b);
            if (base.value() == 2 && x >= 0 && static_cast<unsigned long long>(x) < ctx.p)
                return Residue(M, ctx.pow2[static_cast<std::size_t>(x)]);
            return pow_mod(base, x);
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace detail

inline Residue evaluate_expr(const ExprPtr& e, const PrimeContext& ctx, int mod_exponent,
                             Bindings& bindings) {
    if (mod_exponent < 1 || mod_exponent > ctx.e_max)
        throw ModulusMismatch("context for p = " + std::to_string(ctx.p) +
                              " provides exponents 1.." + std::to_string(ctx.e_max) + ", not " +
                              std::to_string(mod_exponent));
    return detail::eval_value(*e, ctx, ctx.mod_at(mod_exponent), bindings);
}

inline Residue evaluate_expr(const ExprPtr& e, const PrimeContext& ctx, int mod_exponent) {
    Bindings b;
    return evaluate_expr(e, ctx, mod_exponent, b);
}

enum class Status { pass, fail, skipped, error };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::skipped:
            return "skipped";
        case Status::error:
            return "error";
    }
    return "?";
}

struct VerificationResult {
    std::string id;
    std::uint64_t p = 0;
    Status status = Status::error;
    std::optional<Residue> lhs, rhs;
    std::optional<std::string> message;
};

// Precondition is decided before anything is evaluated, so a skip can never
// mask an evaluation fault.  Quantified entries stop at the first mismatch.
inline VerificationResult check_congruence(const CongruenceSpec& spec, const PrimeContext& ctx) {
    VerificationResult r;
    r.id = spec.id;
    r.p = ctx.p;
    if (!(static_cast<long long>(ctx.p) > spec.prime_greater_than)) {
        r.status = Status::skipped;
        return r;
    }
    try {
        if (spec.mod_exponent > ctx.e_max)
            throw ModulusMismatch("entry " + spec.id + " needs exponent " +
                                  std::to_string(spec.mod_exponent) +
                                  " but the context was built at " + std::to_string(ctx.e_max));
        const PrimePowerModulus& M = ctx.mod_at(spec.mod_exponent);
        Bindings b;
        if (spec.quantifier) {
            long long lo = detail::eval_index(*spec.quantifier->lo, ctx, b);
            long long hi = detail::eval_index(*spec.quantifier->hi, ctx, b);
            r.status = Status::pass;
            if (lo > hi) return r;
            b.push(spec.quantifier->var, lo);
            for (long long k = lo;; ++k) {
                b.set_top(k);
                Residue lv = detail::eval_value(*spec.lhs, ctx, M, b);
                Residue rv = detail::eval_value(*spec.rhs, ctx, M, b);
                r.lhs = lv;
                r.rhs = rv;
                if (lv != rv) {
                    r.status = Status::fail;
                    r.message = "first mismatch at " + spec.quantifier->var + "=" +
                                std::to_string(k);
                    break;
                }
                if (k == hi) break;
            }
        } else {
            r.lhs = detail::eval_value(*spec.lhs, ctx, M, b);
            r.rhs = detail::eval_value(*spec.rhs, ctx, M, b);
            r.status = *r.lhs == *r.rhs ? Status::pass : Status::fail;
        }
    } catch (const Error& ex) {
        r.status = Status::error;
        r.lhs.reset();
        r.rhs.reset();
        r.message = ex.what();
    }
    return r;
}

}  // namespace hnc

#endif
