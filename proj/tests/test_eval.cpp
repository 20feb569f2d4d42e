#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "hnc/hnc.hpp"

using namespace hnc;

namespace {

const CongruenceSpec& entry(const std::string& id) {
    for (const CongruenceSpec& c : builtin_catalog())
        if (c.id == id) return c;
    throw std::runtime_error("no such entry: " + id);
}

}  // namespace

TEST_CASE("context tables agree with exact arithmetic", "[eval]") {
    for (auto [p, e] : {std::pair<std::uint64_t, int>{7, 2}, {11, 1}, {13, 3}}) {
        const PrimeContext ctx(p, e);
        const PrimePowerModulus& M = ctx.mod_at(e);
        const PrimePowerModulus& L = ctx.mod_at(e + 1);
        for (std::uint64_t k = 0; k < p; ++k) {
            CHECK(Residue(M, ctx.h1[k]) == reduce_rational(harmonic_exact(k), M));
            CHECK(Residue(M, ctx.h2[k]) == reduce_rational(harmonic_exact(k, 2), M));
            CHECK(Residue(M, ctx.h3[k]) == reduce_rational(harmonic_exact(k, 3), M));
            CHECK(Residue(M, ctx.pow2[k]) == pow_mod(Residue(M, 2), static_cast<long long>(k)));
            if (k > 0) CHECK(Residue(M, ctx.inv[k]) * Residue(M, k) == Residue(M, 1));
        }
        for (std::uint64_t k = 0; k <= p; ++k) {
            CHECK(Residue(M, ctx.binom_top[k]) ==
                  Residue::from_big(binomial_exact(static_cast<long long>(p),
                                                   static_cast<long long>(k)), M));
            if (k < p)
                CHECK(Residue(M, ctx.binom_prev[k]) ==
                      Residue::from_big(binomial_exact(static_cast<long long>(p) - 1,
                                                       static_cast<long long>(k)), M));
        }
        CHECK(ctx.pow2_lift == pow_mod(Residue(L, 2), static_cast<long long>(p - 1)).value());
        CHECK(ctx.q2 == fermat_quotient(p, e));
        CHECK(ctx.b_pm3 == bernoulli_pm3(p, e));
    }
}

TEST_CASE("well-known table entries", "[eval]") {
    CHECK(build_context(7, 1).h1[6] == 0);   // H_6 = 49/20 vanishes mod 7
    CHECK(build_context(5, 2).h1[4] == 0);   // H_4 = 25/12 vanishes mod 25
    const PrimeContext ctx(7, 1);
    CHECK(Residue(ctx.mod_at(1), ctx.h3[3]) ==
          reduce_rational(Rational(251, 216), ctx.mod_at(1)));
}

TEST_CASE("context construction validates its arguments", "[eval]") {
    CHECK_THROWS_AS(build_context(3, 1), InvalidModulus);
    CHECK_THROWS_AS(build_context(7, 0), InvalidModulus);
    CHECK_THROWS_AS(build_context(7, 4), InvalidModulus);
    CHECK_THROWS_AS(build_context(9, 1), InvalidModulus);
    CHECK_THROWS_AS(PrimeContext(7, 1).mod_at(3), InvalidModulus);
}

TEST_CASE("expression evaluation at small primes", "[eval]") {
    const PrimeContext c7(7, 1);
    CHECK(evaluate_expr(parse_expression("q2"), c7, 1).value() == 2);
    CHECK(evaluate_expr(parse_expression("B(p-3)"), c7, 1).value() == 3);
    CHECK(evaluate_expr(parse_expression("sum(k=1..p-1, 2^k/k)"), c7, 1).value() == 3);
    const PrimeContext c5(5, 2);
    CHECK(evaluate_expr(parse_expression("sum(k=1..p-1, 1/k)"), c5, 2).value() == 0);
    CHECK(evaluate_expr(parse_expression("sum(k=5..4, 1/k)"), c7, 1).value() == 0);
    CHECK(evaluate_expr(parse_expression("2^(-1)"), c7, 1) ==
          inverse(Residue(c7.mod_at(1), 2)));
    CHECK(evaluate_expr(parse_expression("binom(3,5)"), c7, 1).value() == 0);
    CHECK(evaluate_expr(parse_expression("binom(2*p,2)"), PrimeContext(7, 2), 2) ==
          Residue::from_big(binomial_exact(14, 2), PrimePowerModulus(7, 2)));
}

TEST_CASE("evaluation reduces consistently across levels", "[eval]") {
    const char* exprs[] = {
        "q2",
        "B(p-3)",
        "H(p-1)",
        "H(p-1,2)",
        "sum(k=1..p-1, 2^k*H(k)/k)",
        "binom(p,3)",
        "2^(p-1)",
    };
    for (std::uint64_t p : {7ull, 11ull}) {
        const PrimeContext ctx(p, 3);
        for (const char* s : exprs) {
            const ExprPtr e = parse_expression(s);
            for (int lo = 1; lo < 3; ++lo) {
                CAPTURE(p, s, lo);
                CHECK(reduce_mod(evaluate_expr(e, ctx, lo + 1), ctx.mod_at(lo)) ==
                      evaluate_expr(e, ctx, lo));
            }
        }
    }
}

TEST_CASE("sums agree with explicit substitution", "[eval]") {
    const PrimeContext ctx(7, 2);
    const ExprPtr whole = parse_expression("sum(k=1..p-1, 2^k*H(k)/k)");
    REQUIRE(whole->kind == ExprKind::sum);
    const ExprPtr body = whole->kids[2];
    Residue acc(ctx.mod_at(2), 0);
    for (long long k = 1; k <= 6; ++k) {
        Bindings b;
        b.push("k", k);
        acc += evaluate_expr(body, ctx, 2, b);
    }
    CHECK(acc == evaluate_expr(whole, ctx, 2));
}

TEST_CASE("evaluation rejects what it cannot represent", "[eval]") {
    const PrimeContext c7(7, 1);
    const PrimeContext c11(11, 1);
    // (p-1)/3 is exact at p = 7 but not at p = 11
    const ExprPtr h = parse_expression("H((p-1)/3)");
    CHECK(evaluate_expr(h, c7, 1) == reduce_rational(Rational(3, 2), c7.mod_at(1)));
    CHECK_THROWS_AS(evaluate_expr(h, c11, 1), NonIntegerIndex);
    CHECK_THROWS_AS(evaluate_expr(parse_expression("H(1/2)"), c7, 1), NonIntegerIndex);
    CHECK_THROWS_AS(evaluate_expr(parse_expression("B(-2)"), c7, 1), IndexOutOfRange);
    CHECK_THROWS_AS(evaluate_expr(parse_expression("B(p-1)"), c7, 1), IndexOutOfRange);
    CHECK_THROWS_AS(evaluate_expr(parse_expression("H(p)"), c7, 1), NotInvertible);
    CHECK_THROWS_AS(evaluate_expr(parse_expression("1/p"), c7, 1), NotInvertible);
    CHECK_THROWS_AS(evaluate_expr(parse_expression("binom(-1,0)"), c7, 1), IndexOutOfRange);
    CHECK_THROWS_AS(evaluate_expr(parse_expression("q2"), c7, 2), ModulusMismatch);
    CHECK_THROWS_AS(evaluate_expr(parse_expression("q2"), c7, 0), ModulusMismatch);
    Bindings empty;
    CHECK_THROWS_AS(detail::eval_value(*make_var("k"), c7, c7.mod_at(1), empty),
                    UnboundVariable);
}

TEST_CASE("congruence checking covers every outcome", "[eval]") {
    const CongruenceSpec& con7 = entry("con7");

    const VerificationResult skipped = check_congruence(con7, PrimeContext(5, 2));
    CHECK(skipped.status == Status::skipped);
    CHECK(!skipped.lhs.has_value());
    CHECK(!skipped.rhs.has_value());
    CHECK(!skipped.message.has_value());

    const PrimeContext c7(7, 2);
    const VerificationResult pass = check_congruence(con7, c7);
    CHECK(pass.status == Status::pass);
    REQUIRE(pass.lhs.has_value());
    REQUIRE(pass.rhs.has_value());
    CHECK(*pass.lhs == *pass.rhs);

    const CongruenceSpec mutated =
        parse_congruence("bad | p>3 | sum(k=1..p-1, H(k)/(k*2^k)) === 1 (mod p^2)");
    const VerificationResult fail = check_congruence(mutated, c7);
    CHECK(fail.status == Status::fail);
    REQUIRE(fail.lhs.has_value());
    REQUIRE(fail.rhs.has_value());
    CHECK(*fail.lhs != *fail.rhs);

    const VerificationResult err =
        check_congruence(parse_congruence("e1 | p>3 | B(p-1) === 0 (mod p)"), c7);
    CHECK(err.status == Status::error);
    CHECK(!err.lhs.has_value());
    CHECK(!err.rhs.has_value());
    REQUIRE(err.message.has_value());
    CHECK(err.message->find("exceeds p-2") != std::string::npos);

    const VerificationResult mism =
        check_congruence(parse_congruence("f1 | p>3 | forall(k=1..p-1, H(k) === 0) (mod p)"),
                         PrimeContext(7, 1));
    CHECK(mism.status == Status::fail);
    REQUIRE(mism.message.has_value());
    CHECK(*mism.message == "first mismatch at k=1");

    const VerificationResult qpass = check_congruence(entry("con28"), PrimeContext(7, 1));
    CHECK(qpass.status == Status::pass);
    CHECK(qpass.lhs.has_value());

    const VerificationResult deep = check_congruence(con7, PrimeContext(7, 1));
    CHECK(deep.status == Status::error);
    REQUIRE(deep.message.has_value());
    CHECK(deep.message->find("exponent") != std::string::npos);
}

TEST_CASE("status names are stable", "[eval]") {
    CHECK(std::string(status_name(Status::pass)) == "pass");
    CHECK(std::string(status_name(Status::fail)) == "fail");
    CHECK(std::string(status_name(Status::skipped)) == "skipped");
    CHECK(std::string(status_name(Status::error)) == "error");
}
