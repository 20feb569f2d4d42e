#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "hnc/hnc.hpp"

using namespace hnc;

TEST_CASE("every builtin entry survives a print/parse round trip", "[dsl]") {
    for (const CongruenceSpec& c : builtin_catalog()) {
        const std::string text = print_congruence(c);
        CAPTURE(text);
        const CongruenceSpec back = parse_congruence(text);
        CHECK(back == c);
        CHECK(print_congruence(back) == text);  // printing is idempotent
    }
}

TEST_CASE("parsing is deterministic", "[dsl]") {
    const std::string line = "c1 | p>3 | sum(k=1..p-1, 2^k/k) === -2*q2 (mod p)";
    const CongruenceSpec a = parse_congruence(line);
    const CongruenceSpec b = parse_congruence(line);
    CHECK(a == b);
    CHECK(print_congruence(a) == print_congruence(b));
}

TEST_CASE("plain entries expose their parts", "[dsl]") {
    const CongruenceSpec c = parse_congruence("c1 | p>3 | sum(k=1..p-1, 2^k/k) === -2*q2 (mod p)");
    CHECK(c.id == "c1");
    CHECK(c.prime_greater_than == 3);
    CHECK(!c.quantifier.has_value());
    CHECK(c.mod_exponent == 1);
    REQUIRE(c.lhs->kind == ExprKind::sum);
    CHECK(c.lhs->name == "k");
    // the exponent binds tightly: 2^k/k is (2^k)/k
    const ExprPtr body = c.lhs->kids[2];
    REQUIRE(body->kind == ExprKind::div);
    CHECK(body->kids[0]->kind == ExprKind::pow);
    CHECK(body->kids[1]->kind == ExprKind::variable);
    CHECK(print_congruence(c) == "c1 | p>3 | sum(k=1..p-1, 2^k/k) === -2*q2 (mod p)");
}

TEST_CASE("quantified entries close before the mod clause", "[dsl]") {
    const CongruenceSpec t = parse_congruence("t | p>3 | forall(k=1..p-1, H(k) === H(p-k-1)) (mod p)");
    REQUIRE(t.quantifier.has_value());
    CHECK(t.quantifier->var == "k");
    CHECK(t.mod_exponent == 1);
    CHECK(t.lhs->kind == ExprKind::harmonic);
    CHECK(t.rhs->kind == ExprKind::harmonic);
    CHECK(print_congruence(t) == "t | p>3 | forall(k=1..p-1, H(k) === H(p-k-1)) (mod p)");
}

TEST_CASE("integer quotients fold to one rational constant", "[dsl]") {
    const ExprPtr a = parse_expression("(7/24)*p");
    const ExprPtr b = parse_expression("7/24*p");
    CHECK(expr_equal(a, b));
    REQUIRE(a->kind == ExprKind::mul);
    CHECK(a->kids[0]->kind == ExprKind::rational_const);
    CHECK(a->kids[0]->value == Rational(7, 24));

    // unary minus is never folded into the constant
    const ExprPtr c = parse_expression("-(1/3)");
    REQUIRE(c->kind == ExprKind::neg);
    CHECK(c->kids[0]->value == Rational(1, 3));
    const ExprPtr d = parse_expression("-1/3");
    REQUIRE(d->kind == ExprKind::div);
    CHECK(d->kids[0]->kind == ExprKind::neg);
    CHECK(!expr_equal(c, d));
}

TEST_CASE("exponent forms parse and reprint", "[dsl]") {
    const ExprPtr a = parse_expression("2^(p-1)");
    REQUIRE(a->kind == ExprKind::pow);
    CHECK(a->kids[1]->kind == ExprKind::sub);
    CHECK(print_expr(a) == "2^(p-1)");

    const ExprPtr b = parse_expression("2^-1");
    REQUIRE(b->kind == ExprKind::pow);
    CHECK(b->kids[1]->kind == ExprKind::neg);
    CHECK(print_expr(b) == "2^(-1)");
    CHECK(expr_equal(parse_expression(print_expr(b)), b));

    CHECK(print_expr(parse_expression("sum(k=1..p-1, 2^k*H(k))")) ==
          "sum(k=1..p-1, 2^k*H(k))");
}

TEST_CASE("harmonic orders appear only when not 1", "[dsl]") {
    const ExprPtr a = parse_expression("H(p-1,2)");
    CHECK(a->order == 2);
    CHECK(print_expr(a) == "H(p-1,2)");
    const ExprPtr b = parse_expression("H(p-1,1)");
    CHECK(b->order == 1);
    CHECK(print_expr(b) == "H(p-1)");
    CHECK(expr_equal(a, parse_expression(print_expr(a))));
}

TEST_CASE("malformed entries report where and what", "[dsl]") {
    auto fails_at = [](const std::string& text, int line, int col, const std::string& expected) {
        try {
            parse_congruence(text);
            FAIL("expected a parse failure for: " << text);
        } catch (const ParseError& e) {
            CAPTURE(text, e.what());
            CHECK(e.line == line);
            CHECK(e.column == col);
            CHECK(e.expected == expected);
        }
    };
    fails_at("x | p>3 | sum(k=1..p-1, 1/k === 0 (mod p)", 1, 29, "')'");
    fails_at("x | p>3 | 1 === 2", 1, 18, "'(mod ...)'");
    fails_at("x | p>3 | 1 == 2 (mod p)", 1, 13, "'===' or '='");
    fails_at("x p>3 | 1 === 1 (mod p)", 1, 3, "'|'");
    fails_at("x | q>3 | 1 === 1 (mod p)", 1, 5, "precondition 'p > N'");
    fails_at("x | p>3 | k === 0 (mod p)", 1, 11, "a bound variable");
    fails_at("x | p>3 | 1 === 1 (mod p^4)", 1, 26, "a modulus exponent in 1..3");
    fails_at("x | p>3 | B() === 0 (mod p)", 1, 13,
             "an index atom (integer, variable, 'p', or '(')");
    fails_at("x | p>3 | H(p-1,5) === 0 (mod p)", 1, 17, "a harmonic order in 1..3");
    fails_at("x | p>3 | 99999999999999999999 === 0 (mod p)", 1, 11,
             "an integer literal below 2^63");
    fails_at("x | p>3 | sum(p=1..4, p) === 0 (mod p)", 1, 15, "a variable name");
    fails_at("x | p>3 | 1 $ 1 (mod p)", 1, 13, "a token");
    fails_at("x | p>3 | H(1.5) === 0 (mod p)", 1, 14, "'..'");
    fails_at("x | p>3 | 1 === 1 (mod p) junk", 1, 27, "end of entry");
}

TEST_CASE("catalog parsing tracks line numbers and duplicate ids", "[dsl]") {
    const std::string good =
        "# comment\n"
        "\n"
        "a | p>3 | 1 === 1 (mod p)\n"
        "b | p>3 | 2 === 2 (mod p^2)\n";
    const std::vector<CongruenceSpec> cat = parse_catalog(good);
    REQUIRE(cat.size() == 2);
    CHECK(cat[0].id == "a");
    CHECK(cat[1].mod_exponent == 2);

    const std::string bad_line =
        "# comment\n"
        "a | p>3 | 1 === 1 (mod p)\n"
        "\n"
        "b | p>3 | 1 === (mod p)\n";
    try {
        parse_catalog(bad_line);
        FAIL("expected a parse failure");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }

    const std::string dup =
        "a | p>3 | 1 === 1 (mod p)\n"
        "a | p>3 | 2 === 2 (mod p)\n";
    try {
        parse_catalog(dup);
        FAIL("expected a duplicate-id failure");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.expected == "a unique entry id");
    }
}

TEST_CASE("dotted ids never collide with range dots", "[dsl]") {
    const CongruenceSpec c = parse_congruence("con5.1 | p>5 | sum(k=1..p-1, 1/k) === 0 (mod p)");
    CHECK(c.id == "con5.1");
    CHECK(print_congruence(c) == "con5.1 | p>5 | sum(k=1..p-1, 1/k) === 0 (mod p)");
}
