#include <catch2/catch_amalgamated.hpp>
#include <climits>

#include "hnc/errors.hpp"
#include "hnc/residue.hpp"

using namespace hnc;

TEST_CASE("modulus construction is validated", "[residue]") {
    CHECK(PrimePowerModulus(7, 2).m() == 49);
    CHECK(PrimePowerModulus(3, 4).m() == 81);
    CHECK(PrimePowerModulus(999983, 4).p() == 999983);
    CHECK_THROWS_AS(PrimePowerModulus(2, 1), InvalidModulus);   // even
    CHECK_THROWS_AS(PrimePowerModulus(9, 1), InvalidModulus);   // composite
    CHECK_THROWS_AS(PrimePowerModulus(1, 1), InvalidModulus);
    CHECK_THROWS_AS(PrimePowerModulus(561, 1), InvalidModulus); // Carmichael
    CHECK_THROWS_AS(PrimePowerModulus(7, 0), InvalidModulus);
    CHECK_THROWS_AS(PrimePowerModulus(7, 5), InvalidModulus);
}

TEST_CASE("primality test agrees with a sieve", "[residue]") {
    std::vector<bool> composite(2000, false);
    for (std::uint64_t i = 2; i < 2000; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j < 2000; j += i) composite[j] = true;
    for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == (n >= 2 && !composite[n]));
    CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
    CHECK_FALSE(is_prime(2305843009213693953ull));
}

TEST_CASE("ring operations reduce canonically", "[residue]") {
    const PrimePowerModulus m(7, 2);
    Residue a(m, 50), b(m, 6);
    CHECK(a.value() == 1);
    CHECK((a + b).value() == 7);
    CHECK((a - b).value() == 44);
    CHECK((a * b).value() == 6);
    CHECK(Residue::from_int(-1, m).value() == 48);
    CHECK(Residue::from_int(LLONG_MIN, m).value() ==
          Residue::from_big(BigInt(LLONG_MIN), m).value());
    CHECK(Residue::from_big(BigInt("-100000000000000000000000"), m).value() ==
          Residue::from_big(BigInt("-100000000000000000000000") % 49 + 49, m).value());
}

TEST_CASE("mixed moduli are rejected", "[residue]") {
    const PrimePowerModulus m1(7, 2), m2(7, 3), m3(11, 2);
    Residue a(m1, 3), b(m2, 3), c(m3, 3);
    CHECK_THROWS_AS(a + b, ModulusMismatch);
    CHECK_THROWS_AS(a * c, ModulusMismatch);
    CHECK_THROWS_AS(a - b, ModulusMismatch);
}

TEST_CASE("inverse via lifting", "[residue]") {
    const PrimePowerModulus m7(7, 1);
    CHECK(inverse(Residue(m7, 2)).value() == 4);
    const PrimePowerModulus big(1009, 4);
    for (u128 x : {u128(2), u128(1008), u128(123456789), u128(1009 + 1)}) {
        Residue r(big, x);
        CHECK((r * inverse(r)).value() == 1);
    }
    CHECK_THROWS_AS(inverse(Residue(big, 1009)), NotInvertible);
    CHECK_THROWS_AS(inverse(Residue(big, 0)), NotInvertible);
}

TEST_CASE("pow_mod handles negative exponents", "[residue]") {
    const PrimePowerModulus m(7, 2);
    CHECK(pow_mod(Residue(m, 2), 6).value() == 15);
    CHECK(pow_mod(Residue(m, 2), 0).value() == 1);
    CHECK(pow_mod(Residue(m, 3), -1) == inverse(Residue(m, 3)));
    CHECK((pow_mod(Residue(m, 3), -5) * pow_mod(Residue(m, 3), 5)).value() == 1);
    CHECK_THROWS_AS(pow_mod(Residue(m, 7), -1), NotInvertible);
}

TEST_CASE("reduction between exponents", "[residue]") {
    const PrimePowerModulus m3(7, 3), m1(7, 1);
    Residue x(m3, 300);
    CHECK(reduce_mod(x, m1).value() == 300 % 7);
    CHECK_THROWS_AS(reduce_mod(Residue(m1, 3), m3), ModulusMismatch);
    CHECK_THROWS_AS(reduce_mod(x, PrimePowerModulus(11, 1)), ModulusMismatch);
}

TEST_CASE("rational reduction", "[residue]") {
    const PrimePowerModulus m(5, 2);
    CHECK(reduce_rational(Rational(1, 2), m).value() == 13);
    CHECK(reduce_rational(Rational(25, 12), m).value() == 0);  // H_4, Wolstenholme
    CHECK(reduce_rational(Rational(-1, 3), m).value() ==
          (Residue(m, 0) - inverse(Residue(m, 3))).value());
    CHECK_THROWS_AS(reduce_rational(Rational(1, 5), m), NotPIntegral);
    CHECK_THROWS_AS(reduce_rational(Rational(3, 10), m), NotPIntegral);
    CHECK(reduce_rational(Rational(10, 2), m).value() == 5);
}

TEST_CASE("Fermat quotients", "[residue]") {
    CHECK(fermat_quotient(7, 1).value() == 2);
    CHECK(fermat_quotient(3, 1).value() == 1);
    CHECK(fermat_quotient(1093, 1).value() == 0);  // Wieferich
    CHECK(fermat_quotient(3511, 1).value() == 0);  // Wieferich
    CHECK(fermat_quotient(5, 1).value() == 3);
    // lift consistency: value mod p^1 matches the e=2 value reduced
    for (std::uint64_t p : {5ull, 7ull, 11ull, 101ull, 1009ull}) {
        Residue q2 = fermat_quotient(p, 2);
        CHECK(fermat_quotient(p, 1).value() == q2.value() % p);
        // definition: 2^(p-1) = 1 + p*q mod p^3
        const PrimePowerModulus m3(p, 3);
        Residue lhs = pow_mod(Residue(m3, 2), static_cast<long long>(p - 1));
        CHECK(lhs == Residue(m3, 1) + Residue(m3, p) * Residue(m3, q2.value()));
    }
}

TEST_CASE("batch inverses match individual inverses", "[residue]") {
    const PrimePowerModulus m5(5, 1);
    const std::vector<Residue> small = batch_inverses(m5);
    REQUIRE(small.size() == 5);
    CHECK(small[1].value() == 1);
    CHECK(small[2].value() == 3);
    CHECK(small[3].value() == 2);
    CHECK(small[4].value() == 4);
    const PrimePowerModulus m(1009, 3);
    const std::vector<Residue> table = batch_inverses(m);
    REQUIRE(table.size() == 1009);
    for (std::uint64_t k = 1; k < 1009; ++k)
        CHECK(table[k] == inverse(Residue(m, k)));
}

TEST_CASE("raw modular arithmetic survives wide values", "[residue]") {
    // m close to 2^126: p^4 cannot reach it, but add_mod/mul_mod must not wrap
    const u128 m = (u128(1) << 126) + 5;
    const u128 a = m - 1, b = m - 2;
    CHECK(add_mod(a, b, m) == m - 3);
    CHECK(sub_mod(b, a, m) == m - 1);
    const BigInt bm = u128_to_big(m);
    const BigInt want = u128_to_big(a) * u128_to_big(b) % bm;
    CHECK(u128_to_big(mul_mod(a, b, m)) == want);
    CHECK(to_decimal(u128(0)) == "0");
    CHECK(to_decimal((u128(1) << 64)) == "18446744073709551616");
}
