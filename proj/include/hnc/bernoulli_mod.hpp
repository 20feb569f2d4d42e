#ifndef HNC_BERNOULLI_MOD_HPP
#define HNC_BERNOULLI_MOD_HPP

#include <cstdint>
#include <vector>

#include "hnc/errors.hpp"
#include "hnc/residue.hpp"

namespace hnc {

struct BernoulliTable {
    PrimePowerModulus modulus;
    std::vector<Residue> values;  // B_0 .. B_n
};

// B_0..B_n mod p^e via the defining recurrence sum_{k<=n} C(n+1,k) B_k = 0.
// Needs n <= p-2 so every denominator that appears is a unit mod p.
inline BernoulliTable bernoulli_mod_table(int n, const PrimePowerModulus& m) {
    std::uint64_t p = m.p();
    if (n < 0 || static_cast<std::uint64_t>(n) > p - 2)
        throw IndexOutOfRange("bernoulli_mod_table: index " + std::to_string(n) +
                              " outside 0..p-2 for p = " + std::to_string(p));
    BernoulliTable tab{m, {}};
    tab.values.reserve(static_cast<std::size_t>(n) + 1);
    tab.values.emplace_back(m, 1);
    if (n == 0) return tab;
    std::vector<Residue> inv = batch_inverses(m);
    tab.values.push_back(Residue(m, 0) - inv[2]);  // B_1 = -1/2
    for (int i = 2; i <= n; ++i) {
        if (i % 2 == 1) {
            tab.values.emplace_back(m, 0);
            continue;
        }
        Residue acc(m, 0);
        Residue c(m, 1);  // C(i+1, k), starting at k = 0
        for (int k = 0; k < i; ++k) {
            acc += c * tab.values[static_cast<std::size_t>(k)];
            c = c * Residue(m, static_cast<u128>(i + 1 - k)) * inv[static_cast<std::size_t>(k) + 1];
        }
        tab.values.push_back(Residue(m, 0) - acc * inv[static_cast<std::size_t>(i) + 1]);
    }
    return tab;
}

inline Residue bernoulli_mod_recurrence(int n, const PrimePowerModulus& m) {
    return bernoulli_mod_table(n, m).values[static_cast<std::size_t>(n)];
}

// B_{p-3} mod p^e from the power sum S = sum_{k=1..p-1} k^{p-3} mod p^{e+1},
// which equals p * B_{p-3} there for e <= 2.  Requires p > 5.
inline Residue bernoulli_pm3_powersum(std::uint64_t p, int e) {
    if (e < 1 || e > 2)
        throw InvalidModulus("bernoulli_pm3_powersum: exponent must be 1 or 2, got " +
                             std::to_string(e));
    if (p <= 5 || !is_prime(p))
        throw InvalidModulus("bernoulli_pm3_powersum: requires a prime p > 5, got " +
                             std::to_string(p));
    PrimePowerModulus lift(p, e + 1);
    u128 m = lift.m();
    u128 s = 0;
    for (std::uint64_t k = 1; k < p; ++k)
        s = add_mod(s, pow_mod(Residue(lift, k), static_cast<long long>(p - 3)).value(), m);
    if (s % p != 0) throw Error("bernoulli_pm3_powersum: power sum not divisible by p");
    return Residue(PrimePowerModulus(p, e), s / p);
}

// B_{p-3} mod p^e for e in 1..3 and prime p >= 5.  At the p^3 level the power
// sum picks up a lower Bernoulli term: S = p B_{p-3} + 2 p^3 B_{p-5} (mod p^4),
// so that term is stripped before dividing.  p = 5 has no valid power sum and
// falls back to the recurrence (B_2 = 1/6 is a unit story at every level).
inline Residue bernoulli_pm3(std::uint64_t p, int e) {
    if (e < 1 || e > 3)
        throw InvalidModulus("bernoulli_pm3: exponent must be in 1..3, got " + std::to_string(e));
    if (p < 5 || !is_prime(p))
        throw InvalidModulus("bernoulli_pm3: requires a prime p >= 5, got " + std::to_string(p));
    PrimePowerModulus target(p, e);
    if (p == 5) return bernoulli_mod_recurrence(2, target);
    if (e <= 2) return bernoulli_pm3_powersum(p, e);

    PrimePowerModulus lift(p, 4);
    u128 m4 = lift.m();
    u128 s = 0;
    for (std::uint64_t k = 1; k < p; ++k)
        s = add_mod(s, pow_mod(Residue(lift, k), static_cast<long long>(p - 3)).value(), m4);
    if (s % p != 0) throw Error("bernoulli_pm3: power sum not divisible by p");
    Residue lifted(target, s / p);  // B_{p-3} + 2 p^2 B_{p-5} mod p^3

    PrimePowerModulus lvl2(p, 2);
    u128 m2 = lvl2.m();
    u128 s2 = 0;
    for (std::uint64_t k = 1; k < p; ++k)
        s2 = add_mod(s2, pow_mod(Residue(lvl2, k), static_cast<long long>(p - 5)).value(), m2);
    if (s2 % p != 0) throw Error("bernoulli_pm3: p-5 power sum not divisible by p");
    Residue corr = Residue(target, 2) * Residue(target, p) * Residue(target, p) *
                   Residue(target, s2 / p);
    return lifted - corr;
}

}  // namespace hnc

#endif
