#ifndef HNC_CONTEXT_HPP
#define HNC_CONTEXT_HPP

#include <cstdint>
#include <vector>

#include "hnc/bernoulli_mod.hpp"
#include "hnc/errors.hpp"
#include "hnc/residue.hpp"

namespace hnc {

// Per-prime cache.  All tables live at p^{e_max} (raw canonical values);
// evaluation reduces entries down to the level it needs.  One extra level
// p^{e_max+1} exists for the Fermat-quotient lift.
struct PrimeContext {
    std::uint64_t p;
    int e_max;
    std::vector<PrimePowerModulus> levels;  // levels[i] = p^{i+1}, i = 0..e_max
    std::vector<u128> inv;                  // inverse of k, k = 1..p-1 (slot 0 unused)
    std::vector<u128> pow2;                 // 2^k, k = 0..p-1
    u128 pow2_lift;                         // 2^{p-1} mod p^{e_max+1}
    std::vector<u128> h1, h2, h3;           // H_{k,m}, k = 0..p-1
    std::vector<u128> binom_top;            // C(p, k),   k = 0..p
    std::vector<u128> binom_prev;           // C(p-1, k), k = 0..p
    Residue q2;                             // Fermat quotient of 2
    Residue b_pm3;                          // B_{p-3}

    PrimeContext(std::uint64_t p_, int e_max_)
        : p(p_),
          e_max(validate(p_, e_max_)),
          levels(make_levels(p_, e_max_)),
          pow2_lift(0),
          q2(levels[static_cast<std::size_t>(e_max_) - 1], 0),
          b_pm3(levels[static_cast<std::size_t>(e_max_) - 1], 0) {
        const PrimePowerModulus& M = levels[static_cast<std::size_t>(e_max) - 1];
        const PrimePowerModulus& L = levels[static_cast<std::size_t>(e_max)];
        const u128 m = M.m();
        const u128 ml = L.m();

        {
            std::vector<Residue> bi = batch_inverses(M);
            inv.resize(p);
            inv[0] = 0;
            for (std::uint64_t k = 1; k < p; ++k) inv[k] = bi[k].value();
        }

        pow2.resize(p);
        u128 t = 1;
        for (std::uint64_t k = 0; k < p; ++k) {
            if (k == p - 1) pow2_lift = t;
            pow2[k] = t % m;
            t = add_mod(t, t, ml);
        }

        h1.resize(p);
        h2.resize(p);
        h3.resize(p);
        h1[0] = h2[0] = h3[0] = 0;
        u128 a1 = 0, a2 = 0, a3 = 0;
        for (std::uint64_t k = 1; k < p; ++k) {
            u128 i1 = inv[k];
            u128 i2 = mul_mod(i1, i1, m);
            a1 = add_mod(a1, i1, m);
            a2 = add_mod(a2, i2, m);
            a3 = add_mod(a3, mul_mod(i2, i1, m), m);
            h1[k] = a1;
            h2[k] = a2;
            h3[k] = a3;
        }

        // C(p,k) carries one factor of p for 0 < k < p; track the unit part
        // separately so the row is exact mod p^e, not just mod p.
        binom_top.resize(p + 1);
        binom_prev.resize(p + 1);
        binom_top[0] = 1;
        u128 u = 1;
        for (std::uint64_t k = 1; k <= p; ++k) {
            std::uint64_t num = p - k + 1;  // equals p only at k = 1
            if (num != p) u = mul_mod(u, num, m);
            if (k != p) u = mul_mod(u, inv[k], m);
            binom_top[k] = (k == p) ? u : mul_mod(u, p, m);
        }
        binom_prev[0] = 1;
        u128 w = 1;
        for (std::uint64_t k = 1; k < p; ++k) {
            w = mul_mod(w, p - k, m);
            w = mul_mod(w, inv[k], m);
            binom_prev[k] = w;
        }
        binom_prev[p] = 0;

        u128 x = pow2_lift - 1;  // 2^{p-1} mod p^{e+1} is never 0
        if (x % p != 0) throw Error("build_context: 2^(p-1)-1 not divisible by p");
        q2 = Residue(M, x / p);
        b_pm3 = bernoulli_pm3(p, e_max);
    }

    const PrimePowerModulus& mod_at(int e) const {
        if (e < 1 || e > e_max + 1)
            throw InvalidModulus("mod_at: level " + std::to_string(e) + " outside 1.." +
                                 std::to_string(e_max + 1));
        return levels[static_cast<std::size_t>(e) - 1];
    }

private:
    static int validate(std::uint64_t p, int e_max) {
        if (e_max < 1 || e_max > 3)
            throw InvalidModulus("build_context: e_max must be in 1..3, got " +
                                 std::to_string(e_max));
        if (p <= 3)
            throw InvalidModulus("build_context: requires p > 3, got " + std::to_string(p));
        return e_max;
    }
    static std::vector<PrimePowerModulus> make_levels(std::uint64_t p, int e_max) {
        std::vector<PrimePowerModulus> out;
        out.reserve(static_cast<std::size_t>(e_max) + 1);
        for (int e = 1; e <= e_max + 1; ++e) out.emplace_back(p, e);
        return out;
    }
};

inline PrimeContext build_context(std::uint64_t p, int e_max) { return PrimeContext(p, e_max); }

}  // namespace hnc

#endif
