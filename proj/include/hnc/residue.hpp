#ifndef HNC_RESIDUE_HPP
#define HNC_RESIDUE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hnc/errors.hpp"
#include "hnc/rational.hpp"

namespace hnc {

using u128 = unsigned __int128;

inline std::string to_decimal(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int i = 40;
    while (v != 0) {
        buf[--i] = static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 40);
}

inline BigInt u128_to_big(u128 v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) | BigInt(static_cast<std::uint64_t>(v));
}

// pre: 0 <= v < 2^128
inline u128 big_to_u128(const BigInt& v) {
    std::uint64_t hi = static_cast<std::uint64_t>((v >> 64).convert_to<std::uint64_t>());
    std::uint64_t lo = static_cast<std::uint64_t>((v & BigInt(~std::uint64_t(0))).convert_to<std::uint64_t>());
    return (static_cast<u128>(hi) << 64) | lo;
}

// pre: a, b < m
inline u128 add_mod(u128 a, u128 b, u128 m) {
    u128 gap = m - b;
    return a >= gap ? a - gap : a + b;
}

// pre: a, b < m
inline u128 sub_mod(u128 a, u128 b, u128 m) {
    return a >= b ? a - b : m - (b - a);
}

// pre: a, b < m; fast path when m fits 64 bits (the whole sweep range does)
inline u128 mul_mod(u128 a, u128 b, u128 m) {
    if ((m >> 64) == 0) return (a * b) % m;
    BigInt r = u128_to_big(a) * u128_to_big(b) % u128_to_big(m);
    return big_to_u128(r);
}

inline std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    u128 r = 1 % m;
    u128 x = b % m;
    while (e != 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

// Deterministic Miller-Rabin; the 12-base set covers all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (std::uint64_t b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t b : bases) {
        std::uint64_t x = pow_mod_u64(b, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

class PrimePowerModulus {
public:
    PrimePowerModulus(std::uint64_t p, int e) : p_(p), e_(e) {
        if (e < 1 || e > 4)
            throw InvalidModulus("modulus exponent must be in 1..4, got " + std::to_string(e));
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw InvalidModulus("modulus base must be an odd prime, got " + std::to_string(p));
        m_ = 1;
        const u128 cap = ~static_cast<u128>(0);
        for (int i = 0; i < e; ++i) {
            if (m_ > cap / p) throw InvalidModulus("p^e exceeds 128 bits");
            m_ *= p;
        }
    }

    std::uint64_t p() const { return p_; }
    int e() const { return e_; }
    u128 m() const { return m_; }

    friend bool operator==(const PrimePowerModulus& a, const PrimePowerModulus& b) {
        return a.p_ == b.p_ && a.e_ == b.e_;
    }
    friend bool operator!=(const PrimePowerModulus& a, const PrimePowerModulus& b) {
        return !(a == b);
    }

private:
    std::uint64_t p_;
    int e_;
    u128 m_;
};

// Canonical least non-negative residue in Z/p^e.
class Residue {
public:
    Residue(const PrimePowerModulus& m, u128 value) : m_(m), v_(value % m.m()) {}

    static Residue from_int(long long v, const PrimePowerModulus& m) {
        u128 mm = m.m();
        if (v >= 0) return Residue(m, static_cast<u128>(v) % mm);
        u128 mag = static_cast<u128>(-(v + 1)) + 1;
        mag %= mm;
        return Residue(m, mag == 0 ? 0 : mm - mag);
    }

    static Residue from_big(const BigInt& v, const PrimePowerModulus& m) {
        BigInt mm = u128_to_big(m.m());
        BigInt r = v % mm;
        if (r < 0) r += mm;
        return Residue(m, big_to_u128(r));
    }

    u128 value() const { return v_; }
    const PrimePowerModulus& modulus() const { return m_; }
    std::string str() const { return to_decimal(v_); }

    friend Residue operator+(const Residue& a, const Residue& b) {
        check_same(a, b);
        return Residue(a.m_, add_mod(a.v_, b.v_, a.m_.m()));
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        check_same(a, b);
        return Residue(a.m_, sub_mod(a.v_, b.v_, a.m_.m()));
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        check_same(a, b);
        return Residue(a.m_, mul_mod(a.v_, b.v_, a.m_.m()));
    }
    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.m_ == b.m_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

private:
    static void check_same(const Residue& a, const Residue& b) {
        if (!(a.m_ == b.m_))
            throw ModulusMismatch("mixed moduli: " + std::to_string(a.m_.p()) + "^" +
                                  std::to_string(a.m_.e()) + " vs " + std::to_string(b.m_.p()) +
                                  "^" + std::to_string(b.m_.e()));
    }

    PrimePowerModulus m_;
    u128 v_;
};

// Extended Euclid; pre: 0 < a < m, gcd(a, m) = 1.
inline std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, nt = 1;
    __int128 r = m, nr = a;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw NotInvertible("gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

// Invert mod p, then Newton-lift: each step doubles the p-adic precision.
inline Residue inverse(const Residue& x) {
    const PrimePowerModulus& M = x.modulus();
    std::uint64_t p = M.p();
    std::uint64_t a0 = static_cast<std::uint64_t>(x.value() % p);
    if (a0 == 0)
        throw NotInvertible("residue " + x.str() + " not invertible mod " + std::to_string(p) +
                            "^" + std::to_string(M.e()));
    u128 m = M.m();
    u128 y = inv_mod_u64(a0, p);
    for (int prec = 1; prec < M.e(); prec *= 2) {
        u128 t = sub_mod(2, mul_mod(x.value(), y, m), m);
        y = mul_mod(y, t, m);
    }
    return Residue(M, y);
}

inline Residue pow_mod(const Residue& base, long long exp) {
    const PrimePowerModulus& M = base.modulus();
    u128 x;
    unsigned long long e;
    if (exp < 0) {
        x = inverse(base).value();
        e = static_cast<unsigned long long>(-(exp + 1)) + 1;
    } else {
        x = base.value();
        e = static_cast<unsigned long long>(exp);
    }
    u128 m = M.m();
    u128 r = 1 % m;
    while (e != 0) {
        if (e & 1) r = mul_mod(r, x, m);
        x = mul_mod(x, x, m);
        e >>= 1;
    }
    return Residue(M, r);
}

// Reduce to a smaller power of the same prime.
inline Residue reduce_mod(const Residue& x, const PrimePowerModulus& target) {
    const PrimePowerModulus& src = x.modulus();
    if (src.p() != target.p() || target.e() > src.e())
        throw ModulusMismatch("cannot reduce mod " + std::to_string(src.p()) + "^" +
                              std::to_string(src.e()) + " to mod " + std::to_string(target.p()) +
                              "^" + std::to_string(target.e()));
    return Residue(target, x.value() % target.m());
}

// Image of a p-integral rational in Z/p^e.
inline Residue reduce_rational(const Rational& q, const PrimePowerModulus& m) {
    BigInt den = rat_den(q);
    if (den % m.p() == 0)
        throw NotPIntegral("denominator " + den.str() + " is divisible by " +
                           std::to_string(m.p()));
    Residue n = Residue::from_big(rat_num(q), m);
    Residue d = Residue::from_big(den, m);
    return n * inverse(d);
}

// q_p(2) = (2^(p-1) - 1)/p as an element of Z/p^e; the powmod runs one level up.
inline Residue fermat_quotient(std::uint64_t p, int e) {
    if (e < 1 || e > 3)
        throw InvalidModulus("fermat_quotient: exponent must be in 1..3, got " + std::to_string(e));
    PrimePowerModulus lift(p, e + 1);
    Residue t = pow_mod(Residue::from_int(2, lift), static_cast<long long>(p - 1));
    u128 x = t.value();
    x = x == 0 ? lift.m() - 1 : x - 1;
    if (x % p != 0)
        throw Error("fermat_quotient: 2^(p-1)-1 not divisible by " + std::to_string(p));
    PrimePowerModulus target(p, e);
    return Residue(target, x / p);
}

// Inverses of 1..p-1: linear-time table mod p, then Newton-lift each entry.
// Slot 0 is a zero placeholder so out[k] is the inverse of k.
inline std::vector<Residue> batch_inverses(const PrimePowerModulus& m) {
    std::uint64_t p = m.p();
    std::vector<std::uint64_t> ip(p, 0);
    ip[1] = 1;
    for (std::uint64_t k = 2; k < p; ++k)
        ip[k] = static_cast<std::uint64_t>(p - static_cast<u128>(p / k) * ip[p % k] % p);
    std::vector<Residue> out;
    out.reserve(p);
    out.emplace_back(m, 0);
    u128 mm = m.m();
    for (std::uint64_t k = 1; k < p; ++k) {
        u128 y = ip[k];
        for (int prec = 1; prec < m.e(); prec *= 2) {
            u128 t = sub_mod(2, mul_mod(k, y, mm), mm);
            y = mul_mod(y, t, mm);
        }
        out.emplace_back(m, y);
    }
    return out;
}

}  // namespace hnc

#endif
