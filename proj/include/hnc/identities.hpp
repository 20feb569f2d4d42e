#ifndef HNC_IDENTITIES_HPP
#define HNC_IDENTITIES_HPP

#include "hnc/errors.hpp"
#include "hnc/rational.hpp"

namespace hnc {

namespace detail {

inline Rational rpow(const Rational& base, long long exp) {
    Rational r = 1;
    if (exp >= 0) {
        for (long long i = 0; i < exp; ++i) r *= base;
    } else {
        for (long long i = 0; i > exp; --i) r /= base;
    }
    return r;
}

inline BigInt pow2_big(long long n) { return BigInt(1) << n; }

}  // namespace detail

// sum over 1 <= k <= i <= n of (2^k - 1)/(k i)  ==  sum over j of C(n,j)/j^2
inline bool check_lemma_2_4(long long n) {
    if (n < 1) throw IndexOutOfRange("n must be >= 1");
    Rational lhs = 0, inner = 0;
    BigInt pk = 1;
    for (long long i = 1; i <= n; ++i) {
        pk <<= 1;  // pk = 2^i
        inner += Rational(pk - 1, i);
        lhs += inner / i;
    }
    Rational rhs = 0;
    for (long long j = 1; j <= n; ++j) rhs += Rational(binomial_exact(n, j), j * j);
    return lhs == rhs;
}

// sum over k < n of ((-2)^k/k) C(n,k) against the parity-split closed form
inline bool check_lemma_3_1(long long n) {
    if (n < 2) throw IndexOutOfRange("n must be >= 2");
    Rational lhs = 0;
    Rational m2k = 1;
    for (long long k = 1; k <= n - 1; ++k) {
        m2k *= -2;
        lhs += m2k / k * binomial_exact(n, k);
    }
    Rational rhs;
    if (n % 2 == 1)
        rhs = -2 * harmonic_exact(n - 1) + harmonic_exact((n - 1) / 2) +
              Rational(detail::pow2_big(n) - 2, n);
    else
        rhs = -2 * harmonic_exact(n) + harmonic_exact(n / 2) - Rational(detail::pow2_big(n), n);
    return lhs == rhs;
}

// sum over k < n of ((-2)^(k-1)/k) C(n,k-1): both the parity branches and the
// unified form must match
inline bool check_lemma_4_1(long long n) {
    if (n < 1) throw IndexOutOfRange("n must be >= 1");
    Rational lhs = 0;
    Rational m2k = 1;  // (-2)^(k-1)
    for (long long k = 1; k <= n - 1; ++k) {
        lhs += m2k / k * binomial_exact(n, k - 1);
        m2k *= -2;
    }
    BigInt half = detail::pow2_big(n - 1);
    Rational branch = n % 2 == 1 ? Rational(half * (1 - n), n + 1)
                                 : Rational((n - 1) * half + 1, n + 1);
    int sign = n % 2 == 1 ? -1 : 1;
    Rational unified =
        Rational(sign * (n - 1) * half, n + 1) + Rational(1 + sign, 2 * (n + 1));
    return lhs == branch && lhs == unified;
}

// (-1)^n sum over k < n of (-1)^(k-1) C(n,k) 2^k H_k
//   ==  (2^n - 2) H_{n-1} + H_{floor(n/2)} + (2^n - 2)/n
inline bool check_lemma_4_2(long long n) {
    if (n < 1) throw IndexOutOfRange("n must be >= 1");
    Rational s = 0;
    BigInt p2 = 1;
    Rational h = 0;
    int sign = 1;  // (-1)^(k-1)
    for (long long k = 1; k <= n - 1; ++k) {
        p2 <<= 1;
        h += Rational(1, k);
        s += Rational(sign) * binomial_exact(n, k) * p2 * h;
        sign = -sign;
    }
    Rational lhs = n % 2 == 0 ? s : -s;
    BigInt p2n = detail::pow2_big(n);
    Rational rhs = Rational(p2n - 2) * harmonic_exact(n - 1) + harmonic_exact(n / 2) +
                   Rational(p2n - 2, n);
    return lhs == rhs;
}

// odd n:  sum_{k=1}^{n-1} ((-1)^k/k) C(n,k) x^k
//           == sum_{k=1}^{n-1} ((1-x)^k - 1)/k - (1 - x^n + (x-1)^n)/n
// even n: sum_{k=1}^{n} ((-x)^k/k) C(n,k) == sum_{k=1}^{n} ((1-x)^k - 1)/k
inline bool check_integral_identity(long long n, const Rational& x) {
    if (n < 1) throw IndexOutOfRange("n must be >= 1");
    const Rational omx = 1 - x;
    if (n % 2 == 1) {
        Rational lhs = 0, xk = 1;
        int sign = 1;
        for (long long k = 1; k <= n - 1; ++k) {
            xk *= x;
            sign = -sign;
            lhs += Rational(sign) * binomial_exact(n, k) * xk / k;
        }
        Rational rhs = 0, ok = 1;
        for (long long k = 1; k <= n - 1; ++k) {
            ok *= omx;
            rhs += (ok - 1) / k;
        }
        rhs -= (1 - detail::rpow(x, n) + detail::rpow(x - 1, n)) / n;
        return lhs == rhs;
    }
    Rational lhs = 0, mxk = 1;
    for (long long k = 1; k <= n; ++k) {
        mxk *= -x;
        lhs += mxk / k * binomial_exact(n, k);
    }
    Rational rhs = 0, ok = 1;
    for (long long k = 1; k <= n; ++k) {
        ok *= omx;
        rhs += (ok - 1) / k;
    }
    return lhs == rhs;
}

}  // namespace hnc

#endif
