#ifndef HNC_RATIONAL_HPP
#define HNC_RATIONAL_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hnc/errors.hpp"

namespace hnc {

using BigInt = boost::multiprecision::cpp_int;
// Always stored reduced with positive denominator; boost maintains that for us.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

// H_{n,order} = sum_{k=1..n} 1/k^order, with H_0 = 0.
inline Rational harmonic_exact(long long n, int order = 1) {
    if (n < 0) throw IndexOutOfRange("harmonic_exact: negative index " + std::to_string(n));
    if (order < 1) throw IndexOutOfRange("harmonic_exact: order must be >= 1");
    Rational acc = 0;
    for (long long k = 1; k <= n; ++k) {
        acc += Rational(BigInt(1), boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(order)));
    }
    return acc;
}

inline BigInt binomial_exact(long long n, long long k) {
    if (n < 0) throw IndexOutOfRange("binomial_exact: negative n " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (long long j = 1; j <= k; ++j) {
        c *= n - k + j;
        c /= j;  // exact: c is C(n-k+j, j) after this step
    }
    return c;
}

// B_0..B_n by the defining recurrence sum_{k=0..n} C(n+1,k) B_k = 0 (n >= 1),
// with the B_1 = -1/2 convention.
inline std::vector<Rational> bernoulli_exact_row(int n) {
    if (n < 0) throw IndexOutOfRange("bernoulli_exact_row: negative index");
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int i = 1; i <= n; ++i) {
        if (i > 1 && i % 2 == 1) {
            b[i] = 0;
            continue;
        }
        Rational acc = 0;
        BigInt c = 1;  // C(i+1, k), starting at k=0
        for (int k = 0; k < i; ++k) {
            acc += Rational(c) * b[k];
            c = c * (i + 1 - k) / (k + 1);
        }
        b[i] = -acc / Rational(i + 1);
    }
    return b;
}

inline Rational bernoulli_exact(int n) {
    return bernoulli_exact_row(n)[static_cast<std::size_t>(n)];
}

}  // namespace hnc

#endif
