#ifndef HNC_CATALOG_HPP
#define HNC_CATALOG_HPP

#include <string>
#include <vector>

#include "hnc/expr.hpp"
#include "hnc/parse.hpp"

namespace hnc {

// Double sums over 1 <= k <= i <= p-1 ship in the flattened form
// sum_k f(k) * (H(p-1) - H(k-1)) (inner strict lower bound k+1 drops the -1)
// so a full sweep stays O(p) per entry; tests assert the nested form agrees.
inline const std::string& builtin_catalog_text() {
    static const std::string text = R"CAT(# builtin congruence catalog
# one entry per line: id | p>N | LHS === RHS (mod p[^e])

con2   | p>5 | sum(k=1..p-1, 2^k*H(k)/k) === -q2^2 + (2/3)*p*q2^3 + (1/12)*p*B(p-3) (mod p^2)
con3   | p>5 | sum(k=1..p-1, 2^k*H(k)/k^2) === -(1/3)*q2^3 + (23/24)*B(p-3) (mod p)
con4   | p>5 | sum(k=1..p-1, H(k)/(k^2*2^k)) === (5/8)*B(p-3) (mod p)
con5   | p>5 | sum(k=1..p-1, 2^k*H(k)^2/k) === -(1/3)*q2^3 + (11/24)*B(p-3) (mod p)
con5.1 | p>5 | sum(k=1..p-1, H(k)^2/(k*2^k)) === (7/8)*B(p-3) (mod p)
con6   | p>5 | sum(k=1..p-1, 2^k*H(k,2)/k) === -(1/3)*q2^3 - (25/24)*B(p-3) (mod p)
con7   | p>5 | sum(k=1..p-1, H(k)/(k*2^k)) === (7/24)*p*B(p-3) (mod p^2)
con7.1 | p>5 | sum(k=1..p-1, H(k,2)/(k*2^k)) === -(3/8)*B(p-3) (mod p)
con8   | p>5 | sum(k=1..p-1, 2^k*H(k)/k) === -q2^2 (mod p)

con9  | p>3 | forall(k=1..p-1, binom(p-1,k) === (-1)^k - (-1)^k*p*H(k) + (-1)^k*(p^2/2)*(H(k)^2 - H(k,2))) (mod p^3)
con10 | p>3 | forall(k=1..p-1, binom(p-1,k) === (-1)^k - (-1)^k*p*H(k)) (mod p^2)

con11 | p>3 | sum(k=1..p-1, 1/k) === -(1/3)*p^2*B(p-3) (mod p^3)
con12 | p>3 | sum(k=1..p-1, 1/k^2) === (2/3)*p*B(p-3) (mod p^2)
# the vanishing mod p^2 needs p > 5: at p = 5 the sum is 2035/1728 with 5-valuation 1
con13 | p>5 | sum(k=1..p-1, 1/k^3) === 0 (mod p^2)
con14 | p>3 | sum(k=1..(p-1)/2, 1/k) === -2*q2 + p*q2^2 - (2/3)*p^2*q2^3 - (7/12)*p^2*B(p-3) (mod p^3)
con15 | p>3 | sum(k=1..(p-1)/2, 1/k^2) === (7/3)*p*B(p-3) (mod p^2)
con16 | p>3 | sum(k=1..(p-1)/2, 1/k^3) === -2*B(p-3) (mod p)

con17 | p>3 | sum(k=1..p-1, 2^k/k) === -2*q2 - (7/12)*p^2*B(p-3) (mod p^3)
con18 | p>3 | sum(k=1..p-1, 2^k/k^2) === -q2^2 + p*((2/3)*q2^3 + (7/6)*B(p-3)) (mod p^2)
con19 | p>3 | sum(k=1..p-1, 1/(k*2^k)) === q2 - (1/2)*p*q2^2 (mod p^2)
con20 | p>3 | sum(k=1..p-1, 1/(k^2*2^k)) === -(1/2)*q2^2 (mod p)
con21 | p>3 | sum(k=1..p-1, 2^k/k^3) === -(1/3)*q2^3 - (7/24)*B(p-3) (mod p)
con22 | p>3 | sum(k=1..p-1, 1/(k^3*2^k)) === (1/6)*q2^3 + (7/48)*B(p-3) (mod p)

con24 | p>3 | sum(k=1..p-1, binom(p-1,k)/k^2) === (3/4)*p*B(p-3) (mod p^2)
con26 | p>3 | sum(k=1..p-1, (-1)^k/k^2) === (1/2)*p*B(p-3) (mod p^2)
con27 | p>3 | sum(k=1..p-1, (-1)^k/k^3) === -(1/2)*B(p-3) (mod p)
con28 | p>3 | forall(k=1..p-1, H(k) === H(p-k-1)) (mod p)
con29 | p>3 | sum(k=1..p-1, (-1)^k*H(k)/k^2) === -(1/4)*B(p-3) (mod p)
con31 | p>3 | sum(k=1..p-1, 2^k*(H(p-1) - H(k))/k) === -sum(k=1..p-1, 2^k*H(k)/k) (mod p^2)
con32 | p>3 | sum(k=1..p-1, (H(p-1) - H(k-1))/k) === (1/3)*p*B(p-3) (mod p^2)

con37 | p>3 | sum(k=1..p-1, (-2)^k*binom(p,k)/k) === p*q2^2 - (2/3)*p^2*q2^3 + (1/12)*p^2*B(p-3) (mod p^3)
con38 | p>3 | sum(k=1..p-1, (-2)^k*binom(p-1,k)/k) === -2*q2 + p*q2^2 - (2/3)*p^2*q2^3 + (1/12)*p^2*B(p-3) (mod p^3)

con41 | p>3 | sum(k=1..p-1, 2^k*H(k-1)/k^2) === (5/4)*B(p-3) (mod p)
con42 | p>3 | sum(k=1..p-1, 2^k*H(k-1)/k^2) === 2*sum(k=1..p-1, H(k)/(k^2*2^k)) (mod p)
con54 | p>3 | sum(k=1..p-1, 2^k*H(k-1)/k) === -(13/12)*p*B(p-3) (mod p^2)
con58 | p>3 | sum(k=1..p-1, 2^k*H(k-1)^2/k) === -(7/4)*B(p-3) (mod p)
con66 | p>3 | sum(k=1..p-1, 2^k*H(k-1,2)/k) === -(3/4)*B(p-3) (mod p)

con60 | p>3 | sum(k=1..p-1, 2^k*(H(p-1) - H(k-1))/k^2) === -(5/4)*B(p-3) (mod p)
con61 | p>3 | sum(k=1..p-1, 2^k*(H(p-1,2) - H(k-1,2))/k) === (3/4)*B(p-3) (mod p)
con62 | p>3 | sum(k=1..p-1, 2^k*(H(p-1) - H(k-1))/k) === (13/12)*p*B(p-3) (mod p^2)
)CAT";
    return text;
}

inline const std::vector<CongruenceSpec>& builtin_catalog() {
    static const std::vector<CongruenceSpec> entries = parse_catalog(builtin_catalog_text());
    return entries;
}

}  // namespace hnc

#endif
