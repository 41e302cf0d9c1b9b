#pragma once

// Exact sequence values and both sides of the Bell and Catalan identities.
// Everything is arbitrary precision; there is no fixed-width fast path.

#include <gmpxx.h>

#include <vector>

namespace bellcomb {

using BigInt = mpz_class;

// Zero unless 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt factorial(long n);
BigInt bell(long n);
// b_0 .. b_max via one pass of the Bell triangle.
std::vector<BigInt> bell_table(long max);

// binomial(2n, n) / (n + 1); the division is checked to be exact.
BigInt catalan(long n);
// K_n = sum_i (-1)^(n-i) binomial(n, i) c_i.
BigInt catalan_difference(long n);
// sum_{i=0}^{j} (-1)^i binomial(j, i) c_{n-i}, for 0 <= j <= n.
BigInt catalan_partial_sum(long n, long j);

// d_n = (n-1)(d_{n-1} + d_{n-2}), d_0 = 1, d_1 = 0.
BigInt derangement(long n);
// Sets of lists (OEIS A000262): a_n = (2n-1) a_{n-1} - (n-1)(n-2) a_{n-2}.
BigInt a000262(long n);

// sum_{i=0}^{j} (-1)^i binomial(j, i) b_{n+1-i}, for 0 <= j <= n.
BigInt lhs_thm1(long n, long j);
// sum_{k=0}^{n-j} binomial(n-j, k) b_{n-k}, for 0 <= j <= n.
BigInt rhs_thm1(long n, long j);

// The three alternating-sum identities on Bell numbers that follow from the
// singleton-free counts. The enumerator values name the identity:
//   two:   sum_i (-1)^i C(j,i) b_{j+1-i} = b_j
//   three: sum_i (-1)^i C(j,i) b_{j+2-i} = b_j + b_{j+1}
//   four:  sum_i (-1)^i C(j,i) b_{j-i}   = sum_{k=0}^{j-2} (-1)^k b_{j-1-k}   (j >= 2)
enum class CorollaryEq { two = 2, three = 3, four = 4 };

BigInt lhs_cor(long j, CorollaryEq which);
BigInt rhs_cor(long j, CorollaryEq which);

} // namespace bellcomb
