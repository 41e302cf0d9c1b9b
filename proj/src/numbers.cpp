#include "bellcomb/numbers.hpp"

#include "bellcomb/errors.hpp"

#include <string>

namespace bellcomb {

namespace {

void require_nonnegative(long n, const char* what)
{
    if (n < 0)
        throw NegativeIndex(std::string(what) + " index " + std::to_string(n) + " is negative");
}

void require_j_in_range(long n, long j)
{
    if (j < 0 || j > n)
        throw IndexOutOfRange("need 0 <= j <= n, got n=" + std::to_string(n) + ", j=" + std::to_string(j));
}

int sign_of(long i)
{
    return i % 2 == 0 ? 1 : -1;
}

} // namespace

BigInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(long n)
{
    require_nonnegative(n, "factorial");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

std::vector<BigInt> bell_table(long max)
{
    require_nonnegative(max, "bell");
    // Row m of the Bell triangle starts with b_m and ends with b_{m+1}.
    std::vector<BigInt> values{1};
    std::vector<BigInt> row{1};
    for (long m = 1; m <= max; ++m) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const auto& x : row)
            next.push_back(next.back() + x);
        values.push_back(next.front());
        row = std::move(next);
    }
    return values;
}

BigInt bell(long n)
{
    require_nonnegative(n, "bell");
    return bell_table(n).back();
}

BigInt catalan(long n)
{
    require_nonnegative(n, "catalan");
    const BigInt central = binomial(2 * n, n);
    if (!mpz_divisible_ui_p(central.get_mpz_t(), static_cast<unsigned long>(n + 1)))
        throw NonIntegerCoefficient("binomial(2n,n) not divisible by n+1 at n=" + std::to_string(n));
    return central / (n + 1);
}

BigInt catalan_difference(long n)
{
    require_nonnegative(n, "catalan_difference");
    BigInt sum = 0;
    for (long i = 0; i <= n; ++i)
        sum += sign_of(n - i) * binomial(n, i) * catalan(i);
    return sum;
}

BigInt catalan_partial_sum(long n, long j)
{
    require_j_in_range(n, j);
    BigInt sum = 0;
    for (long i = 0; i <= j; ++i)
        sum += sign_of(i) * binomial(j, i) * catalan(n - i);
    return sum;
}

BigInt derangement(long n)
{
    require_nonnegative(n, "derangement");
    BigInt prev2 = 1, prev1 = 0;
    if (n == 0)
        return prev2;
    for (long m = 2; m <= n; ++m) {
        BigInt cur = (m - 1) * (prev1 + prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

BigInt a000262(long n)
{
    require_nonnegative(n, "a000262");
    BigInt prev2 = 1, prev1 = 1;
    if (n == 0)
        return prev2;
    for (long m = 2; m <= n; ++m) {
        BigInt cur = (2 * m - 1) * prev1 - (m - 1) * (m - 2) * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

BigInt lhs_thm1(long n, long j)
{
    require_j_in_range(n, j);
    const auto b = bell_table(n + 1);
    BigInt sum = 0;
    for (long i = 0; i <= j; ++i)
        sum += sign_of(i) * binomial(j, i) * b[n + 1 - i];
    return sum;
}

BigInt rhs_thm1(long n, long j)
{
    require_j_in_range(n, j);
    const auto b = bell_table(n);
    BigInt sum = 0;
    for (long k = 0; k <= n - j; ++k)
        sum += binomial(n - j, k) * b[n - k];
    return sum;
}

BigInt lhs_cor(long j, CorollaryEq which)
{
    require_nonnegative(j, "j");
    if (which == CorollaryEq::four && j < 2)
        throw IndexOutOfRange("the b_{j-i} identity needs j >= 2, got j=" + std::to_string(j));
    const long shift = which == CorollaryEq::two ? 1 : which == CorollaryEq::three ? 2 : 0;
    const auto b = bell_table(j + shift);
    BigInt sum = 0;
    for (long i = 0; i <= j; ++i)
        sum += sign_of(i) * binomial(j, i) * b[j + shift - i];
    return sum;
}

BigInt rhs_cor(long j, CorollaryEq which)
{
    require_nonnegative(j, "j");
    switch (which) {
    case CorollaryEq::two:
        return bell(j);
    case CorollaryEq::three: {
        const auto b = bell_table(j + 1);
        return b[j] + b[j + 1];
    }
    case CorollaryEq::four: {
        if (j < 2)
            throw IndexOutOfRange("the b_{j-i} identity needs j >= 2, got j=" + std::to_string(j));
        const auto b = bell_table(j);
        BigInt sum = 0;
        for (long k = 0; k <= j - 2; ++k)
            sum += sign_of(k) * b[j - 1 - k];
        return sum;
    }
    }
    throw IndexOutOfRange("unknown identity");
}

} // namespace bellcomb
