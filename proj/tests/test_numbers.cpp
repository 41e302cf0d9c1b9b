#include "bellcomb/errors.hpp"
#include "bellcomb/numbers.hpp"
#include "bellcomb/partitions.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bellcomb;

TEST_CASE("binomial follows the zero-outside convention")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-3, 1) == 0);
    for (long n = 0; n <= 20; ++n)
        CHECK(binomial(n, 0) == 1);
}

TEST_CASE("bell")
{
    CHECK(bell(0) == 1);
    CHECK(bell(5) == 52);
    CHECK(bell(13) == 27644437);
    for (int n = 0; n <= 13; ++n)
        CHECK(bell(n) == BigInt(oracle::kBell[n]));
    // Past 64 bits.
    CHECK(bell(26) == BigInt("49631246523618756274"));
    CHECK_THROWS_AS(bell(-1), NegativeIndex);
}

TEST_CASE("bell satisfies the binomial recurrence for n <= 20")
{
    const auto b = bell_table(21);
    for (long n = 0; n <= 20; ++n) {
        BigInt sum = 0;
        for (long k = 0; k <= n; ++k)
            sum += binomial(n, k) * b[k];
        CHECK(sum == b[n + 1]);
    }
}

TEST_CASE("catalan")
{
    CHECK(catalan(0) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(12) == 208012);
    const auto segner = oracle::catalan_segner(30);
    for (int n = 0; n <= 30; ++n)
        CHECK(catalan(n) == BigInt(std::to_string(segner[n])));
    CHECK_THROWS_AS(catalan(-2), NegativeIndex);
}

TEST_CASE("catalan_difference")
{
    CHECK(catalan_difference(0) == 1);
    CHECK(catalan_difference(1) == 0);
    CHECK(catalan_difference(4) == 3);
    CHECK(catalan_difference(4) == BigInt(14 - 20 + 12 - 4 + 1));
    for (int n = 0; n <= 12; ++n)
        CHECK(catalan_difference(n) == BigInt(static_cast<long>(oracle::kCatalanDifference[n])));
    CHECK_THROWS_AS(catalan_difference(-1), NegativeIndex);
}

TEST_CASE("catalan_partial_sum")
{
    for (int n = 0; n <= 12; ++n)
        CHECK(catalan_partial_sum(n, 0) == catalan(n));
    CHECK(catalan_partial_sum(4, 2) == 6);
    for (int n = 0; n <= 12; ++n)
        CHECK(catalan_partial_sum(n, n) == catalan_difference(n));
    CHECK_THROWS_AS(catalan_partial_sum(3, 4), IndexOutOfRange);
    CHECK_THROWS_AS(catalan_partial_sum(3, -1), IndexOutOfRange);
}

TEST_CASE("factorial, derangement and a000262")
{
    CHECK(factorial(4) == 24);
    CHECK(derangement(3) == 2);
    CHECK(a000262(3) == 13);
    for (int n = 0; n <= 8; ++n)
        CHECK(derangement(n) == BigInt(oracle::derangements_by_permutation(n)));
    for (int n = 0; n <= 10; ++n) {
        CHECK(derangement(n) == BigInt(oracle::kDerangement[n]));
        CHECK(a000262(n) == BigInt(oracle::kA000262[n]));
    }
    CHECK_THROWS_AS(factorial(-1), NegativeIndex);
    CHECK_THROWS_AS(derangement(-1), NegativeIndex);
    CHECK_THROWS_AS(a000262(-1), NegativeIndex);
}

TEST_CASE("both sides of the singleton-free Bell identity")
{
    SUBCASE("j = 0 collapses to b_{n+1}")
    {
        for (int n = 0; n <= 12; ++n) {
            CHECK(lhs_thm1(n, 0) == bell(n + 1));
            CHECK(rhs_thm1(n, 0) == bell(n + 1));
        }
    }
    SUBCASE("(8,4) counts partitions of [9] with no singleton in [4]")
    {
        unsigned long filtered = 0;
        for (const auto& p : oracle::partitions_of(oracle::iota(1, 9)))
            if (!oracle::has_singleton_in(p, 1, 4))
                ++filtered;
        CHECK(filtered == 9089);
        CHECK(lhs_thm1(8, 4) == BigInt(filtered));
        CHECK(rhs_thm1(8, 4) == BigInt(filtered));
    }
    SUBCASE("(5,5) is b_5")
    {
        CHECK(rhs_thm1(5, 5) == 52);
    }
    SUBCASE("exact equality for 0 <= j <= n <= 12")
    {
        for (int n = 0; n <= 12; ++n)
            for (int j = 0; j <= n; ++j)
                CHECK(lhs_thm1(n, j) == rhs_thm1(n, j));
    }
    CHECK_THROWS_AS(lhs_thm1(3, 4), IndexOutOfRange);
    CHECK_THROWS_AS(rhs_thm1(3, -1), IndexOutOfRange);
}

TEST_CASE("the three singleton-collecting identities")
{
    CHECK(lhs_cor(3, CorollaryEq::two) == 5);
    CHECK(lhs_cor(3, CorollaryEq::two) == BigInt(15 - 15 + 6 - 1));
    CHECK(lhs_cor(0, CorollaryEq::three) == 2);
    CHECK(rhs_cor(0, CorollaryEq::three) == 2);
    CHECK(lhs_cor(2, CorollaryEq::four) == 1);
    CHECK(rhs_cor(2, CorollaryEq::four) == 1);
    for (int j = 0; j <= 12; ++j) {
        CHECK(lhs_cor(j, CorollaryEq::two) == rhs_cor(j, CorollaryEq::two));
        CHECK(lhs_cor(j, CorollaryEq::three) == rhs_cor(j, CorollaryEq::three));
    }
    for (int j = 2; j <= 12; ++j)
        CHECK(lhs_cor(j, CorollaryEq::four) == rhs_cor(j, CorollaryEq::four));
    CHECK_THROWS_AS(lhs_cor(1, CorollaryEq::four), IndexOutOfRange);
    CHECK_THROWS_AS(rhs_cor(0, CorollaryEq::four), IndexOutOfRange);
}
