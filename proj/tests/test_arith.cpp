#include "theta/arith.hpp"

#include "support/brute_force.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>

using namespace theta;
using theta::testing::jacobi_by_factoring;
using theta::testing::legendre_by_squares;

TEST(Jacobi, SpotValues)
{
    EXPECT_EQ(jacobi<std::int64_t>(1, 1), 1);
    // 3 is not a square mod 5
    EXPECT_EQ(legendre_by_squares(3, 5), -1);
    EXPECT_EQ(jacobi<std::int64_t>(3, 5), -1);
    // (2/3)(2/5) = (-1)(-1)
    EXPECT_EQ(jacobi_by_factoring(2, 15), 1);
    EXPECT_EQ(jacobi<std::int64_t>(2, 15), 1);
    EXPECT_EQ(jacobi<std::int64_t>(6, 15), 0);
    EXPECT_EQ(jacobi<std::int64_t>(-1, 7), -1);
}

TEST(Jacobi, RejectsBadLowerArgument)
{
    EXPECT_THROW(jacobi<std::int64_t>(3, 0), theta::invalid_argument);
    EXPECT_THROW(jacobi<std::int64_t>(3, -5), theta::invalid_argument);
    EXPECT_THROW(jacobi<std::int64_t>(3, 4), theta::invalid_argument);
}

TEST(Jacobi, MatchesFactoringOracle)
{
    for (std::int64_t n = 1; n < 200; n += 2)
        for (std::int64_t a = -60; a <= 200; ++a) {
            const int expected =
                theta::testing::gcd_slow(a, n) == 1 ? jacobi_by_factoring(a, n) : 0;
            ASSERT_EQ(jacobi<std::int64_t>(a, n), expected) << a << "/" << n;
        }
}

TEST(Jacobi, PeriodicAndMultiplicative)
{
    for (std::int64_t n = 1; n < 120; n += 2)
        for (std::int64_t a = -50; a < 50; ++a) {
            ASSERT_EQ(jacobi<std::int64_t>(a, n), jacobi<std::int64_t>(floor_mod(a, n), n));
            for (std::int64_t b = -7; b < 8; ++b)
                ASSERT_EQ(jacobi<std::int64_t>(a * b, n),
                          jacobi<std::int64_t>(a, n) * jacobi<std::int64_t>(b, n));
        }
}

TEST(Jacobi, QuadraticReciprocityBelow200)
{
    for (std::int64_t m = 1; m < 200; m += 2)
        for (std::int64_t n = 1; n < 200; n += 2) {
            if (gcd_of(m, n) != 1)
                continue;
            const int sign = ((m - 1) / 2 * ((n - 1) / 2)) % 2 == 0 ? 1 : -1;
            ASSERT_EQ(jacobi<std::int64_t>(m, n) * jacobi<std::int64_t>(n, m), sign)
                << m << ", " << n;
        }
}

TEST(Jacobi, BigIntegersAgreeWithBuiltins)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t a = dist(rng);
        const std::int64_t n = std::llabs(dist(rng)) | 1;
        ASSERT_EQ(jacobi<big_int>(a, n), jacobi<std::int64_t>(a, n));
    }
    // Arguments far beyond 64 bits.
    const big_int p("170141183460469231731687303715884105727"); // 2^127 - 1, prime
    EXPECT_EQ(jacobi<big_int>(big_int(-1), p), -1);             // p = 3 mod 4
    EXPECT_EQ(jacobi<big_int>(big_int(2), p), 1);               // p = 7 mod 8
}

TEST(StarredSymbols, UpperStar)
{
    EXPECT_EQ(symbol_upper_star<std::int64_t>(2, -3), -1);
    EXPECT_EQ(symbol_upper_star<std::int64_t>(0, 1), 1);
    EXPECT_EQ(symbol_upper_star<std::int64_t>(5, 3), -1);
    EXPECT_EQ(symbol_upper_star<std::int64_t>(-1, -1), 1);
}

TEST(StarredSymbols, LowerStar)
{
    EXPECT_EQ(symbol_lower_star<std::int64_t>(-1, -1), -1);
    EXPECT_EQ(symbol_lower_star<std::int64_t>(2, -3), -1);
    EXPECT_EQ(symbol_lower_star<std::int64_t>(0, 1), 1);
    // sign(0) = +1, so no correction even for negative d
    EXPECT_EQ(symbol_lower_star<std::int64_t>(0, -1), 1);
}

TEST(StarredSymbols, RejectInvalidPairs)
{
    EXPECT_THROW(symbol_upper_star<std::int64_t>(3, 4), theta::invalid_argument);
    EXPECT_THROW(symbol_upper_star<std::int64_t>(3, 0), theta::invalid_argument);
    EXPECT_THROW(symbol_upper_star<std::int64_t>(3, 9), theta::invalid_argument);
    EXPECT_THROW(symbol_lower_star<std::int64_t>(2, 6), theta::invalid_argument);
    EXPECT_THROW(symbol_lower_star<std::int64_t>(0, 3), theta::invalid_argument);
}

TEST(StarredSymbols, LowerDiffersFromUpperExactlyWhenBothNegative)
{
    for (std::int64_t c = -40; c <= 40; ++c)
        for (std::int64_t d = -41; d <= 41; d += 2) {
            if (gcd_of(c, d) != 1)
                continue;
            const int up = symbol_upper_star(c, d);
            const int low = symbol_lower_star(c, d);
            if (c < 0 && d < 0)
                ASSERT_EQ(low, -up) << c << ", " << d;
            else
                ASSERT_EQ(low, up) << c << ", " << d;
        }
}

TEST(LemmaSymbolProduct, SpotValues)
{
    EXPECT_EQ(lemma_symbol_product<std::int64_t>(1, 0), 1);
    // (3/-1)_* (3/5)_* = 1 * (-1)
    EXPECT_EQ(symbol_lower_star<std::int64_t>(3, -1), 1);
    EXPECT_EQ(symbol_lower_star<std::int64_t>(3, 5), -1);
    EXPECT_EQ(lemma_symbol_product<std::int64_t>(3, 2), -1);
    // (-3/5)_* (-3/-1)_* = (-1) * (-1)
    EXPECT_EQ(lemma_symbol_product<std::int64_t>(-3, 2), 1);
}

TEST(LemmaSymbolProduct, RejectsInvalidArguments)
{
    EXPECT_THROW(lemma_symbol_product<std::int64_t>(2, 3), theta::invalid_argument);
    EXPECT_THROW(lemma_symbol_product<std::int64_t>(3, 3), theta::invalid_argument);
    EXPECT_THROW(lemma_symbol_product<std::int64_t>(3, 6), theta::invalid_argument);
}

TEST(LemmaSymbolProduct, EqualsSignOfHalfCMinusOne)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> dist(-10000, 10000);
    int checked = 0;
    while (checked < 20000) {
        const std::int64_t c = dist(rng) | 1;
        const std::int64_t d = dist(rng) & ~std::int64_t{1};
        if (gcd_of(c, d) != 1)
            continue;
        ASSERT_EQ(lemma_symbol_product(c, d), neg_one_pow((c - 1) / 2)) << c << ", " << d;
        ++checked;
    }
}

TEST(Helpers, NegOnePowHandlesNegativeExponents)
{
    EXPECT_EQ(neg_one_pow<std::int64_t>(-2), 1);
    EXPECT_EQ(neg_one_pow<std::int64_t>(-3), -1);
    EXPECT_EQ(neg_one_pow<big_int>(big_int(-7)), -1);
    EXPECT_EQ(floor_mod<std::int64_t>(-7, 3), 2);
    EXPECT_EQ(floor_mod<big_int>(big_int(-24), 24), 0);
}
