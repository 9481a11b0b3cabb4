#include <gtest/gtest.h>

#include <limits>
#include <numeric>
#include <stdexcept>

#include "gps/arith.hpp"

using namespace gps;

TEST(Arith, CheckedOpsThrowOnOverflow)
{
    const Int big = std::numeric_limits<Int>::max();
    EXPECT_THROW(checked_add(big, 1), std::overflow_error);
    EXPECT_THROW(checked_mul(big / 2 + 1, 2), std::overflow_error);
    EXPECT_THROW(checked_neg(std::numeric_limits<Int>::min()), std::overflow_error);
    EXPECT_EQ(checked_sub(5, 7), -2);
}

TEST(Arith, FloorDivision)
{
    EXPECT_EQ(floor_div(-7, 3), -3);
    EXPECT_EQ(mod_floor(-7, 3), 2);
    EXPECT_EQ(mod_floor(7, 3), 1);
}

TEST(Arith, ExtendedGcdBezout)
{
    for (Int a = -30; a <= 30; ++a)
        for (Int b = -30; b <= 30; ++b) {
            const ExtGcd e = ext_gcd(a, b);
            EXPECT_EQ(e.g, std::gcd(a, b));
            EXPECT_EQ(e.x * a + e.y * b, e.g);
        }
}

TEST(Arith, LcmAgreesWithStd)
{
    for (Int a = 0; a <= 40; ++a)
        for (Int b = 0; b <= 40; ++b)
            EXPECT_EQ(lcm(a, b), std::lcm(a, b));
}

TEST(Arith, FactorizationRebuildsTheNumber)
{
    for (Int n = 1; n <= 2000; ++n) {
        Int prod = 1;
        for (auto [p, k] : factorize(n)) {
            EXPECT_TRUE(is_prime(p));
            for (int i = 0; i < k; ++i)
                prod *= p;
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(Arith, DivisorsAndKernel)
{
    for (Int n = 1; n <= 300; ++n) {
        std::vector<Int> slow;
        Int kernel = 1;
        for (Int d = 1; d <= n; ++d) {
            if (n % d == 0)
                slow.push_back(d);
            bool prime = d >= 2;
            for (Int q = 2; q * q <= d; ++q)
                prime = prime && d % q != 0;
            if (prime && n % d == 0)
                kernel *= d;
        }
        EXPECT_EQ(divisors(n), slow);
        EXPECT_EQ(squarefree_kernel(n), kernel);
    }
    EXPECT_EQ(squarefree_kernel(0), 0);
}
