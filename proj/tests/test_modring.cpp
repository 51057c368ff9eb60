#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "rroot/modring.hpp"

using namespace rroot;

TEST(Natural, ParsesDecimalAndHex)
{
    EXPECT_EQ(parse_natural("12345678901234567890"), Natural("12345678901234567890"));
    EXPECT_EQ(parse_natural("0x1f"), 31);
    EXPECT_THROW(parse_natural("-3"), std::invalid_argument);
    EXPECT_THROW(parse_natural("12a"), std::invalid_argument);
    EXPECT_THROW(parse_natural(""), std::invalid_argument);
    EXPECT_THROW(to_u64(Natural("18446744073709551616")), std::overflow_error);
    EXPECT_EQ(ipow(3, 5), 243);
    EXPECT_EQ(isqrt(Natural(99)), 9);
}

TEST(Residue, Arithmetic)
{
    const Modulus m(13);
    EXPECT_EQ(m(5) * m(8), m(1));
    EXPECT_EQ(m(7) + m(0), m(7));
    EXPECT_EQ(m(7) - m(7), m(0));
    EXPECT_EQ(-m(1), m(12));
    EXPECT_EQ(m(Natural(27)).value(), 1);
}

TEST(Residue, Pow)
{
    const Modulus m(13);
    EXPECT_TRUE(m(2).pow(12).is_one());
    EXPECT_EQ(m(2).pow(6), m(12));
    EXPECT_TRUE(m(9).pow(0).is_one());
    EXPECT_TRUE(m(0).pow(0).is_one());
}

TEST(Residue, Inverse)
{
    const Modulus m(10);
    EXPECT_EQ(m(3).inverse(), m(7));
    EXPECT_EQ(m(1).inverse(), m(1));
    try {
        m(2).inverse();
        FAIL() << "expected ZeroDivisor";
    } catch (const ZeroDivisor& e) {
        EXPECT_EQ(e.divisor(), 2);
    }
    EXPECT_THROW(m(0).inverse(), std::domain_error);
}

TEST(Residue, MixedModuliRejected)
{
    EXPECT_THROW(Modulus(13)(1) + Modulus(17)(1), std::logic_error);
    EXPECT_THROW(Modulus(std::uint64_t{1}), std::invalid_argument);
}

TEST(Order, Examples)
{
    const Modulus m(13);
    const FactoredInteger twelve{{{2, 2}, {3, 1}}};
    EXPECT_EQ(order(m(12), twelve), 2);
    EXPECT_EQ(order(m(2), twelve), 12);
    EXPECT_EQ(order(m(1), twelve), 1);
    EXPECT_EQ(order(m(3), twelve), 3);
}

TEST(Order, AnomalyOverComposite)
{
    // 2^14 mod 15 = 4, so 2 does not live in a group of order 14.
    const Modulus m(15);
    EXPECT_THROW(order(m(2), FactoredInteger{{{2, 1}, {7, 1}}}), OrderAnomaly);
}

TEST(ExtendedGcd, Bezout)
{
    for (auto [a, b] : {std::pair{240, 46}, {1, 2}, {2, 3}, {17, 0}, {0, 5}}) {
        const Bezout z = extended_gcd(a, b);
        EXPECT_EQ(z.g, std::gcd(a, b));
        EXPECT_EQ(z.u * a + z.v * b, z.g);
    }
}

TEST(Residue, RandomFieldLaws)
{
    std::mt19937_64 rng(7);
    const std::uint64_t p = 1000003;
    const Modulus m(p);
    for (int i = 0; i < 2000; ++i) {
        const auto a = m(rng() % p), b = m(rng() % p), c = m(rng() % p);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a.pow(Natural(p - 1)).is_one(), !a.is_zero());
        if (!a.is_zero())
            EXPECT_TRUE((a * a.inverse()).is_one());
        const unsigned k = static_cast<unsigned>(rng() % 40);
        Residue naive = m.one();
        for (unsigned j = 0; j < k; ++j)
            naive *= a;
        EXPECT_EQ(a.pow(k), naive);
    }
}
