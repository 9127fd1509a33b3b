#include <gtest/gtest.h>

#include <numeric>

#include "kt_hodge/lattice.hpp"

using namespace kt_hodge;

namespace {

std::vector<LatticePoint> pts(std::initializer_list<std::pair<long long, long long>> list) {
    std::vector<LatticePoint> out;
    for (auto [l, m] : list) out.push_back({l, m});
    std::sort(out.begin(), out.end());
    return out;
}

// Independent scan in plain integers.
std::size_t naive_count(long p, long q, long rho_num = 1, long rho_den = 1) {
    std::size_t count = 0;
    long lo = std::min(0L, 2 * p / q - 1);
    long hi = std::max(0L, 2 * p / q + 1);
    for (long l = lo; l <= hi; ++l) {
        // m^2 = rho l (2p/q - l) -> m^2 q rho_den = rho_num l (2p - q l)
        long rhs = rho_num * l * (2 * p - q * l);
        long den = q * rho_den;
        if (rhs < 0 || rhs % den) continue;
        long m2 = rhs / den;
        long m = 0;
        while (m * m < m2) ++m;
        if (m * m != m2) continue;
        count += m == 0 ? 1 : 2;
    }
    return count;
}

} // namespace

TEST(CircleBrute, Examples) {
    auto half = circle_count_brute(Rational(1, 2));
    EXPECT_EQ(half.count, 2u);
    EXPECT_EQ(half.points, pts({{0, 0}, {1, 0}}));

    auto one = circle_count_brute(Rational(1));
    EXPECT_EQ(one.count, 4u);
    EXPECT_EQ(one.points, pts({{0, 0}, {2, 0}, {1, 1}, {1, -1}}));

    auto five_quarters = circle_count_brute(Rational(5, 4));
    EXPECT_EQ(five_quarters.count, 3u);
    EXPECT_EQ(five_quarters.points, pts({{0, 0}, {2, 1}, {2, -1}}));
}

TEST(CircleBrute, ZeroRejected) { EXPECT_THROW(circle_count_brute(Rational(0)), Error); }

TEST(CircleBrute, NegativeMirrorsPositive) {
    for (long p = 1; p <= 30; ++p)
        for (long q = 1; q <= 5; ++q) {
            auto pos = circle_count_brute(Rational(p, q));
            auto neg = circle_count_brute(Rational(-p, q));
            ASSERT_EQ(pos.count, neg.count);
            for (const auto& pt : neg.points) EXPECT_LE(pt.l, 0);
        }
}

TEST(CircleBrute, MatchesNaiveScan) {
    for (long p = 1; p <= 60; ++p)
        for (long q = 1; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ASSERT_EQ(circle_count_brute(Rational(p, q)).count, naive_count(p, q)) << p << "/" << q;
        }
}

TEST(CircleClosed, Examples) {
    EXPECT_EQ(circle_count_closed(Rational(5)), BigInt(12));
    EXPECT_EQ(circle_count_closed(Rational(1, 2)), BigInt(2));
    EXPECT_EQ(circle_count_closed(Rational(5, 3)), BigInt(3));
}

TEST(CircleClosed, UnsupportedDenominator) {
    try {
        circle_count_closed(Rational(1, 6));
        FAIL() << "expected UnsupportedDenominator";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDenominator);
    }
}

TEST(CircleClosed, MatchesBruteForceOnTable) {
    for (long p = 1; p <= 50; ++p)
        for (long q = 1; q <= 5; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Rational d(p, q);
            ASSERT_EQ(circle_count_closed(d), BigInt(static_cast<unsigned long>(circle_count_brute(d).count))) << d;
        }
}

TEST(CircleCount, CountsNeverDivisibleByEight) {
    for (long p = 1; p <= 200; ++p)
        for (long q = 1; q <= 5; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto c = circle_count_brute(Rational(p, q)).count;
            ASSERT_GE(c, 1u);
            ASSERT_NE(c % 8, 0u) << p << "/" << q;
        }
}

TEST(CircleCount, PointSetSymmetricInM) {
    for (long p = 1; p <= 80; ++p)
        for (long q = 1; q <= 5; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto lc = circle_count_brute(Rational(p, q));
            for (const auto& pt : lc.points) {
                LatticePoint mirror{pt.l, -pt.m};
                ASSERT_TRUE(std::binary_search(lc.points.begin(), lc.points.end(), mirror));
            }
            ASSERT_EQ((lc.count - lc.axis_points()) % 2, 0u);
        }
}

TEST(ScaledCount, Examples) {
    EXPECT_EQ(scaled_circle_count(Rational(1), Rational(4)).count, 4u);
    EXPECT_EQ(scaled_circle_count(Rational(1), Rational(9, 4)).count, 2u);
    EXPECT_EQ(scaled_circle_count(Rational(1), Rational(1)).count, 4u);
}

TEST(ScaledCount, RhoOneIsUnscaled) {
    for (long p = 1; p <= 40; ++p)
        for (long q = 1; q <= 6; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Rational d(p, q);
            ASSERT_EQ(scaled_circle_count(d, Rational(1)).points, circle_count_brute(d).points);
        }
}

TEST(ScaledCount, MatchesNaiveScan) {
    const std::pair<long, long> rhos[] = {{4, 1}, {9, 4}, {2, 1}, {1, 3}, {25, 4}, {4, 9}};
    for (auto [rn, rd] : rhos)
        for (long p = 1; p <= 25; ++p)
            for (long q = 1; q <= 5; ++q) {
                if (std::gcd(p, q) != 1) continue;
                ASSERT_EQ(scaled_circle_count(Rational(p, q), Rational(rn, rd)).count, naive_count(p, q, rn, rd));
            }
}

TEST(ScaledCount, LargeNumeratorViaRepresentations) {
    // p = 5^48: far beyond any scan, count still exact
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 5, 48);
    auto lc = scaled_circle_count(Rational(p, BigInt(3)), Rational(1));
    EXPECT_EQ(lc.count, 97u);
    EXPECT_FALSE(lc.points_complete);
    EXPECT_TRUE(lc.points.empty());

    auto small = scaled_circle_count(Rational(5 * 5 * 13, 3), Rational(1));
    EXPECT_TRUE(small.points_complete);
    EXPECT_EQ(small.points, circle_count_brute(Rational(325, 3)).points);
    EXPECT_THROW(circle_count_brute(Rational(p, BigInt(3))), Error);
}

TEST(ScaledCount, NonPositiveRhoRejected) {
    EXPECT_THROW(scaled_circle_count(Rational(1), Rational(0)), Error);
    EXPECT_THROW(scaled_circle_count(Rational(1), Rational(-4)), Error);
}

TEST(FindD, Examples) {
    EXPECT_EQ(find_d_for_count(BigInt(4)), Rational(1));
    EXPECT_EQ(find_d_for_count(BigInt(2)), Rational(1, 2));
    EXPECT_EQ(find_d_for_count(BigInt(12)), Rational(5));
}

TEST(FindD, DivisibleByEightUnreachable) {
    for (long n : {8L, 16L, 24L, 800L}) {
        try {
            find_d_for_count(BigInt(n));
            FAIL() << n;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::UnreachableTarget);
            EXPECT_NE(std::string(e.what()).find("target divisible by 8 unreachable"), std::string::npos);
        }
    }
    EXPECT_THROW(find_d_for_count(BigInt(0)), Error);
}

TEST(FindD, RoundTripsBelowHundred) {
    for (long n = 1; n <= 100; ++n) {
        if (n % 8 == 0) continue;
        Rational d = find_d_for_count(BigInt(n));
        ASSERT_LE(d.den(), 5);
        ASSERT_EQ(circle_count_closed(d), BigInt(n)) << n;
    }
}
