#include <gtest/gtest.h>

#include "kt_hodge/hodge.hpp"

using namespace kt_hodge;

namespace {

HodgeDiamond diamond_for(const char* d, MetricSpec metric = MetricSpec::standard()) {
    return hodge_diamond(AcsParams(Rational(0), Rational::parse(d)), metric);
}

} // namespace

TEST(Diamond, DOneStandard) {
    auto h = diamond_for("1");
    EXPECT_EQ(h(0, 1), 4u);
    EXPECT_EQ(h(2, 1), 4u);
    // 2d = 2 is an integer
    EXPECT_EQ(h(2, 0), 1u);
    EXPECT_EQ(h(0, 2), 1u);
    EXPECT_EQ(h(1, 0), 1u);
    EXPECT_EQ(h(1, 2), 1u);
    EXPECT_EQ(h(1, 1), 3u);
    EXPECT_EQ(h(0, 0), 1u);
    EXPECT_EQ(h(2, 2), 1u);
}

TEST(Diamond, DOneThird) {
    auto h = diamond_for("1/3");
    EXPECT_EQ(h(0, 1), 1u);
    EXPECT_EQ(h(2, 0), 0u);
    EXPECT_EQ(h(1, 1), 3u);
}

TEST(Diamond, MetricDependence) {
    auto standard = diamond_for("1");
    auto nine_quarters = diamond_for("1", MetricSpec::rho(Rational(9, 4)));
    auto four = diamond_for("1", MetricSpec::rho(Rational(4)));
    EXPECT_EQ(nine_quarters(0, 1), 2u);
    EXPECT_EQ(nine_quarters(2, 1), 2u);
    EXPECT_EQ(four.h, standard.h);
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
            bool varies = (p == 0 && q == 1) || (p == 2 && q == 1);
            EXPECT_EQ(four(p, q) != nine_quarters(p, q), varies) << p << q;
        }
}

TEST(Diamond, Provenance) {
    auto h = diamond_for("5/4");
    EXPECT_EQ(h.provenance[0][1], Provenance::Computed);
    EXPECT_EQ(h.provenance[2][0], Provenance::Computed);
    EXPECT_EQ(h.provenance[1][1], Provenance::CitedConstant);
    EXPECT_EQ(h.provenance[1][0], Provenance::CitedConstant);
    EXPECT_EQ(h.provenance[0][0], Provenance::CitedConstant);
    EXPECT_EQ(h.provenance[2][1], Provenance::SerreDual);
    EXPECT_EQ(h.provenance[2][2], Provenance::SerreDual);
}

TEST(Diamond, SurjectivityBelowHundred) {
    for (long n = 1; n <= 100; ++n) {
        if (n % 8 == 0) continue;
        Rational d = find_d_for_count(BigInt(n));
        auto h = hodge_diamond(AcsParams(Rational(0), d), MetricSpec::standard(), {1, 1, 1});
        ASSERT_EQ(h(0, 1), static_cast<unsigned long long>(n)) << d;
    }
}

TEST(Diamond, AlwaysSerreSymmetric) {
    for (const char* d : {"1", "1/2", "5/3", "-7/4", "12", "13/5"})
        for (const char* rho : {"1", "2", "9/4", "1/3"}) {
            auto h = diamond_for(d, MetricSpec::rho(Rational::parse(rho)));
            EXPECT_TRUE(serre_check(h));
            EXPECT_EQ(h(0, 0), 1u);
            EXPECT_EQ(h(2, 2), 1u);
            EXPECT_EQ(h(1, 1), 3u);
        }
}

TEST(H11, Formula) {
    EXPECT_EQ(h11_almost_kahler(2), 3u);
    EXPECT_EQ(h11_almost_kahler(0), 1u);
    EXPECT_EQ(h11_almost_kahler(5), 6u);
}

TEST(SerreCheck, Examples) {
    HodgeDiamond asym;
    for (auto& row : asym.h) row.fill(1);
    EXPECT_TRUE(serre_check(asym));
    asym.h[0][1] = 2;
    asym.h[2][1] = 3;
    EXPECT_FALSE(serre_check(asym));
}
