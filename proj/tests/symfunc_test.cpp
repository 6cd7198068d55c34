#include <gtest/gtest.h>

#include <vector>

#include "plethabacus/oracle.hpp"
#include "plethabacus/symfunc.hpp"

using namespace plethabacus;

TEST(SchurExpansion, ArithmeticAndFormatting) {
    schur_expansion e{{{4}, 1}, {{3, 1}, -1}};
    e.add({2, 2}, 2);
    EXPECT_EQ(e.to_string(), "+ s[4] - s[3,1] + 2 s[2,2]");
    EXPECT_EQ(e.degree(), 4);
    e.add({2, 2}, -2);
    EXPECT_EQ(e.size(), 2u);
    EXPECT_EQ(schur_expansion{}.to_string(), "0");
    EXPECT_THROW(e.add({1}, 1), error);
    EXPECT_EQ((integer(0) * e).size(), 0u);
}

TEST(MnMultiply, SmallProducts) {
    EXPECT_EQ(mn_multiply({1}, 2), (schur_expansion{{{3}, 1}, {{1, 1, 1}, -1}}));
    EXPECT_EQ(mn_multiply({2, 1}, 2), (schur_expansion{{{4, 1}, 1}, {{2, 1, 1, 1}, -1}}));
    EXPECT_EQ(mn_multiply(partition{}, 3), (schur_expansion{{{3}, 1}, {{2, 1}, -1}, {{1, 1, 1}, 1}}));
}

TEST(MnMultiply, PowerSumSquared) {
    const auto p2 = mn_multiply(partition{}, 2);
    EXPECT_EQ(mn_multiply(p2, 2),
              (schur_expansion{{{4}, 1}, {{3, 1}, -1}, {{2, 2}, 2}, {{2, 1, 1}, -1}, {{1, 1, 1, 1}, 1}}));
}

TEST(MnMultiply, AgreesWithOracle) {
    for (int n = 0; n <= 5; ++n)
        for (const auto& nu : partitions_of(n))
            for (int r = 1; r <= 3; ++r)
                EXPECT_EQ(mn_multiply(nu, r), oracle::oracle_mn_multiply(nu, r, n + r))
                    << nu.to_string() << " r=" << r;
}

TEST(PlethysticMn, EmptyNu) {
    EXPECT_EQ(plethystic_mn(partition{}, 2, 2), (schur_expansion{{{4}, 1}, {{3, 1}, -1}, {{2, 2}, 1}}));
}

TEST(PlethysticMn, ReducesToPieriForRIsOne) {
    // p_1 o h_m = h_m: every horizontal strip, coefficient one.
    const auto e = plethystic_mn({2, 1}, 1, 2);
    EXPECT_EQ(e, (schur_expansion{{{4, 1}, 1}, {{3, 2}, 1}, {{3, 1, 1}, 1}, {{2, 2, 1}, 1}}));
}

TEST(PlethysticMn, MEqualsOneIsMnMultiply) {
    for (int n = 0; n <= 5; ++n)
        for (const auto& nu : partitions_of(n))
            for (int r = 1; r <= 4; ++r)
                EXPECT_EQ(plethystic_mn(nu, r, 1), mn_multiply(nu, r)) << nu.to_string() << " r=" << r;
}

TEST(PlethysticMn, RejectsBadArguments) {
    EXPECT_THROW(plethystic_mn(partition{1}, 0, 1), error);
    EXPECT_THROW(plethystic_mn(partition{1}, 1, 0), error);
    EXPECT_THROW(mn_multiply(partition{1}, 0), error);
}

TEST(PlethysticMn, MultiFactor) {
    // s_1 (p_2 o h_1 h_1) = s_1 p_2 p_2.
    const std::vector<int> ms{1, 1};
    EXPECT_EQ(plethystic_mn_multi({1}, 2, ms), mn_multiply(mn_multiply(partition{1}, 2), 2));

    const std::vector<int> ones{1};
    EXPECT_EQ(plethystic_mn_multi({2}, 3, ones), plethystic_mn(partition{2}, 3, 1));
}

TEST(PlethysticMn, MultiFactorAgreesWithOracle) {
    const int n = 7;
    using namespace oracle;
    const auto truth = schur_decompose(poly_schur({1}, n) * pleth_pr(poly_h(2, n) * poly_h(1, n), 2));
    const std::vector<int> ms{2, 1};
    EXPECT_EQ(plethystic_mn_multi({1}, 2, ms), truth);
}

TEST(PowerProduct, DistinctPowers) {
    const std::vector<int> rs{2, 1};
    EXPECT_EQ(power_product_pleth({}, rs, 1), mn_multiply(mn_multiply(partition{}, 2), 1));

    const int n = 6;
    using namespace oracle;
    const auto truth = schur_decompose(pleth_pr(poly_h(2, n), 2) * pleth_pr(poly_h(2, n), 1));
    EXPECT_EQ(power_product_pleth({}, rs, 2), truth);
}

TEST(PowerProduct, KnownExpansion) {
    // (p_2 o h_2) h_2.
    EXPECT_EQ(plethystic_mn(plethystic_mn(partition{}, 2, 2), 1, 2),
              (schur_expansion{{{6}, 1}, {{4, 2}, 1}, {{4, 1, 1}, -1}, {{3, 3}, -1}, {{2, 2, 2}, 1}}));
}
