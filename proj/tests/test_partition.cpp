#include <gtest/gtest.h>

#include "nilq/oracle.hpp"
#include "nilq/partition.hpp"
#include "support/oracles.hpp"

using namespace nilq;

TEST(Parse, FlatCommaList) { EXPECT_EQ(parse_partition("5,4,3,3,2,1"), (Partition{5, 4, 3, 3, 2, 1})); }

TEST(Parse, ExponentNotation) {
    EXPECT_EQ(parse_partition("5^2 4 3^4 2 1"), (Partition{5, 5, 4, 3, 3, 3, 3, 2, 1}));
}

TEST(Parse, SortsInput) { EXPECT_EQ(parse_partition("3 5 4"), (Partition{5, 4, 3})); }

TEST(Parse, EmptyTextIsEmptyPartition) { EXPECT_TRUE(parse_partition("  ").empty()); }

TEST(Parse, RejectsBadTokens) {
    for (const char* bad : {"3,x,1", "0", "-2", "3^0", "3^-1", "2.5", "3^", "^2", "4,,0"}) {
        EXPECT_THROW(parse_partition(bad), ParseError) << bad;
    }
    try {
        parse_partition("4 3 zz 1");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.token(), "zz");
        EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
    }
}

TEST(Partition, ConstructorEnforcesInvariants) {
    EXPECT_THROW(Partition({3, 4}), Error);
    EXPECT_THROW(Partition({3, 0}), Error);
    EXPECT_EQ((Partition{4, 2, 1}).weight(), 7);
}

TEST(Render, FlatAndExponent) {
    const Partition b{5, 5, 4, 3, 3, 3, 3, 2, 1};
    EXPECT_EQ(to_string(b), "5,5,4,3,3,3,3,2,1");
    EXPECT_EQ(to_exponent_string(b), "5^2 4 3^4 2 1");
    EXPECT_EQ(parse_partition(to_exponent_string(b)), b);
}

TEST(Dominance, ChainsFromExamples) {
    EXPECT_EQ(dominance({6, 4, 3}, {6, 5, 2}), Dominance::Less);
    EXPECT_EQ(dominance({6, 5, 2}, {6, 6, 1}), Dominance::Less);
    EXPECT_EQ(dominance({5, 3, 2, 1}, {6, 3, 1, 1}), Dominance::Less);
    EXPECT_EQ(dominance({6, 3, 1, 1}, {6, 4, 1}), Dominance::Less);
    EXPECT_EQ(dominance({6, 5, 2}, {6, 4, 3}), Dominance::Greater);
}

TEST(Dominance, IncomparableAndEqual) {
    EXPECT_EQ(dominance({4, 1, 1}, {3, 3}), Dominance::Incomparable);
    EXPECT_EQ(dominance({3, 2, 1}, {3, 2, 1}), Dominance::Equal);
}

TEST(Dominance, RejectsWeightMismatch) { EXPECT_THROW(dominance({3}, {2}), Error); }

TEST(Dominance, MatchesRankCriterionExhaustively) {
    for (int n = 1; n <= 12; ++n) {
        const auto all = enumerate_partitions(n);
        for (const auto& a : all)
            for (const auto& b : all) ASSERT_EQ(dominance(a, b), oracle::dominance_by_ranks(a, b)) << a << " " << b;
    }
}

TEST(Dominance, IsPartialOrder) {
    for (int n = 1; n <= 12; ++n) {
        const auto all = enumerate_partitions(n);
        for (const auto& a : all) {
            ASSERT_EQ(dominance(a, a), Dominance::Equal);
            for (const auto& b : all) {
                const auto ab = dominance(a, b);
                if (a != b) { ASSERT_NE(ab, Dominance::Equal); }
                if (ab == Dominance::Less) { ASSERT_EQ(dominance(b, a), Dominance::Greater); }
                if (ab == Dominance::Incomparable) { ASSERT_EQ(dominance(b, a), Dominance::Incomparable); }
            }
        }
        if (n > 9) continue;  // transitivity is cubic
        for (const auto& a : all)
            for (const auto& b : all)
                if (dominated_by(a, b))
                    for (const auto& c : all)
                        if (dominated_by(b, c)) { ASSERT_TRUE(dominated_by(a, c)); }
    }
}

TEST(RunEncoding, CumulativeIndices) {
    const auto enc = run_encoding({6, 6, 6, 6, 5, 2, 2, 1});
    EXPECT_EQ(enc.cumulative, (std::vector<int>{4, 5, 7, 8}));
    EXPECT_EQ(enc.q(0), 0);
    EXPECT_EQ(run_encoding({7}).cumulative, std::vector<int>{1});
    EXPECT_EQ(run_encoding({3, 3, 3, 2}).runs, (std::vector<nilq::Run>{{3, 3}, {2, 1}}));
}

TEST(RunEncoding, RoundTrip) {
    for (int n = 0; n <= 30; ++n)
        for (const auto& b : enumerate_partitions(n)) {
            const auto enc = run_encoding(b);
            ASSERT_EQ(expand(enc), b);
            ASSERT_EQ(enc.q(enc.size()), b.length());
            for (int i = 2; i <= enc.size(); ++i) ASSERT_GT(enc.run(i - 1).value, enc.run(i).value);
        }
}

TEST(ArDecomposition, Examples) {
    const auto d = ar_decomposition({5, 4, 3, 1, 1});
    EXPECT_EQ(d.r, 3);
    EXPECT_EQ(d.breakpoints, (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(ar_decomposition({9, 7, 5, 1}).r, 4);
    EXPECT_EQ(ar_decomposition({4, 4, 4, 4}).r, 1);
    EXPECT_THROW(ar_decomposition({}), Error);
}

TEST(ArDecomposition, BreakpointConditions) {
    for (int n = 1; n <= 16; ++n)
        for (const auto& b : enumerate_partitions(n)) {
            const auto d = ar_decomposition(b);
            ASSERT_EQ(d.breakpoints.back(), b.length());
            int prev = 0;
            for (std::size_t i = 0; i < d.breakpoints.size(); ++i) {
                const int end = d.breakpoints[i];
                ASSERT_LE(b.part(prev + 1) - b.part(end), 1);
                if (i > 0) { ASSERT_GT(b.part(prev) - b.part(end), 1); }
                prev = end;
            }
        }
}

TEST(ArDecomposition, SegmentCountIsMinimal) {
    for (int n = 1; n <= 12; ++n)
        for (const auto& b : enumerate_partitions(n)) ASSERT_EQ(ar_decomposition(b).r, oracle::min_ar_pieces(b)) << b;
}

TEST(SMax, Examples) {
    EXPECT_EQ(s_max({5, 4, 4, 2, 2, 1}), 3);
    EXPECT_EQ(s_max({5, 4, 3, 1, 1}), 2);
    EXPECT_EQ(s_max({3, 3, 3, 3}), 4);
    EXPECT_THROW(s_max({}), Error);
}

TEST(SMax, MatchesSegmentScan) {
    for (int n = 1; n <= 16; ++n)
        for (const auto& b : enumerate_partitions(n)) ASSERT_EQ(s_max(b), oracle::max_ar_segment(b)) << b;
}

TEST(Tilde, Examples) {
    EXPECT_EQ(tilde({5, 4, 4, 2, 2, 1}), (Partition{13, 5}));
    EXPECT_EQ(tilde({9, 7, 5, 1}), (Partition{9, 7, 5, 1}));
    EXPECT_EQ(tilde({2, 2, 2}), Partition{6});
    EXPECT_TRUE(tilde({}).empty());
}

TEST(Tilde, PreservesWeight) {
    for (int n = 1; n <= 20; ++n)
        for (const auto& b : enumerate_partitions(n)) {
            const auto bt = tilde(b);
            ASSERT_EQ(bt.weight(), n);
            ASSERT_EQ(bt.length(), ar_decomposition(b).r);
        }
}

TEST(Tilde, SegmentSumsNeedNotStayGapped) {
    // (3),(1,1,1,1) collapse to (4,3), which is itself almost rectangular
    EXPECT_EQ(tilde({3, 1, 1, 1, 1}), (Partition{4, 3}));
    EXPECT_EQ(ar_decomposition(tilde({3, 1, 1, 1, 1})).r, 1);
}

TEST(PowerType, Examples) {
    EXPECT_EQ(power_type(5, 2), (Partition{3, 2}));
    EXPECT_EQ(power_type(4, 2), (Partition{2, 2}));
    EXPECT_EQ(power_type(6, 4), (Partition{2, 2, 1, 1}));
}

TEST(PowerType, MatchesMatrixPowers) {
    for (int n = 1; n <= 14; ++n)
        for (int s = 1; s <= n + 2; ++s) {
            const auto pt = power_type(n, s);
            ASSERT_EQ(pt, oracle::power_type_by_matrix(n, s)) << n << "^" << s;
            ASSERT_TRUE(is_almost_rectangular(pt));
        }
    for (int n = 1; n <= 14; ++n) {
        EXPECT_EQ(power_type(n, 1), Partition{n});
        EXPECT_EQ(power_type(n, n), Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    }
}

TEST(AlmostRectangular, Examples) {
    EXPECT_TRUE(is_almost_rectangular({3, 3, 2}));
    EXPECT_FALSE(is_almost_rectangular({9, 7, 5, 1}));
    EXPECT_TRUE(is_almost_rectangular({8}));
    EXPECT_TRUE(is_almost_rectangular({}));
}

TEST(Conjugate, Involution) {
    for (int n = 0; n <= 15; ++n)
        for (const auto& b : enumerate_partitions(n)) ASSERT_EQ(conjugate(conjugate(b)), b);
    EXPECT_EQ(conjugate({3, 2}), (Partition{2, 2, 1}));
}
