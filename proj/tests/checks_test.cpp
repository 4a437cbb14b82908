#include <numeric>

#include <gtest/gtest.h>

#include <goursat/checks.hpp>

using namespace goursat;

TEST(Suites, SmallLengthsPass)
{
    for (const auto &r : {check_dual_recursion(8), check_cw_round_trip(8), check_lift_duality(8),
                          check_proximity_sums(8), check_vertical_orders(8), check_ro_invariance(8), check_panels(8)}) {
        EXPECT_TRUE(r.passed()) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
        EXPECT_GT(r.checked, 0u) << r.name;
    }
}

TEST(Suites, FailureListIsCapped)
{
    SuiteResult r;
    r.name = "x";
    for (int i = 0; i < 9; ++i) {
        r.fail("bad");
    }
    EXPECT_EQ(r.failure_count, 9u);
    EXPECT_EQ(r.failures.size(), 5u);
    EXPECT_FALSE(r.passed());
}

TEST(ParallelMap, KeepsOrder)
{
    const auto v = parallel_map<std::size_t>(1000, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < v.size(); ++i) {
        ASSERT_EQ(v[i], i * i);
    }
}

TEST(Corpus, Shape)
{
    const auto corpus = generate_corpus(250);
    ASSERT_EQ(corpus.size(), 250u);
    std::size_t low = 0;
    for (const auto &c : corpus) {
        EXPECT_GE(c.n, 2u);
        EXPECT_LE(c.n, 12u);
        ASSERT_FALSE(c.y_terms.empty());
        auto g = c.n;
        for (const auto &[e, q] : c.y_terms) {
            EXPECT_LE(e, 60u);
            EXPECT_NE(q, 0);
            g = std::gcd(g, e);
        }
        EXPECT_EQ(g, 1u) << c.str();
        low += c.y_terms.front().first < c.n;
    }
    EXPECT_GT(low, 0u);
    EXPECT_EQ(generate_corpus(20, 5)[7].str(), generate_corpus(20, 5)[7].str());
}

TEST(DirectPuiseux, Examples)
{
    CorpusCurve c{14, {{18, 1}, {19, 1}}};
    EXPECT_EQ(to_string(*direct_puiseux(c)), "[14;18,19]");
    c = {15, {{24, 1}, {25, 1}}};
    EXPECT_EQ(to_string(*direct_puiseux(c)), "[15;24,25]");
    c = {5, {{7, 1}, {9, 1}}};
    EXPECT_EQ(to_string(*direct_puiseux(c)), "[5;7]");
    c = {5, {{3, 1}}};
    EXPECT_FALSE(direct_puiseux(c));
}

TEST(DirectPuiseux, MatchesTheTower)
{
    for (const auto &c : std::vector<CorpusCurve>{{14, {{18, 1}, {19, 1}}}, {15, {{24, 1}, {25, 1}}}, {5, {{7, 1}}}}) {
        EXPECT_EQ(pc_from_word_front(curve_word(c.germ(128), 0)), *direct_puiseux(c)) << c.str();
    }
}

TEST(Corpus, EnginesAndDirectPuiseuxAgree)
{
    const auto corpus = generate_corpus(60, 7);
    const auto e = check_engine_equivalence(corpus);
    EXPECT_TRUE(e.passed()) << (e.failures.empty() ? "" : e.failures.front());
    const auto d = check_direct_puiseux(corpus);
    EXPECT_TRUE(d.passed()) << (d.failures.empty() ? "" : d.failures.front());
    EXPECT_EQ(d.checked + d.skipped, corpus.size());
}

TEST(AdaptivePrecision, Retries)
{
    std::vector<std::size_t> seen;
    const auto p = with_adaptive_precision([&](std::size_t p) {
        seen.push_back(p);
        if (p < 256) {
            throw error(errc::insufficient_precision, "more");
        }
        return p;
    });
    EXPECT_EQ(p, 256u);
    EXPECT_EQ(seen, (std::vector<std::size_t>{64, 128, 256}));
    EXPECT_THROW(with_adaptive_precision([](std::size_t) -> int { throw error(errc::orphan_t, "x"); }), error);
}
