#include <numeric>

#include <gtest/gtest.h>

#include <goursat/blowup.hpp>

using namespace goursat;

namespace
{

CurveGerm germ(std::vector<std::pair<std::size_t, Rational>> x, std::vector<std::pair<std::size_t, Rational>> y)
{
    return CurveGerm::from_series(TruncatedSeries::from_terms(x, default_precision),
                                  TruncatedSeries::from_terms(y, default_precision));
}

std::vector<std::string> formulas(const BlowupTrace &t)
{
    std::vector<std::string> out;
    for (const auto &s : t.steps) {
        out.push_back(s.formula);
    }
    return out;
}

} // namespace

TEST(Blowup, T5T7)
{
    const auto t = blowup_resolve(germ({{5, 1}}, {{7, 1}}));
    EXPECT_EQ(t.word.str(), "RVTV");
    EXPECT_EQ(t.regularity_level, 4u);
    EXPECT_EQ(t.nonsingular_level, 3u);
    EXPECT_EQ(formulas(t), (std::vector<std::string>{"y_1 = y/x", "x_1 = x/y_1", "x_2 = x_1/y_1", "y_2 = y_1/x_2"}));
    EXPECT_EQ(t.multiplicities, (std::vector<std::size_t>{5, 2, 2, 1, 1}));
    EXPECT_EQ(t.engine(), "blowup");
}

TEST(Blowup, VerticalOrdersExample)
{
    const auto t = blowup_resolve(germ({{15, 1}}, {{24, 1}, {25, 1}}));
    EXPECT_EQ(t.word.str(), "RVVVRVT");
    EXPECT_EQ(t.order_profile, (std::vector<std::size_t>{15, 24, 9, 6, 3, 3, 0, 2, 1}));
    const auto f = formulas(t);
    ASSERT_EQ(f.size(), 7u);
    EXPECT_EQ(f[0], "y_1 = y/x");
    EXPECT_EQ(f[4], "x_3 = x_2/y_2");
    EXPECT_EQ(f[5], "y_3 = y_2/(x_3-1)");
    EXPECT_EQ(f[6], "y_4 = y_3/(x_3-1)");
}

TEST(Blowup, NonsingularNeedsNothing)
{
    const auto t = blowup_resolve(germ({{1, 1}}, {{3, 1}}));
    EXPECT_TRUE(t.word.empty());
    EXPECT_EQ(t.regularity_level, 0u);
    EXPECT_EQ(t.nonsingular_level, 0u);
}

TEST(Blowup, AgreesWithNash)
{
    const std::vector<CurveGerm> curves{
        germ({{5, 1}}, {{7, 1}}),
        germ({{14, 1}}, {{18, 1}, {19, 1}}),
        germ({{2, 1}}, {{5, 1}}),
        germ({{15, 1}}, {{24, 1}, {25, 1}}),
        germ({{7, 1}}, {{3, 2}, {10, -1}}),
        germ({{6, 1}}, {{9, 1}, {10, Rational(1, 3)}}),
        germ({{4, 1}, {5, 1}}, {{6, 1}, {9, 2}}),
    };
    for (const auto &c : curves) {
        const auto r = cross_check(c);
        EXPECT_TRUE(r.agree) << (r.mismatches.empty() ? "" : r.mismatches.front());
        EXPECT_EQ(r.nash.full_word, r.blowup.word);
    }
}

TEST(Blowup, NonsingularLevelNeverExceedsRegularity)
{
    for (std::size_t a = 2; a <= 9; ++a) {
        for (std::size_t b = a + 1; b <= 20; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            const auto t = blowup_resolve(germ({{a, 1}}, {{b, 1}}));
            EXPECT_LE(t.nonsingular_level, t.regularity_level);
            EXPECT_EQ(t.multiplicities[t.nonsingular_level], 1u);
        }
    }
}

TEST(Blowup, Errors)
{
    try {
        blowup_resolve(germ({{4, 1}}, {{6, 1}}));
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::non_primitive_parameterization);
    }
    try {
        blowup_resolve(germ({{5, 1}}, {{7, 1}}), 1);
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::max_level_exceeded);
    }
}
