#include <gtest/gtest.h>

#include <goursat/parse.hpp>

using namespace goursat;

namespace
{

error caught(auto &&fn)
{
    try {
        fn();
    } catch (const error &e) {
        return e;
    }
    return error(errc::mismatch, "no error");
}

} // namespace

TEST(Series, Grammar)
{
    EXPECT_EQ(to_string(parse_series("7/5*t^2 + t^3")), "7/5*t^2 + t^3");
    EXPECT_EQ(to_string(parse_series("-t")), "-t");
    EXPECT_EQ(to_string(parse_series("3")), "3");
    EXPECT_EQ(to_string(parse_series("3t")), "3*t");
    EXPECT_EQ(to_string(parse_series("t^18 + t^19")), "t^18 + t^19");
    EXPECT_EQ(to_string(parse_series("2 - 3t + t - 1")), "1 - 2*t");
    EXPECT_EQ(to_string(parse_series("t^4 + t^90", 10)), "t^4");
    EXPECT_EQ(parse_series("t", 17).precision(), 17u);
}

TEST(Series, Errors)
{
    EXPECT_EQ(caught([] { parse_series(""); }).code(), errc::parse_error);
    EXPECT_EQ(caught([] { parse_series("t + - 3t"); }).code(), errc::parse_error);
    EXPECT_EQ(caught([] { parse_series("1/0*t"); }).code(), errc::parse_error);
    EXPECT_EQ(caught([] { parse_series("2*x"); }).code(), errc::parse_error);
    EXPECT_EQ(caught([] { parse_series("t t"); }).code(), errc::parse_error);
    const auto e = caught([] { parse_series("t^2 + q"); });
    EXPECT_EQ(e.code(), errc::parse_error);
    ASSERT_TRUE(e.position());
    EXPECT_EQ(*e.position(), 6u);
}

TEST(Curve, PlainForm)
{
    const auto c = parse_curve("x=t^5, y=t^7");
    EXPECT_EQ(c.level, 0u);
    EXPECT_FALSE(c.path);
    EXPECT_EQ(to_string(c.germ.x), "t^5");
    EXPECT_EQ(to_string(c.germ.y), "t^7");
}

TEST(Curve, RecentersConstants)
{
    const auto c = parse_curve("x = 1 + t^2, y = t^5");
    EXPECT_EQ(c.germ.x0, Rational(1));
    EXPECT_EQ(to_string(c.germ.x), "t^2");
}

TEST(Curve, LevelForm)
{
    const auto c = parse_curve("@level 3, path=oio, r=t, n=t");
    EXPECT_EQ(c.level, 3u);
    ASSERT_TRUE(c.path);
    EXPECT_EQ(c.path->str(), "oio");
    EXPECT_EQ(to_string(c.germ.x), "1/6*t^3");
    EXPECT_EQ(to_string(c.germ.y), "1/8*t^4");
}

TEST(Curve, LevelFormWithData)
{
    const auto c = parse_curve("@level 1, path=o, r=t, n=2 + t, data=(0,0;2)");
    EXPECT_EQ(to_string(c.germ.x), "t");
    EXPECT_EQ(to_string(c.germ.y), "2*t + 1/2*t^2");
}

TEST(Curve, Errors)
{
    EXPECT_EQ(caught([] { parse_curve("x=t^5"); }).code(), errc::parse_error);
    EXPECT_EQ(caught([] { parse_curve("x=t^5, y=t^7, z=t"); }).code(), errc::parse_error);
    EXPECT_EQ(caught([] { parse_curve("x=t^5, x=t^7"); }).code(), errc::parse_error);
    EXPECT_EQ(caught([] { parse_curve("@level 2, path=oio, r=t, n=t"); }).code(), errc::parse_error);
    EXPECT_EQ(caught([] { parse_curve("@level 2, path=io, r=t, n=t"); }).code(), errc::parse_error);
    EXPECT_EQ(caught([] { parse_curve("@level 2"); }).code(), errc::parse_error);
    // Non-primitive input parses; the engines reject it.
    EXPECT_NO_THROW(parse_curve("x=t^4, y=t^6"));
    EXPECT_EQ(caught([] { parse_curve("x=1, y=2"); }).code(), errc::constant_parameterization);
}
