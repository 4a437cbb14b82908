#include <map>
#include <set>

#include <gtest/gtest.h>

#include <goursat/word.hpp>

using namespace goursat;

namespace
{

RvtWord W(const char *s)
{
    return parse_word(s);
}

errc code_of(const char *s)
{
    try {
        parse_word(s);
    } catch (const error &e) {
        return e.code();
    }
    return errc::mismatch;
}

std::set<std::string> strs(const std::vector<RvtWord> &ws)
{
    std::set<std::string> out;
    for (const auto &w : ws) {
        out.insert(w.str());
    }
    return out;
}

// Brute force: every string over {R,V,T} of length n that passes validation.
std::vector<std::string> brute_words(std::size_t n)
{
    std::vector<std::string> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= 3;
    }
    for (std::size_t code = 0; code < total; ++code) {
        std::string s;
        for (std::size_t i = 0, c = code; i < n; ++i, c /= 3) {
            s += "RVT"[c % 3];
        }
        try {
            parse_word(s);
            out.push_back(s);
        } catch (const error &) {
        }
    }
    return out;
}

} // namespace

TEST(Parse, Valid)
{
    EXPECT_EQ(W("RVTTV").str(), "RVTTV");
    EXPECT_TRUE(W("").empty());
}

TEST(Parse, Errors)
{
    EXPECT_EQ(code_of("RT"), errc::orphan_t);
    EXPECT_EQ(code_of("RRT"), errc::orphan_t);
    EXPECT_EQ(code_of("VR"), errc::leading_non_r);
    EXPECT_EQ(code_of("RX"), errc::invalid_symbol);
    try {
        parse_word("RVRT");
    } catch (const error &e) {
        EXPECT_EQ(e.position(), 3u);
    }
}

TEST(Normalize, Examples)
{
    EXPECT_EQ(normalize(W("RVVRRR")).str(), "RVV");
    EXPECT_TRUE(normalize(W("RRRR")).empty());
    EXPECT_EQ(normalize(W("RVTV")).str(), "RVTV");
}

TEST(GoursatWord, Examples)
{
    EXPECT_EQ(goursat_word(W("RVTTTVRVT")).str(), "RRRRRVRVT");
    EXPECT_EQ(goursat_word(W("RVVVRVT")).str(), "RRVVRVT");
    EXPECT_EQ(goursat_word(W("RRV")).str(), "RRV");
    EXPECT_EQ(goursat_word(W("R")).str(), "R");
}

TEST(GoursatWord, IdempotentAndLengthPreserving)
{
    for (std::size_t n = 0; n <= 8; ++n) {
        for (const auto &w : enumerate_words(n)) {
            const auto g = goursat_word(w).word();
            EXPECT_EQ(g.size(), w.size());
            EXPECT_EQ(goursat_word(g).word(), g);
            if (g.size() >= 2) {
                EXPECT_EQ(g.str().substr(0, 2), "RR");
            }
        }
    }
}

TEST(LiftWord, Examples)
{
    EXPECT_EQ(lift_word(W("RVTTVRVRV")).str(), "RRRVRVRV");
    EXPECT_EQ(lift_word(W("RVTV")).str(), "RRV");
    EXPECT_EQ(lift_word(W("RRV")).str(), "RV");
    EXPECT_EQ(lift_word(W("RV")).str(), "R");
    EXPECT_TRUE(lift_word(W("R")).empty());
    try {
        lift_word(W(""));
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::empty_word);
    }
}

TEST(LiftPreimages, FourWords)
{
    EXPECT_EQ(strs(lift_preimages(W("RRRVRVRV"))),
              (std::set<std::string>{"RRRRVRVRV", "RVRRVRVRV", "RVTRVRVRV", "RVTTVRVRV"}));
}

TEST(LiftPreimages, MatchBruteForce)
{
    // The preimages of w are exactly the words of length len(w)+1 lifting to w.
    for (std::size_t n = 0; n <= 6; ++n) {
        std::map<std::string, std::set<std::string>> brute;
        for (const auto &u : brute_words(n + 1)) {
            brute[lift_word(W(u.c_str())).str()].insert(u);
        }
        for (const auto &w : enumerate_words(n)) {
            EXPECT_EQ(strs(lift_preimages(w)), brute[w.str()]) << w.str();
        }
    }
    EXPECT_EQ(strs(lift_preimages(W(""))), std::set<std::string>{"R"});
    EXPECT_EQ(strs(lift_preimages(W("R"))), (std::set<std::string>{"RR", "RV"}));
}

TEST(LiftWord, NormalizeCommutes)
{
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto &w : enumerate_words(n)) {
            const auto nw = normalize(w);
            const auto lhs = nw.empty() ? nw : normalize(lift_word(nw));
            EXPECT_EQ(lhs, normalize(lift_word(w))) << w.str();
        }
    }
}

TEST(Decompose, Examples)
{
    auto d = decompose(W("RRVTRRRVTTTV"));
    EXPECT_EQ(d.prefix.str(), "RRVT");
    EXPECT_EQ(d.rho, 3u);
    EXPECT_EQ(d.tail, "VTTTV");
    d = decompose(W("RRVT"));
    EXPECT_TRUE(d.prefix.empty());
    EXPECT_EQ(d.rho, 2u);
    EXPECT_EQ(d.tail, "VT");
    d = decompose(W("RV"));
    EXPECT_EQ(d.rho, 1u);
    EXPECT_EQ(d.tail, "V");
    EXPECT_THROW(decompose(W("RVR")), error);
}

TEST(Split, Examples)
{
    auto s = split_at_level(W("RVTTVRV"), 2);
    EXPECT_EQ(s.point_word.str(), "RV");
    EXPECT_EQ(s.curve_word.str(), "RRVRV");
    s = split_at_level(W("RVTV"), 0);
    EXPECT_TRUE(s.point_word.empty());
    EXPECT_EQ(s.curve_word.str(), "RVTV");
    s = split_at_level(W("RVTTVRV"), 7);
    EXPECT_EQ(s.point_word.str(), "RVTTVRV");
    EXPECT_TRUE(s.curve_word.empty());
    try {
        split_at_level(W("RV"), 3);
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::level_out_of_range);
    }
}

TEST(Split, CurveWordsAreValid)
{
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto &w : enumerate_words(n)) {
            for (std::size_t k = 0; k <= n; ++k) {
                const auto s = split_at_level(w, k);
                EXPECT_NO_THROW(parse_word(s.curve_word.str())) << w.str() << " " << k;
                EXPECT_EQ(s.curve_word.size(), n - k);
            }
        }
    }
}

TEST(Predicates, Examples)
{
    EXPECT_TRUE(is_critical(W("RVTV")));
    EXPECT_FALSE(is_entirely_critical(W("RVTV")));
    EXPECT_TRUE(is_entirely_critical("VTTV"));
    EXPECT_FALSE(is_critical(W("RRR")));
    EXPECT_FALSE(is_entirely_critical(W("RRR")));
}

TEST(Enumerate, CountsMatchBruteForce)
{
    for (std::size_t n = 0; n <= 9; ++n) {
        EXPECT_EQ(enumerate_words(n).size(), brute_words(n).size()) << n;
        EXPECT_EQ(count_words(n), brute_words(n).size()) << n;
    }
    EXPECT_EQ(count_words(4), 13u);
    EXPECT_EQ(strs(enumerate_words(1)), std::set<std::string>{"R"});
}
