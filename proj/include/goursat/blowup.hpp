#ifndef GOURSAT_BLOWUP_HPP
#define GOURSAT_BLOWUP_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <goursat/errors.hpp>
#include <goursat/invariants.hpp>
#include <goursat/series.hpp>
#include <goursat/tower.hpp>
#include <goursat/word.hpp>

namespace goursat
{

// A chart coordinate restricted to the curve. flag is the creation level of
// the exceptional divisor whose strict transform is this coordinate's zero
// locus, if any.
struct BlowupCoordinate {
    TruncatedSeries series;
    std::string name;
    std::optional<std::size_t> flag;
};

struct BlowupState {
    BlowupCoordinate u; // cuts out the newest divisor after the first blowup
    BlowupCoordinate v;
    std::size_t level{};
};

struct BlowupStep {
    std::size_t level{};
    bool swapped{}; // divided u by v instead of v by u
    std::string formula; // "y_1 = y/x"
    BlowupState state;
    char symbol{};
    std::size_t multiplicity{}; // of the center blown up at this step
};

struct BlowupTrace {
    CurveGerm germ;
    std::vector<BlowupStep> steps;
    std::size_t regularity_level{};
    std::size_t nonsingular_level{};
    RvtWord word;
    std::vector<std::size_t> multiplicities; // m_0..m_r at the successive points
    std::vector<std::size_t> order_profile;  // ord x, ord y, then each quotient

    std::string engine() const
    {
        return "blowup";
    }
};

namespace detail
{

inline std::string next_blowup_name(const std::string &numerator, std::vector<std::size_t> &counters)
{
    const char letter = numerator[numerator.find_first_of("xy")];
    auto &c = counters[letter == 'x' ? 0 : 1];
    return std::string(1, letter) + "_" + std::to_string(++c);
}

inline std::string centered_name(const BlowupCoordinate &c)
{
    const auto &k = c.series.constant_term();
    if (k == 0) {
        return c.name;
    }
    return "(" + c.name + (k < 0 ? "+" : "-") + to_string(k < 0 ? Rational(-k) : k) + ")";
}

inline std::size_t blowup_valuation(const TruncatedSeries &s)
{
    auto v = s.find_valuation();
    if (!v) {
        throw error(errc::indeterminate_valuation, "coordinate vanishes to the stored precision");
    }
    return *v;
}

} // namespace detail

// Blows up the current point and moves to the point of the strict transform.
inline BlowupStep blowup_once(const BlowupState &s, std::vector<std::size_t> &counters)
{
    BlowupCoordinate u = s.u, v = s.v;
    for (auto *c : {&u, &v}) {
        if (c->series.constant_term() != 0) {
            c->flag.reset();
        }
    }
    const auto un = detail::centered_name(u), vn = detail::centered_name(v);
    u.series = recenter(u.series).tail;
    v.series = recenter(v.series).tail;
    u.name = un;
    v.name = vn;
    const auto vu = detail::blowup_valuation(u.series);
    const auto vv = detail::blowup_valuation(v.series);

    BlowupStep step;
    step.level = s.level + 1;
    step.multiplicity = std::min(vu, vv);
    step.swapped = vu > vv;
    auto &den = step.swapped ? v : u;
    auto &num = step.swapped ? u : v;
    BlowupCoordinate fresh{quotient(num.series, den.series), detail::next_blowup_name(num.name, counters), num.flag};
    step.formula = fresh.name + " = " + (step.swapped ? un : vn) + "/" + (step.swapped ? vn : un);
    den.flag = step.level;
    step.state = {den, std::move(fresh), step.level};

    const auto &f = step.state.v;
    const bool on_old = f.flag && f.series.constant_term() == 0;
    if (step.level == 1 || !on_old) {
        step.symbol = 'R';
    } else {
        step.symbol = *f.flag + 1 == step.level ? 'V' : 'T';
    }
    return step;
}

// Nonsingular, and transverse to every exceptional divisor through the point.
inline bool is_blowup_regular(const BlowupStep &s)
{
    const auto vu = detail::blowup_valuation(s.state.u.series);
    const auto vf = detail::blowup_valuation(recenter(s.state.v.series).tail);
    return vu == 1 && (s.symbol == 'R' || vf == 1);
}

inline BlowupTrace blowup_resolve(const CurveGerm &c, std::size_t max_level = default_max_level)
{
    detail::check_primitive(c);
    BlowupTrace t;
    t.germ = c;
    const auto vx = detail::blowup_valuation(c.x), vy = detail::blowup_valuation(c.y);
    t.order_profile = {vx, vy};
    t.multiplicities = {std::min(vx, vy)};

    BlowupState s{{c.x, "x", std::nullopt}, {c.y, "y", std::nullopt}, 0};
    std::vector<std::size_t> counters{0, 0};
    std::optional<std::size_t> nonsingular;
    if (std::min(vx, vy) == 1) {
        nonsingular = 0;
    }
    std::string word;
    bool regular = std::min(vx, vy) == 1;
    while (!regular) {
        if (t.steps.size() >= max_level) {
            throw error(errc::max_level_exceeded, "not regular after " + std::to_string(max_level) + " blowups");
        }
        auto step = blowup_once(s, counters);
        s = step.state;
        word += step.symbol;
        t.order_profile.push_back(detail::blowup_valuation(s.v.series));
        const auto m =
            std::min(detail::blowup_valuation(s.u.series), detail::blowup_valuation(recenter(s.v.series).tail));
        t.multiplicities.push_back(m);
        if (!nonsingular && m == 1) {
            nonsingular = step.level;
        }
        regular = is_blowup_regular(step);
        t.steps.push_back(std::move(step));
    }
    t.regularity_level = t.steps.size();
    t.nonsingular_level = nonsingular.value_or(t.regularity_level);
    t.word = unchecked_word(std::move(word));
    return t;
}

struct CrossCheckReport {
    bool agree = true;
    std::vector<std::string> mismatches;
    LiftTrace nash;
    BlowupTrace blowup;
};

// Runs both engines and compares words, regularity levels, order profiles and
// multiplicities; the word's own multiplicity sequence is the third witness.
inline CrossCheckReport cross_check(const CurveGerm &c, std::size_t max_level = default_max_level)
{
    CrossCheckReport r;
    r.nash = lift_to_regularization(c, max_level);
    r.blowup = blowup_resolve(c, max_level);
    auto note = [&](std::string m) {
        r.agree = false;
        r.mismatches.push_back(std::move(m));
    };
    auto join = [](const auto &v) {
        std::string s;
        for (const auto &x : v) {
            s += (s.empty() ? "" : ",") + std::to_string(x);
        }
        return s;
    };
    if (r.nash.full_word != r.blowup.word) {
        note("word: nash " + r.nash.full_word.str() + " vs blowup " + r.blowup.word.str());
    }
    if (r.nash.regularization_level != r.blowup.regularity_level) {
        note("regularity level: nash " + std::to_string(r.nash.regularization_level) + " vs blowup "
             + std::to_string(r.blowup.regularity_level));
    }
    if (r.nash.order_profile != r.blowup.order_profile) {
        note("order profile: nash (" + join(r.nash.order_profile) + ") vs blowup (" + join(r.blowup.order_profile) + ")");
    }
    if (r.nash.multiplicities != r.blowup.multiplicities) {
        note("multiplicities: nash (" + join(r.nash.multiplicities) + ") vs blowup (" + join(r.blowup.multiplicities)
             + ")");
    }
    std::vector<std::size_t> from_word;
    for (auto m : multiplicity_sequence(r.nash.full_word).values) {
        from_word.push_back(static_cast<std::size_t>(m));
    }
    from_word.resize(r.nash.multiplicities.size(), 1);
    if (from_word != r.nash.multiplicities) {
        note("multiplicities: curve (" + join(r.nash.multiplicities) + ") vs word (" + join(from_word) + ")");
    }
    return r;
}

} // namespace goursat

#endif
