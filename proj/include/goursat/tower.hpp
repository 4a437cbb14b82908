#ifndef GOURSAT_TOWER_HPP
#define GOURSAT_TOWER_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <goursat/errors.hpp>
#include <goursat/invariants.hpp>
#include <goursat/rational.hpp>
#include <goursat/series.hpp>
#include <goursat/word.hpp>

namespace goursat
{

inline constexpr std::size_t default_max_level = 64;

// x^(order) or y^(order) in the superscript naming of chart coordinates.
struct CoordName {
    char letter = 'x';
    int order = 0;

    CoordName next() const
    {
        return {letter, order + 1};
    }
    friend bool operator==(const CoordName &, const CoordName &) = default;
};

// x, x', x'', x⁽³⁾, ...
inline std::string to_string(const CoordName &n)
{
    std::string s(1, n.letter);
    if (n.order <= 2) {
        return s + std::string(static_cast<std::size_t>(n.order), '\'');
    }
    static const char *const sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string digits;
    for (int v = n.order; v > 0; v /= 10) {
        digits.insert(0, sup[v % 10]);
    }
    return s + "⁽" + digits + "⁾";
}

// A plane curve germ, recentered so both coordinates vanish at t = 0.
struct CurveGerm {
    TruncatedSeries x;
    TruncatedSeries y;
    Rational x0{0};
    Rational y0{0};

    static CurveGerm from_series(const TruncatedSeries &x, const TruncatedSeries &y)
    {
        auto rx = recenter(x);
        auto ry = recenter(y);
        if (rx.tail.is_indeterminate() && ry.tail.is_indeterminate()) {
            throw error(errc::constant_parameterization, "both coordinates are constant to the stored precision");
        }
        return {std::move(rx.tail), std::move(ry.tail), std::move(rx.constant), std::move(ry.constant)};
    }
};

// Sequence of ordinary (o) / inverted (i) choices; starts with o.
class ChartPath
{
public:
    ChartPath() = default;

    static ChartPath parse(std::string_view text)
    {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != 'o' && text[i] != 'i') {
                throw error(errc::parse_error, "chart letters are o and i", i);
            }
        }
        if (!text.empty() && text.front() != 'o') {
            throw error(errc::parse_error, "a chart path starts with an ordinary choice", 0);
        }
        ChartPath p;
        p.letters_ = std::string(text);
        return p;
    }

    const std::string &str() const noexcept
    {
        return letters_;
    }
    std::size_t size() const noexcept
    {
        return letters_.size();
    }
    char operator[](std::size_t i) const
    {
        return letters_.at(i);
    }
    void push_back(char c)
    {
        letters_ += c;
    }

    friend bool operator==(const ChartPath &, const ChartPath &) = default;

private:
    std::string letters_;
};

struct ActiveCoordinate {
    TruncatedSeries series;
    CoordName name;
};

// The active pair (r_j, n_j) at some level.
struct ActivePair {
    ActiveCoordinate retained;
    ActiveCoordinate fresh;
};

struct ChainContext {
    char previous_symbol = 'R';
    std::optional<std::size_t> origin;
};

struct LiftStep {
    std::size_t level{};
    char chart{}; // 'o' or 'i'
    TruncatedSeries retained;
    TruncatedSeries new_coord;
    CoordName retained_name;
    CoordName new_name;
    CoordName deactivated_name;
    char symbol{};
    std::optional<std::size_t> chain_origin; // level of the V that opened the chain
};

namespace detail
{

// Ordinary iff val(dr) <= val(dn); ties go to the ordinary chart. A
// derivative vanishing to its precision only bounds its valuation from below.
inline bool ordinary_choice(const TruncatedSeries &dr, const TruncatedSeries &dn)
{
    const auto vr = dr.find_valuation();
    const auto vn = dn.find_valuation();
    if (vr && vn) {
        return *vr <= *vn;
    }
    if (vr && *vr <= dn.precision()) {
        return true;
    }
    if (vn && *vn < dr.precision()) {
        return false;
    }
    throw error(errc::insufficient_precision, "cannot compare derivative valuations");
}

inline TruncatedSeries chart_quotient(const TruncatedSeries &num, const TruncatedSeries &den)
{
    try {
        return quotient(num, den);
    } catch (const error &e) {
        if (e.code() == errc::indeterminate_valuation) {
            throw error(errc::insufficient_precision, e.what());
        }
        throw;
    }
}

// Whether d/dt of s is nonzero at t = 0.
inline bool has_linear_term(const TruncatedSeries &s)
{
    if (s.precision() < 2) {
        throw error(errc::insufficient_precision, "series too short to read its linear term");
    }
    return s.coefficient(1) != 0;
}

inline bool vanishes_at_origin(const TruncatedSeries &s)
{
    if (s.precision() == 0) {
        throw error(errc::insufficient_precision, "series too short to evaluate at t = 0");
    }
    return s.coefficient(0) == 0;
}

inline std::size_t multiplicity_of(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const auto ra = recenter(a).tail;
    const auto rb = recenter(b).tail;
    const auto va = ra.find_valuation();
    const auto vb = rb.find_valuation();
    if (!va && !vb) {
        throw error(errc::insufficient_precision, "both coordinates constant to precision");
    }
    if (va && vb) {
        return std::min(*va, *vb);
    }
    const auto v = va ? *va : *vb;
    const auto bound = va ? rb.precision() : ra.precision();
    if (v > bound) {
        throw error(errc::insufficient_precision, "multiplicity undecided at this precision");
    }
    return v;
}

inline void check_primitive(const CurveGerm &c)
{
    std::size_t g = 0;
    for (auto k : c.x.support()) {
        g = std::gcd(g, k);
    }
    for (auto k : c.y.support()) {
        g = std::gcd(g, k);
    }
    if (g > 1 && (c.x.is_indeterminate() || c.y.is_indeterminate())) {
        // Terms past the precision could still make the germ primitive.
        throw error(errc::insufficient_precision, "a coordinate vanishes to the stored precision");
    }
    if (g > 1) {
        throw error(errc::non_primitive_parameterization,
                    "every exponent is divisible by " + std::to_string(g) + "; reparameterize by t^" + std::to_string(g));
    }
}

} // namespace detail

// One Nash lift in the chart the curve selects.
inline LiftStep lift_once(const ActivePair &state, const ChainContext &ctx, std::size_t level)
{
    const auto dr = derivative(state.retained.series);
    const auto dn = derivative(state.fresh.series);
    LiftStep s;
    s.level = level;
    if (detail::ordinary_choice(dr, dn)) {
        s.chart = 'o';
        s.new_coord = detail::chart_quotient(dn, dr);
        s.retained = state.retained.series;
        s.retained_name = state.retained.name;
        s.deactivated_name = state.fresh.name;
        s.new_name = state.fresh.name.next();
    } else {
        s.chart = 'i';
        s.new_coord = detail::chart_quotient(dr, dn);
        s.retained = state.fresh.series;
        s.retained_name = state.fresh.name;
        s.deactivated_name = state.retained.name;
        s.new_name = state.retained.name.next();
    }
    if (level <= 1) {
        s.symbol = 'R';
    } else if (s.chart == 'i') {
        s.symbol = 'V';
    } else if (is_critical_symbol(ctx.previous_symbol) && detail::vanishes_at_origin(s.new_coord)) {
        s.symbol = 'T';
    } else {
        s.symbol = 'R';
    }
    switch (s.symbol) {
        case 'V': s.chain_origin = level; break;
        case 'T': s.chain_origin = ctx.origin; break;
        default: break;
    }
    return s;
}

// C(j) is regular iff d r_j/dt != 0 at t = 0, and either d n_j/dt != 0 or
// the level-j symbol is R (otherwise the next lift is tangent to a lifted
// fiber).
inline bool is_regular(const LiftStep &s)
{
    return detail::has_linear_term(s.retained) && (s.symbol == 'R' || detail::has_linear_term(s.new_coord));
}

inline bool is_regular_at_base(const CurveGerm &c)
{
    return detail::has_linear_term(c.x) || detail::has_linear_term(c.y);
}

// Steps through the tower one level at a time.
class Lifter
{
public:
    explicit Lifter(const CurveGerm &c) : germ_(c)
    {
        detail::check_primitive(c);
        const bool keep_x = detail::ordinary_choice(derivative(c.x), derivative(c.y));
        pair_.retained = keep_x ? ActiveCoordinate{c.x, {'x', 0}} : ActiveCoordinate{c.y, {'y', 0}};
        pair_.fresh = keep_x ? ActiveCoordinate{c.y, {'y', 0}} : ActiveCoordinate{c.x, {'x', 0}};
    }

    // Lifts with a prescribed chart per level instead of the curve's choice.
    explicit Lifter(const CurveGerm &c, bool retain_x) : germ_(c)
    {
        pair_.retained = retain_x ? ActiveCoordinate{c.x, {'x', 0}} : ActiveCoordinate{c.y, {'y', 0}};
        pair_.fresh = retain_x ? ActiveCoordinate{c.y, {'y', 0}} : ActiveCoordinate{c.x, {'x', 0}};
    }

    const LiftStep &step()
    {
        steps_.push_back(lift_once(pair_, ctx_, steps_.size() + 1));
        advance();
        return steps_.back();
    }

    // Forced chart letter; a letter the valuations forbid is an
    // integration_mismatch.
    const LiftStep &step(char chart)
    {
        const auto level = steps_.size() + 1;
        LiftStep s;
        s.level = level;
        s.chart = chart;
        const auto dr = derivative(pair_.retained.series);
        const auto dn = derivative(pair_.fresh.series);
        try {
            if (chart == 'o') {
                s.new_coord = quotient(dn, dr);
                s.retained = pair_.retained.series;
                s.retained_name = pair_.retained.name;
                s.deactivated_name = pair_.fresh.name;
                s.new_name = pair_.fresh.name.next();
            } else {
                s.new_coord = quotient(dr, dn);
                s.retained = pair_.fresh.series;
                s.retained_name = pair_.fresh.name;
                s.deactivated_name = pair_.retained.name;
                s.new_name = pair_.retained.name.next();
            }
        } catch (const error &e) {
            throw error(errc::integration_mismatch,
                        "chart letter '" + std::string(1, chart) + "' at level " + std::to_string(level) + ": " + e.what());
        }
        s.symbol = 'R';
        if (level > 1 && chart == 'i' && detail::vanishes_at_origin(s.new_coord)) {
            s.symbol = 'V';
            s.chain_origin = level;
        } else if (level > 1 && is_critical_symbol(ctx_.previous_symbol) && detail::vanishes_at_origin(s.new_coord)) {
            s.symbol = 'T';
            s.chain_origin = ctx_.origin;
        }
        steps_.push_back(std::move(s));
        advance();
        return steps_.back();
    }

    const std::vector<LiftStep> &steps() const noexcept
    {
        return steps_;
    }
    const CurveGerm &germ() const noexcept
    {
        return germ_;
    }
    const ActivePair &active() const noexcept
    {
        return pair_;
    }

private:
    void advance()
    {
        const auto &s = steps_.back();
        pair_.retained = {s.retained, s.retained_name};
        pair_.fresh = {s.new_coord, s.new_name};
        ctx_.previous_symbol = s.symbol;
        ctx_.origin = s.chain_origin;
    }

    CurveGerm germ_;
    ActivePair pair_;
    ChainContext ctx_;
    std::vector<LiftStep> steps_;
};

struct LiftTrace {
    CurveGerm germ;
    std::vector<LiftStep> steps; // levels 1..regularization_level
    std::size_t regularization_level{};
    RvtWord full_word;
    ChartPath chart_path;
    std::vector<Rational> data_point; // x(0), y(0), then n_1(0)..n_r(0)
    std::vector<std::size_t> multiplicities; // m_0..m_r
    std::vector<std::size_t> order_profile;  // ord x, ord y, ord n_1..ord n_r
};

namespace detail
{

inline std::size_t determinate_valuation(const TruncatedSeries &s, const char *what)
{
    auto v = s.find_valuation();
    if (!v) {
        throw error(errc::insufficient_precision, std::string(what) + " vanishes to the stored precision");
    }
    return *v;
}

inline LiftTrace make_trace(const CurveGerm &c, std::vector<LiftStep> steps)
{
    LiftTrace t;
    t.germ = c;
    t.regularization_level = steps.size();
    std::string word;
    t.data_point = {c.x0, c.y0};
    t.multiplicities.push_back(multiplicity_of(c.x, c.y));
    t.order_profile = {determinate_valuation(c.x, "x"), determinate_valuation(c.y, "y")};
    for (const auto &s : steps) {
        word += s.symbol;
        t.chart_path.push_back(s.chart);
        t.data_point.push_back(s.new_coord.constant_term());
        t.multiplicities.push_back(multiplicity_of(s.retained, s.new_coord));
        t.order_profile.push_back(determinate_valuation(s.new_coord, "new coordinate"));
    }
    t.full_word = unchecked_word(std::move(word));
    t.steps = std::move(steps);
    return t;
}

} // namespace detail

// Lifts until the germ is regular; a nonsingular plane germ is regular at
// level 0 and gets the empty word.
inline LiftTrace lift_to_regularization(const CurveGerm &c, std::size_t max_level = default_max_level)
{
    Lifter lifter(c);
    if (!is_regular_at_base(c)) {
        while (true) {
            if (lifter.steps().size() >= max_level) {
                throw error(errc::max_level_exceeded, "not regular after " + std::to_string(max_level) + " lifts");
            }
            if (is_regular(lifter.step())) {
                break;
            }
        }
    }
    return detail::make_trace(c, lifter.steps());
}

// Exactly k lifts, regardless of where the germ regularizes.
inline std::vector<LiftStep> lift_levels(const CurveGerm &c, std::size_t k)
{
    Lifter lifter(c);
    for (std::size_t j = 0; j < k; ++j) {
        lifter.step();
    }
    return lifter.steps();
}

// Word of C(k): levels k+1..r, with every symbol of a chain opened at level
// k+1 or earlier rewritten to R.
inline RvtWord curve_word(const CurveGerm &c, std::size_t k, std::size_t max_level = default_max_level)
{
    const auto trace = lift_to_regularization(c, std::max(max_level, k));
    std::string w;
    for (const auto &s : trace.steps) {
        if (s.level <= k) {
            continue;
        }
        w += s.chain_origin && *s.chain_origin <= k + 1 ? 'R' : s.symbol;
    }
    return unchecked_word(std::move(w));
}

inline RvtWord point_word_at_level(const CurveGerm &c, std::size_t k)
{
    std::string w;
    for (const auto &s : lift_levels(c, k)) {
        w += s.symbol;
    }
    return unchecked_word(std::move(w));
}

struct DataPoint {
    ChartPath path;
    std::vector<Rational> coordinates; // k + 2 values: x, y; n_1..n_k
};

inline DataPoint curvilinear_data_point(const CurveGerm &c, std::size_t k)
{
    DataPoint p;
    p.coordinates = {c.x0, c.y0};
    for (const auto &s : lift_levels(c, k)) {
        p.path.push_back(s.chart);
        p.coordinates.push_back(s.new_coord.constant_term());
    }
    return p;
}

// "(0,0;0,0,537824/703125)"
inline std::string to_string(const DataPoint &p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.coordinates.size(); ++i) {
        s += (i == 0 ? "" : (i == 2 ? ";" : ",")) + to_string(p.coordinates[i]);
    }
    return s + ")";
}

// VO_j = ord_t n_j where level j is inverted (the lift lies on I_j), else 0,
// for j = k+2..r.
inline VerticalOrdersVector vertical_orders_from_curve(const CurveGerm &c, std::size_t k = 0,
                                                      std::size_t max_level = default_max_level)
{
    const auto trace = lift_to_regularization(c, max_level);
    VerticalOrdersVector vo{k + 2, {}};
    for (const auto &s : trace.steps) {
        if (s.level < k + 2) {
            continue;
        }
        vo.values.push_back(s.symbol == 'V' ? static_cast<exponent_t>(s.new_coord.valuation()) : 0);
    }
    return vo;
}

// Pfaffian equations d d_k = n_k d r_k of the focal bundle in a chart,
// with r_0 = x.
inline std::vector<std::string> chart_equations(const ChartPath &path)
{
    CoordName r{'x', 0}, n{'y', 0};
    std::vector<std::string> out;
    for (std::size_t j = 0; j < path.size(); ++j) {
        if (path[j] == 'o') {
            const auto fresh = n.next();
            out.push_back("d" + to_string(n) + "=" + to_string(fresh) + "d" + to_string(r));
            n = fresh;
        } else {
            const auto fresh = r.next();
            out.push_back("d" + to_string(r) + "=" + to_string(fresh) + "d" + to_string(n));
            r = n;
            n = fresh;
        }
    }
    return out;
}

// Rebuilds the plane curve from the top active pair (r_k, n_k) of a chart by
// k integrations. constants, when given, holds the data point
// (x, y; n_1, ..., n_k) and supplies the integration constants.
inline CurveGerm curve_from_chart_data(const ChartPath &path, const TruncatedSeries &retained,
                                       const TruncatedSeries &fresh, std::vector<Rational> constants = {})
{
    const auto k = path.size();
    if (k == 0) {
        throw error(errc::integration_mismatch, "an empty chart path has no active pair to integrate");
    }
    auto is_constant = [](const TruncatedSeries &s) { return recenter(s).tail.is_indeterminate(); };
    if (is_constant(retained) && is_constant(fresh)) {
        throw error(errc::constant_parameterization, "both active coordinates are constant");
    }
    if (constants.empty()) {
        constants.assign(k + 2, Rational(0));
    }
    if (constants.size() != k + 2) {
        throw error(errc::integration_mismatch,
                    "expected " + std::to_string(k + 2) + " data point values, got " + std::to_string(constants.size()));
    }
    // Coordinate ids: 0 = x, 1 = y, j + 1 = n_j.
    struct Ids {
        std::size_t r, n, d;
    };
    std::vector<Ids> ids(k + 1);
    ids[0] = {0, 1, 1};
    for (std::size_t j = 1; j <= k; ++j) {
        const auto prev = ids[j - 1];
        ids[j] = path[j - 1] == 'o' ? Ids{prev.r, j + 1, prev.n} : Ids{prev.n, j + 1, prev.r};
    }
    if (retained.constant_term() != constants[ids[k].r] || fresh.constant_term() != constants[ids[k].n]) {
        throw error(errc::integration_mismatch, "active coordinates disagree with the data point");
    }
    std::vector<std::optional<TruncatedSeries>> series(k + 2);
    series[ids[k].r] = retained;
    series[ids[k].n] = fresh;
    for (std::size_t j = k; j >= 1; --j) {
        const auto &id = ids[j];
        series[id.d] = integrate(*series[id.n], *series[id.r], constants[id.d]);
    }
    const auto c = CurveGerm::from_series(*series[0], *series[1]);

    // The lift along the same charts has to land on the given pair.
    Lifter lifter(c, true);
    for (std::size_t j = 0; j < k; ++j) {
        lifter.step(path[j]);
    }
    const auto &top = lifter.active();
    auto agree = [](const TruncatedSeries &a, const TruncatedSeries &b) {
        const auto p = std::min(a.precision(), b.precision());
        return a.truncated(p) == b.truncated(p);
    };
    if (!agree(top.retained.series, retained) || !agree(top.fresh.series, fresh)) {
        throw error(errc::integration_mismatch, "lifting the rebuilt curve does not reproduce the active pair");
    }
    return c;
}

} // namespace goursat

#endif
