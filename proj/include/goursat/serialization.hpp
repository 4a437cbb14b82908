#ifndef GOURSAT_SERIALIZATION_HPP
#define GOURSAT_SERIALIZATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <goursat/blowup.hpp>
#include <goursat/invariants.hpp>
#include <goursat/puiseux.hpp>
#include <goursat/rational.hpp>
#include <goursat/tower.hpp>
#include <goursat/word.hpp>

namespace goursat
{

using json = nlohmann::ordered_json;

inline constexpr int panel_schema_version = 1;

inline json to_json(const VerticalOrdersVector &vo)
{
    return {{"first_level", vo.first_level}, {"values", vo.values}};
}

inline json to_json(const ProximityDiagram &d)
{
    json vertices = json::array();
    for (const auto &v : d.vertices) {
        vertices.push_back({{"index", v.index}, {"symbol", std::string(1, v.symbol)}, {"multiplicity", v.multiplicity}});
    }
    json edges = json::array();
    for (const auto &[from, to] : d.edges) {
        edges.push_back({from, to});
    }
    return {{"vertices", vertices}, {"edges", edges}, {"truncated_after", d.truncated_after}};
}

inline json to_json(const InvariantPanel &p)
{
    return {
        {"schema", panel_schema_version},
        {"word", p.word.str()},
        {"goursat_word", p.goursat.str()},
        {"pc", to_string(p.pc)},
        {"restricted_pc", p.restricted_pc ? json(to_string(*p.restricted_pc)) : json(nullptr)},
        {"restricted_pc_error", p.restricted_pc_error.empty() ? json(nullptr) : json(p.restricted_pc_error)},
        {"multiplicities", p.multiplicities.values},
        {"proximity", to_json(p.proximity)},
        {"vertical_orders", to_json(p.vertical_orders)},
        {"restricted_vertical_orders", to_json(p.restricted_vertical_orders)},
    };
}

namespace detail
{

inline VerticalOrdersVector vo_from_json(const json &j)
{
    return {j.at("first_level").get<std::size_t>(), j.at("values").get<std::vector<exponent_t>>()};
}

inline char symbol_from_json(const json &j)
{
    const auto s = j.get<std::string>();
    if (s.size() != 1) {
        throw error(errc::parse_error, "vertex symbol must be one character, got '" + s + "'");
    }
    return s.front();
}

} // namespace detail

// Inverse of to_json(InvariantPanel); words and characteristics are validated.
inline InvariantPanel panel_from_json(const json &j)
{
    try {
        InvariantPanel p;
        p.word = parse_word(j.at("word").get<std::string>());
        p.goursat = parse_word(j.at("goursat_word").get<std::string>());
        p.pc = parse_pc(j.at("pc").get<std::string>());
        if (!j.at("restricted_pc").is_null()) {
            p.restricted_pc = parse_pc(j.at("restricted_pc").get<std::string>());
        }
        if (!j.at("restricted_pc_error").is_null()) {
            p.restricted_pc_error = j.at("restricted_pc_error").get<std::string>();
        }
        p.multiplicities.values = j.at("multiplicities").get<std::vector<exponent_t>>();
        const auto &prox = j.at("proximity");
        for (const auto &v : prox.at("vertices")) {
            p.proximity.vertices.push_back({v.at("index").get<std::size_t>(), detail::symbol_from_json(v.at("symbol")),
                                            v.at("multiplicity").get<exponent_t>()});
        }
        for (const auto &e : prox.at("edges")) {
            p.proximity.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        }
        p.proximity.truncated_after = prox.at("truncated_after").get<std::size_t>();
        p.vertical_orders = detail::vo_from_json(j.at("vertical_orders"));
        p.restricted_vertical_orders = detail::vo_from_json(j.at("restricted_vertical_orders"));
        return p;
    } catch (const json::exception &e) {
        throw error(errc::parse_error, std::string("panel JSON: ") + e.what());
    }
}

inline json to_json(const Rational &q)
{
    return to_string(q);
}

inline json rationals_to_json(const std::vector<Rational> &v)
{
    json out = json::array();
    for (const auto &q : v) {
        out.push_back(to_string(q));
    }
    return out;
}

// Sparse form: [[exponent, "p/q"], ...] plus the precision.
inline json to_json(const TruncatedSeries &s)
{
    json terms = json::array();
    for (auto k : s.support()) {
        terms.push_back({k, to_string(s.coefficient(k))});
    }
    return {{"precision", s.precision()}, {"terms", terms}};
}

inline TruncatedSeries series_from_json(const json &j)
{
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (const auto &t : j.at("terms")) {
        terms.emplace_back(t.at(0).get<std::size_t>(), parse_rational(t.at(1).get<std::string>()));
    }
    return TruncatedSeries::from_terms(terms, j.at("precision").get<std::size_t>());
}

inline json to_json(const LiftTrace &t)
{
    json steps = json::array();
    for (const auto &s : t.steps) {
        steps.push_back({
            {"level", s.level},
            {"chart", std::string(1, s.chart)},
            {"symbol", std::string(1, s.symbol)},
            {"retained", to_string(s.retained_name)},
            {"deactivated", to_string(s.deactivated_name)},
            {"new_coordinate", to_string(s.new_name)},
            {"chain_origin", s.chain_origin ? json(*s.chain_origin) : json(nullptr)},
            {"series", to_json(s.new_coord)},
        });
    }
    return {
        {"engine", "nash"},
        {"base_point", rationals_to_json({t.germ.x0, t.germ.y0})},
        {"x", to_json(t.germ.x)},
        {"y", to_json(t.germ.y)},
        {"regularization_level", t.regularization_level},
        {"word", t.full_word.str()},
        {"chart_path", t.chart_path.str()},
        {"data_point", rationals_to_json(t.data_point)},
        {"multiplicities", t.multiplicities},
        {"order_profile", t.order_profile},
        {"steps", steps},
    };
}

inline json to_json(const BlowupTrace &t)
{
    json steps = json::array();
    for (const auto &s : t.steps) {
        steps.push_back({
            {"level", s.level},
            {"formula", s.formula},
            {"symbol", std::string(1, s.symbol)},
            {"multiplicity", s.multiplicity},
            {"divisor_coordinate", s.state.u.name},
            {"new_coordinate", s.state.v.name},
            {"divisor_flag", s.state.v.flag ? json(*s.state.v.flag) : json(nullptr)},
            {"series", to_json(s.state.v.series)},
        });
    }
    return {
        {"engine", t.engine()},
        {"regularity_level", t.regularity_level},
        {"nonsingular_level", t.nonsingular_level},
        {"word", t.word.str()},
        {"multiplicities", t.multiplicities},
        {"order_profile", t.order_profile},
        {"steps", steps},
    };
}

inline json to_json(const DataPoint &p)
{
    return {{"chart_path", p.path.str()}, {"coordinates", rationals_to_json(p.coordinates)}};
}

// Consecutive edges solid, edges from the V-chain rule dashed; vertices
// labelled index:symbol:multiplicity, left to right by index.
inline std::string to_dot(const ProximityDiagram &d, const std::string &name = "proximity")
{
    std::string out = "digraph " + name + " {\n  rankdir=RL;\n  node [shape=circle];\n";
    for (const auto &v : d.vertices) {
        out += "  p" + std::to_string(v.index) + " [label=\"" + std::to_string(v.index) + ":" + std::string(1, v.symbol)
               + ":" + std::to_string(v.multiplicity) + "\"];\n";
    }
    for (const auto &[from, to] : d.edges) {
        out += "  p" + std::to_string(from) + " -> p" + std::to_string(to);
        out += from == to + 1 ? ";\n" : " [style=dashed];\n";
    }
    return out + "}\n";
}

} // namespace goursat

#endif
