#ifndef GOURSAT_INVARIANTS_HPP
#define GOURSAT_INVARIANTS_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <goursat/errors.hpp>
#include <goursat/puiseux.hpp>
#include <goursat/word.hpp>

namespace goursat
{

// m_k, m_{k+1}, ...; implicitly 1 after the last entry.
struct MultiplicitySequence {
    std::vector<exponent_t> values;

    friend bool operator==(const MultiplicitySequence &, const MultiplicitySequence &) = default;
};

// Leading entries of PC(L^j(W)), stopped at the position of the last
// critical symbol (where the first 1 appears) plus one confirming 1.
inline MultiplicitySequence multiplicity_sequence(const RvtWord &w)
{
    MultiplicitySequence out;
    for (const auto &pc : pc_chain(normalize(w))) {
        out.values.push_back(pc.lead());
    }
    return out;
}

struct ProximityVertex {
    std::size_t index{};
    char symbol{}; // '-' for vertex 0, the germ's own location
    exponent_t multiplicity{};

    friend bool operator==(const ProximityVertex &, const ProximityVertex &) = default;
};

// Vertex i >= 1 carries the i-th symbol; edge (j, i) means p_j is proximate
// to p_i. Vertices past truncated_after are forced: multiplicity 1, symbol R,
// only the consecutive edge.
struct ProximityDiagram {
    std::vector<ProximityVertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t truncated_after{};

    friend bool operator==(const ProximityDiagram &, const ProximityDiagram &) = default;

    std::vector<std::size_t> proximate_to(std::size_t i) const
    {
        std::vector<std::size_t> out;
        for (const auto &[from, to] : edges) {
            if (to == i) {
                out.push_back(from);
            }
        }
        return out;
    }
};

inline ProximityDiagram proximity_diagram(const RvtWord &w)
{
    ProximityDiagram d;
    const auto pcs = pc_chain(w);
    for (std::size_t i = 0; i < pcs.size(); ++i) {
        d.vertices.push_back({i, i == 0 ? '-' : w[i - 1], pcs[i].lead()});
    }
    d.truncated_after = w.size();
    for (std::size_t i = 0; i + 1 < d.vertices.size(); ++i) {
        d.edges.emplace_back(i + 1, i);
    }
    // Each block VT^tau whose V sits at vertex i points back to vertex i-2.
    for (std::size_t i = 1; i <= w.size(); ++i) {
        if (w[i - 1] != 'V') {
            continue;
        }
        for (std::size_t j = i; j <= w.size() && (j == i || w[j - 1] == 'T'); ++j) {
            d.edges.emplace_back(j, i - 2);
        }
    }
    std::sort(d.edges.begin(), d.edges.end(), [](const auto &a, const auto &b) {
        return std::pair{a.second, a.first} < std::pair{b.second, b.first};
    });
    return d;
}

// First vertex where m_i differs from the sum over its proximate points
// (the forced vertex after the last one counts with multiplicity 1).
inline std::optional<std::size_t> proximity_sum_violation(const ProximityDiagram &d)
{
    for (const auto &v : d.vertices) {
        exponent_t sum = v.index + 1 == d.vertices.size() ? 1 : 0;
        for (auto j : d.proximate_to(v.index)) {
            sum += d.vertices[j].multiplicity;
        }
        if (sum != v.multiplicity) {
            return v.index;
        }
    }
    return std::nullopt;
}

// values[i] is VO at tower level first_level + i.
struct VerticalOrdersVector {
    std::size_t first_level = 2;
    std::vector<exponent_t> values;

    friend bool operator==(const VerticalOrdersVector &, const VerticalOrdersVector &) = default;
};

// VO_{j+2} = m_j - m_{j+1} for j = 0..len(W)-2.
inline VerticalOrdersVector vertical_orders(const RvtWord &w)
{
    VerticalOrdersVector vo;
    const auto pcs = pc_chain(w);
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        vo.values.push_back(pcs[j].lead() - pcs[j + 1].lead());
    }
    return vo;
}

inline VerticalOrdersVector restricted_vertical_orders(const RvtWord &w)
{
    auto vo = vertical_orders(w);
    VerticalOrdersVector ro{vo.first_level + 1, {}};
    if (!vo.values.empty()) {
        ro.values.assign(vo.values.begin() + 1, vo.values.end());
    }
    return ro;
}

struct InvariantPanel {
    RvtWord word;
    RvtWord goursat;
    PuiseuxCharacteristic pc;
    std::optional<PuiseuxCharacteristic> restricted_pc;
    std::string restricted_pc_error; // set when restrict_pc reports
    MultiplicitySequence multiplicities;
    ProximityDiagram proximity;
    VerticalOrdersVector vertical_orders;
    VerticalOrdersVector restricted_vertical_orders;

    friend bool operator==(const InvariantPanel &, const InvariantPanel &) = default;
};

// All invariants of a word, cross-checked against each other; a failed
// cross-check throws errc::mismatch.
inline InvariantPanel invariant_panel(const RvtWord &w)
{
    InvariantPanel p;
    p.word = w;
    p.goursat = goursat_word(w).word();
    p.pc = pc_from_word_front(w);
    try {
        p.restricted_pc = restrict_pc(p.pc);
    } catch (const error &e) {
        if (e.code() != errc::remainder_invalid) {
            throw;
        }
        p.restricted_pc_error = e.what();
    }
    p.multiplicities = multiplicity_sequence(w);
    p.proximity = proximity_diagram(w);
    p.vertical_orders = goursat::vertical_orders(w);
    p.restricted_vertical_orders = goursat::restricted_vertical_orders(w);

    auto fail = [&](const std::string &what) { throw error(errc::mismatch, "word " + w.str() + ": " + what); };
    if (const auto back = pc_from_word_back(w); back != p.pc) {
        fail("front-end " + to_string(p.pc) + " != back-end " + to_string(back));
    }
    if (auto bad = proximity_sum_violation(p.proximity)) {
        fail("proximity sum fails at vertex " + std::to_string(*bad));
    }
    const auto &vo = p.vertical_orders.values;
    if (std::any_of(vo.begin(), vo.end(), [](auto v) { return v < 0; })) {
        fail("negative vertical order");
    }
    if (std::accumulate(vo.begin(), vo.end(), exponent_t{0}) != p.multiplicities.values.front() - 1) {
        fail("vertical orders do not telescope to m - 1");
    }
    if (goursat::restricted_vertical_orders(p.goursat) != p.restricted_vertical_orders) {
        fail("restricted vertical orders differ from those of G(W)");
    }
    if (p.restricted_pc && pc_from_word_front(p.goursat) != *p.restricted_pc) {
        fail("PC(G(W)) != restricted PC");
    }
    return p;
}

inline InvariantPanel invariant_panel(const PuiseuxCharacteristic &pc)
{
    auto p = invariant_panel(word_from_pc(pc));
    if (p.pc != pc) {
        throw error(errc::mismatch, "CW" + to_string(pc) + " = " + p.word.str() + " has characteristic " + to_string(p.pc));
    }
    return p;
}

} // namespace goursat

#endif
