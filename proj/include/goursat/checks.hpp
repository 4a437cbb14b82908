#ifndef GOURSAT_CHECKS_HPP
#define GOURSAT_CHECKS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <goursat/blowup.hpp>
#include <goursat/errors.hpp>
#include <goursat/invariants.hpp>
#include <goursat/puiseux.hpp>
#include <goursat/series.hpp>
#include <goursat/tower.hpp>
#include <goursat/word.hpp>

namespace goursat
{

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures; // first few only
    std::size_t failure_count = 0;

    bool passed() const noexcept
    {
        return failure_count == 0 && checked > 0;
    }
    void fail(std::string what)
    {
        if (failures.size() < 5) {
            failures.push_back(std::move(what));
        }
        ++failure_count;
    }
};

// Runs fn(i) for i in [0, n) on a few threads; each call returns its own
// result, merged back in index order.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F fn)
{
    std::vector<R> out(n);
    const auto workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
    if (workers == 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = fn(i);
        }
        return out;
    }
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                out[i] = fn(i);
            }
        });
    }
    return out;
}

// All valid words of length 1..max_len.
inline std::vector<RvtWord> words_up_to(std::size_t max_len)
{
    std::vector<RvtWord> all;
    for (std::size_t n = 1; n <= max_len; ++n) {
        auto layer = enumerate_words(n);
        all.insert(all.end(), layer.begin(), layer.end());
    }
    return all;
}

namespace detail
{

// Applies a per-word predicate returning an error message (empty when fine).
inline SuiteResult over_words(std::string name, const std::vector<RvtWord> &words,
                              const std::function<std::string(const RvtWord &)> &check)
{
    SuiteResult r;
    r.name = std::move(name);
    const auto msgs = parallel_map<std::string>(words.size(), [&](std::size_t i) {
        try {
            return check(words[i]);
        } catch (const error &e) {
            return words[i].str() + ": " + e.what();
        }
    });
    r.checked = words.size();
    for (const auto &m : msgs) {
        if (!m.empty()) {
            r.fail(m);
        }
    }
    return r;
}

} // namespace detail

inline SuiteResult check_dual_recursion(std::size_t max_len)
{
    return detail::over_words("pc-agreement", words_up_to(max_len), [](const RvtWord &w) -> std::string {
        const auto f = pc_from_word_front(w);
        const auto b = pc_from_word_back(w);
        return f == b ? "" : w.str() + ": front " + to_string(f) + " back " + to_string(b);
    });
}

// normalize(CW(PC(W))) = normalize(W) for critical words.
inline SuiteResult check_cw_round_trip(std::size_t max_len)
{
    auto words = words_up_to(max_len);
    std::erase_if(words, [](const RvtWord &w) { return !w.is_critical(); });
    return detail::over_words("cw-round-trip", words, [](const RvtWord &w) -> std::string {
        const auto back = normalize(word_from_pc(pc_from_word_front(w)));
        return back == normalize(w) ? "" : w.str() + " -> " + back.str();
    });
}

// Every preimage lifts back to w, and every word is among the preimages of
// its own lift.
inline SuiteResult check_lift_duality(std::size_t max_len)
{
    return detail::over_words("lift-duality", words_up_to(max_len), [](const RvtWord &w) -> std::string {
        for (const auto &u : lift_preimages(w)) {
            if (lift_word(u) != w) {
                return "L(" + u.str() + ") = " + lift_word(u).str() + " != " + w.str();
            }
            (void)RvtWord::parse(u.str());
        }
        const auto pre = lift_preimages(lift_word(w));
        if (std::find(pre.begin(), pre.end(), w) == pre.end()) {
            return w.str() + " missing from the preimages of " + lift_word(w).str();
        }
        return "";
    });
}

inline SuiteResult check_proximity_sums(std::size_t max_len)
{
    return detail::over_words("proximity-sum", words_up_to(max_len), [](const RvtWord &w) -> std::string {
        const auto d = proximity_diagram(w);
        if (auto bad = proximity_sum_violation(d)) {
            return w.str() + ": vertex " + std::to_string(*bad);
        }
        const auto m = multiplicity_sequence(w).values;
        for (std::size_t i = 0; i < m.size() && i < d.vertices.size(); ++i) {
            if (m[i] != d.vertices[i].multiplicity) {
                return w.str() + ": diagram multiplicity differs at " + std::to_string(i);
            }
        }
        return "";
    });
}

// VO >= 0, VO_{j+2} = m_j - m_{j+1}, sum VO = m_0 - 1.
inline SuiteResult check_vertical_orders(std::size_t max_len)
{
    return detail::over_words("vertical-orders", words_up_to(max_len), [](const RvtWord &w) -> std::string {
        const auto vo = vertical_orders(w).values;
        auto m = multiplicity_sequence(w).values;
        m.resize(std::max(m.size(), w.size() + 1), 1);
        exponent_t sum = 0;
        for (std::size_t j = 0; j < vo.size(); ++j) {
            if (vo[j] < 0 || vo[j] != m[j] - m[j + 1]) {
                return w.str() + ": VO_" + std::to_string(j + 2);
            }
            sum += vo[j];
        }
        return sum == m.front() - 1 ? "" : w.str() + ": sum of VO is " + std::to_string(sum);
    });
}

// Words sharing a Goursat word share RO.
inline SuiteResult check_ro_invariance(std::size_t max_len)
{
    SuiteResult r;
    r.name = "ro-invariance";
    std::map<RvtWord, std::vector<RvtWord>> classes;
    for (const auto &w : words_up_to(max_len)) {
        classes[goursat_word(w).word()].push_back(w);
    }
    for (const auto &[g, members] : classes) {
        const auto ro = restricted_vertical_orders(g);
        for (const auto &w : members) {
            ++r.checked;
            if (restricted_vertical_orders(w) != ro) {
                r.fail(w.str() + " vs " + g.str());
            }
        }
    }
    return r;
}

inline SuiteResult check_panels(std::size_t max_len)
{
    return detail::over_words("panel", words_up_to(max_len), [](const RvtWord &w) -> std::string {
        (void)invariant_panel(w);
        return "";
    });
}

// x = t^n, y = sum c_i t^{e_i}.
struct CorpusCurve {
    std::size_t n{};
    std::vector<std::pair<std::size_t, Rational>> y_terms;

    CurveGerm germ(std::size_t precision) const
    {
        return CurveGerm::from_series(TruncatedSeries::monomial(1, n, precision),
                                      TruncatedSeries::from_terms(y_terms, precision));
    }
    std::string str() const
    {
        return "x=t^" + std::to_string(n) + ", y=" + to_string(TruncatedSeries::from_terms(y_terms, 61));
    }
};

// Primitive curves with 2 <= n <= 12, exponents <= 60, coefficients p/q
// with |p| <= 5, q <= 4. About one curve in five has ord y < n.
inline std::vector<CorpusCurve> generate_corpus(std::size_t count, std::uint64_t seed = 20261016)
{
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    std::vector<CorpusCurve> out;
    while (out.size() < count) {
        CorpusCurve c;
        c.n = uniform(2, 12);
        const auto terms = uniform(1, 4);
        const std::size_t low = uniform(0, 4) == 0 ? 1 : c.n;
        std::size_t g = c.n;
        for (std::size_t i = 0; i < terms; ++i) {
            const auto e = uniform(low, 60);
            long p = static_cast<long>(uniform(1, 5)) * (uniform(0, 1) ? 1 : -1);
            c.y_terms.emplace_back(e, Rational(p, static_cast<long>(uniform(1, 4))));
            g = std::gcd(g, e);
        }
        std::sort(c.y_terms.begin(), c.y_terms.end());
        const auto y = TruncatedSeries::from_terms(c.y_terms, 61);
        if (g != 1 || y.is_indeterminate()) {
            continue;
        }
        // Keep only exponents that survived merging.
        c.y_terms.clear();
        for (auto k : y.support()) {
            c.y_terms.emplace_back(k, y.coefficient(k));
        }
        g = c.n;
        for (const auto &t : c.y_terms) {
            g = std::gcd(g, t.first);
        }
        if (g == 1) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

// Retries with doubled precision while the engines ask for more terms.
template <class F>
auto with_adaptive_precision(F fn, std::size_t start = default_precision, std::size_t limit = 4096)
{
    for (std::size_t p = start;; p *= 2) {
        try {
            return fn(p);
        } catch (const error &e) {
            const bool precision_issue =
                e.code() == errc::insufficient_precision || e.code() == errc::indeterminate_valuation;
            if (!precision_issue || p * 2 > limit) {
                throw;
            }
        }
    }
}

// Characteristic exponents read straight off y(x^(1/n)) when ord y >= n:
// scan y's exponents, keeping each that lowers the running gcd.
inline std::optional<PuiseuxCharacteristic> direct_puiseux(const CorpusCurve &c)
{
    if (c.y_terms.empty() || c.y_terms.front().first < c.n) {
        return std::nullopt;
    }
    std::vector<exponent_t> lambdas{static_cast<exponent_t>(c.n)};
    auto g = static_cast<exponent_t>(c.n);
    for (const auto &[e, coeff] : c.y_terms) {
        const auto k = static_cast<exponent_t>(e);
        if (g > 1 && k % g != 0) {
            lambdas.push_back(k);
            g = std::gcd(g, k);
        }
    }
    return PuiseuxCharacteristic::from_exponents(std::move(lambdas));
}

inline SuiteResult check_engine_equivalence(const std::vector<CorpusCurve> &corpus,
                                            std::size_t max_level = default_max_level)
{
    SuiteResult r;
    r.name = "engine-equivalence";
    const auto msgs = parallel_map<std::string>(corpus.size(), [&](std::size_t i) -> std::string {
        try {
            const auto rep =
                with_adaptive_precision([&](std::size_t p) { return cross_check(corpus[i].germ(p), max_level); });
            std::string m;
            for (const auto &x : rep.mismatches) {
                m += (m.empty() ? "" : "; ") + x;
            }
            return m.empty() ? m : corpus[i].str() + ": " + m;
        } catch (const error &e) {
            return corpus[i].str() + ": " + e.what();
        }
    });
    r.checked = corpus.size();
    for (const auto &m : msgs) {
        if (!m.empty()) {
            r.fail(m);
        }
    }
    return r;
}

inline SuiteResult check_direct_puiseux(const std::vector<CorpusCurve> &corpus,
                                        std::size_t max_level = default_max_level)
{
    SuiteResult r;
    r.name = "direct-puiseux";
    const auto msgs = parallel_map<std::string>(corpus.size(), [&](std::size_t i) -> std::string {
        const auto expected = direct_puiseux(corpus[i]);
        if (!expected) {
            return "skip";
        }
        try {
            const auto w = with_adaptive_precision(
                [&](std::size_t p) { return curve_word(corpus[i].germ(p), 0, max_level); });
            const auto got = pc_from_word_front(w);
            return got == *expected
                       ? ""
                       : corpus[i].str() + ": word " + w.str() + " gives " + to_string(got) + ", expected "
                             + to_string(*expected);
        } catch (const error &e) {
            return corpus[i].str() + ": " + e.what();
        }
    });
    for (const auto &m : msgs) {
        if (m == "skip") {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        if (!m.empty()) {
            r.fail(m);
        }
    }
    return r;
}

} // namespace goursat

#endif
