#ifndef GOURSAT_WORD_HPP
#define GOURSAT_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <goursat/errors.hpp>

namespace goursat
{

inline constexpr bool is_critical_symbol(char s) noexcept
{
    return s == 'V' || s == 'T';
}

// A finite RVT code word: empty, or starting with R, with every T directly
// after a V or T. Infinite words are represented by their finite prefix with
// implicit trailing R padding.
class RvtWord
{
public:
    RvtWord() = default;

    // Validates; errors carry the 0-based offending position.
    static RvtWord parse(std::string_view text)
    {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char s = text[i];
            if (s != 'R' && s != 'V' && s != 'T') {
                throw error(errc::invalid_symbol,
                            std::string("symbol '") + s + "' at position " + std::to_string(i) + " is not R, V or T", i);
            }
            if (i == 0 && s != 'R') {
                throw error(errc::leading_non_r, "a nonempty word must start with R", 0);
            }
            if (s == 'T' && !is_critical_symbol(text[i - 1])) {
                throw error(errc::orphan_t, "T at position " + std::to_string(i) + " does not follow V or T", i);
            }
        }
        return RvtWord(std::string(text));
    }

    const std::string &str() const noexcept
    {
        return symbols_;
    }
    std::size_t size() const noexcept
    {
        return symbols_.size();
    }
    bool empty() const noexcept
    {
        return symbols_.empty();
    }
    char operator[](std::size_t i) const
    {
        return symbols_.at(i);
    }

    friend auto operator<=>(const RvtWord &, const RvtWord &) = default;

    // Ends in V or T.
    bool is_critical() const noexcept
    {
        return !symbols_.empty() && is_critical_symbol(symbols_.back());
    }

    bool has_critical_symbol() const noexcept
    {
        return std::any_of(symbols_.begin(), symbols_.end(), is_critical_symbol);
    }

    std::size_t leading_r_count() const noexcept
    {
        return std::find_if(symbols_.begin(), symbols_.end(), [](char s) { return s != 'R'; }) - symbols_.begin();
    }

private:
    explicit RvtWord(std::string s) : symbols_(std::move(s)) {}

    friend RvtWord unchecked_word(std::string s);

    std::string symbols_;
};

// For internal producers that build words by construction.
inline RvtWord unchecked_word(std::string s)
{
    return RvtWord(std::move(s));
}

inline RvtWord parse_word(std::string_view text)
{
    return RvtWord::parse(text);
}

inline bool is_critical(const RvtWord &w) noexcept
{
    return w.is_critical();
}

// Every symbol is V or T; applies to substrings, so it takes plain text.
inline bool is_entirely_critical(std::string_view s) noexcept
{
    return !s.empty() && std::all_of(s.begin(), s.end(), is_critical_symbol);
}

inline bool is_entirely_critical(const RvtWord &w) noexcept
{
    return is_entirely_critical(w.str());
}

// Drops trailing R padding.
inline RvtWord normalize(const RvtWord &w)
{
    auto s = w.str();
    while (!s.empty() && s.back() == 'R') {
        s.pop_back();
    }
    return unchecked_word(std::move(s));
}

// Replaces a leading V and the T's right after it by R's.
inline void flatten_leading_chain(std::string &s, std::size_t from)
{
    if (from < s.size() && s[from] == 'V') {
        s[from] = 'R';
        for (std::size_t i = from + 1; i < s.size() && s[i] == 'T'; ++i) {
            s[i] = 'R';
        }
    }
}

// Valid word whose first two symbols are RR (when it has two symbols).
class GoursatWord
{
public:
    const RvtWord &word() const noexcept
    {
        return word_;
    }
    const std::string &str() const noexcept
    {
        return word_.str();
    }
    friend bool operator==(const GoursatWord &, const GoursatWord &) = default;

private:
    explicit GoursatWord(RvtWord w) : word_(std::move(w)) {}
    friend GoursatWord goursat_word(const RvtWord &w);

    RvtWord word_;
};

// G(W): a V in second position and its T's become R's.
inline GoursatWord goursat_word(const RvtWord &w)
{
    auto s = w.str();
    flatten_leading_chain(s, 1);
    return GoursatWord(unchecked_word(std::move(s)));
}

// L(W): drop the leading R, then flatten a leading VT^tau chain.
inline RvtWord lift_word(const RvtWord &w)
{
    if (w.empty()) {
        throw error(errc::empty_word, "the empty word has no lifted word");
    }
    auto s = w.str().substr(1);
    flatten_leading_chain(s, 0);
    return unchecked_word(std::move(s));
}

// All u with L(u) = w: any leading R^tau (0 <= tau <= #leading R's) becomes
// VT^(tau-1), then an R is prepended.
inline std::vector<RvtWord> lift_preimages(const RvtWord &w)
{
    const auto rho = w.leading_r_count();
    std::vector<RvtWord> out;
    out.reserve(rho + 1);
    for (std::size_t tau = 0; tau <= rho; ++tau) {
        std::string s = "R";
        if (tau > 0) {
            s += 'V';
            s.append(tau - 1, 'T');
        }
        s += w.str().substr(tau);
        out.push_back(unchecked_word(std::move(s)));
    }
    return out;
}

// W = P R^rho Q with Q the maximal trailing entirely-critical block.
struct WordDecomposition {
    RvtWord prefix;    // P: empty or critical
    std::size_t rho{}; // >= 1
    std::string tail;  // Q: entirely critical, starts with V

    friend bool operator==(const WordDecomposition &, const WordDecomposition &) = default;
};

inline WordDecomposition decompose(const RvtWord &w)
{
    if (!w.is_critical()) {
        throw error(errc::not_critical, "decomposition needs a word ending in V or T, got '" + w.str() + "'");
    }
    const auto &s = w.str();
    auto q_begin = s.find_last_of('R') + 1;
    auto p_end = q_begin;
    while (p_end > 0 && s[p_end - 1] == 'R') {
        --p_end;
    }
    return {unchecked_word(s.substr(0, p_end)), q_begin - p_end, s.substr(q_begin)};
}

// For each 1-based position, the position of the V that started the chain
// the symbol belongs to (nullopt for R).
inline std::vector<std::optional<std::size_t>> chain_origins(const RvtWord &w)
{
    std::vector<std::optional<std::size_t>> out(w.size());
    std::optional<std::size_t> current;
    for (std::size_t i = 0; i < w.size(); ++i) {
        switch (w[i]) {
            case 'V': current = i + 1; break;
            case 'T': break;
            default: current.reset(); break;
        }
        out[i] = current;
    }
    return out;
}

struct SplitWord {
    RvtWord point_word;
    RvtWord curve_word;
};

// Word of the location at level k and word of the germ C(k). Symbols after
// the cut whose chain started at or before level k+1 are rewritten to R.
inline SplitWord split_at_level(const RvtWord &full, std::size_t k)
{
    if (k > full.size()) {
        throw error(errc::level_out_of_range,
                    "level " + std::to_string(k) + " exceeds word length " + std::to_string(full.size()));
    }
    const auto origins = chain_origins(full);
    std::string tail = full.str().substr(k);
    for (std::size_t i = 0; i < tail.size(); ++i) {
        const auto &origin = origins[k + i];
        if (origin && *origin <= k + 1) {
            tail[i] = 'R';
        }
    }
    return {unchecked_word(full.str().substr(0, k)), unchecked_word(std::move(tail))};
}

// All valid words of exactly the given length, in lexicographic R < T < V
// order of generation.
inline std::vector<RvtWord> enumerate_words(std::size_t length)
{
    std::vector<std::string> layer{""};
    for (std::size_t n = 0; n < length; ++n) {
        std::vector<std::string> next;
        next.reserve(layer.size() * 3);
        for (const auto &s : layer) {
            next.push_back(s + 'R');
            if (s.empty()) {
                continue;
            }
            next.push_back(s + 'V');
            if (is_critical_symbol(s.back())) {
                next.push_back(s + 'T');
            }
        }
        layer = std::move(next);
    }
    std::vector<RvtWord> out;
    out.reserve(layer.size());
    for (auto &s : layer) {
        out.push_back(unchecked_word(std::move(s)));
    }
    return out;
}

// Number of valid words of length n via the two-state recurrence
// (ending in R / ending in V or T).
inline unsigned long long count_words(std::size_t n)
{
    if (n == 0) {
        return 1;
    }
    unsigned long long ending_r = 1, ending_crit = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const auto r = ending_r + ending_crit;
        const auto c = ending_r + 2 * ending_crit;
        ending_r = r;
        ending_crit = c;
    }
    return ending_r + ending_crit;
}

} // namespace goursat

#endif
