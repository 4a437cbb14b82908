#ifndef GOURSAT_PUISEUX_HPP
#define GOURSAT_PUISEUX_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <goursat/errors.hpp>
#include <goursat/word.hpp>

namespace goursat
{

using exponent_t = std::int64_t;

// [lambda_0; lambda_1, ..., lambda_g]: strictly increasing, gcd 1, each
// lambda_i (i >= 1) not divisible by the gcd of the earlier entries.
class PuiseuxCharacteristic
{
public:
    // [1;]
    PuiseuxCharacteristic() : lambdas_{1} {}

    static PuiseuxCharacteristic from_exponents(std::vector<exponent_t> lambdas)
    {
        validate(lambdas);
        return PuiseuxCharacteristic(std::move(lambdas));
    }

    static PuiseuxCharacteristic trivial()
    {
        return {};
    }

    const std::vector<exponent_t> &exponents() const noexcept
    {
        return lambdas_;
    }
    exponent_t operator[](std::size_t i) const
    {
        return lambdas_.at(i);
    }
    exponent_t lead() const noexcept
    {
        return lambdas_.front();
    }
    // Number of characteristic exponents after lambda_0.
    std::size_t genus() const noexcept
    {
        return lambdas_.size() - 1;
    }
    bool is_trivial() const noexcept
    {
        return lambdas_.size() == 1;
    }

    friend bool operator==(const PuiseuxCharacteristic &, const PuiseuxCharacteristic &) = default;
    friend auto operator<=>(const PuiseuxCharacteristic &, const PuiseuxCharacteristic &) = default;

    // Throws invalid_characteristic describing the first violated invariant.
    static void validate(const std::vector<exponent_t> &l)
    {
        auto fail = [&](const std::string &why) {
            std::string s = "[";
            for (std::size_t i = 0; i < l.size(); ++i) {
                s += (i == 1 ? ";" : (i > 1 ? "," : "")) + std::to_string(l[i]);
            }
            throw error(errc::invalid_characteristic, s + (l.size() == 1 ? ";]" : "]") + ": " + why);
        };
        if (l.empty()) {
            fail("no exponents");
        }
        if (l[0] < 1) {
            fail("lambda_0 must be positive");
        }
        if (l[0] == 1 && l.size() > 1) {
            fail("lambda_0 = 1 admits no further exponents");
        }
        exponent_t g = l[0];
        for (std::size_t i = 1; i < l.size(); ++i) {
            if (l[i] <= l[i - 1]) {
                fail("exponents must strictly increase");
            }
            if (l[i] % g == 0) {
                fail("exponent " + std::to_string(l[i]) + " is inessential");
            }
            g = std::gcd(g, l[i]);
        }
        if (g != 1) {
            fail("gcd of the exponents is " + std::to_string(g));
        }
    }

private:
    explicit PuiseuxCharacteristic(std::vector<exponent_t> l) : lambdas_(std::move(l)) {}

    std::vector<exponent_t> lambdas_;
};

using PC = PuiseuxCharacteristic;

inline std::string to_string(const PuiseuxCharacteristic &pc)
{
    std::string s = "[" + std::to_string(pc.lead()) + ";";
    for (std::size_t i = 1; i <= pc.genus(); ++i) {
        s += (i > 1 ? "," : "") + std::to_string(pc[i]);
    }
    return s + "]";
}

// "[l0;l1,...,lg]"; whitespace is ignored.
inline PuiseuxCharacteristic parse_pc(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    auto bad = [&](std::size_t pos) {
        return error(errc::parse_error, "expected [l0;l1,...,lg], got '" + std::string(text) + "'", pos);
    };
    if (s.size() < 3 || s.front() != '[' || s.back() != ']') {
        throw bad(0);
    }
    auto semi = s.find(';');
    if (semi == std::string::npos) {
        throw bad(0);
    }
    std::vector<exponent_t> l;
    auto read_int = [&](std::size_t from, std::size_t to) {
        if (from == to) {
            throw bad(from);
        }
        exponent_t v = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                throw bad(i);
            }
            v = v * 10 + (s[i] - '0');
        }
        l.push_back(v);
    };
    read_int(1, semi);
    std::size_t pos = semi + 1;
    const std::size_t end = s.size() - 1;
    while (pos < end) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos || comma > end) {
            comma = end;
        }
        read_int(pos, comma);
        pos = comma + 1;
        if (comma < end && pos == end) {
            throw bad(pos);
        }
    }
    return PuiseuxCharacteristic::from_exponents(std::move(l));
}

// Drops inessential exponents from an increasing list whose first entry is
// the multiplicity.
inline PuiseuxCharacteristic canonicalize_exponents(const std::vector<exponent_t> &raw)
{
    if (raw.empty()) {
        throw error(errc::invalid_characteristic, "no exponents");
    }
    std::vector<exponent_t> l{raw[0]};
    exponent_t g = raw[0];
    for (std::size_t i = 1; i < raw.size() && g != 1; ++i) {
        if (raw[i] <= l.back()) {
            throw error(errc::invalid_characteristic, "exponents must strictly increase");
        }
        if (raw[i] % g != 0) {
            l.push_back(raw[i]);
            g = std::gcd(g, raw[i]);
        }
    }
    return PuiseuxCharacteristic::from_exponents(std::move(l));
}

// The front-end cases, read off a word's prefix.
enum class Case { none, A, B, C };

struct CaseTag {
    Case kind = Case::none;
    std::size_t tau = 0; // meaningful for B and C

    friend bool operator==(const CaseTag &, const CaseTag &) = default;
};

inline CaseTag word_case(const RvtWord &w)
{
    if (!w.has_critical_symbol()) {
        return {};
    }
    const auto &s = w.str();
    if (s[1] == 'R') {
        return {Case::A, 0};
    }
    std::size_t i = 2;
    while (i < s.size() && s[i] == 'T') {
        ++i;
    }
    return {i < s.size() && s[i] == 'V' ? Case::C : Case::B, i - 2};
}

// Which case the characteristic itself selects.
inline CaseTag classify_case(const PuiseuxCharacteristic &pc)
{
    if (pc.is_trivial()) {
        throw error(errc::trivial_characteristic, "[1;] has no case");
    }
    const auto l0 = pc[0], l1 = pc[1];
    if (l1 > 2 * l0) {
        return {Case::A, 0};
    }
    const auto d = l1 - l0;
    if (l0 % d == 0) {
        // l0 = (tau+2) d, l1 = (tau+3) d
        return {Case::B, static_cast<std::size_t>(l0 / d - 2)};
    }
    // (tau+1) d < l0 < (tau+2) d
    return {Case::C, static_cast<std::size_t>(l0 / d - 1)};
}

// PC(W) from PC(L(W)) and the case of W.
inline PuiseuxCharacteristic pc_from_lift(const PuiseuxCharacteristic &lifted, CaseTag c)
{
    const auto &l = lifted.exponents();
    std::vector<exponent_t> out;
    switch (c.kind) {
        case Case::none: return PuiseuxCharacteristic::trivial();
        case Case::A:
            out.push_back(l[0]);
            for (std::size_t i = 1; i < l.size(); ++i) {
                out.push_back(l[i] + l[0]);
            }
            break;
        case Case::B: {
            const auto t = static_cast<exponent_t>(c.tau);
            out.push_back((t + 2) * l[0]);
            out.push_back((t + 3) * l[0]);
            for (std::size_t i = 1; i < l.size(); ++i) {
                out.push_back(l[i] + l[0]);
            }
            break;
        }
        case Case::C:
            if (l.size() < 2) {
                throw error(errc::invalid_characteristic, "case C needs a nontrivial lifted characteristic");
            }
            out.push_back(l[1]);
            for (std::size_t i = 1; i < l.size(); ++i) {
                out.push_back(l[i] + l[0]);
            }
            break;
    }
    return PuiseuxCharacteristic::from_exponents(std::move(out));
}

// PC(L(W)) from PC(W), for the case that PC(W) selects.
inline PuiseuxCharacteristic pc_of_lift(const PuiseuxCharacteristic &pc)
{
    const auto c = classify_case(pc);
    const auto &l = pc.exponents();
    std::vector<exponent_t> out;
    if (c.kind == Case::A) {
        out.push_back(l[0]);
        for (std::size_t i = 1; i < l.size(); ++i) {
            out.push_back(l[i] - l[0]);
        }
    } else {
        const auto d = l[1] - l[0];
        out.push_back(d);
        if (c.kind == Case::C) {
            out.push_back(l[0]);
        }
        for (std::size_t i = 2; i < l.size(); ++i) {
            out.push_back(l[i] - d);
        }
    }
    return PuiseuxCharacteristic::from_exponents(std::move(out));
}

// PC(L^j(W)) for j = 0..len(W), computed from the back of the lift chain.
inline std::vector<PuiseuxCharacteristic> pc_chain(const RvtWord &w)
{
    std::vector<RvtWord> words{w};
    while (!words.back().empty()) {
        words.push_back(lift_word(words.back()));
    }
    std::vector<PuiseuxCharacteristic> pcs(words.size());
    for (std::size_t j = words.size(); j-- > 0;) {
        const auto c = word_case(words[j]);
        pcs[j] = c.kind == Case::none ? PuiseuxCharacteristic::trivial() : pc_from_lift(pcs[j + 1], c);
    }
    return pcs;
}

// Front-end recursion, one symbol per step.
inline PuiseuxCharacteristic pc_from_word_front(const RvtWord &w)
{
    return pc_chain(w).front();
}

struct EPair {
    exponent_t a = 1;
    exponent_t b = 2;

    friend bool operator==(const EPair &, const EPair &) = default;
};

inline std::string to_string(const EPair &e)
{
    return "[" + std::to_string(e.a) + ";" + std::to_string(e.b) + "]";
}

// E on strings R^rho Q with Q entirely critical:
// E() = [1;2], E_T = E_R: [a;b] -> [a;a+b], E_V: [a;b] -> [b;a+b].
inline EPair e_value(std::string_view s)
{
    bool seen_critical = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c != 'R' && c != 'V' && c != 'T') {
            throw error(errc::malformed_string, std::string("symbol '") + c + "' is not R, V or T", i);
        }
        if (c == 'R' && seen_critical) {
            throw error(errc::malformed_string, "R after a critical symbol in '" + std::string(s) + "'", i);
        }
        seen_critical = seen_critical || c != 'R';
    }
    EPair e;
    for (std::size_t i = s.size(); i-- > 0;) {
        if (s[i] == 'V') {
            e = {e.b, e.a + e.b};
        } else {
            e = {e.a, e.a + e.b};
        }
    }
    return e;
}

// Back-end recursion over the blocks P R^rho Q.
inline PuiseuxCharacteristic pc_from_word_back(const RvtWord &w)
{
    const auto n = normalize(w);
    if (n.empty()) {
        return PuiseuxCharacteristic::trivial();
    }
    const auto d = decompose(n);
    const auto e = e_value(std::string(d.rho, 'R') + d.tail);
    if (d.prefix.empty()) {
        return PuiseuxCharacteristic::from_exponents({e.a, e.b - e.a});
    }
    const auto head = pc_from_word_back(d.prefix);
    std::vector<exponent_t> out;
    for (auto l : head.exponents()) {
        out.push_back(e.a * l);
    }
    out.push_back(out.back() + e.b - 2 * e.a);
    return PuiseuxCharacteristic::from_exponents(std::move(out));
}

// Euc(a, b) over {V, T}; Euc(1,2) is empty.
inline std::string euclid(exponent_t a, exponent_t b)
{
    if (a < 1 || b <= a) {
        throw error(errc::bad_order, "Euc needs 0 < a < b, got (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (std::gcd(a, b) != 1) {
        throw error(errc::not_coprime, "Euc needs coprime arguments, got (" + std::to_string(a) + ","
                                           + std::to_string(b) + ")");
    }
    std::string out;
    while (!(a == 1 && b == 2)) {
        if (b < 2 * a) {
            out += 'V';
            std::tie(a, b) = std::pair{b - a, a};
        } else {
            out += 'T';
            b -= a;
        }
    }
    return out;
}

// CW: characteristic to critical word (empty for [1;]).
inline RvtWord word_from_pc(const PuiseuxCharacteristic &pc)
{
    PuiseuxCharacteristic::validate(pc.exponents());
    const auto &l = pc.exponents();
    if (pc.is_trivial()) {
        return {};
    }
    if (l.size() == 2) {
        auto e = euclid(l[0], l[1]);
        for (std::size_t i = 0; i < e.size() && e[i] == 'T'; ++i) {
            e[i] = 'R';
        }
        return unchecked_word("R" + e);
    }
    const auto k = l.size() - 2;
    exponent_t a = 0;
    for (std::size_t i = 0; i <= k; ++i) {
        a = std::gcd(a, l[i]);
    }
    const auto d = l[k + 1] - l[k];
    const auto s = d / a + 1;
    const auto b = d % a + a;
    std::vector<exponent_t> head;
    for (std::size_t i = 0; i <= k; ++i) {
        head.push_back(l[i] / a);
    }
    const auto prefix = word_from_pc(PuiseuxCharacteristic::from_exponents(std::move(head)));
    return unchecked_word(prefix.str() + std::string(static_cast<std::size_t>(s), 'R') + euclid(a, b));
}

// Reverses the front-end recursion by repeatedly classifying and peeling
// cases. Case B emits the R that follows its VT^tau block.
inline RvtWord word_from_pc_front_inverse(const PuiseuxCharacteristic &pc)
{
    PuiseuxCharacteristic::validate(pc.exponents());
    if (pc.is_trivial()) {
        return {};
    }
    const auto c = classify_case(pc);
    auto lifted = word_from_pc_front_inverse(pc_of_lift(pc)).str();
    if (c.kind == Case::A) {
        return unchecked_word("R" + lifted);
    }
    if (lifted.size() < c.tau + 2) {
        lifted.resize(c.tau + 2, 'R');
    }
    return unchecked_word("RV" + std::string(c.tau, 'T') + lifted.substr(c.tau + 1));
}

inline bool is_restricted(const PuiseuxCharacteristic &pc)
{
    return pc.is_trivial() || pc[1] > 2 * pc[0];
}

// Replaces lambda_0 by lambda_1 mod lambda_0 and drops exponents that become
// inessential; reports remainders that do not give a restricted
// characteristic.
inline PuiseuxCharacteristic restrict_pc(const PuiseuxCharacteristic &pc)
{
    if (is_restricted(pc)) {
        return pc;
    }
    auto l = pc.exponents();
    l[0] = l[1] % l[0];
    try {
        auto out = canonicalize_exponents(l);
        if (!is_restricted(out)) {
            throw error(errc::remainder_invalid, to_string(out) + " is not restricted");
        }
        return out;
    } catch (const error &e) {
        if (e.code() == errc::remainder_invalid) {
            throw;
        }
        throw error(errc::remainder_invalid, "remainder " + std::to_string(l[0]) + " of " + to_string(pc) + ": " + e.what());
    }
}

} // namespace goursat

#endif
