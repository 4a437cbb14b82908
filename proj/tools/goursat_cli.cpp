// goursat: invariants of RVT code words, Puiseux characteristics and plane
// curve germs from the command line.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <goursat/goursat.hpp>

namespace
{

using namespace goursat;

enum class Format { text, json, dot };

struct Options {
    Format format = Format::text;
    std::size_t precision = default_precision;
    std::size_t max_level = default_max_level;
};

// Exit status for a result that ran but found inconsistencies.
constexpr int exit_mismatch = 2;

template <class T>
std::string join(const std::vector<T> &v, const char *sep = ",")
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? sep : "") << v[i];
    }
    return os.str();
}

std::string or_empty(const std::string &s)
{
    return s.empty() ? "(empty)" : s;
}

// First few terms, then the order of the truncation.
std::string leading_terms(const TruncatedSeries &s, std::size_t terms = 4)
{
    const auto support = s.support();
    if (support.size() <= terms) {
        return to_string(s, true);
    }
    std::vector<std::pair<std::size_t, Rational>> head;
    for (std::size_t i = 0; i < terms; ++i) {
        head.emplace_back(support[i], s.coefficient(support[i]));
    }
    return to_string(TruncatedSeries::from_terms(head, s.precision())) + " + ... + O(t^" + std::to_string(s.precision())
           + ")";
}

std::string vo_text(const VerticalOrdersVector &vo)
{
    if (vo.values.empty()) {
        return "()";
    }
    return "VO_" + std::to_string(vo.first_level) + "..VO_" + std::to_string(vo.first_level + vo.values.size() - 1)
           + " = (" + join(vo.values) + ")";
}

std::string edges_text(const ProximityDiagram &d)
{
    std::vector<std::string> e;
    for (const auto &[from, to] : d.edges) {
        e.push_back(std::to_string(from) + "->" + std::to_string(to));
    }
    return join(e, " ");
}

void print_panel(std::ostream &os, const InvariantPanel &p)
{
    os << "word                " << or_empty(p.word.str()) << "\n"
       << "goursat word        " << or_empty(p.goursat.str()) << "\n"
       << "puiseux             " << to_string(p.pc) << "\n"
       << "restricted puiseux  "
       << (p.restricted_pc ? to_string(*p.restricted_pc) : "unavailable: " + p.restricted_pc_error) << "\n"
       << "multiplicities      " << join(p.multiplicities.values) << "\n"
       << "vertical orders     " << vo_text(p.vertical_orders) << "\n"
       << "restricted orders   " << vo_text(p.restricted_vertical_orders) << "\n"
       << "proximity           " << edges_text(p.proximity) << "\n";
}

void emit_panel(const Options &o, const InvariantPanel &p)
{
    switch (o.format) {
        case Format::json: std::cout << to_json(p).dump(2) << "\n"; break;
        case Format::dot: std::cout << to_dot(p.proximity); break;
        case Format::text: print_panel(std::cout, p); break;
    }
}

void require_not_dot(const Options &o, const char *what)
{
    if (o.format == Format::dot) {
        throw error(errc::parse_error, std::string("--format dot is not available for ") + what);
    }
}

int cmd_word(const Options &o, const std::string &text)
{
    emit_panel(o, invariant_panel(parse_word(text)));
    return 0;
}

int cmd_pc(const Options &o, const std::string &text)
{
    const auto pc = parse_pc(text);
    const auto panel = invariant_panel(pc);
    if (o.format == Format::text) {
        std::cout << "front-end inverse   " << or_empty(word_from_pc_front_inverse(pc).str()) << "\n";
    }
    emit_panel(o, panel);
    return 0;
}

int cmd_proximity(const Options &o, const std::string &text)
{
    const auto d = proximity_diagram(parse_word(text));
    switch (o.format) {
        case Format::json: std::cout << to_json(d).dump(2) << "\n"; break;
        case Format::dot: std::cout << to_dot(d); break;
        case Format::text:
            for (const auto &v : d.vertices) {
                std::cout << v.index << ":" << v.symbol << ":" << v.multiplicity;
                const auto prox = d.proximate_to(v.index);
                if (!prox.empty()) {
                    std::cout << "  <- " << join(prox);
                }
                std::cout << "\n";
            }
            if (const auto bad = proximity_sum_violation(d)) {
                std::cout << "proximity sum fails at vertex " << *bad << "\n";
                return exit_mismatch;
            }
            break;
    }
    return 0;
}

int cmd_lift_preimages(const Options &o, const std::string &text)
{
    require_not_dot(o, "lift-preimages");
    const auto w = parse_word(text);
    const auto pre = lift_preimages(w);
    if (o.format == Format::json) {
        json arr = json::array();
        for (const auto &u : pre) {
            arr.push_back({{"word", u.str()}, {"pc", to_string(pc_from_word_front(u))}});
        }
        std::cout << json{{"word", w.str()}, {"pc", to_string(pc_from_word_front(w))}, {"preimages", arr}}.dump(2)
                  << "\n";
        return 0;
    }
    std::cout << or_empty(w.str()) << "  " << to_string(pc_from_word_front(w)) << "\n";
    for (const auto &u : pre) {
        std::cout << "  " << u.str() << "  " << to_string(pc_from_word_front(u)) << "\n";
    }
    return 0;
}

struct CurveArgs {
    std::string text;
    std::optional<std::size_t> level;
    std::string engine = "nash";
};

void print_nash(const LiftTrace &t)
{
    std::cout << "regularization      " << t.regularization_level << "\n"
              << "word                " << or_empty(t.full_word.str()) << "\n"
              << "chart path          " << or_empty(t.chart_path.str()) << "\n"
              << "orders              " << join(t.order_profile) << "\n"
              << "multiplicities      " << join(t.multiplicities) << "\n";
    for (const auto &s : t.steps) {
        std::cout << "  " << s.level << " " << s.chart << " " << s.symbol << "  " << to_string(s.new_name) << " = "
                  << leading_terms(s.new_coord) << "\n";
    }
}

void print_blowup(const BlowupTrace &t)
{
    std::cout << "regularity          " << t.regularity_level << " (nonsingular from " << t.nonsingular_level << ")\n"
              << "word                " << or_empty(t.word.str()) << "\n"
              << "orders              " << join(t.order_profile) << "\n"
              << "multiplicities      " << join(t.multiplicities) << "\n";
    for (const auto &s : t.steps) {
        std::cout << "  " << s.level << " " << s.symbol << "  " << s.formula << " = " << leading_terms(s.state.v.series)
                  << "\n";
    }
}

int cmd_curve(const Options &o, const CurveArgs &a)
{
    const auto parsed = parse_curve(a.text, o.precision);
    const auto &c = parsed.germ;
    const auto k = a.level.value_or(parsed.level);
    const bool nash = a.engine != "blowup";
    const bool blowup = a.engine != "nash";

    std::optional<CrossCheckReport> report;
    std::optional<LiftTrace> lift;
    std::optional<BlowupTrace> blow;
    if (nash && blowup) {
        report = cross_check(c, o.max_level);
        lift = report->nash;
        blow = report->blowup;
    } else if (nash) {
        lift = lift_to_regularization(c, o.max_level);
    } else {
        blow = blowup_resolve(c, o.max_level);
    }
    const auto &full = lift ? lift->full_word : blow->word;
    const auto curve_w = lift ? curve_word(c, k, o.max_level) : split_at_level(full, std::min(k, full.size())).curve_word;
    const auto panel = invariant_panel(curve_w);

    if (o.format == Format::dot) {
        std::cout << to_dot(panel.proximity);
    } else if (o.format == Format::json) {
        json j{{"input", a.text},
               {"level", k},
               {"base_point", rationals_to_json({c.x0, c.y0})},
               {"curve_word", curve_w.str()}};
        if (lift) {
            const auto dp = curvilinear_data_point(c, k);
            j["point_word"] = point_word_at_level(c, k).str();
            j["data_point"] = to_json(dp);
            j["chart_equations"] = chart_equations(dp.path);
            j["vertical_orders_from_curve"] = to_json(vertical_orders_from_curve(c, k, o.max_level));
            j["nash"] = to_json(*lift);
        }
        if (blow) {
            j["blowup"] = to_json(*blow);
        }
        if (report) {
            j["cross_check"] = {{"agree", report->agree}, {"mismatches", report->mismatches}};
        }
        j["panel"] = to_json(panel);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "curve               " << to_string(c.x) << ", " << to_string(c.y) << "\n"
                  << "base point          (" << to_string(c.x0) << ", " << to_string(c.y0) << ")\n";
        if (lift) {
            std::cout << "[nash]\n";
            print_nash(*lift);
            if (k > 0) {
                const auto dp = curvilinear_data_point(c, k);
                std::cout << "level " << k << "\n"
                          << "  chart             " << dp.path.str() << "\n"
                          << "  point word        " << point_word_at_level(c, k).str() << "\n"
                          << "  data point        " << to_string(dp) << "\n"
                          << "  equations         " << join(chart_equations(dp.path), "; ") << "\n";
            }
            std::cout << "vertical orders     " << vo_text(vertical_orders_from_curve(c, k, o.max_level)) << "\n";
        }
        if (blow) {
            std::cout << "[blowup]\n";
            print_blowup(*blow);
        }
        std::cout << "[germ at level " << k << "]\n";
        print_panel(std::cout, panel);
        if (report) {
            std::cout << "cross-check         " << (report->agree ? "agree" : "MISMATCH") << "\n";
            for (const auto &m : report->mismatches) {
                std::cout << "  " << m << "\n";
            }
        }
    }
    return report && !report->agree ? exit_mismatch : 0;
}

const std::vector<std::string> check_names{"pc-agreement",  "cw-round-trip",   "lift-duality", "proximity-sum",
                                           "vertical-orders", "ro-invariance", "panel"};

SuiteResult run_word_check(const std::string &name, std::size_t max_len)
{
    if (name == "pc-agreement") return check_dual_recursion(max_len);
    if (name == "cw-round-trip") return check_cw_round_trip(max_len);
    if (name == "lift-duality") return check_lift_duality(max_len);
    if (name == "proximity-sum") return check_proximity_sums(max_len);
    if (name == "vertical-orders") return check_vertical_orders(max_len);
    if (name == "ro-invariance") return check_ro_invariance(max_len);
    return check_panels(max_len);
}

json suite_json(const SuiteResult &r)
{
    return {{"suite", r.name},
            {"checked", r.checked},
            {"skipped", r.skipped},
            {"failures", r.failure_count},
            {"examples", r.failures},
            {"passed", r.passed()}};
}

void print_suite(const SuiteResult &r)
{
    std::cout << (r.passed() ? "PASS  " : "FAIL  ") << r.name << ": " << r.checked << " checked";
    if (r.skipped) {
        std::cout << ", " << r.skipped << " skipped";
    }
    std::cout << ", " << r.failure_count << " failures\n";
    for (const auto &f : r.failures) {
        std::cout << "      " << f << "\n";
    }
}

int report_suites(const Options &o, const std::vector<SuiteResult> &suites, json extra = json::object())
{
    bool ok = true;
    json arr = json::array();
    for (const auto &r : suites) {
        ok = ok && r.passed();
        arr.push_back(suite_json(r));
    }
    if (o.format == Format::json) {
        extra["checks"] = arr;
        extra["passed"] = ok;
        std::cout << extra.dump(2) << "\n";
    } else {
        for (const auto &r : suites) {
            print_suite(r);
        }
    }
    return ok ? 0 : exit_mismatch;
}

int cmd_enumerate(const Options &o, std::size_t max_len, std::vector<std::string> checks, bool quiet)
{
    require_not_dot(o, "enumerate");
    if (std::find(checks.begin(), checks.end(), "all") != checks.end()) {
        checks = check_names;
    }
    const auto words = words_up_to(max_len);
    std::vector<unsigned long long> by_length;
    for (std::size_t n = 1; n <= max_len; ++n) {
        by_length.push_back(count_words(n));
    }
    json doc = json::object();
    if (o.format == Format::json) {
        doc["max_len"] = max_len;
        doc["count"] = words.size();
        doc["count_by_length"] = by_length;
        if (!quiet) {
            json panels = json::array();
            for (const auto &w : words) {
                panels.push_back(to_json(invariant_panel(w)));
            }
            doc["panels"] = panels;
        }
    } else {
        if (!quiet) {
            for (const auto &w : words) {
                const auto p = invariant_panel(w);
                std::cout << w.str() << "  " << to_string(p.pc) << "  " << join(p.multiplicities.values) << "\n";
            }
        }
        std::cout << words.size() << " words of length 1.." << max_len << " (by length: " << join(by_length, ", ")
                  << ")\n";
    }
    std::vector<SuiteResult> suites;
    for (const auto &name : checks) {
        suites.push_back(run_word_check(name, max_len));
    }
    return report_suites(o, suites, doc);
}

int cmd_check(const Options &o, std::size_t max_len, std::size_t corpus_size, std::uint64_t seed)
{
    require_not_dot(o, "check");
    std::vector<SuiteResult> suites;
    for (const auto &name : check_names) {
        suites.push_back(run_word_check(name, max_len));
    }
    const auto corpus = generate_corpus(corpus_size, seed);
    suites.push_back(check_engine_equivalence(corpus, o.max_level));
    suites.push_back(check_direct_puiseux(corpus, o.max_level));
    return report_suites(o, suites);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Invariants of RVT code words, Puiseux characteristics and plane curve germs"};
    app.require_subcommand(1);
    Options o;
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->envname("GOURSAT_FORMAT")
        ->capture_default_str();
    app.add_option("--precision", o.precision, "Stored terms per series")
        ->check(CLI::Range(2, 1 << 16))
        ->envname("GOURSAT_PRECISION")
        ->capture_default_str();
    app.add_option("--max-level", o.max_level, "Lift/blowup budget before giving up")
        ->check(CLI::Range(1, 1 << 12))
        ->envname("GOURSAT_MAX_LEVEL")
        ->capture_default_str();

    std::string input;
    auto *word = app.add_subcommand("word", "Invariant panel of an RVT word");
    word->add_option("word", input, "RVT word, e.g. RVTVV (empty string allowed)")->required();

    auto *pc = app.add_subcommand("pc", "Word and panel of a Puiseux characteristic");
    pc->add_option("pc", input, "Characteristic, e.g. [2;7]")->required();

    CurveArgs curve_args;
    auto *curve = app.add_subcommand("curve", "Lift a parameterized curve germ");
    curve->add_option("curve", curve_args.text, "\"x=<series>, y=<series>\" or \"@level k, path=.., r=.., n=..\"")
        ->required();
    curve->add_option("--level,-k", curve_args.level, "Tower level of the germ and of the reported point");
    curve->add_option("--engine", curve_args.engine, "Engine")
        ->check(CLI::IsMember({"nash", "blowup", "both"}))
        ->capture_default_str();

    auto *pre = app.add_subcommand("lift-preimages", "Words whose lifted word is the given word");
    pre->add_option("word", input, "RVT word")->required();

    auto *prox = app.add_subcommand("proximity", "Proximity diagram of a word");
    prox->add_option("word", input, "RVT word")->required();

    std::size_t max_len = 4;
    std::vector<std::string> checks;
    bool quiet = false;
    auto *enumerate = app.add_subcommand("enumerate", "All valid words up to a length");
    enumerate->add_option("--max-len", max_len, "Longest word")->check(CLI::Range(1, 16))->capture_default_str();
    std::vector<std::string> check_choices = check_names;
    check_choices.push_back("all");
    enumerate->add_option("--check", checks, "Consistency suites to run")->check(CLI::IsMember(check_choices));
    enumerate->add_flag("--quiet,-q", quiet, "Only print counts and check results");

    std::size_t check_len = 12, corpus_size = 300;
    std::uint64_t seed = 20261016;
    auto *check = app.add_subcommand("check", "Run every consistency suite and the curve corpus");
    check->add_option("--max-len", check_len, "Longest word")->check(CLI::Range(1, 16))->capture_default_str();
    check->add_option("--corpus", corpus_size, "Number of generated curves")->capture_default_str();
    check->add_option("--seed", seed, "Corpus seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    o.format = format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text;

    try {
        if (*word) return cmd_word(o, input);
        if (*pc) return cmd_pc(o, input);
        if (*curve) return cmd_curve(o, curve_args);
        if (*pre) return cmd_lift_preimages(o, input);
        if (*prox) return cmd_proximity(o, input);
        if (*enumerate) return cmd_enumerate(o, max_len, checks, quiet);
        if (*check) return cmd_check(o, check_len, corpus_size, seed);
    } catch (const goursat::error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return goursat::is_mismatch(e.code()) ? exit_mismatch : 1;
    }
    return 1;
}
