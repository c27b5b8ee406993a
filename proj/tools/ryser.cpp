// Command-line surface: exact solving, instance construction, certificate
// verification, the lower-bound table, the extremal search, and the
// random-subset experiment. Exit codes: 0 success or all checks pass,
// 1 verification failure, 2 usage, parse, domain, or capacity problem.
#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ryser/budget.hpp"
#include "ryser/certificates.hpp"
#include "ryser/constructions.hpp"
#include "ryser/corpus.hpp"
#include "ryser/errors.hpp"
#include "ryser/fractional.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/rational.hpp"
#include "ryser/report.hpp"
#include "ryser/solvers.hpp"

using namespace ryser;

namespace {

// ---------------------------------------------------------------------------
// Input plumbing

// Exactly one of the two shapes is active; only "pg" produces a general
// hypergraph.
struct LoadedInput {
    bool general = false;
    PartiteHypergraph part;
    GeneralHypergraph gen;
};

int to_int(const std::string& s) {
    int value = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || p != e) throw ParseError("bad integer '" + s + "'");
    return value;
}

void expect_params(const std::string& name, const std::vector<std::string>& params, size_t want) {
    if (params.size() != want)
        throw ParseError("construction " + name + " expects " + std::to_string(want) +
                         " parameter(s), got " + std::to_string(params.size()));
}

LoadedInput build_construction(const std::string& name, const std::vector<std::string>& params,
                               std::uint64_t seed) {
    LoadedInput in;
    if (name == "pg") {
        expect_params(name, params, 1);
        in.general = true;
        in.gen = projective_plane(to_int(params[0]));
        return in;
    }
    if (name == "tpp") {
        expect_params(name, params, 1);
        in.part = truncated_projective_plane(to_int(params[0]));
    } else if (name == "oval") {
        expect_params(name, params, 1);
        in.part = oval_secant_subplane(to_int(params[0]));
    } else if (name == "onefact") {
        expect_params(name, params, 1);
        in.part = one_factorization_instance(to_int(params[0]));
    } else if (name == "f7") {
        expect_params(name, params, 0);
        in.part = example_f7();
    } else if (name == "f6") {
        expect_params(name, params, 0);
        in.part = example_f6();
    } else if (name == "f6linear") {
        expect_params(name, params, 0);
        in.part = example_f6_linear();
    } else if (name == "biased") {
        expect_params(name, params, 1);
        in.part = biased_counterexample(to_int(params[0]));
    } else if (name == "expside") {
        expect_params(name, params, 1);
        in.part = exponential_counterexample(to_int(params[0]));
    } else if (name == "random-intersecting") {
        expect_params(name, params, 3);
        in.part = random_intersecting(to_int(params[0]), to_int(params[1]), to_int(params[2]), seed);
    } else if (name == "random-subset") {
        expect_params(name, params, 2);
        in.part = random_line_subset(truncated_projective_plane(to_int(params[0])),
                                     to_int(params[1]), seed);
    } else {
        throw ParseError("unknown construction '" + name + "'");
    }
    return in;
}

LoadedInput load_file(const std::string& path, const std::string& format) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << stream.rdbuf();
    std::string text = buf.str();

    std::string fmt = format;
    if (fmt.empty()) {
        auto ends_with = [&path](const char* suffix) {
            std::string s(suffix);
            return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
        };
        if (ends_with(".rhg")) fmt = "rhg";
        else if (ends_with(".dig")) fmt = "dig";
        else throw ParseError("cannot infer the format of " + path + "; pass --format rhg|dig");
    }

    LoadedInput in;
    if (fmt == "rhg") {
        in.part = parse_table_format(text);
    } else {
        // Digit tokens all have the same width; the first one fixes r.
        std::istringstream toks(text);
        std::string first;
        if (!(toks >> first)) throw ParseError("no tokens in " + path);
        in.part = parse_digit_format(text, static_cast<int>(first.size()));
    }
    return in;
}

LoadedInput resolve_input(const std::string& path, const std::vector<std::string>& construct,
                          const std::string& format, std::uint64_t seed) {
    if (!construct.empty() && !path.empty())
        throw ParseError("give either an input file or --construct, not both");
    if (construct.empty() && path.empty())
        throw ParseError("no input: give a file path or --construct <name> [params...]");
    if (!construct.empty())
        return build_construction(construct[0],
                                  {construct.begin() + 1, construct.end()}, seed);
    return load_file(path, format);
}

// ---------------------------------------------------------------------------
// Witness rendering

std::string vertex_label(VertexRef v) {
    if (v.side == kGeneralSide) return "v" + std::to_string(v.index + 1);
    return "(" + std::to_string(v.side + 1) + "," + std::to_string(v.index + 1) + ")";
}

std::string cover_text(const std::set<VertexRef>& vertices) {
    if (vertices.empty()) return "-";
    std::string out;
    for (VertexRef v : vertices) {
        if (!out.empty()) out += ' ';
        out += vertex_label(v);
    }
    return out;
}

std::string matching_text(const std::set<int>& edges) {
    if (edges.empty()) return "-";
    std::string out;
    for (int e : edges) {
        if (!out.empty()) out += ' ';
        out += "e" + std::to_string(e + 1);
    }
    return out;
}

std::string weights_text(const std::map<VertexRef, Rational>& weights) {
    std::string out;
    for (const auto& [v, w] : weights) {
        if (w.sign() == 0) continue;
        if (!out.empty()) out += ' ';
        out += vertex_label(v) + "=" + w.str();
    }
    return out.empty() ? "-" : out;
}

std::string alpha_text(const EdgeWeighting& w) {
    std::string out;
    for (const auto& [e, a] : w.alpha) {
        if (a.sign() == 0) continue;
        if (!out.empty()) out += ' ';
        out += "e" + std::to_string(e + 1) + "=" + a.str();
    }
    return out.empty() ? "-" : out;
}

// General serialization used by `construct pg`: a "general <n>" header, then
// one line of ascending 1-based vertex indices per edge.
std::string serialize_general(const GeneralHypergraph& h) {
    std::ostringstream out;
    out << "general " << h.vertex_count << '\n';
    for (const auto& e : h.edges) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i] + 1;
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// solve

int run_solve(const std::string& metric, const LoadedInput& in, int side_opt) {
    Budget budget = Budget::from_env();

    auto need_partite = [&]() -> const PartiteHypergraph& {
        if (in.general) throw DomainError("metric " + metric + " needs a partite input");
        return in.part;
    };
    auto pick_side = [&](const PartiteHypergraph& h) {
        int side = side_opt == 0 ? h.r : side_opt;
        if (side < 1 || side > h.r)
            throw DomainError("side " + std::to_string(side) + " outside 1.." + std::to_string(h.r));
        return side - 1;
    };

    if (metric == "tau") {
        TauResult res = in.general ? tau(in.gen, budget) : tau(in.part, budget);
        std::cout << "tau = " << res.value << '\n';
        std::cout << "cover = " << cover_text(res.cover.vertices) << '\n';
    } else if (metric == "nu") {
        NuResult res = in.general ? nu(in.gen, budget) : nu(in.part, budget);
        std::cout << "nu = " << res.value << '\n';
        std::cout << "matching = " << matching_text(res.matching.edge_indices) << '\n';
    } else if (metric == "taustar") {
        TauStarResult res = in.general ? tau_star(in.gen) : tau_star(in.part);
        std::cout << "tau* = " << res.value.str() << '\n';
        std::cout << "weights = " << weights_text(res.cover.weights) << '\n';
    } else if (metric == "nustar") {
        NuStarResult res = in.general ? nu_star(in.gen) : nu_star(in.part);
        std::cout << "nu* = " << res.value.str() << '\n';
        std::cout << "alpha = " << alpha_text(res.weighting) << '\n';
    } else if (metric == "taus") {
        TauSResult res = in.general ? tau_s(in.gen) : tau_s(in.part);
        std::cout << "tau_s = " << res.value.str() << '\n';
        std::cout << "alpha = " << alpha_text(res.weighting) << '\n';
    } else if (metric == "greedy") {
        Cover res = in.general ? greedy_cover(in.gen) : greedy_cover(in.part);
        std::cout << "greedy = " << res.vertices.size() << '\n';
        std::cout << "cover = " << cover_text(res.vertices) << '\n';
    } else if (metric == "biased") {
        const PartiteHypergraph& h = need_partite();
        WeightedCoverResult res = min_biased_cover(h, pick_side(h), budget);
        std::cout << "biased = " << res.value.str() << '\n';
        std::cout << "cover = " << cover_text(res.cover.vertices) << '\n';
    } else if (metric == "avoiding") {
        const PartiteHypergraph& h = need_partite();
        std::optional<TauResult> res = min_cover_avoiding(h, pick_side(h), budget);
        if (!res) {
            std::cout << "value = none\n";
        } else {
            std::cout << "avoiding = " << res->value << '\n';
            std::cout << "cover = " << cover_text(res->cover.vertices) << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckLine {
    std::string key;
    bool pass = false;
    // Full report text, shown in human mode when the check fails.
    std::string detail;
};

void add_flag(std::vector<CheckLine>& out, const std::string& key, bool pass,
              const std::string& detail = "") {
    out.push_back({key, pass, detail});
}

void add_report(std::vector<CheckLine>& out, const std::string& key,
                const CertificateReport& rep) {
    out.push_back({key, rep.overall(), rep.to_text()});
}

void suite_paper_examples(std::vector<CheckLine>& out) {
    Budget budget = Budget::from_env();
    struct Row {
        const char* name;
        PartiteHypergraph h;
        int expected_tau;
        bool linear;
    };
    const Row rows[] = {{"f7", example_f7(), 6, false},
                        {"f6", example_f6(), 5, false},
                        {"f6linear", example_f6_linear(), 5, true}};
    for (const Row& row : rows) {
        std::string base = std::string("paper-examples/") + row.name + "/";
        TauResult t = tau(row.h, budget);
        add_flag(out, base + "tau",
                 t.value == row.expected_tau && is_valid_cover(row.h, t.cover),
                 "tau = " + std::to_string(t.value));
        add_flag(out, base + "nu", nu(row.h, budget).value == 1);
        add_flag(out, base + "intersecting", is_intersecting(row.h));
        add_flag(out, base + (row.linear ? "linear" : "not-linear"),
                 is_linear(row.h) == row.linear);
    }
    add_flag(out, "paper-examples/f7/no-5-cover",
             !find_cover_leq(example_f7(), 5, budget).has_value());
}

void suite_lemmas(std::vector<CheckLine>& out) {
    for (const CorpusEntry& e : verification_corpus()) {
        std::string base = "lemmas/" + e.name + "/";
        if (max_degree(e.hypergraph) <= 4)
            add_report(out, base + "degree-count", check_degree_count_bounds(e.hypergraph));
        add_report(out, base + "side-cover", check_side_cover_bound(e.hypergraph));
        add_report(out, base + "min-degree", check_min_degree(e.hypergraph));
        if (e.name.rfind("onefact-", 0) == 0)
            add_report(out, base + "structure", check_one_factorization_structure(e.hypergraph));
    }
}

void suite_fractional(std::vector<CheckLine>& out) {
    Budget budget = Budget::from_env();
    for (const CorpusEntry& e : verification_corpus()) {
        const PartiteHypergraph& h = e.hypergraph;
        std::string base = "fractional/" + e.name + "/";

        Rational ts = tau_star(h).value;
        Rational ns = nu_star(h).value;
        add_flag(out, base + "duality", ts == ns, "tau* = " + ts.str() + ", nu* = " + ns.str());

        Rational tv(tau(h, budget).value);
        Rational nv(nu(h, budget).value);
        add_flag(out, base + "sandwich", nv <= ns && ns <= ts && ts <= tv,
                 "nu = " + nv.str() + " nu* = " + ns.str() + " tau* = " + ts.str() +
                     " tau = " + tv.str());

        add_report(out, base + "side-support", check_cover_side_support(h));

        DropWitness drop = lovasz_frac_witness(h);
        add_flag(out, base + "frac-drop", drop.before - drop.after >= Rational(1),
                 "drop = " + (drop.before - drop.after).str());

        bool witness_applicable = false;
        bool witness_ok = true;
        for (int s = 0; s < h.r; ++s) {
            if (h.side_sizes[s] > 6) continue;
            witness_applicable = true;
            try {
                FractionalStrongWitness w = fractional_strong_witness(h, s);
                (void)w;
            } catch (const std::exception&) {
                witness_ok = false;
            }
        }
        if (witness_applicable) add_flag(out, base + "strong-witness", witness_ok);

        add_report(out, base + "furedi", furedi_check(h, 0));
        add_flag(out, base + "tau-s", tau_s(h).value == Rational(1),
                 "tau_s = " + tau_s(h).value.str());
    }
    Rational fano = tau_star(projective_plane(2)).value;
    add_flag(out, "fractional/fano/tau-star", fano == Rational(7, 3), "tau* = " + fano.str());
}

void suite_counterexamples(std::vector<CheckLine>& out) {
    Budget budget = Budget::from_env();
    for (int r : {4, 5}) {
        PartiteHypergraph h = biased_counterexample(r);
        std::string base = "counterexamples/biased-" + std::to_string(r) + "/";
        add_flag(out, base + "intersecting", is_intersecting(h));

        bool none_covers = true;
        for (int i = 0; i < h.side_sizes[h.r - 1]; ++i) {
            Cover c;
            c.vertices = {{h.r - 1, i}};
            c.certified_for = fingerprint(h);
            if (is_valid_cover(h, c)) none_covers = false;
        }
        add_flag(out, base + "no-single-vertex-cover-on-last-side", none_covers);

        std::optional<TauResult> avoid = min_cover_avoiding(h, h.r - 1, budget);
        add_flag(out, base + "avoiding-cover-size",
                 avoid.has_value() && avoid->value == 2 * r - 4,
                 avoid ? "avoiding = " + std::to_string(avoid->value) : "avoiding = none");

        Rational bias = min_biased_cover(h, h.r - 1, budget).value;
        add_flag(out, base + "bias-exceeds-matching", bias > Rational(1),
                 "biased = " + bias.str());
    }
    for (int r : {4, 5}) {
        PartiteHypergraph h = exponential_counterexample(r);
        std::string base = "counterexamples/expside-" + std::to_string(r) + "/";
        add_flag(out, base + "intersecting", is_intersecting(h));

        bool never_covers = true;
        for (const auto& edge : h.edges) {
            Cover c;
            c.certified_for = fingerprint(h);
            for (int s = 1; s < h.r; ++s) c.vertices.insert({s, edge[s]});
            if (is_valid_cover(h, c)) never_covers = false;
        }
        add_flag(out, base + "edge-minus-v1-never-covers", never_covers);
    }
}

int run_verify(const std::string& suite, bool machine) {
    std::vector<CheckLine> lines;
    if (suite == "paper-examples" || suite == "all") suite_paper_examples(lines);
    if (suite == "lemmas" || suite == "all") suite_lemmas(lines);
    if (suite == "fractional" || suite == "all") suite_fractional(lines);
    if (suite == "counterexamples" || suite == "all") suite_counterexamples(lines);

    int failures = 0;
    for (const CheckLine& line : lines) {
        if (!line.pass) ++failures;
        if (machine) {
            std::cout << line.key << " = " << (line.pass ? "PASS" : "FAIL") << '\n';
        } else {
            std::cout << (line.pass ? "ok   " : "FAIL ") << line.key << '\n';
            if (!line.pass && !line.detail.empty()) std::cout << line.detail;
        }
    }
    if (machine) {
        std::cout << "verify = " << (failures == 0 ? "PASS" : "FAIL") << '\n';
    } else {
        std::cout << lines.size() << " checks, " << failures << " failure(s)\n";
    }
    return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bound, search, experiment

int run_bound(int r, bool machine) {
    long total = f_lower_bound(r);
    std::vector<int> summands;
    for (int t = 1; t <= r - 1; ++t) summands.push_back(min_degree_floor(r, t));

    if (machine) {
        std::cout << "summands =";
        for (int s : summands) std::cout << ' ' << s;
        std::cout << '\n' << "lb_f = " << total << '\n';
    } else {
        std::cout << "lb_f(" << r << ") = ";
        for (size_t i = 0; i < summands.size(); ++i)
            std::cout << (i ? " + " : "") << summands[i];
        if (summands.empty()) std::cout << 0;
        std::cout << " = " << total << '\n';
    }
    return 0;
}

std::string witness_tuples(const PartiteHypergraph& h) {
    std::string out;
    for (const auto& edge : h.edges) {
        if (!out.empty()) out += ' ';
        for (int s = 0; s < h.r; ++s) out += (s ? "," : "") + std::to_string(edge[s] + 1);
    }
    return out;
}

int run_search(int r, int m, int t, bool long_running, bool reverse, bool machine) {
    if ((r > 4 || m > 6) && !long_running) {
        std::cerr << "search with r > 4 or m > 6 can take very long; pass --long-running "
                     "to run it anyway\n";
        return 2;
    }
    ExtensionOrder order = reverse ? ExtensionOrder::reverse : ExtensionOrder::forward;
    ExtremalSearchResult res = extremal_search(r, m, t, Budget::from_env(), order);

    if (machine) {
        std::cout << "found = " << (res.found ? "yes" : "no") << '\n';
        std::cout << "classes = " << res.classes_examined << '\n';
        if (res.found) {
            std::cout << "witness_tau = " << res.witness_tau << '\n';
            std::cout << "witness = " << witness_tuples(*res.witness) << '\n';
        }
    } else if (res.found) {
        std::cout << "witness with covering number " << res.witness_tau << " on " << r
                  << " sides (" << res.classes_examined << " classes examined):\n"
                  << serialize_table(*res.witness);
    } else {
        std::cout << "no intersecting instance on " << r << " sides with at most " << m
                  << " distinct edges has covering number >= " << t << " ("
                  << res.classes_examined << " classes examined)\n";
    }
    return 0;
}

int run_experiment(int r, int m, int trials, std::uint64_t seed, bool machine) {
    SubsetTauProbe probe = tpp_subset_tau_probe(r, m, trials, seed, Budget::from_env());
    Rational fraction(probe.hits, probe.trials);
    const char* note = "empirical probe: asymptotic theorem not verifiable at desk scale";

    if (machine) {
        std::cout << "hits = " << probe.hits << '\n';
        std::cout << "trials = " << probe.trials << '\n';
        std::cout << "fraction = " << fraction.str() << '\n';
        std::cout << "note = " << note << '\n';
    } else {
        std::cout << "random-tpp r=" << r << " m=" << m << " trials=" << trials
                  << " seed=" << seed << '\n';
        char dec[32];
        std::snprintf(dec, sizeof dec, "%.4f", static_cast<double>(probe.hits) / probe.trials);
        std::cout << "fraction = " << fraction.str() << " (" << dec << ")\n";
        std::cout << note << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact covers and matchings in r-partite intersecting hypergraphs"};
    app.require_subcommand(1);

    bool machine = false;
    std::string format;
    std::uint64_t seed = 0;

    // solve
    std::string solve_metric;
    std::string solve_path;
    std::vector<std::string> solve_construct;
    int solve_side = 0;
    CLI::App* solve = app.add_subcommand("solve", "compute one quantity of one instance");
    solve->add_option("metric", solve_metric, "tau|nu|taustar|nustar|taus|greedy|biased|avoiding")
        ->required()
        ->check(CLI::IsMember(
            {"tau", "nu", "taustar", "nustar", "taus", "greedy", "biased", "avoiding"}));
    solve->add_option("input", solve_path, "input file (.rhg table or .dig digit tokens)");
    solve->add_option("--construct", solve_construct, "construction name plus parameters")
        ->expected(-1);
    solve->add_option("--format", format, "input format override")
        ->check(CLI::IsMember({"rhg", "dig"}));
    solve->add_option("--seed", seed, "seed for random-* constructions");
    solve->add_option("--side", solve_side, "1-based side for biased/avoiding (default: last)");
    solve->add_flag("--machine", machine, "line-oriented key = value output");

    // construct
    std::string construct_name;
    std::vector<std::string> construct_params;
    CLI::App* construct = app.add_subcommand("construct", "print an instance on standard output");
    construct
        ->add_option("name", construct_name,
                     "pg|tpp|oval|onefact|f7|f6|f6linear|biased|expside|random-intersecting|"
                     "random-subset")
        ->required();
    construct->add_option("params", construct_params, "construction parameters")->expected(-1);
    construct->add_option("--seed", seed, "seed for random-* constructions");

    // verify
    std::string verify_suite;
    CLI::App* verify = app.add_subcommand("verify", "run a certificate suite");
    verify->add_option("suite", verify_suite, "paper-examples|lemmas|fractional|counterexamples|all")
        ->required()
        ->check(CLI::IsMember({"paper-examples", "lemmas", "fractional", "counterexamples", "all"}));
    verify->add_flag("--machine", machine, "one key = value line per check");

    // bound
    int bound_r = 0;
    CLI::App* bound = app.add_subcommand("bound", "lower-bound summands and their total");
    bound->add_option("r", bound_r, "number of sides")->required();
    bound->add_flag("--machine", machine, "line-oriented key = value output");

    // search
    int search_r = 0, search_m = 0, search_t = 0;
    bool search_long = false, search_reverse = false;
    CLI::App* search = app.add_subcommand(
        "search", "exhaust intersecting instances with at most m distinct edges");
    search->add_option("r", search_r, "number of sides")->required();
    search->add_option("m", search_m, "maximum number of distinct edges")->required();
    search->add_option("t", search_t, "target covering number")->required();
    search->add_flag("--long-running", search_long, "allow r > 4 or m > 6");
    search->add_flag("--reverse", search_reverse, "reverse the class extension order");
    search->add_flag("--machine", machine, "line-oriented key = value output");

    // experiment
    std::string experiment_kind;
    int exp_r = 0, exp_m = 0, exp_trials = 200;
    CLI::App* experiment = app.add_subcommand("experiment", "seeded empirical probe");
    experiment->add_option("kind", experiment_kind, "random-tpp")
        ->required()
        ->check(CLI::IsMember({"random-tpp"}));
    experiment->add_option("r", exp_r, "number of sides of the base instance")->required();
    experiment->add_option("m", exp_m, "sampled subset size")->required();
    experiment->add_option("--trials", exp_trials, "number of independent samples");
    experiment->add_option("--seed", seed, "PRNG seed");
    experiment->add_flag("--machine", machine, "line-oriented key = value output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            LoadedInput in = resolve_input(solve_path, solve_construct, format, seed);
            return run_solve(solve_metric, in, solve_side);
        }
        if (construct->parsed()) {
            LoadedInput in = build_construction(construct_name, construct_params, seed);
            std::cout << (in.general ? serialize_general(in.gen) : serialize_table(in.part));
            return 0;
        }
        if (verify->parsed()) return run_verify(verify_suite, machine);
        if (bound->parsed()) return run_bound(bound_r, machine);
        if (search->parsed())
            return run_search(search_r, search_m, search_t, search_long, search_reverse, machine);
        if (experiment->parsed())
            return run_experiment(exp_r, exp_m, exp_trials, seed, machine);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
