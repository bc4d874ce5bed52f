// Command-line front end: analyze and recognize graphs, generate families,
// and run the recognizer-vs-oracle verification suites.

#include "axg/families.hpp"
#include "axg/independence.hpp"
#include "axg/io.hpp"
#include "axg/recognizers.hpp"
#include "axg/report.hpp"
#include "axg/rng.hpp"
#include "axg/structure.hpp"
#include "axg/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using axg::Graph;
using axg::Json;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

struct IoConfig {
    std::string input = "-";
    std::string format = "edgelist";
    std::string output = "json"; // json | table
    std::uint64_t budget = axg::kDefaultNodeBudget;
    bool serial = false;
};

Graph read_input(const IoConfig& cfg) {
    axg::Format f = axg::parse_format(cfg.format);
    if (cfg.input == "-") return axg::read_graph(std::cin, f);
    std::ifstream in(cfg.input);
    if (!in) throw axg::ParseError(0, "cannot open input file: " + cfg.input);
    return axg::read_graph(in, f);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join_labels(const Graph& g, const axg::VertexSet& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += " ";
        s += g.label(vs[i]);
    }
    return s;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json budget_report(const char* command, const axg::BudgetExhausted& e) {
    return Json{{"schema_version", axg::kReportSchemaVersion},
                {"command", command},
                {"status", "budget-exhausted"},
                {"message", e.what()}};
}

int cmd_analyze(const IoConfig& cfg) {
    Graph g = read_input(cfg);
    auto t0 = std::chrono::steady_clock::now();
    axg::AnalyzeOptions opt;
    opt.node_budget = cfg.budget;
    opt.parallel = !cfg.serial;
    axg::AnalysisReport rep;
    try {
        rep = axg::analyze(g, opt);
    } catch (const axg::BudgetExhausted& e) {
        if (cfg.output == "json") print_json(budget_report("analyze", e));
        else std::cout << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    }
    double secs = seconds_since(t0);
    if (cfg.output == "json") {
        Json j{{"schema_version", axg::kReportSchemaVersion},
               {"command", "analyze"},
               {"graph", axg::graph_json(g)},
               {"classification", axg::classification_json(axg::classify(g))},
               {"analysis", axg::analysis_json(g, rep)},
               {"timing", Json{{"seconds", secs}}},
               {"status", "ok"}};
        print_json(j);
    } else {
        std::cout << "order " << g.order() << ", size " << g.size() << "\n"
                  << "alpha      " << rep.alpha << "\n"
                  << "alpha_c    " << rep.alpha_c << "\n";
        if (rep.ind_dom >= 0) std::cout << "i          " << rep.ind_dom << "\n";
        std::cout << "excellent  " << (rep.excellent ? "yes" : "no") << "\n";
        if (rep.ind_dom >= 0)
            std::cout << "well-covered " << (rep.well_covered ? "yes" : "no") << "\n";
        std::cout << "alpha set  " << join_labels(g, rep.alpha_set) << "\n";
        if (rep.critical_computed)
            std::cout << "critical   "
                      << (rep.critical.empty() ? std::string("(none)") : join_labels(g, rep.critical))
                      << "\n";
    }
    return kExitOk;
}

int cmd_recognize(const IoConfig& cfg) {
    Graph g = read_input(cfg);
    auto t0 = std::chrono::steady_clock::now();
    axg::RecognizeOptions opt;
    opt.node_budget = cfg.budget;
    opt.parallel = !cfg.serial;
    axg::Verdict v;
    try {
        v = axg::recognize(g, opt);
    } catch (const axg::BudgetExhausted& e) {
        if (cfg.output == "json") print_json(budget_report("recognize", e));
        else std::cout << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    }
    double secs = seconds_since(t0);
    bool cert_ok = axg::validate_certificate(g, v);
    if (cfg.output == "json") {
        Json j{{"schema_version", axg::kReportSchemaVersion},
               {"command", "recognize"},
               {"graph", axg::graph_json(g)},
               {"classification", axg::classification_json(axg::classify(g))},
               {"verdict", axg::verdict_json(g, v)},
               {"certificate_valid", cert_ok},
               {"timing", Json{{"seconds", secs}}},
               {"status", cert_ok ? "ok" : "invalid-certificate"}};
        print_json(j);
    } else {
        std::cout << "order " << g.order() << ", size " << g.size() << "\n"
                  << "excellent   " << (v.excellent ? "yes" : "no") << "\n"
                  << "method      " << v.method << "\n"
                  << "fallback    " << (v.fallback_used ? "yes" : "no") << "\n";
        if (v.alpha) std::cout << "alpha       " << *v.alpha << "\n";
        std::cout << "certificate " << (cert_ok ? "valid" : "INVALID") << "\n";
    }
    return cert_ok ? kExitOk : kExitDisagreement;
}

struct GenerateConfig {
    std::vector<std::string> args; // family name + parameters
    std::uint64_t seed = 1;
};

// Compact graph tokens for generator parameters: K<n> complete, C<n> cycle,
// P<n> path, S<r> star, E<n> empty, D<a>-<b> double star.
Graph family_token(const std::string& tok) {
    if (tok.size() < 2) throw std::invalid_argument("unknown graph token: " + tok);
    char kind = tok[0];
    std::string rest = tok.substr(1);
    auto as_int = [&](const std::string& s) {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad number in graph token: " + tok);
        return v;
    };
    switch (kind) {
    case 'K': return axg::complete_graph(as_int(rest));
    case 'C': return axg::cycle_graph(as_int(rest));
    case 'P': return axg::path_graph(as_int(rest));
    case 'S': return axg::star(as_int(rest));
    case 'E': return axg::empty_graph(as_int(rest));
    case 'D': {
        auto dash = rest.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("double star token needs D<a>-<b>: " + tok);
        return axg::double_star(as_int(rest.substr(0, dash)), as_int(rest.substr(dash + 1)));
    }
    default: throw std::invalid_argument("unknown graph token: " + tok);
    }
}

std::vector<int> parse_positions(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty() || csv == "none") return out;
    std::stringstream ss(csv);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
    return out;
}

Graph generate_graph(const GenerateConfig& cfg) {
    const auto& a = cfg.args;
    if (a.empty()) throw std::invalid_argument("generate needs a family name");
    const std::string& fam = a[0];
    auto want = [&](std::size_t n, const char* usage) {
        if (a.size() != n + 1)
            throw std::invalid_argument(std::string("usage: generate ") + usage);
    };
    if (fam == "petersen") {
        want(2, "petersen <n> <k>");
        return axg::generalized_petersen(std::stoi(a[1]), std::stoi(a[2]));
    }
    if (fam == "caterpillar") {
        if (a.size() != 2 && a.size() != 3)
            throw std::invalid_argument("usage: generate caterpillar <cycle-length> [legs as i,j,...]");
        axg::CaterpillarWheelSpec spec;
        spec.cycle_length = std::stoi(a[1]);
        if (a.size() == 3) spec.leg_positions = parse_positions(a[2]);
        return axg::caterpillar_wheel(spec);
    }
    if (fam == "corona") {
        want(2, "corona <base token> <attachment token>  (tokens: K5 C4 P3 S2 E2 D2-2)");
        return axg::corona(family_token(a[1]), family_token(a[2]));
    }
    if (fam == "general-corona") {
        want(2, "general-corona <clique order> <attachment orders i,j,...>");
        return axg::general_corona(std::stoi(a[1]), parse_positions(a[2]));
    }
    if (fam == "cntree") {
        want(2, "cntree <cycle length> <gluings>  (gluing edges drawn from --seed)");
        int len = std::stoi(a[1]);
        int rounds = std::stoi(a[2]);
        if (len < 3) throw std::invalid_argument("cycle length must be at least 3");
        if (rounds < 0) throw std::invalid_argument("gluing count must be nonnegative");
        axg::Rng rng(cfg.seed);
        axg::EdgeList live = axg::cycle_graph(len).edges();
        int order = len;
        std::vector<axg::Gluing> gluings;
        for (int t = 0; t < rounds; ++t) {
            auto [u, v] = live[rng.below(int(live.size()))];
            gluings.push_back({u, v});
            int prev = u;
            for (int x = 0; x < len - 2; ++x) {
                live.emplace_back(prev, order + x);
                prev = order + x;
            }
            live.emplace_back(prev, v);
            order += len - 2;
        }
        return axg::cycle_tree(len, gluings);
    }
    if (fam == "subdivision") {
        want(1, "subdivision <base token>");
        return axg::subdivision(family_token(a[1]));
    }
    if (fam == "product") {
        want(2, "product <token> <token>");
        return axg::cartesian_product(family_token(a[1]), family_token(a[2]));
    }
    if (fam == "random") {
        want(3, "random <tree|unicyclic|chordal|block|bipartite> <n> <seed>");
        return axg::random_family(axg::parse_random_kind(a[1]), std::stoi(a[2]),
                                  std::uint64_t(std::stoull(a[3])));
    }
    throw std::invalid_argument("unknown family: " + fam);
}

int cmd_generate(const GenerateConfig& cfg, const std::string& format) {
    Graph g = generate_graph(cfg);
    std::cout << axg::write_graph(g, axg::parse_format(format));
    return kExitOk;
}

struct VerifyConfig {
    std::uint64_t budget = axg::kDefaultNodeBudget;
    std::uint64_t seed = 1;
    double scale = 1.0;
    bool serial = false;
    bool inject_bug = false;
    std::string output = "table";
};

int cmd_verify(const VerifyConfig& cfg) {
    axg::VerifyOptions opt;
    opt.node_budget = cfg.budget;
    opt.seed = cfg.seed;
    opt.scale = cfg.scale;
    opt.parallel = !cfg.serial;
    opt.inject_bug = cfg.inject_bug;
    auto results = axg::run_verification(opt);
    int code = axg::verification_exit_code(results);
    if (cfg.output == "json") {
        Json suites = Json::array();
        for (const auto& r : results) {
            suites.push_back(Json{{"name", r.name},
                                  {"pass", r.pass},
                                  {"checked", r.checked},
                                  {"disagreements", r.disagreements},
                                  {"certificate_failures", r.certificate_failures},
                                  {"budget_exhausted", r.budget_exhausted},
                                  {"counterexamples", r.counterexamples},
                                  {"note", r.note},
                                  {"seconds", r.seconds}});
        }
        const char* status = code == kExitOk ? "ok"
                             : code == kExitBudget ? "budget-exhausted"
                                                   : "fail";
        print_json(Json{{"schema_version", axg::kReportSchemaVersion},
                        {"command", "verify"},
                        {"suites", suites},
                        {"status", status}});
    } else {
        for (const auto& r : results) {
            std::ostringstream line;
            line << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  checked=" << r.checked
                 << " disagreements=" << r.disagreements << " cert-failures=" << r.certificate_failures
                 << " budget-exhausted=" << r.budget_exhausted;
            std::cout << line.str();
            if (!r.note.empty()) std::cout << "  (" << r.note << ")";
            std::cout << "\n";
            for (const auto& ce : r.counterexamples) std::cout << "  counterexample " << ce << "\n";
        }
        std::cout << (code == kExitOk ? "all suites passed"
                      : code == kExitBudget ? "budget exhausted; no disagreements"
                                            : "FAILURES detected")
                  << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph independence analysis: excellence recognizers and exact oracles"};
    app.require_subcommand(1);

    IoConfig an_cfg;
    auto* an = app.add_subcommand("analyze", "Exact independence analysis of one graph");
    an->add_option("input", an_cfg.input, "input file, or - for stdin")->capture_default_str();
    an->add_option("--format", an_cfg.format, "edgelist | dimacs")->capture_default_str();
    an->add_option("--budget", an_cfg.budget, "search node budget per solver call")
        ->capture_default_str();
    an->add_option("--output", an_cfg.output, "json | table")->capture_default_str();
    an->add_flag("--serial", an_cfg.serial, "disable per-vertex parallelism");

    IoConfig re_cfg;
    auto* re = app.add_subcommand("recognize", "Class-specific excellence decision with certificate");
    re->add_option("input", re_cfg.input, "input file, or - for stdin")->capture_default_str();
    re->add_option("--format", re_cfg.format, "edgelist | dimacs")->capture_default_str();
    re->add_option("--budget", re_cfg.budget, "search node budget for the oracle fallback")
        ->capture_default_str();
    re->add_option("--output", re_cfg.output, "json | table")->capture_default_str();
    re->add_flag("--serial", re_cfg.serial, "disable fallback parallelism");

    GenerateConfig gen_cfg;
    std::string gen_format = "edgelist";
    auto* ge = app.add_subcommand(
        "generate", "Emit a graph family (petersen, caterpillar, corona, general-corona, cntree, "
                    "subdivision, product, random)");
    ge->add_option("spec", gen_cfg.args, "family name followed by its parameters")->expected(-1);
    ge->add_option("--seed", gen_cfg.seed, "seed for seeded constructions")->capture_default_str();
    ge->add_option("--format", gen_format, "edgelist | dimacs")->capture_default_str();

    VerifyConfig ver_cfg;
    auto* ve = app.add_subcommand("verify", "Run the recognizer-vs-oracle verification suites");
    ve->add_option("--budget", ver_cfg.budget, "search node budget per solver call")
        ->capture_default_str();
    ve->add_option("--seed", ver_cfg.seed, "corpus seed")->capture_default_str();
    ve->add_option("--scale", ver_cfg.scale, "corpus size multiplier (0 = empty corpus)")
        ->capture_default_str();
    ve->add_option("--output", ver_cfg.output, "table | json")->capture_default_str();
    ve->add_flag("--serial", ver_cfg.serial, "run corpus items on one thread");
    ve->add_flag("--inject-bug", ver_cfg.inject_bug,
                 "self-test: corrupt one recognizer verdict and expect a counterexample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints the message or help text
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (an->parsed()) return cmd_analyze(an_cfg);
        if (re->parsed()) return cmd_recognize(re_cfg);
        if (ge->parsed()) return cmd_generate(gen_cfg, gen_format);
        if (ve->parsed()) return cmd_verify(ver_cfg);
    } catch (const axg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const axg::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagreement;
    }
    return kExitOk;
}
