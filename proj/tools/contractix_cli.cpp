// contractix: decide contractibility of small graphs, audit the
// neighborhood-extension axiom, compute clique-complex homology, and hunt
// for minimal counterexamples.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contractix/axiom.hpp"
#include "contractix/canonical.hpp"
#include "contractix/contract.hpp"
#include "contractix/graph.hpp"
#include "contractix/graph6.hpp"
#include "contractix/homology.hpp"
#include "contractix/hunt.hpp"
#include "contractix/text.hpp"
#include "fixture_data.hpp"

namespace {

using namespace contractix;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOpts {
    std::string cache_path;
    std::string policy_name = "i1i3";
    int glue_depth = 0;
    bool json = false;

    Policy policy() const { return Policy{policy_name == "i1i3", glue_depth}; }
};

struct InputOpts {
    std::string fixture;
    std::string g6_path;
    std::string edges_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--fixture", fixture, "builtin fixture name: heart");
        cmd->add_option("--g6", g6_path, "graph6 file, or - for stdin");
        cmd->add_option("--edges", edges_path, "edge-list file (1-based labels)");
    }
};

std::vector<Graph> read_graph6_records(const std::string& path) {
    std::vector<Graph> graphs;
    auto consume = [&](std::istream& in) {
        for_each_graph6(in, [&](Graph&& g, std::size_t) { graphs.push_back(std::move(g)); });
    };
    if (path == "-") {
        consume(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw CliError("cannot open graph6 file: " + path);
        consume(in);
    }
    return graphs;
}

Graph load_single_graph(const InputOpts& opts) {
    int sources = !opts.fixture.empty() + !opts.g6_path.empty() + !opts.edges_path.empty();
    if (sources != 1)
        throw CliError("exactly one input source is required: --fixture, --g6, or --edges");

    if (!opts.fixture.empty()) {
        if (opts.fixture != "heart") throw CliError("unknown fixture: " + opts.fixture);
        return parse_edge_list(std::string(contractix_cli::kHeartEdgeList));
    }
    if (!opts.edges_path.empty()) {
        std::ifstream in(opts.edges_path);
        if (!in) throw CliError("cannot open edge-list file: " + opts.edges_path);
        return parse_edge_list(in);
    }
    std::vector<Graph> graphs = read_graph6_records(opts.g6_path);
    if (graphs.size() != 1)
        throw CliError("expected exactly one graph6 record, got " + std::to_string(graphs.size()));
    return graphs.front();
}

MemoCache& global_cache(const GlobalOpts& global) {
    static MemoCache cache;
    static bool attached = false;
    if (!attached) {
        attached = true;
        std::string path = global.cache_path;
        if (path.empty()) {
            if (const char* env = std::getenv("CONTRACT_CACHE")) path = env;
        }
        if (!path.empty()) {
            cache.load_file(path);
            cache.attach_file(path);
        }
    }
    return cache;
}

// --- check -------------------------------------------------------------------

int cmd_check(const GlobalOpts& global, const InputOpts& input, bool want_certificate) {
    Graph g = load_single_graph(input);
    MemoCache& cache = global_cache(global);
    Policy policy = global.policy();

    Verdict verdict;
    if (want_certificate) {
        verdict = decide_contractible(g, policy, cache);
    } else {
        verdict.contractible = is_contractible(g, policy, cache);
    }

    if (global.json) {
        std::ostringstream out;
        out << "{\"order\":" << g.order() << ",\"policy\":" << json_quote(policy.tag())
            << ",\"contractible\":" << (verdict.contractible ? "true" : "false")
            << ",\"certificate\":";
        if (verdict.certificate) {
            out << "[";
            for (std::size_t i = 0; i < verdict.certificate->steps.size(); ++i) {
                if (i) out << ",";
                out << json_quote(format_move(verdict.certificate->steps[i]));
            }
            out << "]";
        } else {
            out << "null";
        }
        out << "}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "contractible " << (verdict.contractible ? "true" : "false") << "\n";
        if (verdict.certificate) std::cout << format_certificate(*verdict.certificate);
    }
    return verdict.contractible ? 0 : 1;
}

// --- audit -------------------------------------------------------------------

int cmd_audit(const GlobalOpts& global, const InputOpts& input) {
    Graph g = load_single_graph(input);
    MemoCache& cache = global_cache(global);
    Policy policy = global.policy();

    AxiomReport report = audit_axiom(g, policy, cache);
    ContractibleVertexAudit claim = audit_min_contractible_vertices(g, policy, cache);

    if (global.json) {
        std::string body = format_axiom_report(report, true);
        body.pop_back();  // strip the closing brace, extend with the claim audit
        std::ostringstream out;
        out << body << ",\"contractible_vertex_count\":" << claim.count
            << ",\"two_contractible_vertices_claim\":" << (claim.claim_holds ? "true" : "false")
            << "}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << format_axiom_report(report, false);
        std::cout << "contractible-vertices " << claim.count << "\n";
        std::cout << "two-contractible-vertices-claim " << (claim.claim_holds ? "holds" : "fails")
                  << "\n";
    }
    return report.is_counterexample ? 1 : 0;
}

// --- homology ------------------------------------------------------------------

int cmd_homology(const GlobalOpts& global, const InputOpts& input, int pmax_opt, bool with_snf) {
    Graph g = load_single_graph(input);

    int pmax = pmax_opt >= 0 ? pmax_opt : clique_number(g) - 1;
    CliqueComplex complex = clique_complex(g, pmax);

    auto betti_of = [&](CoefficientField field, bool reduced) {
        return betti_from_complex(complex, field, reduced);
    };
    BettiVector gf2 = betti_of(CoefficientField::gf2, false);
    BettiVector rat = betti_of(CoefficientField::rational, false);
    BettiVector gf2r = betti_of(CoefficientField::gf2, true);
    BettiVector ratr = betti_of(CoefficientField::rational, true);

    std::vector<SNFDiagonal> snf;
    if (with_snf)
        for (int p = 1; p <= complex.dimension(); ++p)
            snf.push_back(smith_normal_form(boundary_matrix(complex, p)));

    if (global.json) {
        auto list = [](const std::vector<long>& v) {
            std::ostringstream out;
            out << "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out << ",";
                out << v[i];
            }
            out << "]";
            return out.str();
        };
        std::ostringstream out;
        out << "{\"order\":" << g.order() << ",\"f_vector\":[";
        for (int p = 0; p <= complex.dimension(); ++p) {
            if (p) out << ",";
            out << complex.simplex_count(p);
        }
        out << "],\"betti\":{\"gf2\":" << list(gf2.betti) << ",\"rational\":" << list(rat.betti)
            << "},\"betti_reduced\":{\"gf2\":" << list(gf2r.betti)
            << ",\"rational\":" << list(ratr.betti) << "},\"snf\":";
        if (with_snf) {
            out << "{";
            for (std::size_t i = 0; i < snf.size(); ++i) {
                if (i) out << ",";
                out << "\"" << i + 1 << "\":[";
                for (std::size_t k = 0; k < snf[i].factors.size(); ++k) {
                    if (k) out << ",";
                    out << snf[i].factors[k];
                }
                out << "]";
            }
            out << "}";
        } else {
            out << "null";
        }
        out << "}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "order " << g.order() << "\n";
        std::cout << "f-vector";
        for (int p = 0; p <= complex.dimension(); ++p) std::cout << " " << complex.simplex_count(p);
        std::cout << "\n";
        std::cout << "betti gf2 " << format_betti(gf2) << "\n";
        std::cout << "betti rational " << format_betti(rat) << "\n";
        std::cout << "betti-reduced gf2 " << format_betti(gf2r) << "\n";
        std::cout << "betti-reduced rational " << format_betti(ratr) << "\n";
        for (std::size_t i = 0; i < snf.size(); ++i) {
            std::cout << "snf " << i + 1;
            for (long long d : snf[i].factors) std::cout << " " << d;
            std::cout << "\n";
        }
    }
    return 0;
}

// --- transform -----------------------------------------------------------------

int cmd_transform(const GlobalOpts& global, const InputOpts& input, const std::string& script) {
    Graph g = load_single_graph(input);
    MemoCache& cache = global_cache(global);
    Policy policy = global.policy();

    std::vector<Move> moves;
    auto consume = [&](std::istream& in) {
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            auto move = parse_move(line);
            if (!move) throw CliError("move script line " + std::to_string(line_no) +
                                      ": unrecognized move: " + line);
            moves.push_back(*move);
        }
    };
    if (script == "-") {
        consume(std::cin);
    } else {
        std::ifstream in(script);
        if (!in) throw CliError("cannot open move script: " + script);
        consume(in);
    }

    for (std::size_t i = 0; i < moves.size(); ++i) {
        try {
            g = apply_move(g, moves[i], policy, cache);
        } catch (const std::exception& e) {
            throw CliError("move " + std::to_string(i) + ": " + e.what());
        }
    }

    if (global.json) {
        std::cout << "{\"graph6\":" << json_quote(encode_graph6(g)) << ",\"order\":" << g.order()
                  << ",\"steps\":" << moves.size() << "}\n";
    } else {
        std::cout << encode_graph6(g) << "\n";
    }
    return 0;
}

// --- hunt ----------------------------------------------------------------------

int cmd_hunt(const GlobalOpts& global, const HuntConfig& base, const std::string& g6_path,
             bool timing) {
    HuntConfig config = base;
    config.policy = global.policy();
    if (!g6_path.empty()) config.external_graphs = read_graph6_records(g6_path);

    MemoCache& cache = global_cache(global);
    HuntReport report = hunt(config, cache);
    std::cout << format_hunt_report(report, global.json, timing);
    if (global.json) std::cout << "\n";
    return 0;
}

// --- verify-paper ----------------------------------------------------------------

struct Claim {
    int id;
    std::string description;
    bool pass;
};

int cmd_verify_paper(const GlobalOpts& global, const std::string& fixture_file) {
    Graph heart = [&] {
        if (fixture_file.empty()) return parse_edge_list(std::string(contractix_cli::kHeartEdgeList));
        std::ifstream in(fixture_file);
        if (!in) throw CliError("cannot open fixture file: " + fixture_file);
        return parse_edge_list(in);
    }();

    MemoCache& cache = global_cache(global);
    Policy policy = global.policy();

    // fixture labels are 1-based; the audited vertex is label 1
    const int v1 = 0;
    const std::vector<int> tops = {7, 8, 10, 11};  // labels 8, 9, 11, 12

    std::vector<Claim> claims;

    claims.push_back({1, "the heart graph is contractible",
                      heart.order() == 12 && is_contractible(heart, policy, cache)});

    bool nonadjacent = true;
    for (int u : tops) nonadjacent = nonadjacent && !heart.adjacent(v1, u);
    claims.push_back({2, "vertex 1 is nonadjacent to 8, 9, 11, 12", nonadjacent});

    bool o_all_noncontractible = nonadjacent;
    if (nonadjacent)
        for (int u : tops)
            o_all_noncontractible =
                o_all_noncontractible && !o_subgraph_contractible(heart, v1, u, policy, cache);
    claims.push_back(
        {3, "O(1,u) is not contractible for each u in {8, 9, 11, 12}", o_all_noncontractible});

    claims.push_back({4, "the heart graph has no contractible vertex",
                      contractible_vertices(heart, policy, cache).empty()});

    auto all_zero = [](const BettiVector& v) {
        for (long b : v.betti)
            if (b != 0) return false;
        return true;
    };
    claims.push_back({5, "reduced Betti numbers vanish over GF(2) and the rationals",
                      all_zero(betti_numbers(heart, CoefficientField::gf2, true)) &&
                          all_zero(betti_numbers(heart, CoefficientField::rational, true))});

    bool all_pass = true;
    for (const Claim& c : claims) all_pass = all_pass && c.pass;

    if (global.json) {
        std::ostringstream out;
        out << "{\"claims\":[";
        for (std::size_t i = 0; i < claims.size(); ++i) {
            if (i) out << ",";
            out << "{\"id\":" << claims[i].id
                << ",\"description\":" << json_quote(claims[i].description)
                << ",\"pass\":" << (claims[i].pass ? "true" : "false") << "}";
        }
        out << "],\"all_pass\":" << (all_pass ? "true" : "false") << "}";
        std::cout << out.str() << "\n";
    } else {
        for (const Claim& c : claims)
            std::cout << "claim " << c.id << " " << (c.pass ? "PASS" : "FAIL") << " "
                      << c.description << "\n";
        std::cout << "verify-paper " << (all_pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contractible graph transformations: decision, audit, homology, hunt"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts global;
    app.add_option("--cache", global.cache_path,
                   "verdict cache file (also via CONTRACT_CACHE env var)");
    app.add_flag("--json", global.json, "emit one JSON document on stdout");
    app.add_option("--policy", global.policy_name, "deletion moves: i1 or i1i3")
        ->check(CLI::IsMember({"i1", "i1i3"}))
        ->default_val("i1i3");
    app.add_option("--glue-depth", global.glue_depth, "bounded gluing exploration depth")
        ->check(CLI::NonNegativeNumber)
        ->default_val(0);

    // check
    auto* check = app.add_subcommand("check", "decide contractibility");
    InputOpts check_input;
    check_input.attach(check);
    bool want_certificate = false;
    check->add_flag("--certificate", want_certificate, "print a replayable deletion certificate");

    // audit
    auto* audit = app.add_subcommand("audit", "audit the axiom and the contractible-vertex claim");
    InputOpts audit_input;
    audit_input.attach(audit);

    // homology
    auto* homology = app.add_subcommand("homology", "clique-complex homology");
    InputOpts homology_input;
    homology_input.attach(homology);
    int pmax = -1;
    bool with_snf = false;
    homology->add_option("--pmax", pmax, "truncate the complex at this dimension");
    homology->add_flag("--snf", with_snf, "print integer invariant factors per dimension");

    // transform
    auto* transform = app.add_subcommand("transform", "apply a move script, print graph6");
    InputOpts transform_input;
    transform_input.attach(transform);
    std::string script;
    transform->add_option("--script", script, "move script file, or - for stdin")->required();

    // hunt
    auto* hunt_cmd = app.add_subcommand("hunt", "exhaustive minimal-counterexample search");
    HuntConfig hunt_config;
    std::string hunt_g6;
    bool hunt_timing = false;
    hunt_cmd->add_option("--max-n", hunt_config.max_n, "largest vertex count to enumerate")
        ->check(CLI::Range(1, 10))
        ->default_val(8);
    hunt_cmd->add_option("--workers", hunt_config.workers, "parallel audit workers")
        ->check(CLI::PositiveNumber)
        ->default_val(1);
    hunt_cmd->add_option("--g6", hunt_g6, "audit this graph6 stream instead of enumerating");
    hunt_cmd->add_option("--checkpoint", hunt_config.checkpoint_path, "resumable checkpoint file");
    hunt_cmd->add_option("--checkpoint-every", hunt_config.checkpoint_every,
                         "graphs per checkpoint block")
        ->check(CLI::PositiveNumber)
        ->default_val(4096);
    hunt_cmd->add_flag("--timing", hunt_timing, "include wall-clock time in the report");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper",
                                      "check every heart-graph claim against the fixture");
    std::string fixture_file;
    verify->add_option("--fixture-file", fixture_file,
                       "heart fixture edge list (default: builtin copy)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(global, check_input, want_certificate);
        if (audit->parsed()) return cmd_audit(global, audit_input);
        if (homology->parsed()) return cmd_homology(global, homology_input, pmax, with_snf);
        if (transform->parsed()) return cmd_transform(global, transform_input, script);
        if (hunt_cmd->parsed()) return cmd_hunt(global, hunt_config, hunt_g6, hunt_timing);
        if (verify->parsed()) return cmd_verify_paper(global, fixture_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
