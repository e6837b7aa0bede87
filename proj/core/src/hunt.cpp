#include "contractix/hunt.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "contractix/axiom.hpp"
#include "contractix/enumerate.hpp"
#include "contractix/graph6.hpp"
#include "contractix/text.hpp"

namespace contractix {

namespace {

struct AuditOutcome {
    bool contractible = false;
    bool counterexample = false;
};

// contractibility plus existence of a violated vertex; stops at the first
// witness per vertex instead of building the full report
AuditOutcome quick_audit(const Graph& g, const Policy& policy, MemoCache& cache) {
    AuditOutcome out;
    out.contractible = is_contractible(g, policy, cache);
    if (!out.contractible) return out;
    for (int v = 0; v < g.order() && !out.counterexample; ++v) {
        VertexSet others = g.vertices();
        others.remove(v);
        VertexSet nonadj = others - g.neighborhood(v);
        if (nonadj.empty()) continue;
        bool witnessed = false;
        for (int u : nonadj) {
            if (o_subgraph_contractible(g, v, u, policy, cache)) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) out.counterexample = true;
    }
    return out;
}

struct HuntState {
    int frontier_n = 1;  // 0 in graph6 stream mode
    std::uint64_t frontier_index = 0;
    std::map<int, HuntLevel> levels;
    std::vector<std::pair<int, std::string>> counterexamples;  // (order, canonical g6)
};

std::string state_source(const HuntConfig& config) {
    return config.external_graphs ? "graph6" : "internal";
}

void write_checkpoint(const HuntConfig& config, const HuntState& state) {
    if (config.checkpoint_path.empty()) return;
    std::string tmp = config.checkpoint_path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
        out << "contractix-checkpoint v1\n";
        out << "policy " << config.policy.tag() << "\n";
        out << "max-n " << config.max_n << "\n";
        out << "source " << state_source(config) << "\n";
        out << "frontier " << state.frontier_n << " " << state.frontier_index << "\n";
        for (const auto& [n, lv] : state.levels)
            out << "level " << n << " " << lv.graphs << " " << lv.contractible << " "
                << lv.counterexamples << "\n";
        for (const auto& [n, g6] : state.counterexamples)
            out << "counterexample " << n << " " << g6 << "\n";
        out << "end\n";
    }
    std::filesystem::rename(tmp, config.checkpoint_path);
}

std::optional<HuntState> load_checkpoint(const HuntConfig& config) {
    if (config.checkpoint_path.empty()) return std::nullopt;
    std::ifstream in(config.checkpoint_path);
    if (!in) return std::nullopt;

    HuntState state;
    std::string line;
    if (!std::getline(in, line) || line != "contractix-checkpoint v1")
        throw std::runtime_error("unrecognized checkpoint file");
    bool saw_end = false;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string word;
        fields >> word;
        if (word == "policy") {
            std::string tag;
            fields >> tag;
            if (tag != config.policy.tag())
                throw std::runtime_error("checkpoint policy " + tag + " does not match " +
                                         config.policy.tag() + "; refusing to resume");
        } else if (word == "max-n") {
            int n = -1;
            fields >> n;
            if (n != config.max_n)
                throw std::runtime_error("checkpoint max-n mismatch; refusing to resume");
        } else if (word == "source") {
            std::string src;
            fields >> src;
            if (src != state_source(config))
                throw std::runtime_error("checkpoint source mismatch; refusing to resume");
        } else if (word == "frontier") {
            fields >> state.frontier_n >> state.frontier_index;
        } else if (word == "level") {
            HuntLevel lv;
            fields >> lv.n >> lv.graphs >> lv.contractible >> lv.counterexamples;
            state.levels[lv.n] = lv;
        } else if (word == "counterexample") {
            int n = 0;
            std::string g6;
            fields >> n >> g6;
            state.counterexamples.emplace_back(n, g6);
        } else if (word == "end") {
            saw_end = true;
        }
    }
    if (!saw_end) throw std::runtime_error("truncated checkpoint file; refusing to resume");
    return state;
}

struct BlockPart {
    std::map<int, HuntLevel> counts;
    std::vector<std::pair<int, std::string>> counterexamples;
};

// Audits graphs [lo, hi) from `make`; contiguous per-worker subranges merged
// in order keep the outcome identical for any worker count.
void process_block(std::uint64_t lo, std::uint64_t hi,
                   const std::function<Graph(std::uint64_t)>& make, const Policy& policy,
                   MemoCache& cache, int workers, HuntState& state) {
    std::uint64_t len = hi - lo;
    int w = std::max(1, workers);
    if (static_cast<std::uint64_t>(w) > len) w = static_cast<int>(len);

    std::vector<BlockPart> parts(static_cast<std::size_t>(w));
    auto run_range = [&](std::uint64_t a, std::uint64_t b, BlockPart& part) {
        for (std::uint64_t i = a; i < b; ++i) {
            Graph g = make(i);
            AuditOutcome outcome = quick_audit(g, policy, cache);
            HuntLevel& lv = part.counts[g.order()];
            lv.n = g.order();
            lv.graphs += 1;
            if (outcome.contractible) lv.contractible += 1;
            if (outcome.counterexample) {
                lv.counterexamples += 1;
                Graph rep = graph_from_key(canonical_key(g));
                part.counterexamples.emplace_back(g.order(), encode_graph6(rep));
            }
        }
    };

    std::uint64_t chunk = (len + static_cast<std::uint64_t>(w) - 1) / static_cast<std::uint64_t>(w);
    std::vector<std::thread> threads;
    for (int t = 1; t < w; ++t) {
        std::uint64_t a = lo + chunk * static_cast<std::uint64_t>(t);
        std::uint64_t b = std::min(hi, a + chunk);
        if (a >= b) continue;
        threads.emplace_back(run_range, a, b, std::ref(parts[static_cast<std::size_t>(t)]));
    }
    run_range(lo, std::min(hi, lo + chunk), parts[0]);
    for (std::thread& th : threads) th.join();

    for (const BlockPart& part : parts) {
        for (const auto& [n, lv] : part.counts) {
            HuntLevel& acc = state.levels[n];
            acc.n = n;
            acc.graphs += lv.graphs;
            acc.contractible += lv.contractible;
            acc.counterexamples += lv.counterexamples;
        }
        state.counterexamples.insert(state.counterexamples.end(), part.counterexamples.begin(),
                                     part.counterexamples.end());
    }
}

}  // namespace

HuntReport hunt(const HuntConfig& config, MemoCache& cache) {
    if (!config.external_graphs && (config.max_n < 1 || config.max_n > 10))
        throw std::invalid_argument("hunt max-n must be in [1, 10]");

    auto started = std::chrono::steady_clock::now();

    HuntState state;
    if (auto resumed = load_checkpoint(config)) state = std::move(*resumed);
    else if (config.external_graphs) state.frontier_n = 0;

    std::uint64_t processed_this_run = 0;
    bool stopped = false;

    auto run_span = [&](std::uint64_t total, const std::function<Graph(std::uint64_t)>& make) {
        while (state.frontier_index < total) {
            if (config.stop_after != 0 && processed_this_run >= config.stop_after) {
                stopped = true;
                return;
            }
            std::uint64_t hi = std::min(total, state.frontier_index + config.checkpoint_every);
            if (config.stop_after != 0)
                hi = std::min(hi,
                              state.frontier_index + (config.stop_after - processed_this_run));
            process_block(state.frontier_index, hi, make, config.policy, cache, config.workers,
                          state);
            processed_this_run += hi - state.frontier_index;
            state.frontier_index = hi;
            write_checkpoint(config, state);
        }
    };

    if (config.external_graphs) {
        const std::vector<Graph>& graphs = *config.external_graphs;
        run_span(graphs.size(), [&](std::uint64_t i) { return graphs[static_cast<std::size_t>(i)]; });
    } else {
        for (int n = std::max(1, state.frontier_n); n <= config.max_n && !stopped; ++n) {
            if (n != state.frontier_n) {
                state.frontier_n = n;
                state.frontier_index = 0;
            }
            std::vector<std::uint64_t> codes = connected_level_codes(n);
            run_span(codes.size(),
                     [&](std::uint64_t i) { return graph_from_level_code(n, codes[static_cast<std::size_t>(i)]); });
        }
    }

    HuntReport report;
    report.policy_tag = config.policy.tag();
    report.max_n = config.max_n;
    report.source = state_source(config);
    for (const auto& [n, lv] : state.levels) report.levels.push_back(lv);
    for (const auto& lv : report.levels) {
        if (lv.counterexamples > 0) {
            report.minimal_counterexample_n = lv.n;
            break;
        }
    }
    if (report.minimal_counterexample_n) {
        for (const auto& [n, g6] : state.counterexamples)
            if (n == *report.minimal_counterexample_n) report.counterexamples.push_back(g6);
        std::sort(report.counterexamples.begin(), report.counterexamples.end());
    }
    report.complete = !stopped;
    if (report.complete) {
        report.checkpoint_id = "complete:max-n=" + std::to_string(config.max_n);
    } else {
        report.checkpoint_id = "n=" + std::to_string(state.frontier_n) +
                               ":i=" + std::to_string(state.frontier_index);
        write_checkpoint(config, state);
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::string format_hunt_report(const HuntReport& report, bool json, bool include_timing) {
    std::ostringstream out;
    if (json) {
        out << "{\"policy\":\"" << report.policy_tag << "\",";
        out << "\"max_n\":" << report.max_n << ",";
        out << "\"source\":\"" << report.source << "\",";
        out << "\"levels\":[";
        for (std::size_t i = 0; i < report.levels.size(); ++i) {
            const HuntLevel& lv = report.levels[i];
            if (i) out << ",";
            out << "{\"n\":" << lv.n << ",\"graphs\":" << lv.graphs
                << ",\"contractible\":" << lv.contractible
                << ",\"counterexamples\":" << lv.counterexamples << "}";
        }
        out << "],\"minimal_counterexample\":";
        if (report.minimal_counterexample_n)
            out << *report.minimal_counterexample_n;
        else
            out << "null";
        out << ",\"counterexamples\":[";
        for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
            if (i) out << ",";
            out << json_quote(report.counterexamples[i]);
        }
        out << "],\"complete\":" << (report.complete ? "true" : "false");
        out << ",\"checkpoint\":\"" << report.checkpoint_id << "\"";
        if (include_timing) out << ",\"wall_seconds\":" << report.wall_seconds;
        out << "}";
        return out.str();
    }

    out << "hunt-report v1\n";
    out << "policy " << report.policy_tag << "\n";
    out << "max-n " << report.max_n << "\n";
    out << "source " << report.source << "\n";
    for (const HuntLevel& lv : report.levels)
        out << "level " << lv.n << " graphs " << lv.graphs << " contractible " << lv.contractible
            << " counterexamples " << lv.counterexamples << "\n";
    out << "minimal-counterexample ";
    if (report.minimal_counterexample_n)
        out << *report.minimal_counterexample_n;
    else
        out << "none <= " << report.max_n;
    out << "\n";
    for (const std::string& g6 : report.counterexamples) out << "counterexample " << g6 << "\n";
    out << "complete " << (report.complete ? "true" : "false") << "\n";
    out << "checkpoint " << report.checkpoint_id << "\n";
    if (include_timing) out << "wall-seconds " << report.wall_seconds << "\n";
    return out.str();
}

bool reaudit_counterexample(const std::string& g6, const Policy& policy) {
    Graph g = decode_graph6(g6);
    MemoCache cold;
    return audit_axiom(g, policy, cold).is_counterexample;
}

}  // namespace contractix
