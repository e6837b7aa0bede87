#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contractix/contract.hpp"
#include "contractix/graph.hpp"

namespace contractix {

struct HuntLevel {
    int n = 0;
    std::uint64_t graphs = 0;
    std::uint64_t contractible = 0;
    std::uint64_t counterexamples = 0;
};

/// Outcome of the minimal-counterexample search: per-order statistics and
/// the counterexamples found at the smallest order, as canonical graph6.
struct HuntReport {
    std::string policy_tag;
    int max_n = 0;
    std::string source;  // "internal" or "graph6"
    std::vector<HuntLevel> levels;
    std::optional<int> minimal_counterexample_n;
    std::vector<std::string> counterexamples;  // canonical graph6, minimal order only
    bool complete = true;
    std::string checkpoint_id;
    double wall_seconds = 0.0;  // serialized only on request
};

struct HuntConfig {
    int max_n = 8;
    Policy policy;
    int workers = 1;
    // when set, audits this stream instead of the internal enumeration
    std::optional<std::vector<Graph>> external_graphs;
    std::string checkpoint_path;              // empty: no checkpointing
    std::uint64_t checkpoint_every = 4096;    // graphs per checkpointed block
    std::uint64_t stop_after = 0;             // stop hook: graphs this run, 0 = off
};

// Audits every graph in scope; deterministic for any worker count, and a
// resumed run reproduces the uninterrupted report byte for byte. Refuses to
// resume from a checkpoint whose policy, max-n, or source disagree.
HuntReport hunt(const HuntConfig& config, MemoCache& cache);

std::string format_hunt_report(const HuntReport& report, bool json, bool include_timing);

// Cold-cache re-audit of a reported counterexample.
bool reaudit_counterexample(const std::string& g6, const Policy& policy);

}  // namespace contractix
