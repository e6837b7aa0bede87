#pragma once

#include <array>
#include <cstdio>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "contractix/canonical.hpp"
#include "contractix/graph.hpp"

namespace contractix {

enum class MoveKind { delete_vertex, glue_vertex, delete_edge, glue_edge };

/// One transformation step. Vertex indices refer to the labels of the graph
/// the move is applied to (intermediate graphs relabel on vertex deletion).
struct Move {
    MoveKind kind;
    int v = -1;            // vertex target, or first edge endpoint
    int u = -1;            // second edge endpoint
    VertexSet attachment;  // glue_vertex neighbors

    static Move deleting_vertex(int v) { return {MoveKind::delete_vertex, v, -1, {}}; }
    static Move gluing_vertex(VertexSet s) { return {MoveKind::glue_vertex, -1, -1, s}; }
    static Move deleting_edge(int u, int v) { return {MoveKind::delete_edge, v, u, {}}; }
    static Move gluing_edge(int u, int v) { return {MoveKind::glue_edge, v, u, {}}; }

    bool operator==(const Move&) const = default;
};

/// Replayable witness of contractibility: applying the steps in order, each
/// step is legal when reached and the final graph is the 1-vertex graph.
struct Certificate {
    std::vector<Move> steps;
};

/// Bounds on the membership search. Deletions always include I1; I3 is on by
/// default. glue_depth > 0 lets the search explore that many cumulative
/// gluing moves (I2/I4) along a branch before giving up on it; exhaustion is
/// reported as not contractible.
struct Policy {
    bool edge_deletions = true;
    int glue_depth = 0;

    std::string tag() const;  // "i1:g0", "i1i3:g2", ...
    static std::optional<Policy> from_tag(std::string_view tag);
    bool operator==(const Policy&) const = default;
};

/// Thread-safe verdict store keyed by (canonical key, policy tag). Entries
/// are immutable once written and lookups never change a verdict, so a lost
/// insert under contention costs time, not correctness. Optionally backed by
/// an append-only file of `<key hex> <policy tag> <0|1>` records.
class MemoCache {
public:
    MemoCache() = default;
    ~MemoCache();
    MemoCache(const MemoCache&) = delete;
    MemoCache& operator=(const MemoCache&) = delete;

    std::optional<bool> lookup(const CanonicalKey& key, const std::string& tag) const;
    void insert(const CanonicalKey& key, const std::string& tag, bool verdict);

    // Loads all records from path (missing file is fine); returns the number
    // of records read. Malformed lines, e.g. a torn final append, are skipped.
    std::size_t load_file(const std::string& path);
    // Future inserts are also appended to path.
    void attach_file(const std::string& path);

    std::size_t entry_count() const;

private:
    struct Shard {
        mutable std::shared_mutex mutex;
        std::unordered_map<std::string, bool> map;
    };
    static constexpr std::size_t kShardCount = 16;

    Shard& shard_for(const std::string& composite) const;
    void insert_internal(const std::string& composite, bool verdict);

    mutable std::array<Shard, kShardCount> shards_;
    std::FILE* file_ = nullptr;
    std::mutex file_mutex_;
};

// --- Definition-1 legality predicates ---------------------------------------

// I1: v may be deleted iff its neighborhood is nonempty and induces a
// contractible graph.
bool can_delete_vertex(const Graph& g, int v, const Policy& policy, MemoCache& cache);
// I3: the edge {u,v} may be deleted iff the common neighborhood is nonempty
// and induces a contractible graph. {u,v} must be an edge.
bool can_delete_edge(const Graph& g, int u, int v, const Policy& policy, MemoCache& cache);
// I4: same predicate on a nonadjacent pair.
bool can_glue_edge(const Graph& g, int u, int v, const Policy& policy, MemoCache& cache);
// I2: a new vertex may be glued onto `attachment` iff the attachment induces
// a contractible subgraph.
bool can_glue_vertex(const Graph& g, VertexSet attachment, const Policy& policy,
                     MemoCache& cache);

// Applies a legal move; throws std::invalid_argument naming the failed
// predicate otherwise. glue_vertex appends the new vertex at index order();
// delete_vertex relabels higher vertices down.
Graph apply_move(const Graph& g, const Move& m, const Policy& policy, MemoCache& cache);

struct Verdict {
    bool contractible = false;
    std::optional<Certificate> certificate;
};

// Decides reducibility to the 1-vertex graph by legal deletions (and bounded
// gluings per policy), depth-first with memoization on canonical keys.
// Quick paths: single vertex, disconnected, cone.
bool is_contractible(const Graph& g, const Policy& policy, MemoCache& cache);
Verdict decide_contractible(const Graph& g, const Policy& policy, MemoCache& cache);

struct ReplayResult {
    bool ok = false;
    int failed_step = -1;  // first illegal step, -1 when ok
    std::string reason;
};

// Independent validation: re-checks every step with fresh caches and the
// legality predicates only.
ReplayResult replay_certificate(const Graph& g, const Certificate& cert,
                                const Policy& policy = Policy{});

// {v : can_delete_vertex(g, v)}; empty for the 1-vertex graph.
VertexSet contractible_vertices(const Graph& g, const Policy& policy, MemoCache& cache);

// --- move script / certificate text -----------------------------------------
// One move per line: "delete-vertex V", "delete-edge U V", "glue-edge U V",
// "glue-vertex A B C...". Indices are 0-based current-graph labels.
std::string format_move(const Move& m);
std::optional<Move> parse_move(std::string_view line);
std::string format_certificate(const Certificate& cert);

}  // namespace contractix
