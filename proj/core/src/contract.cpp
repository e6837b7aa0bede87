#include "contractix/contract.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace contractix {

std::string Policy::tag() const {
    return std::string(edge_deletions ? "i1i3" : "i1") + ":g" + std::to_string(glue_depth);
}

std::optional<Policy> Policy::from_tag(std::string_view tag) {
    Policy p;
    std::string_view rest;
    if (tag.starts_with("i1i3:g")) {
        p.edge_deletions = true;
        rest = tag.substr(6);
    } else if (tag.starts_with("i1:g")) {
        p.edge_deletions = false;
        rest = tag.substr(4);
    } else {
        return std::nullopt;
    }
    int depth = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), depth);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || depth < 0) return std::nullopt;
    p.glue_depth = depth;
    return p;
}

// --- MemoCache ---------------------------------------------------------------

namespace {

std::string composite_key(const CanonicalKey& key, const std::string& tag) {
    std::string s;
    s.reserve(tag.size() + 1 + key.bytes.size());
    s += tag;
    s += '\n';
    s += key.bytes;
    return s;
}

}  // namespace

MemoCache::~MemoCache() {
    if (file_) std::fclose(file_);
}

MemoCache::Shard& MemoCache::shard_for(const std::string& composite) const {
    return shards_[std::hash<std::string>{}(composite) % kShardCount];
}

std::optional<bool> MemoCache::lookup(const CanonicalKey& key, const std::string& tag) const {
    std::string comp = composite_key(key, tag);
    Shard& shard = shard_for(comp);
    std::shared_lock lock(shard.mutex);
    auto it = shard.map.find(comp);
    if (it == shard.map.end()) return std::nullopt;
    return it->second;
}

void MemoCache::insert_internal(const std::string& composite, bool verdict) {
    Shard& shard = shard_for(composite);
    std::unique_lock lock(shard.mutex);
    shard.map.emplace(composite, verdict);
}

void MemoCache::insert(const CanonicalKey& key, const std::string& tag, bool verdict) {
    std::string comp = composite_key(key, tag);
    {
        Shard& shard = shard_for(comp);
        std::unique_lock lock(shard.mutex);
        if (!shard.map.emplace(comp, verdict).second) return;  // already recorded
    }
    if (file_) {
        std::string line = key.hex() + " " + tag + " " + (verdict ? "1" : "0") + "\n";
        std::lock_guard lock(file_mutex_);
        std::fwrite(line.data(), 1, line.size(), file_);
        std::fflush(file_);
    }
}

std::size_t MemoCache::load_file(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return 0;
    std::size_t loaded = 0;
    char buf[512];
    while (std::fgets(buf, sizeof buf, f)) {
        std::istringstream line(buf);
        std::string hex, tag, bit;
        if (!(line >> hex >> tag >> bit)) continue;
        if (bit != "0" && bit != "1") continue;
        auto key = CanonicalKey::from_hex(hex);
        if (!key) continue;
        insert_internal(composite_key(*key, tag), bit == "1");
        ++loaded;
    }
    std::fclose(f);
    return loaded;
}

void MemoCache::attach_file(const std::string& path) {
    std::lock_guard lock(file_mutex_);
    if (file_) std::fclose(file_);
    file_ = std::fopen(path.c_str(), "ab");
    if (!file_) throw std::runtime_error("cannot open cache file for append: " + path);
}

std::size_t MemoCache::entry_count() const {
    std::size_t total = 0;
    for (const Shard& shard : shards_) {
        std::shared_lock lock(shard.mutex);
        total += shard.map.size();
    }
    return total;
}

// --- decision procedure -------------------------------------------------------

namespace {

std::string budget_tag(const Policy& policy, int remaining) {
    return std::string(policy.edge_deletions ? "i1i3" : "i1") + ":g" + std::to_string(remaining);
}

// True iff the subgraph induced by `inside` has an apex adjacent to all of it.
bool induced_has_apex(const Graph& g, VertexSet inside) {
    if (inside.count() == 1) return true;
    for (int v : inside) {
        VertexSet rest = inside;
        rest.remove(v);
        if ((g.neighborhood(v) & inside) == rest) return true;
    }
    return false;
}

class Decider {
public:
    Decider(const Policy& policy, MemoCache& cache) : policy_(policy), cache_(cache) {}

    // Membership query with a fresh glue budget; used for legality predicates.
    bool membership(const Graph& g) {
        bool tainted = false;
        return decide(g, policy_.glue_depth, tainted);
    }

    // tainted is set when a false verdict depended on an in-progress
    // assumption; such verdicts are not cached (true verdicts are concrete
    // move sequences and always exact).
    bool decide(const Graph& g, int budget, bool& tainted) {
        if (g.order() == 1) return true;
        if (!g.connected()) return false;
        if (g.cone_apex()) return true;

        CanonicalKey key = canonical_key(g);
        std::string tag = budget_tag(policy_, budget);
        if (auto hit = cache_.lookup(key, tag)) return *hit;

        std::string comp = composite_key(key, tag);
        if (in_progress_.contains(comp)) {
            tainted = true;
            return false;
        }
        in_progress_.insert(comp);
        bool local_taint = false;
        bool verdict = search(g, budget, local_taint);
        in_progress_.erase(comp);

        if (verdict || !local_taint) cache_.insert(key, tag, verdict);
        if (!verdict && local_taint) tainted = true;
        return verdict;
    }

    // Deterministic candidate move order; shared by the search and the
    // certificate reconstruction so both walk the same tree.
    std::vector<Move> candidate_moves(const Graph& g, int budget) {
        std::vector<Move> moves;
        int n = g.order();

        struct VertexCand {
            int not_cone;
            int degree;
            int v;
        };
        std::vector<VertexCand> vcands;
        vcands.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            VertexSet nb = g.neighborhood(v);
            vcands.push_back({induced_has_apex(g, nb) ? 0 : 1, nb.count(), v});
        }
        std::sort(vcands.begin(), vcands.end(), [](const VertexCand& a, const VertexCand& b) {
            return std::tie(a.not_cone, a.degree, a.v) < std::tie(b.not_cone, b.degree, b.v);
        });
        for (const VertexCand& c : vcands) moves.push_back(Move::deleting_vertex(c.v));

        if (policy_.edge_deletions) {
            struct EdgeCand {
                int common;
                int u, v;
            };
            std::vector<EdgeCand> ecands;
            for (int v = 0; v < n; ++v)
                for (int u : g.neighborhood(v))
                    if (u < v) ecands.push_back({g.common_neighborhood(u, v).count(), u, v});
            std::sort(ecands.begin(), ecands.end(), [](const EdgeCand& a, const EdgeCand& b) {
                return std::tie(a.common, a.u, a.v) < std::tie(b.common, b.u, b.v);
            });
            for (const EdgeCand& c : ecands)
                if (c.common > 0) moves.push_back(Move::deleting_edge(c.u, c.v));
        }

        if (budget > 0) {
            for (int v = 0; v < n; ++v)
                for (int u = 0; u < v; ++u)
                    if (!g.adjacent(u, v) && !g.common_neighborhood(u, v).empty())
                        moves.push_back(Move::gluing_edge(u, v));
            // glue-vertex exploration is bounded to small hosts; the subset
            // space is the whole power set
            if (n < Graph::max_order && n <= 16) {
                std::uint64_t full = VertexSet::first(n).bits();
                for (std::uint64_t s = 1; s < full; ++s)
                    moves.push_back(Move::gluing_vertex(VertexSet(s)));
            }
        }
        return moves;
    }

    // The I1/I3 predicate behind a candidate move (I2/I4 share the same shape).
    bool move_legal(const Graph& g, const Move& m, bool& tainted) {
        switch (m.kind) {
            case MoveKind::delete_vertex: {
                VertexSet nb = g.neighborhood(m.v);
                if (nb.empty()) return false;
                bool t = false;
                bool ok = decide(g.induced(nb), policy_.glue_depth, t);
                tainted |= t;
                return ok;
            }
            case MoveKind::delete_edge:
            case MoveKind::glue_edge: {
                VertexSet cn = g.common_neighborhood(m.u, m.v);
                if (cn.empty()) return false;
                bool t = false;
                bool ok = decide(g.induced(cn), policy_.glue_depth, t);
                tainted |= t;
                return ok;
            }
            case MoveKind::glue_vertex: {
                if (m.attachment.empty()) return false;
                bool t = false;
                bool ok = decide(g.induced(m.attachment), policy_.glue_depth, t);
                tainted |= t;
                return ok;
            }
        }
        return false;
    }

    static Graph apply_unchecked(const Graph& g, const Move& m) {
        switch (m.kind) {
            case MoveKind::delete_vertex:
                return g.without_vertex(m.v);
            case MoveKind::delete_edge:
                return g.without_edge(m.u, m.v);
            case MoveKind::glue_edge:
                return g.with_edge(m.u, m.v);
            case MoveKind::glue_vertex:
                return g.with_vertex(m.attachment);
        }
        throw std::logic_error("unreachable move kind");
    }

    bool search(const Graph& g, int budget, bool& tainted) {
        for (const Move& m : candidate_moves(g, budget)) {
            bool is_glue = m.kind == MoveKind::glue_vertex || m.kind == MoveKind::glue_edge;
            if (!move_legal(g, m, tainted)) continue;
            bool t = false;
            if (decide(apply_unchecked(g, m), is_glue ? budget - 1 : budget, t)) return true;
            tainted |= t;
        }
        return false;
    }

    // Greedy descent over memoized verdicts; g must be contractible.
    Certificate build_certificate(const Graph& start) {
        Certificate cert;
        Graph g = start;
        int budget = policy_.glue_depth;
        while (g.order() > 1) {
            if (g.cone_apex()) {
                // peel non-apex vertices from the top; deletions keep the
                // graph a cone but may relabel the apex, so re-query it
                while (g.order() > 1) {
                    int apex = *g.cone_apex();
                    int v = g.order() - 1;
                    if (v == apex) --v;
                    cert.steps.push_back(Move::deleting_vertex(v));
                    g = g.without_vertex(v);
                }
                break;
            }
            bool advanced = false;
            for (const Move& m : candidate_moves(g, budget)) {
                bool ignored = false;
                if (!move_legal(g, m, ignored)) continue;
                Graph next = apply_unchecked(g, m);
                bool is_glue = m.kind == MoveKind::glue_vertex || m.kind == MoveKind::glue_edge;
                bool t = false;
                if (!decide(next, is_glue ? budget - 1 : budget, t)) continue;
                cert.steps.push_back(m);
                g = std::move(next);
                if (is_glue) --budget;
                advanced = true;
                break;
            }
            if (!advanced)
                throw std::logic_error("certificate reconstruction stalled on a contractible graph");
        }
        return cert;
    }

private:
    const Policy& policy_;
    MemoCache& cache_;
    std::unordered_set<std::string> in_progress_;
};

}  // namespace

bool can_delete_vertex(const Graph& g, int v, const Policy& policy, MemoCache& cache) {
    VertexSet nb = g.neighborhood(v);
    if (nb.empty() || g.order() < 2) return false;
    return Decider(policy, cache).membership(g.induced(nb));
}

bool can_delete_edge(const Graph& g, int u, int v, const Policy& policy, MemoCache& cache) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("delete-edge: {" + std::to_string(u) + "," +
                                                       std::to_string(v) + "} is not an edge");
    VertexSet cn = g.common_neighborhood(u, v);
    if (cn.empty()) return false;
    return Decider(policy, cache).membership(g.induced(cn));
}

bool can_glue_edge(const Graph& g, int u, int v, const Policy& policy, MemoCache& cache) {
    if (u == v) throw std::invalid_argument("glue-edge: endpoints must differ");
    if (g.adjacent(u, v)) throw std::invalid_argument("glue-edge: {" + std::to_string(u) + "," +
                                                      std::to_string(v) + "} is already an edge");
    VertexSet cn = g.common_neighborhood(u, v);
    if (cn.empty()) return false;
    return Decider(policy, cache).membership(g.induced(cn));
}

bool can_glue_vertex(const Graph& g, VertexSet attachment, const Policy& policy,
                     MemoCache& cache) {
    if (attachment.empty()) return false;
    if ((attachment.bits() & ~g.vertices().bits()) != 0)
        throw std::out_of_range("glue-vertex: attachment outside the graph");
    return Decider(policy, cache).membership(g.induced(attachment));
}

Graph apply_move(const Graph& g, const Move& m, const Policy& policy, MemoCache& cache) {
    switch (m.kind) {
        case MoveKind::delete_vertex:
            if (!can_delete_vertex(g, m.v, policy, cache))
                throw std::invalid_argument("I1 delete-vertex " + std::to_string(m.v) +
                                            " illegal: neighborhood is empty or not contractible");
            return g.without_vertex(m.v);
        case MoveKind::delete_edge:
            if (!can_delete_edge(g, m.u, m.v, policy, cache))
                throw std::invalid_argument("I3 delete-edge {" + std::to_string(m.u) + "," +
                                            std::to_string(m.v) +
                                            "} illegal: common neighborhood is empty or not "
                                            "contractible");
            return g.without_edge(m.u, m.v);
        case MoveKind::glue_edge:
            if (!can_glue_edge(g, m.u, m.v, policy, cache))
                throw std::invalid_argument("I4 glue-edge {" + std::to_string(m.u) + "," +
                                            std::to_string(m.v) +
                                            "} illegal: common neighborhood is empty or not "
                                            "contractible");
            return g.with_edge(m.u, m.v);
        case MoveKind::glue_vertex:
            if (!can_glue_vertex(g, m.attachment, policy, cache))
                throw std::invalid_argument(
                    "I2 glue-vertex illegal: attachment is empty or not contractible");
            return g.with_vertex(m.attachment);
    }
    throw std::logic_error("unreachable move kind");
}

bool is_contractible(const Graph& g, const Policy& policy, MemoCache& cache) {
    Decider d(policy, cache);
    bool tainted = false;
    return d.decide(g, policy.glue_depth, tainted);
}

Verdict decide_contractible(const Graph& g, const Policy& policy, MemoCache& cache) {
    Decider d(policy, cache);
    bool tainted = false;
    Verdict out;
    out.contractible = d.decide(g, policy.glue_depth, tainted);
    if (out.contractible) out.certificate = d.build_certificate(g);
    return out;
}

ReplayResult replay_certificate(const Graph& g, const Certificate& cert, const Policy& policy) {
    MemoCache fresh;
    Graph cur = g;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        try {
            cur = apply_move(cur, cert.steps[i], policy, fresh);
        } catch (const std::exception& e) {
            return {false, static_cast<int>(i), e.what()};
        }
    }
    if (cur.order() != 1)
        return {false, static_cast<int>(cert.steps.size()), "final graph is not the 1-vertex graph"};
    return {true, -1, ""};
}

VertexSet contractible_vertices(const Graph& g, const Policy& policy, MemoCache& cache) {
    VertexSet out;
    if (g.order() < 2) return out;
    Decider d(policy, cache);
    for (int v = 0; v < g.order(); ++v) {
        VertexSet nb = g.neighborhood(v);
        if (!nb.empty() && d.membership(g.induced(nb))) out.add(v);
    }
    return out;
}

// --- move text ----------------------------------------------------------------

std::string format_move(const Move& m) {
    std::ostringstream out;
    switch (m.kind) {
        case MoveKind::delete_vertex:
            out << "delete-vertex " << m.v;
            break;
        case MoveKind::delete_edge:
            out << "delete-edge " << std::min(m.u, m.v) << " " << std::max(m.u, m.v);
            break;
        case MoveKind::glue_edge:
            out << "glue-edge " << std::min(m.u, m.v) << " " << std::max(m.u, m.v);
            break;
        case MoveKind::glue_vertex: {
            out << "glue-vertex";
            for (int v : m.attachment) out << " " << v;
            break;
        }
    }
    return out.str();
}

std::optional<Move> parse_move(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string word;
    if (!(in >> word)) return std::nullopt;

    auto read_int = [&](int& out) {
        return static_cast<bool>(in >> out) && out >= 0 && out < Graph::max_order;
    };

    if (word == "delete-vertex") {
        int v;
        if (!read_int(v)) return std::nullopt;
        std::string extra;
        if (in >> extra) return std::nullopt;
        return Move::deleting_vertex(v);
    }
    if (word == "delete-edge" || word == "glue-edge") {
        int u, v;
        if (!read_int(u) || !read_int(v) || u == v) return std::nullopt;
        std::string extra;
        if (in >> extra) return std::nullopt;
        return word == "delete-edge" ? Move::deleting_edge(u, v) : Move::gluing_edge(u, v);
    }
    if (word == "glue-vertex") {
        VertexSet s;
        int v;
        while (in >> word) {
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
            if (ec != std::errc{} || ptr != word.data() + word.size() || v < 0 ||
                v >= Graph::max_order)
                return std::nullopt;
            s.add(v);
        }
        if (s.empty()) return std::nullopt;
        return Move::gluing_vertex(s);
    }
    return std::nullopt;
}

std::string format_certificate(const Certificate& cert) {
    std::string out;
    for (const Move& m : cert.steps) {
        out += format_move(m);
        out += '\n';
    }
    return out;
}

}  // namespace contractix
