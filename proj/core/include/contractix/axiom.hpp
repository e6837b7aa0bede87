#pragma once

#include <string>
#include <vector>

#include "contractix/canonical.hpp"
#include "contractix/contract.hpp"
#include "contractix/graph.hpp"

namespace contractix {

struct VertexAxiomRecord {
    int v = 0;
    VertexSet nonadjacent;  // vertices other than v not adjacent to v
    VertexSet witnesses;    // nonadjacent u with O(vu) contractible
    bool vacuous = false;   // v is adjacent to every other vertex
    bool violated = false;  // nonadjacent nonempty and no witness
};

/// Verdict of the neighborhood-extension axiom on one graph: a counterexample
/// is a contractible graph with a vertex that has nonadjacent vertices but no
/// nonadjacent u whose common-neighborhood subgraph O(vu) is contractible.
struct AxiomReport {
    CanonicalKey graph;
    bool contractible = false;
    std::vector<VertexAxiomRecord> vertices;  // one record per vertex
    std::vector<int> violations;              // violated vertices, ascending
    bool is_counterexample = false;
};

// O(vu): the subgraph induced by N(v) & N(u) is nonempty and contractible.
// v and u must be distinct and nonadjacent.
bool o_subgraph_contractible(const Graph& g, int v, int u, const Policy& policy,
                             MemoCache& cache);

// Audits every vertex; runs on non-contractible graphs too (flagged), since
// being a counterexample requires contractibility.
AxiomReport audit_axiom(const Graph& g, const Policy& policy, MemoCache& cache);

struct ContractibleVertexAudit {
    int count = 0;          // |{v : can_delete_vertex}|
    bool claim_holds = true;  // not contractible, or count >= 2
};

// Audits the claim that every contractible graph has two contractible vertices.
ContractibleVertexAudit audit_min_contractible_vertices(const Graph& g, const Policy& policy,
                                                        MemoCache& cache);

// Stable serialization; field names: graph, contractible, vertices[],
// violations[], is_counterexample.
std::string format_axiom_report(const AxiomReport& report, bool json);

}  // namespace contractix
