#include "contractix/axiom.hpp"

#include <sstream>
#include <stdexcept>

namespace contractix {

bool o_subgraph_contractible(const Graph& g, int v, int u, const Policy& policy,
                             MemoCache& cache) {
    if (v == u) throw std::invalid_argument("O(vu) requires distinct vertices");
    if (g.adjacent(v, u))
        throw std::invalid_argument("O(vu) is defined for nonadjacent pairs; {" +
                                    std::to_string(v) + "," + std::to_string(u) + "} is an edge");
    VertexSet cn = g.common_neighborhood(v, u);
    if (cn.empty()) return false;
    return is_contractible(g.induced(cn), policy, cache);
}

AxiomReport audit_axiom(const Graph& g, const Policy& policy, MemoCache& cache) {
    AxiomReport report;
    report.graph = canonical_key(g);
    report.contractible = is_contractible(g, policy, cache);

    for (int v = 0; v < g.order(); ++v) {
        VertexAxiomRecord rec;
        rec.v = v;
        VertexSet others = g.vertices();
        others.remove(v);
        rec.nonadjacent = others - g.neighborhood(v);
        rec.vacuous = rec.nonadjacent.empty();
        for (int u : rec.nonadjacent)
            if (o_subgraph_contractible(g, v, u, policy, cache)) rec.witnesses.add(u);
        rec.violated = !rec.vacuous && rec.witnesses.empty();
        if (rec.violated) report.violations.push_back(v);
        report.vertices.push_back(rec);
    }
    report.is_counterexample = report.contractible && !report.violations.empty();
    return report;
}

ContractibleVertexAudit audit_min_contractible_vertices(const Graph& g, const Policy& policy,
                                                        MemoCache& cache) {
    ContractibleVertexAudit audit;
    audit.count = contractible_vertices(g, policy, cache).count();
    audit.claim_holds = !is_contractible(g, policy, cache) || audit.count >= 2;
    return audit;
}

namespace {

void append_set(std::ostringstream& out, VertexSet s) {
    out << "[";
    bool first = true;
    for (int v : s) {
        if (!first) out << ",";
        out << v;
        first = false;
    }
    out << "]";
}

}  // namespace

std::string format_axiom_report(const AxiomReport& report, bool json) {
    std::ostringstream out;
    if (json) {
        out << "{\"graph\":\"" << report.graph.hex() << "\",";
        out << "\"contractible\":" << (report.contractible ? "true" : "false") << ",";
        out << "\"vertices\":[";
        for (std::size_t i = 0; i < report.vertices.size(); ++i) {
            const VertexAxiomRecord& rec = report.vertices[i];
            if (i) out << ",";
            out << "{\"v\":" << rec.v << ",\"nonadjacent\":";
            append_set(out, rec.nonadjacent);
            out << ",\"witnesses\":";
            append_set(out, rec.witnesses);
            out << ",\"vacuous\":" << (rec.vacuous ? "true" : "false");
            out << ",\"violated\":" << (rec.violated ? "true" : "false") << "}";
        }
        out << "],\"violations\":[";
        for (std::size_t i = 0; i < report.violations.size(); ++i) {
            if (i) out << ",";
            out << report.violations[i];
        }
        out << "],\"is_counterexample\":" << (report.is_counterexample ? "true" : "false") << "}";
        return out.str();
    }

    out << "graph " << report.graph.hex() << "\n";
    out << "contractible " << (report.contractible ? "true" : "false") << "\n";
    for (const VertexAxiomRecord& rec : report.vertices) {
        out << "vertex " << rec.v << " nonadjacent ";
        append_set(out, rec.nonadjacent);
        out << " witnesses ";
        append_set(out, rec.witnesses);
        out << (rec.vacuous ? " vacuous" : (rec.violated ? " violated" : " satisfied")) << "\n";
    }
    out << "violations ";
    append_set(out, [&] {
        VertexSet s;
        for (int v : report.violations) s.add(v);
        return s;
    }());
    out << "\n";
    out << "is_counterexample " << (report.is_counterexample ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace contractix
