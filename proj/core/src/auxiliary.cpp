#include "trec/auxiliary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "trec/bipartite.hpp"

namespace trec {

int AuxiliaryGraph::node_id(Vertex vertex, int t) const {
    if (vertex < 0 || vertex >= n_ || t < 1 || t > lifetime_) {
        throw std::out_of_range("auxiliary node (" + std::to_string(vertex) + ", " +
                                std::to_string(t) + ") out of range");
    }
    return (t - 1) * n_ + vertex;
}

std::pair<Vertex, int> AuxiliaryGraph::node_origin(int node) const {
    if (node < 0 || node >= node_count()) {
        throw std::out_of_range("auxiliary node id " + std::to_string(node));
    }
    return {node % n_, node / n_ + 1};
}

StaticGraph AuxiliaryGraph::as_static() const {
    StaticGraph g;
    g.n = node_count();
    g.edges.reserve(edges_.size());
    for (auto [a, b] : edges_) g.edges.emplace_back(a, b);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

AuxiliaryGraph build_auxiliary(const TemporalGraph& g) {
    AuxiliaryGraph aux;
    aux.n_ = g.vertex_count();
    aux.lifetime_ = g.lifetime();

    const int n = aux.n_;
    const int T = aux.lifetime_;

    for (int t = 1; t < T; ++t) {
        for (Vertex v = 0; v < n; ++v) {
            aux.edges_.emplace_back((t - 1) * n + v, t * n + v);
            aux.classes_.push_back(AuxEdgeClass::Temporal);
        }
    }
    aux.temporal_count_ = aux.edges_.size();

    for (int t = 1; t <= T; ++t) {
        ComponentStructure s = components(n, g.snapshot(t));
        if (!s.bipartite()) {
            throw NonBipartiteError(
                "snapshot " + std::to_string(t) + " is not bipartite; auxiliary graph undefined",
                t);
        }
        const Colouring& ref = *s.reference;
        // all opposite-colour pairs within each component, ascending (i, j)
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) {
                if (s.component_of[i] == s.component_of[j] && ref[i] != ref[j]) {
                    aux.edges_.emplace_back((t - 1) * n + i, (t - 1) * n + j);
                    aux.classes_.push_back(AuxEdgeClass::Structural);
                }
            }
        }
    }
    return aux;
}

Partition colouring_to_partition(const TemporalGraph& g, const ColouringSequence& seq) {
    ValidationResult check = validate_sequence(g, seq, 2);
    if (!check.ok) {
        throw InvalidInputError("sequence is not a valid 2-colouring sequence (timestep " +
                                std::to_string(check.timestep) + ")");
    }
    const int n = g.vertex_count();
    Partition p;
    p.side.resize(static_cast<std::size_t>(n) * g.lifetime());
    for (int t = 1; t <= g.lifetime(); ++t) {
        for (Vertex v = 0; v < n; ++v) {
            const int c = seq.steps[static_cast<std::size_t>(t - 1)][v];
            p.side[(t - 1) * n + v] = ((c + t) % 2 == 0) ? Side::A : Side::B;
        }
    }
    return p;
}

namespace {

// Flips one snapshot's colouring into a proper one, component by component.
// The two classes split vertices by consistency with the component's anchor
// (smallest vertex id): same colour and same reference class, or different
// colour and different reference class.
void repair_snapshot(Colouring& step, const ComponentStructure& s) {
    const Colouring& ref = *s.reference;
    const int n = s.vertex_count();
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(s.component_count));
    for (Vertex v = 0; v < n; ++v) members[s.component_of[v]].push_back(v);

    for (const auto& comp : members) {
        const Vertex anchor = comp.front();  // members are ascending by construction
        const int anchor_diff = step[anchor] ^ ref[anchor];
        std::vector<Vertex> consistent, inconsistent;
        for (Vertex v : comp) {
            if ((step[v] ^ ref[v]) == anchor_diff) {
                consistent.push_back(v);
            } else {
                inconsistent.push_back(v);
            }
        }
        if (inconsistent.empty()) continue;  // already proper on this component
        // flip the strictly smaller class; ties flip the non-anchor side
        const auto& flip = consistent.size() < inconsistent.size() ? consistent : inconsistent;
        for (Vertex v : flip) step[v] = 1 - step[v];
    }
}

}  // namespace

ColouringSequence partition_to_colouring(const TemporalGraph& g, const AuxiliaryGraph& aux,
                                         const Partition& p) {
    if (aux.source_vertex_count() != g.vertex_count() || aux.source_lifetime() != g.lifetime()) {
        throw InvalidInputError("auxiliary graph does not match this instance");
    }
    if (static_cast<int>(p.side.size()) != aux.node_count()) {
        throw InvalidInputError("partition covers " + std::to_string(p.side.size()) +
                                " nodes, auxiliary graph has " + std::to_string(aux.node_count()));
    }

    const int n = g.vertex_count();
    ColouringSequence seq;
    seq.steps.reserve(static_cast<std::size_t>(g.lifetime()));
    for (int t = 1; t <= g.lifetime(); ++t) {
        Colouring step(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            const bool a = p.side[(t - 1) * n + v] == Side::A;
            step[v] = a ? (t % 2) : ((t + 1) % 2);
        }
        repair_snapshot(step, components(n, g.snapshot(t)));
        seq.steps.push_back(std::move(step));
    }
    return seq;
}

ApproxResult solve_approx(const TemporalGraph& g, const ApproxOptions& options) {
    AuxiliaryGraph aux = build_auxiliary(g);
    const StaticGraph static_aux = aux.as_static();

    MinUnCutResult mr;
    if (options.solver == ApproxSolver::Exact) {
        mr = solve_minuncut_exact(static_aux, options.exact_node_cap);
    } else {
        mr = solve_minuncut_heuristic(static_aux,
                                      LocalSearchOptions{options.seed, options.restarts});
    }

    ApproxResult result;
    result.sequence = partition_to_colouring(g, aux, mr.partition);
    result.cost = cost(g, result.sequence).total;
    result.uncut = mr.uncut;
    result.bound = 2 * mr.uncut;
    result.structural_size_warning =
        aux.structural_edge_count() > structural_edge_warning_threshold;
    result.minuncut = std::move(mr);
    return result;
}

}  // namespace trec
