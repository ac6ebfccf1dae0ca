#include "trec/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trec {

namespace {

void check_edge_list(int n, const EdgeList& edges, const std::string& where) {
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw InvalidInputError(where + ": self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u < 0 || e.v >= n) {
            throw InvalidInputError(where + ": edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") out of range for n=" +
                                    std::to_string(n));
        }
    }
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        throw InvalidInputError(where + ": duplicate edge (" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + ")");
    }
}

EdgeList normalize(const std::vector<std::pair<int, int>>& raw) {
    EdgeList edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw) edges.emplace_back(a, b);
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

StaticGraph make_static_graph(int n, const std::vector<std::pair<int, int>>& raw_edges) {
    if (n < 0) throw InvalidInputError("static graph: negative vertex count");
    StaticGraph g{n, normalize(raw_edges)};
    check_edge_list(n, g.edges, "static graph");
    return g;
}

void validate_static_graph(const StaticGraph& g) {
    if (g.n < 0) throw InvalidInputError("static graph: negative vertex count");
    if (!std::is_sorted(g.edges.begin(), g.edges.end())) {
        throw InvalidInputError("static graph: edge list not sorted");
    }
    check_edge_list(g.n, g.edges, "static graph");
}

TemporalGraph::TemporalGraph(int n, std::vector<std::vector<std::pair<int, int>>> raw_snapshots)
    : n_(n) {
    snapshots_.reserve(raw_snapshots.size());
    for (auto& raw : raw_snapshots) snapshots_.push_back(normalize(raw));
    validate();
}

TemporalGraph TemporalGraph::from_edge_lists(int n, std::vector<EdgeList> snapshots) {
    TemporalGraph g;
    g.n_ = n;
    g.snapshots_ = std::move(snapshots);
    for (auto& edges : g.snapshots_) std::sort(edges.begin(), edges.end());
    g.validate();
    return g;
}

void TemporalGraph::validate() const {
    if (n_ < 1) throw InvalidInputError("temporal graph: vertex count must be >= 1");
    if (snapshots_.empty()) throw InvalidInputError("temporal graph: lifetime must be >= 1");
    for (std::size_t i = 0; i < snapshots_.size(); ++i) {
        check_edge_list(n_, snapshots_[i], "snapshot " + std::to_string(i + 1));
    }
}

const EdgeList& TemporalGraph::snapshot(int t) const {
    if (t < 1 || t > lifetime()) {
        throw std::out_of_range("timestep " + std::to_string(t) + " outside [1, " +
                                std::to_string(lifetime()) + "]");
    }
    return snapshots_[static_cast<std::size_t>(t - 1)];
}

StaticGraph underlying_graph(const TemporalGraph& g) {
    EdgeList all;
    for (const auto& edges : g.snapshots()) all.insert(all.end(), edges.begin(), edges.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return StaticGraph{g.vertex_count(), std::move(all)};
}

std::vector<Vertex> neighbours(const TemporalGraph& g, Vertex v, int t) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                                std::to_string(g.vertex_count() - 1) + "]");
    }
    std::vector<Vertex> result;
    for (const Edge& e : g.snapshot(t)) {
        if (e.u == v) result.push_back(e.v);
        if (e.v == v) result.push_back(e.u);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace trec
