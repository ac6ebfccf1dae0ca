#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "trec/errors.hpp"

namespace trec {

using Vertex = int;

/// Undirected edge, normalized to u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

/// Static (non-temporal) graph on vertices 0..n-1 with a sorted,
/// duplicate-free edge list.
struct StaticGraph {
    int n = 0;
    EdgeList edges;
};

/// Normalizes, sorts and validates a raw pair list into a StaticGraph.
/// Throws InvalidInputError on out-of-range endpoints, self-loops or
/// duplicate edges (duplicates are rejected, never deduplicated).
StaticGraph make_static_graph(int n, const std::vector<std::pair<int, int>>& raw_edges);

/// Validates an already-built StaticGraph (same rules as make_static_graph).
void validate_static_graph(const StaticGraph& g);

/// Ordered sequence of snapshots over a fixed vertex set 0..n-1.
/// Snapshots are stored 0-based internally; every public accessor taking a
/// timestep uses the 1-based convention t in [1, T].
class TemporalGraph {
public:
    /// Validating constructor; throws InvalidInputError unless n >= 1,
    /// T >= 1 and every snapshot is a valid simple edge set.
    TemporalGraph(int n, std::vector<std::vector<std::pair<int, int>>> raw_snapshots);

    /// Construction from already-normalized edge lists (still validated).
    static TemporalGraph from_edge_lists(int n, std::vector<EdgeList> snapshots);

    int vertex_count() const { return n_; }
    int lifetime() const { return static_cast<int>(snapshots_.size()); }

    /// Edge set of snapshot t, 1 <= t <= T. Throws std::out_of_range.
    const EdgeList& snapshot(int t) const;

    /// All snapshots, index 0 holds G_1.
    const std::vector<EdgeList>& snapshots() const { return snapshots_; }

private:
    TemporalGraph() = default;
    void validate() const;

    int n_ = 0;
    std::vector<EdgeList> snapshots_;
};

/// Union of all snapshot edge sets, duplicates removed.
StaticGraph underlying_graph(const TemporalGraph& g);

/// Neighbours of v in snapshot t (1-based), sorted ascending.
/// Throws std::out_of_range on bad v or t.
std::vector<Vertex> neighbours(const TemporalGraph& g, Vertex v, int t);

}  // namespace trec
