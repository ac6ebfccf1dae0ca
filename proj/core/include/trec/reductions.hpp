#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trec/graph.hpp"

namespace trec {

/// Traceability record for reduce_minuncut_to_trec: which path of fresh
/// vertices stands in for each input vertex, and which second-snapshot edge
/// stands in for each input edge (aligned with `h_edges`).
struct GadgetMap {
    std::vector<std::vector<Vertex>> vertex_gadgets;
    std::vector<Edge> h_edges;                      // sorted input edges
    std::vector<std::pair<Vertex, Vertex>> edge_gadgets;
};

struct MinUnCutReduction {
    TemporalGraph graph;
    GadgetMap map;
};

/// Lifetime-2 instance whose optimum cost equals the minimum number of
/// monochromatic edges over all bipartitions of h. Snapshot 1 is a disjoint
/// union of paths (one per input vertex, 2*deg-1 vertices each); snapshot 2
/// is a matching with one edge per input edge. Input vertices of degree 0
/// are rejected (InvalidInputError); strip them first with strip_isolated.
MinUnCutReduction reduce_minuncut_to_trec(const StaticGraph& h);

/// Removes degree-0 vertices and renumbers the rest, preserving order.
/// The MinUnCut optimum is unchanged.
StaticGraph strip_isolated(const StaticGraph& g);

/// Lifetime-m instance with exactly one edge per snapshot (ascending
/// normalized edge order); a zero-cost C-colouring of it exists iff g is
/// C-colourable. Throws InvalidInputError on an empty edge set.
TemporalGraph reduce_colouring_to_zero_cost(const StaticGraph& g);

enum class Family {
    AlwaysPath,          // every snapshot a disjoint union of paths
    AlwaysBipartite,     // per-snapshot random bipartition, cross edges only
    ArbitraryBipartite,  // arbitrary random snapshots, resampled until bipartite
};

struct GeneratorSpec {
    int n = 1;
    int lifetime = 1;
    Family family = Family::AlwaysPath;
    std::optional<double> edge_probability;   // exactly one of these two
    std::optional<int> edges_per_snapshot;
    std::uint64_t seed = 0;
};

/// Seeded random instance generator; deterministic given its parameters.
/// Throws InvalidInputError on infeasible parameters (including repeated
/// rejection-sampling failure for ArbitraryBipartite).
TemporalGraph generate_random(const GeneratorSpec& spec);

}  // namespace trec
