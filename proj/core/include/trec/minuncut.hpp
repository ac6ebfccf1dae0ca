#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trec/graph.hpp"

namespace trec {

enum class Side : std::uint8_t { A, B };

/// Total assignment of every node to one of two sides.
struct Partition {
    std::vector<Side> side;
};

/// Number of edges whose endpoints share a side.
long long count_monochromatic(const StaticGraph& g, const Partition& p);

struct MinUnCutResult {
    Partition partition;
    long long uncut = 0;           // monochromatic edges of `partition`
    std::string solver_tag;
    bool exact = false;
    std::uint64_t work_units = 0;  // search nodes / flip evaluations
};

inline constexpr int default_exact_node_cap = 30;

/// Exact minimum by branch and bound over side assignments, pruned with the
/// sum over unassigned vertices of min(edges to A, edges to B). Refuses
/// graphs with more than node_cap vertices (CapExceededError).
MinUnCutResult solve_minuncut_exact(const StaticGraph& g,
                                    int node_cap = default_exact_node_cap);

struct LocalSearchOptions {
    std::uint64_t seed = 0;
    int restarts = 1;  // restart 0 is the greedy BFS start; the rest are random
};

/// BFS 2-colouring per component as the assignment; non-bipartite components
/// keep the layer-parity assignment.
Partition greedy_bipartition(const StaticGraph& g);

/// Single-node flip local search to a local minimum, multi-restart.
/// Deterministic given (seed, restarts); the best (lowest uncut, then lowest
/// restart index) partition wins.
MinUnCutResult solve_minuncut_heuristic(const StaticGraph& g,
                                        const LocalSearchOptions& options = {});

}  // namespace trec
