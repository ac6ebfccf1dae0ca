#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "trec/colouring.hpp"
#include "trec/graph.hpp"
#include "trec/minuncut.hpp"

namespace trec {

enum class AuxEdgeClass : std::uint8_t {
    Temporal,    // serialized "C": links (v,t) to (v,t+1)
    Structural,  // serialized "S": opposite-colour pair inside one snapshot component
};

/// Static graph on n*T nodes, one node per (vertex, timestep) pair.
/// Node ids are (t-1)*n + vertex with t 1-based. Temporal edges appear first
/// (t ascending, vertex ascending), then structural edges (t ascending, pair
/// ascending); classes() is aligned with edges().
class AuxiliaryGraph {
public:
    int source_vertex_count() const { return n_; }
    int source_lifetime() const { return lifetime_; }
    int node_count() const { return n_ * lifetime_; }

    int node_id(Vertex vertex, int t) const;                  // t 1-based
    std::pair<Vertex, int> node_origin(int node) const;       // (vertex, t)

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<AuxEdgeClass>& classes() const { return classes_; }
    std::size_t temporal_edge_count() const { return temporal_count_; }
    std::size_t structural_edge_count() const { return edges_.size() - temporal_count_; }

    /// View as a plain static graph (sorted edges) for the MinUnCut solvers.
    StaticGraph as_static() const;

private:
    friend AuxiliaryGraph build_auxiliary(const TemporalGraph&);

    int n_ = 0;
    int lifetime_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<AuxEdgeClass> classes_;
    std::size_t temporal_count_ = 0;
};

/// Structural edges above this trigger a size warning flag on build results.
inline constexpr std::size_t structural_edge_warning_threshold = std::size_t{1} << 20;

/// Builds the auxiliary graph: one temporal edge per vertex per consecutive
/// timestep pair, and one structural edge per opposite-reference-colour pair
/// inside each snapshot component (all pairs, not only snapshot edges).
/// Throws NonBipartiteError (with the timestep) on a non-bipartite snapshot.
AuxiliaryGraph build_auxiliary(const TemporalGraph& g);

/// Partition of the auxiliary nodes induced by a valid sequence: node (v, t)
/// goes to side A iff (colour + t) is even, t 1-based. The partition has
/// exactly cost(g, seq).total monochromatic edges in the auxiliary graph.
/// Throws InvalidInputError on an invalid sequence.
Partition colouring_to_partition(const TemporalGraph& g, const ColouringSequence& seq);

/// Inverse direction: initial colours from the parity rule (colour 0 iff side
/// A and t even, or side B and t odd), then a per-component repair that flips
/// the smaller of the two anchor-consistency classes (ties flip the
/// non-anchor side). The result is always a valid sequence with cost at most
/// twice the partition's monochromatic edge count.
ColouringSequence partition_to_colouring(const TemporalGraph& g, const AuxiliaryGraph& aux,
                                         const Partition& p);

enum class ApproxSolver { Exact, LocalSearch };

struct ApproxOptions {
    ApproxSolver solver = ApproxSolver::LocalSearch;
    std::uint64_t seed = 0;
    int restarts = 4;
    int exact_node_cap = default_exact_node_cap;
};

struct ApproxResult {
    ColouringSequence sequence;
    long long cost = 0;       // cost of `sequence`
    long long uncut = 0;      // monochromatic edges achieved by the solver
    long long bound = 0;      // 2 * uncut
    MinUnCutResult minuncut;
    bool structural_size_warning = false;
};

/// Full pipeline: build the auxiliary graph, solve MinUnCut on it, convert
/// the partition back to a sequence. cost <= 2 * uncut always; with the
/// exact solver the optimum lies in [uncut, 2 * uncut].
ApproxResult solve_approx(const TemporalGraph& g, const ApproxOptions& options = {});

}  // namespace trec
