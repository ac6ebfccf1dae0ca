#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trec/graph.hpp"

namespace trec {

/// One colour per vertex; entries in [0, C-1]. C = 2 everywhere except the
/// brute-force oracles.
using Colouring = std::vector<int>;

/// One colouring per snapshot; steps[0] is the colouring of G_1.
struct ColouringSequence {
    std::vector<Colouring> steps;
};

/// Breakdown of the number of per-vertex colour changes across transitions.
/// total == sum(per_vertex) == sum(per_transition).
struct CostReport {
    long long total = 0;
    std::vector<long long> per_vertex;      // length n
    std::vector<long long> per_transition;  // length T-1
};

/// Outcome of validate_sequence. On failure, `timestep` (1-based) points at
/// the earliest violating snapshot; exactly one of `monochrome_edge` /
/// `bad_colour_vertex` is set.
struct ValidationResult {
    bool ok = true;
    int timestep = 0;
    std::optional<Edge> monochrome_edge;
    std::optional<Vertex> bad_colour_vertex;
};

/// True iff no edge has equal-coloured endpoints. Throws std::out_of_range
/// if an edge endpoint is outside the colouring.
bool is_proper(const Colouring& colouring, const EdgeList& edges);

/// Total and per-vertex / per-transition colour-change counts.
/// Throws InvalidInputError when the sequence shape does not match g.
CostReport cost(const TemporalGraph& g, const ColouringSequence& seq);

/// Checks that every step is a proper colouring of its snapshot and uses
/// colours < palette. Structural mismatches (wrong length) throw
/// InvalidInputError; colour violations are reported in the result.
/// Per timestep, out-of-range colours are reported before monochrome edges;
/// edges are scanned in sorted order, so the report is deterministic.
ValidationResult validate_sequence(const TemporalGraph& g, const ColouringSequence& seq,
                                   int palette = 2);

}  // namespace trec
