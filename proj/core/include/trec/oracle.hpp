#pragma once

#include <cstdint>
#include <optional>

#include "trec/colouring.hpp"
#include "trec/graph.hpp"
#include "trec/minuncut.hpp"

namespace trec {

/// Brute-force solvers used as ground truth. Deliberately naive enumeration,
/// shared with nothing in the solver modules; single-threaded by contract.

struct OracleBudget {
    /// Cap on enumerated states (assignments swept plus transition pairs
    /// scored). The oracle refuses with CapExceededError, never answers
    /// wrongly.
    std::uint64_t max_states = std::uint64_t{1} << 28;
};

struct OracleStats {
    std::uint64_t states = 0;
    double seconds = 0.0;
};

struct TrecOracleResult {
    bool feasible = false;  // false iff some snapshot has no proper C-colouring
    long long optimum = 0;
    ColouringSequence witness;
    OracleStats stats;
};

/// Exact minimum cost over all temporal sequence C-colourings. Enumerates the
/// proper colourings of each snapshot by a full C^n sweep, then minimizes
/// transition counts over the sequence; all proper sequences are covered.
TrecOracleResult brute_force_trec(const TemporalGraph& g, int palette,
                                  const OracleBudget& budget = {});

/// Structurally different second strategy: sweeps all C^(n*T) assignments
/// outright. Only for toy sizes; used to cross-check brute_force_trec.
TrecOracleResult brute_force_trec_full_sweep(const TemporalGraph& g, int palette,
                                             const OracleBudget& budget = {});

struct MinUnCutOracleResult {
    long long optimum = 0;
    Partition witness;
    OracleStats stats;
};

/// Exact minimum monochromatic edge count by sweeping all 2^n partitions.
MinUnCutOracleResult brute_force_minuncut(const StaticGraph& h,
                                          const OracleBudget& budget = {});

/// Exact C-colourability by sweeping all C^n assignments.
bool is_c_colourable(const StaticGraph& h, int palette, const OracleBudget& budget = {});

}  // namespace trec
