#pragma once

#include <cstdint>
#include <vector>

#include "trec/bipartite.hpp"
#include "trec/colouring.hpp"
#include "trec/graph.hpp"

namespace trec {

struct DpOptions {
    /// Keep only the final column; recover_sequence is then unavailable.
    bool cost_only = false;
    /// Refuses instances whose projected enumeration units (colourings times
    /// vertices) or colouring-pair evaluations exceed this.
    std::uint64_t work_cap = default_work_cap;
};

struct WorkCounters {
    std::uint64_t pair_evaluations = 0;      // (predecessor, colouring) pairs scored
    std::uint64_t colourings_enumerated = 0;  // rows materialized across snapshots
};

/// The dynamic-programming table of minimum budgets: column t holds one entry
/// per proper colouring of snapshot t (indexed per SnapshotColouringSet).
class CostTable {
public:
    int lifetime() const { return static_cast<int>(structures_.size()); }
    bool cost_only() const { return cost_only_; }

    /// Minimum over the final column: the optimum cost of the instance.
    long long optimum() const;

    /// Column for timestep t (1-based). With cost_only, only t == T exists.
    const std::vector<long long>& column(int t) const;

    /// Component structure of snapshot t (1-based).
    const ComponentStructure& structure(int t) const;

    const WorkCounters& work() const { return work_; }

private:
    friend CostTable build_cost_table(const TemporalGraph&, const DpOptions&);

    std::vector<std::vector<long long>> columns_;  // [t-1] or just the last
    std::vector<ComponentStructure> structures_;   // always all T
    bool cost_only_ = false;
    WorkCounters work_;
};

/// Hamming distance between two colourings. Throws InvalidInputError on
/// length mismatch.
long long transition_cost(const Colouring& a, const Colouring& b);

/// Builds the table column-by-column. Throws NonBipartiteError (with the
/// 1-based timestep) when a snapshot has no proper 2-colouring and
/// CapExceededError when the projected work exceeds options.work_cap.
/// Ties in the recurrence resolve to the smallest predecessor index, so the
/// table is identical across runs.
CostTable build_cost_table(const TemporalGraph& g, const DpOptions& options = {});

/// Backtracks one optimal sequence out of a fully retained table. The result
/// validates against g and its cost equals table.optimum(). Throws
/// std::logic_error on a cost-only table.
ColouringSequence recover_sequence(const TemporalGraph& g, const CostTable& table);

}  // namespace trec
