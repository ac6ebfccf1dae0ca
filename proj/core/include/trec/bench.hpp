#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trec/bipartite.hpp"
#include "trec/oracle.hpp"

namespace trec::bench {

/// One solver run on one instance. `lower_bound` is the tightest known bound:
/// the brute-force optimum when the instance fits the oracle budget, else the
/// exact MinUnCut value of the auxiliary graph when that solver's node cap
/// admits it. cost >= lower_bound whenever both are present.
struct RunReport {
    std::string instance;  // file stem
    int n = 0;
    int lifetime = 0;
    int k_max = 0;               // max component count over snapshots
    long long edge_total = 0;    // sum of |E_t|
    std::string solver;
    std::optional<long long> cost;
    std::optional<long long> lower_bound;
    std::optional<double> ratio;  // cost / lower_bound
    double millis = 0.0;
    std::uint64_t work_units = 0;
    std::string error;  // nonempty when the run failed; the row is kept
};

struct BenchOptions {
    std::vector<std::string> solvers;  // of: exact-dp, approx-exact, approx-local, oracle
    int repetitions = 1;
    std::uint64_t seed = 0;
    bool timing = true;  // false zeroes millis for byte-identical reruns
    std::uint64_t work_cap = default_work_cap;
    std::uint64_t max_states = OracleBudget{}.max_states;
    int restarts = 4;  // approx-local restarts
};

/// Runs every solver on every *.json instance under `dir` (sorted by name).
/// Per-instance failures become rows with `error` set; the run continues.
/// Rows come back sorted by (instance, solver), so output is independent of
/// scheduling.
std::vector<RunReport> run_corpus(const std::string& dir, const BenchOptions& options);

/// Fixed columns: instance,n,T,k_max,solver,cost,lower_bound,ratio,millis,work_units.
std::string reports_to_csv(const std::vector<RunReport>& rows);
std::string reports_to_json(const std::vector<RunReport>& rows, int indent = -1);

}  // namespace trec::bench
