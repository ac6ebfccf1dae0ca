#include "trec/oracle.hpp"

#include <chrono>
#include <cstdint>
#include <string>

namespace trec {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    std::uint64_t limit;
    std::uint64_t used = 0;

    void charge(std::uint64_t states) {
        if (states > limit - used) {
            throw CapExceededError("oracle budget of " + std::to_string(limit) +
                                   " states exceeded; raise --max-states");
        }
        used += states;
    }
};

// C^exponent, refusing anything the budget could never admit.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (result > limit / base) {
            throw CapExceededError("state space " + std::to_string(base) + "^" +
                                   std::to_string(exponent) + " exceeds the oracle budget of " +
                                   std::to_string(limit));
        }
        result *= base;
    }
    return result;
}

// Mixed-radix counter over assignments; returns false once wrapped around.
bool advance(std::vector<std::int8_t>& digits, int base) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < base) return true;
        digits[i] = 0;
    }
    return false;
}

bool proper_on(const std::vector<std::int8_t>& colours, const EdgeList& edges) {
    for (const Edge& e : edges) {
        if (colours[e.u] == colours[e.v]) return false;
    }
    return true;
}

// Every proper C-colouring of one snapshot, found by a full C^n sweep.
std::vector<std::vector<std::int8_t>> proper_colourings(int n, const EdgeList& edges, int palette,
                                                        Budget& budget) {
    budget.charge(checked_pow(static_cast<std::uint64_t>(palette),
                              static_cast<std::uint64_t>(n), budget.limit));
    std::vector<std::vector<std::int8_t>> result;
    std::vector<std::int8_t> colours(static_cast<std::size_t>(n), 0);
    do {
        if (proper_on(colours, edges)) result.push_back(colours);
    } while (advance(colours, palette));
    return result;
}

long long changes_between(const std::vector<std::int8_t>& a, const std::vector<std::int8_t>& b) {
    long long c = 0;
    for (std::size_t v = 0; v < a.size(); ++v) c += (a[v] != b[v]) ? 1 : 0;
    return c;
}

ColouringSequence to_sequence(const std::vector<std::vector<std::int8_t>>& steps) {
    ColouringSequence seq;
    seq.steps.reserve(steps.size());
    for (const auto& s : steps) seq.steps.emplace_back(s.begin(), s.end());
    return seq;
}

}  // namespace

TrecOracleResult brute_force_trec(const TemporalGraph& g, int palette,
                                  const OracleBudget& budget_spec) {
    if (palette < 1) throw InvalidInputError("palette size must be >= 1");
    const auto started = Clock::now();
    Budget budget{budget_spec.max_states};
    const int T = g.lifetime();

    // Phase 1: per-snapshot proper colourings (sizes first, so the transition
    // budget is charged before anything big is stored).
    std::vector<std::vector<std::vector<std::int8_t>>> per_snapshot;
    per_snapshot.reserve(static_cast<std::size_t>(T));
    TrecOracleResult result;
    for (int t = 1; t <= T; ++t) {
        per_snapshot.push_back(
            proper_colourings(g.vertex_count(), g.snapshot(t), palette, budget));
        if (per_snapshot.back().empty()) {
            result.feasible = false;
            result.stats.states = budget.used;
            result.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
            return result;
        }
    }
    for (int t = 1; t < T; ++t) {
        budget.charge(per_snapshot[t - 1].size() * per_snapshot[t].size());
    }

    // Phase 2: minimize transition counts over every sequence of choices.
    std::vector<std::vector<long long>> table(static_cast<std::size_t>(T));
    table[0].assign(per_snapshot[0].size(), 0);
    for (int t = 1; t < T; ++t) {
        table[t].assign(per_snapshot[t].size(), 0);
        for (std::size_t j = 0; j < per_snapshot[t].size(); ++j) {
            long long best = -1;
            for (std::size_t i = 0; i < per_snapshot[t - 1].size(); ++i) {
                const long long c =
                    table[t - 1][i] + changes_between(per_snapshot[t - 1][i], per_snapshot[t][j]);
                if (best < 0 || c < best) best = c;
            }
            table[t][j] = best;
        }
    }

    std::size_t pick = 0;
    for (std::size_t j = 1; j < table[T - 1].size(); ++j) {
        if (table[T - 1][j] < table[T - 1][pick]) pick = j;
    }

    std::vector<std::vector<std::int8_t>> witness(static_cast<std::size_t>(T));
    witness[T - 1] = per_snapshot[T - 1][pick];
    long long remaining = table[T - 1][pick];
    for (int t = T - 2; t >= 0; --t) {
        for (std::size_t i = 0; i < per_snapshot[t].size(); ++i) {
            if (table[t][i] + changes_between(per_snapshot[t][i], witness[t + 1]) == remaining) {
                witness[t] = per_snapshot[t][i];
                remaining = table[t][i];
                break;
            }
        }
    }

    result.feasible = true;
    result.optimum = table[T - 1][pick];
    result.witness = to_sequence(witness);
    result.stats.states = budget.used;
    result.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return result;
}

TrecOracleResult brute_force_trec_full_sweep(const TemporalGraph& g, int palette,
                                             const OracleBudget& budget_spec) {
    if (palette < 1) throw InvalidInputError("palette size must be >= 1");
    const auto started = Clock::now();
    Budget budget{budget_spec.max_states};
    const int n = g.vertex_count();
    const int T = g.lifetime();
    budget.charge(checked_pow(static_cast<std::uint64_t>(palette),
                              static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(T),
                              budget.limit));

    TrecOracleResult result;
    std::vector<std::int8_t> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(T), 0);
    long long best = -1;
    std::vector<std::int8_t> best_flat;
    do {
        bool proper = true;
        for (int t = 1; t <= T && proper; ++t) {
            for (const Edge& e : g.snapshot(t)) {
                if (flat[(t - 1) * n + e.u] == flat[(t - 1) * n + e.v]) {
                    proper = false;
                    break;
                }
            }
        }
        if (!proper) continue;
        long long changes = 0;
        for (int t = 0; t + 1 < T; ++t) {
            for (int v = 0; v < n; ++v) {
                changes += (flat[t * n + v] != flat[(t + 1) * n + v]) ? 1 : 0;
            }
        }
        if (best < 0 || changes < best) {
            best = changes;
            best_flat = flat;
        }
    } while (advance(flat, palette));

    result.stats.states = budget.used;
    result.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    if (best < 0) {
        result.feasible = false;
        return result;
    }
    result.feasible = true;
    result.optimum = best;
    result.witness.steps.resize(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
        result.witness.steps[t].assign(best_flat.begin() + t * n, best_flat.begin() + (t + 1) * n);
    }
    return result;
}

MinUnCutOracleResult brute_force_minuncut(const StaticGraph& h, const OracleBudget& budget_spec) {
    validate_static_graph(h);
    const auto started = Clock::now();
    Budget budget{budget_spec.max_states};
    if (h.n >= 63) {
        throw CapExceededError("2^" + std::to_string(h.n) + " partitions exceed any budget");
    }
    budget.charge(std::uint64_t{1} << h.n);

    long long best = -1;
    std::uint64_t best_mask = 0;
    const std::uint64_t total = std::uint64_t{1} << h.n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        long long mono = 0;
        for (const Edge& e : h.edges) {
            mono += (((mask >> e.u) & 1u) == ((mask >> e.v) & 1u)) ? 1 : 0;
        }
        if (best < 0 || mono < best) {
            best = mono;
            best_mask = mask;
        }
    }

    MinUnCutOracleResult result;
    result.optimum = best < 0 ? 0 : best;
    result.witness.side.resize(static_cast<std::size_t>(h.n));
    for (int v = 0; v < h.n; ++v) {
        result.witness.side[v] = ((best_mask >> v) & 1u) ? Side::B : Side::A;
    }
    result.stats.states = budget.used;
    result.stats.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return result;
}

bool is_c_colourable(const StaticGraph& h, int palette, const OracleBudget& budget_spec) {
    validate_static_graph(h);
    if (palette < 1) throw InvalidInputError("palette size must be >= 1");
    Budget budget{budget_spec.max_states};
    budget.charge(checked_pow(static_cast<std::uint64_t>(palette),
                              static_cast<std::uint64_t>(h.n), budget.limit));
    std::vector<std::int8_t> colours(static_cast<std::size_t>(h.n), 0);
    do {
        if (proper_on(colours, h.edges)) return true;
    } while (advance(colours, palette));
    return false;
}

}  // namespace trec
