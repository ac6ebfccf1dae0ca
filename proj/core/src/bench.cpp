#include "trec/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "trec/auxiliary.hpp"
#include "trec/exact_dp.hpp"
#include "trec/json_io.hpp"
#include "trec/rng.hpp"

namespace trec::bench {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

struct SolveOutcome {
    long long cost = 0;
    std::uint64_t work_units = 0;
    ColouringSequence sequence;
    bool has_sequence = false;
};

SolveOutcome run_solver(const std::string& solver, const TemporalGraph& g,
                        const BenchOptions& options, std::uint64_t row_seed) {
    SolveOutcome out;
    if (solver == "exact-dp") {
        CostTable table = build_cost_table(g, DpOptions{false, options.work_cap});
        out.sequence = recover_sequence(g, table);
        out.has_sequence = true;
        out.cost = table.optimum();
        out.work_units = table.work().pair_evaluations;
    } else if (solver == "approx-exact") {
        ApproxOptions ao;
        ao.solver = ApproxSolver::Exact;
        ApproxResult r = solve_approx(g, ao);
        out.sequence = std::move(r.sequence);
        out.has_sequence = true;
        out.cost = r.cost;
        out.work_units = r.minuncut.work_units;
    } else if (solver == "approx-local") {
        ApproxOptions ao;
        ao.solver = ApproxSolver::LocalSearch;
        ao.seed = row_seed;
        ao.restarts = options.restarts;
        ApproxResult r = solve_approx(g, ao);
        out.sequence = std::move(r.sequence);
        out.has_sequence = true;
        out.cost = r.cost;
        out.work_units = r.minuncut.work_units;
    } else if (solver == "oracle") {
        TrecOracleResult r = brute_force_trec(g, 2, OracleBudget{options.max_states});
        if (!r.feasible) throw InvalidInputError("instance has no proper 2-colouring sequence");
        out.sequence = std::move(r.witness);
        out.has_sequence = true;
        out.cost = r.optimum;
        out.work_units = r.stats.states;
    } else {
        throw InvalidInputError("unknown solver \"" + solver + "\"");
    }
    return out;
}

std::optional<long long> lower_bound_for(const TemporalGraph& g, const BenchOptions& options) {
    // tightest first: the brute-force optimum when it fits the budget, then
    // the exact MinUnCut value of the auxiliary graph
    try {
        TrecOracleResult r = brute_force_trec(g, 2, OracleBudget{options.max_states});
        if (r.feasible) return r.optimum;
        return std::nullopt;
    } catch (const CapExceededError&) {
    }
    try {
        AuxiliaryGraph aux = build_auxiliary(g);
        return solve_minuncut_exact(aux.as_static()).uncut;
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string format_double(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buffer[8];
                    std::snprintf(buffer, sizeof buffer, "\\u%04x", c);
                    out += buffer;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

std::vector<RunReport> run_corpus(const std::string& dir, const BenchOptions& options) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<RunReport> rows;
    for (const auto& path : files) {
        const std::string stem = path.stem().string();

        RunReport meta;
        meta.instance = stem;
        std::optional<TemporalGraph> instance;
        try {
            instance = parse_instance_json(read_text_file(path.string()));
            meta.n = instance->vertex_count();
            meta.lifetime = instance->lifetime();
            for (int t = 1; t <= instance->lifetime(); ++t) {
                const auto& edges = instance->snapshot(t);
                meta.edge_total += static_cast<long long>(edges.size());
                meta.k_max = std::max(
                    meta.k_max, components(instance->vertex_count(), edges).component_count);
            }
        } catch (const Error& e) {
            for (const auto& solver : options.solvers) {
                RunReport row = meta;
                row.solver = solver;
                row.error = e.what();
                rows.push_back(std::move(row));
            }
            continue;
        }

        const std::optional<long long> lb = lower_bound_for(*instance, options);
        const std::uint64_t row_seed = splitmix64(options.seed ^ fnv1a(stem));

        for (const auto& solver : options.solvers) {
            RunReport row = meta;
            row.solver = solver;
            row.lower_bound = lb;
            try {
                SolveOutcome out;
                double best_millis = -1.0;
                const int reps = std::max(1, options.repetitions);
                for (int rep = 0; rep < reps; ++rep) {
                    const auto start = Clock::now();
                    out = run_solver(solver, *instance, options, row_seed);
                    const double ms =
                        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
                    if (best_millis < 0 || ms < best_millis) best_millis = ms;
                }
                if (out.has_sequence) {
                    if (!validate_sequence(*instance, out.sequence).ok ||
                        cost(*instance, out.sequence).total != out.cost) {
                        throw Error("solver emitted a sequence that does not match its cost");
                    }
                }
                row.cost = out.cost;
                row.work_units = out.work_units;
                row.millis = options.timing ? best_millis : 0.0;
                if (lb) {
                    row.ratio = (*lb == 0) ? (out.cost == 0 ? 1.0 : -1.0)
                                           : static_cast<double>(out.cost) /
                                                 static_cast<double>(*lb);
                }
            } catch (const Error& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }

    std::sort(rows.begin(), rows.end(), [](const RunReport& a, const RunReport& b) {
        if (a.instance != b.instance) return a.instance < b.instance;
        return a.solver < b.solver;
    });
    return rows;
}

std::string reports_to_csv(const std::vector<RunReport>& rows) {
    std::ostringstream out;
    out << "instance,n,T,k_max,solver,cost,lower_bound,ratio,millis,work_units\n";
    for (const RunReport& r : rows) {
        out << r.instance << ',' << r.n << ',' << r.lifetime << ',' << r.k_max << ',' << r.solver
            << ',';
        if (r.cost) out << *r.cost;
        else out << "NA";
        out << ',';
        if (r.lower_bound) out << *r.lower_bound;
        else out << "NA";
        out << ',';
        if (r.ratio && *r.ratio >= 0) out << format_double(*r.ratio, 4);
        else if (r.ratio) out << "inf";
        else out << "NA";
        out << ',' << format_double(r.millis, 3) << ',' << r.work_units << '\n';
    }
    return out.str();
}

std::string reports_to_json(const std::vector<RunReport>& rows, int indent) {
    // hand-rolled to keep vendor headers out of the public surface
    std::ostringstream out;
    const char* sep = indent >= 0 ? "\n" : "";
    out << '[' << sep;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RunReport& r = rows[i];
        out << "{\"instance\":\"" << json_escape(r.instance) << "\",\"n\":" << r.n
            << ",\"T\":" << r.lifetime << ",\"k_max\":" << r.k_max << ",\"solver\":\""
            << json_escape(r.solver) << "\",\"cost\":";
        if (r.cost) out << *r.cost;
        else out << "null";
        out << ",\"lower_bound\":";
        if (r.lower_bound) out << *r.lower_bound;
        else out << "null";
        out << ",\"ratio\":";
        if (r.ratio && *r.ratio >= 0) out << format_double(*r.ratio, 4);
        else out << "null";
        out << ",\"millis\":" << format_double(r.millis, 3) << ",\"work_units\":" << r.work_units;
        out << ",\"error\":\"" << json_escape(r.error) << "\"}";
        if (i + 1 < rows.size()) out << ',';
        out << sep;
    }
    out << ']';
    return out.str();
}

}  // namespace trec::bench
