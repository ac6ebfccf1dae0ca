#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trec/auxiliary.hpp"
#include "trec/bench.hpp"
#include "trec/bipartite.hpp"
#include "trec/exact_dp.hpp"
#include "trec/json_io.hpp"
#include "trec/oracle.hpp"
#include "trec/reductions.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_infeasible = 1;  // also: verification failure
constexpr int exit_usage = 2;       // bad flags, malformed or invalid input
constexpr int exit_cap = 3;         // a resource cap refused the run

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::uint64_t max_states = trec::OracleBudget{}.max_states;
    std::uint64_t cap = trec::default_work_cap;
    std::string format = "csv";
};

void emit(const std::string& out_path, const std::string& text) {
    trec::write_text_file(out_path, text + (out_path == "-" ? "\n" : ""));
}

json sequence_json(const trec::ColouringSequence& seq) {
    json steps = json::array();
    for (const auto& step : seq.steps) steps.push_back(step);
    return json{{"steps", steps}};
}

trec::TemporalGraph load_instance(const std::string& path) {
    return trec::parse_instance_json(trec::read_text_file(path));
}

trec::StaticGraph load_static(const std::string& path) {
    return trec::parse_static_graph_json(trec::read_text_file(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver toolkit for minimum-recolouring sequences on temporal graphs "
                 "with bipartite snapshots"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--seed", global.seed, "Master seed for randomized components");
    app.add_option("--max-states", global.max_states, "Brute-force oracle state budget");
    app.add_option("--cap", global.cap, "Work-unit cap for the exact solver");
    app.add_option("--format", global.format, "Output format for bench (json|csv)")
        ->check(CLI::IsMember({"json", "csv"}));

    std::function<int()> action;

    // ---- check-zero-cost ------------------------------------------------
    {
        auto* cmd = app.add_subcommand("check-zero-cost",
                                       "Find a single colouring that stays proper in every "
                                       "snapshot, if one exists");
        auto path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("instance", *path, "Instance JSON (\"-\" for stdin)")->required();
        cmd->add_option("-o,--output", *out, "Output path");
        cmd->callback([&action, path, out] {
            action = [path, out] {
                const auto g = load_instance(*path);
                const auto colouring = trec::zero_cost_check(g);
                if (!colouring) {
                    emit(*out, json{{"zero_cost", false}}.dump(2));
                    return exit_infeasible;
                }
                emit(*out, json{{"zero_cost", true}, {"colouring", *colouring}}.dump(2));
                return exit_ok;
            };
        });
    }

    // ---- solve-exact -----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("solve-exact",
                                       "Optimal sequence via the component-parameterized "
                                       "dynamic program");
        auto path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        auto cost_only = std::make_shared<bool>(false);
        cmd->add_option("instance", *path, "Instance JSON (\"-\" for stdin)")->required();
        cmd->add_option("-o,--output", *out, "Output path");
        cmd->add_flag("--cost-only", *cost_only, "Report the optimum without a sequence");
        cmd->callback([&action, &global, path, out, cost_only] {
            action = [&global, path, out, cost_only] {
                const auto g = load_instance(*path);
                const auto table =
                    trec::build_cost_table(g, trec::DpOptions{*cost_only, global.cap});
                json result{{"optimum", table.optimum()},
                            {"work_units", table.work().pair_evaluations}};
                if (!*cost_only) {
                    result["sequence"] = sequence_json(trec::recover_sequence(g, table));
                }
                emit(*out, result.dump(2));
                return exit_ok;
            };
        });
    }

    // ---- solve-approx ----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("solve-approx",
                                       "Approximate sequence via MinUnCut on the auxiliary "
                                       "graph (cost at most twice the solver's uncut value)");
        auto path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        auto solver = std::make_shared<std::string>("local");
        auto restarts = std::make_shared<int>(4);
        auto emit_aux = std::make_shared<std::string>();
        cmd->add_option("instance", *path, "Instance JSON (\"-\" for stdin)")->required();
        cmd->add_option("-o,--output", *out, "Output path");
        cmd->add_option("--solver", *solver, "MinUnCut solver")
            ->check(CLI::IsMember({"exact", "local"}));
        cmd->add_option("--restarts", *restarts, "Local-search restarts");
        cmd->add_option("--emit-aux", *emit_aux, "Dump the auxiliary graph JSON here");
        cmd->callback([&action, &global, path, out, solver, restarts, emit_aux] {
            action = [&global, path, out, solver, restarts, emit_aux] {
                const auto g = load_instance(*path);
                if (!emit_aux->empty()) {
                    trec::write_text_file(*emit_aux,
                                          trec::auxiliary_to_json(trec::build_auxiliary(g), 2));
                }
                trec::ApproxOptions options;
                options.solver = *solver == "exact" ? trec::ApproxSolver::Exact
                                                    : trec::ApproxSolver::LocalSearch;
                options.seed = global.seed;
                options.restarts = *restarts;
                const auto result = trec::solve_approx(g, options);
                if (result.structural_size_warning) {
                    std::cerr << "warning: auxiliary graph has "
                              << result.minuncut.partition.side.size() << " nodes and a large "
                              << "structural edge class; expect slow MinUnCut solves\n";
                }
                emit(*out, json{{"cost", result.cost},
                                {"uncut", result.uncut},
                                {"bound", result.bound},
                                {"solver", result.minuncut.solver_tag},
                                {"exact", result.minuncut.exact},
                                {"sequence", sequence_json(result.sequence)}}
                               .dump(2));
                return exit_ok;
            };
        });
    }

    // ---- oracle ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("oracle", "Brute-force ground-truth solvers");
        cmd->require_subcommand(1);

        auto palette = std::make_shared<int>(2);
        cmd->add_option("--palette", *palette, "Palette size C");

        auto* trec_cmd = cmd->add_subcommand("trec", "Exact minimum-cost sequence");
        auto trec_path = std::make_shared<std::string>();
        trec_cmd->add_option("instance", *trec_path, "Instance JSON")->required();
        trec_cmd->callback([&action, &global, trec_path, palette] {
            action = [&global, trec_path, palette] {
                const auto g = load_instance(*trec_path);
                const auto r =
                    trec::brute_force_trec(g, *palette, trec::OracleBudget{global.max_states});
                if (!r.feasible) {
                    emit("-", json{{"feasible", false}, {"states", r.stats.states}}.dump(2));
                    return exit_infeasible;
                }
                emit("-", json{{"feasible", true},
                               {"optimum", r.optimum},
                               {"witness", sequence_json(r.witness)},
                               {"states", r.stats.states}}
                              .dump(2));
                return exit_ok;
            };
        });

        auto* mu_cmd = cmd->add_subcommand("minuncut", "Exact minimum monochromatic edges");
        auto mu_path = std::make_shared<std::string>();
        mu_cmd->add_option("graph", *mu_path, "Static graph JSON")->required();
        mu_cmd->callback([&action, &global, mu_path] {
            action = [&global, mu_path] {
                const auto h = load_static(*mu_path);
                const auto r =
                    trec::brute_force_minuncut(h, trec::OracleBudget{global.max_states});
                json sides = json::array();
                for (auto s : r.witness.side) sides.push_back(s == trec::Side::A ? 0 : 1);
                emit("-", json{{"optimum", r.optimum},
                               {"partition", sides},
                               {"states", r.stats.states}}
                              .dump(2));
                return exit_ok;
            };
        });

        auto* col_cmd = cmd->add_subcommand("colourable", "Exact C-colourability");
        auto col_path = std::make_shared<std::string>();
        col_cmd->add_option("graph", *col_path, "Static graph JSON")->required();
        col_cmd->callback([&action, &global, col_path, palette] {
            action = [&global, col_path, palette] {
                const auto h = load_static(*col_path);
                const bool yes =
                    trec::is_c_colourable(h, *palette, trec::OracleBudget{global.max_states});
                emit("-", json{{"colourable", yes}, {"palette", *palette}}.dump(2));
                return yes ? exit_ok : exit_infeasible;
            };
        });
    }

    // ---- reduce ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("reduce", "Hardness-construction instance generators");
        cmd->require_subcommand(1);

        auto* mu = cmd->add_subcommand(
            "minuncut", "Lifetime-2 instance whose optimum equals MinUnCut of the input");
        auto mu_path = std::make_shared<std::string>();
        auto mu_out = std::make_shared<std::string>("-");
        auto map_out = std::make_shared<std::string>();
        auto strip = std::make_shared<bool>(false);
        mu->add_option("graph", *mu_path, "Static graph JSON")->required();
        mu->add_option("-o,--output", *mu_out, "Output path");
        mu->add_option("--map", *map_out, "Write the gadget map sidecar here");
        mu->add_flag("--strip-isolated", *strip,
                     "Drop isolated vertices first (optimum unchanged)");
        mu->callback([&action, mu_path, mu_out, map_out, strip] {
            action = [mu_path, mu_out, map_out, strip] {
                trec::StaticGraph h = load_static(*mu_path);
                if (*strip) h = trec::strip_isolated(h);
                const auto reduction = trec::reduce_minuncut_to_trec(h);
                if (!map_out->empty()) {
                    trec::write_text_file(*map_out, trec::gadget_map_to_json(reduction.map, 2));
                }
                emit(*mu_out, trec::instance_to_json(reduction.graph, 2));
                return exit_ok;
            };
        });

        auto* zc = cmd->add_subcommand(
            "zero-cost", "One-edge-per-snapshot instance; zero cost iff the input is "
                         "C-colourable");
        auto zc_path = std::make_shared<std::string>();
        auto zc_out = std::make_shared<std::string>("-");
        auto zc_palette = std::make_shared<int>(3);
        zc->add_option("graph", *zc_path, "Static graph JSON")->required();
        zc->add_option("-o,--output", *zc_out, "Output path");
        zc->add_option("--palette", *zc_palette,
                       "Palette the companion decision problem uses (not part of the instance)");
        zc->callback([&action, zc_path, zc_out, zc_palette] {
            action = [zc_path, zc_out, zc_palette] {
                if (*zc_palette < 1) throw trec::InvalidInputError("palette size must be >= 1");
                const auto g = load_static(*zc_path);
                const auto instance = trec::reduce_colouring_to_zero_cost(g);
                std::cerr << "lifetime " << instance.lifetime() << ", palette " << *zc_palette
                          << "\n";
                emit(*zc_out, trec::instance_to_json(instance, 2));
                return exit_ok;
            };
        });
    }

    // ---- gen ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("gen", "Seeded random instance generator");
        auto family = std::make_shared<std::string>("always-path");
        auto n = std::make_shared<int>(8);
        auto lifetime = std::make_shared<int>(4);
        auto prob = std::make_shared<double>(-1.0);
        auto count = std::make_shared<int>(-1);
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("--family", *family, "Instance family")
            ->check(CLI::IsMember(
                {"always-path", "always-bipartite", "arbitrary-bipartite-snapshots"}));
        cmd->add_option("--n", *n, "Vertex count")->required();
        cmd->add_option("--t,--lifetime", *lifetime, "Snapshot count")->required();
        cmd->add_option("--edge-prob", *prob, "Per-candidate edge probability");
        cmd->add_option("--edges", *count, "Exact edges per snapshot");
        cmd->add_option("-o,--output", *out, "Output path");
        cmd->callback([&action, &global, family, n, lifetime, prob, count, out] {
            action = [&global, family, n, lifetime, prob, count, out] {
                trec::GeneratorSpec spec;
                spec.n = *n;
                spec.lifetime = *lifetime;
                spec.seed = global.seed;
                if (*family == "always-path") spec.family = trec::Family::AlwaysPath;
                else if (*family == "always-bipartite") spec.family = trec::Family::AlwaysBipartite;
                else spec.family = trec::Family::ArbitraryBipartite;
                if (*prob >= 0) spec.edge_probability = *prob;
                if (*count >= 0) spec.edges_per_snapshot = *count;
                emit(*out, trec::instance_to_json(trec::generate_random(spec), 2));
                return exit_ok;
            };
        });
    }

    // ---- verify ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("verify",
                                       "Check a sequence against an instance and report its cost");
        auto instance_path = std::make_shared<std::string>();
        auto sequence_path = std::make_shared<std::string>();
        auto palette = std::make_shared<int>(2);
        cmd->add_option("instance", *instance_path, "Instance JSON")->required();
        cmd->add_option("sequence", *sequence_path, "Sequence JSON")->required();
        cmd->add_option("--palette", *palette, "Palette size C");
        cmd->callback([&action, instance_path, sequence_path, palette] {
            action = [instance_path, sequence_path, palette] {
                const auto g = load_instance(*instance_path);
                const auto seq = trec::parse_sequence_json(trec::read_text_file(*sequence_path));
                const auto check = trec::validate_sequence(g, seq, *palette);
                if (!check.ok) {
                    json detail{{"ok", false}, {"timestep", check.timestep}};
                    if (check.monochrome_edge) {
                        detail["edge"] =
                            json::array({check.monochrome_edge->u, check.monochrome_edge->v});
                    }
                    if (check.bad_colour_vertex) detail["vertex"] = *check.bad_colour_vertex;
                    emit("-", detail.dump(2));
                    return exit_infeasible;
                }
                const auto report = trec::cost(g, seq);
                emit("-", json{{"ok", true},
                               {"total", report.total},
                               {"per_vertex", report.per_vertex},
                               {"per_transition", report.per_transition}}
                              .dump(2));
                return exit_ok;
            };
        });
    }

    // ---- bench -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("bench",
                                       "Run solvers over an instance corpus and tabulate the "
                                       "results");
        auto dir = std::make_shared<std::string>();
        auto solvers = std::make_shared<std::string>("exact-dp,approx-local,oracle");
        auto reps = std::make_shared<int>(1);
        auto restarts = std::make_shared<int>(4);
        auto no_timing = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("corpus", *dir, "Directory of instance *.json files")->required();
        cmd->add_option("--solvers", *solvers,
                        "Comma-separated: exact-dp, approx-exact, approx-local, oracle");
        cmd->add_option("--reps", *reps, "Repetitions per (instance, solver); best time wins");
        cmd->add_option("--restarts", *restarts, "Local-search restarts");
        cmd->add_flag("--no-timing", *no_timing,
                      "Zero the millis column for byte-identical reruns");
        cmd->add_option("-o,--output", *out, "Output path");
        cmd->callback([&action, &global, dir, solvers, reps, restarts, no_timing, out] {
            action = [&global, dir, solvers, reps, restarts, no_timing, out] {
                trec::bench::BenchOptions options;
                std::string rest = *solvers;
                while (!rest.empty()) {
                    const auto comma = rest.find(',');
                    options.solvers.push_back(rest.substr(0, comma));
                    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
                }
                options.repetitions = *reps;
                options.restarts = *restarts;
                options.seed = global.seed;
                options.timing = !*no_timing;
                options.work_cap = global.cap;
                options.max_states = global.max_states;
                const auto rows = trec::bench::run_corpus(*dir, options);
                emit(*out, global.format == "json" ? trec::bench::reports_to_json(rows, 2)
                                                   : trec::bench::reports_to_csv(rows));
                return exit_ok;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        return action();
    } catch (const trec::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_cap;
    } catch (const trec::NonBipartiteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_infeasible;
    } catch (const trec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const trec::InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
