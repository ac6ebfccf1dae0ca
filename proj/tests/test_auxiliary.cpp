#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/helpers.hpp"
#include "trec/auxiliary.hpp"
#include "trec/bipartite.hpp"
#include "trec/exact_dp.hpp"
#include "trec/json_io.hpp"
#include "trec/oracle.hpp"
#include "trec/reductions.hpp"

using namespace trec;

namespace {

TemporalGraph triangle_over_three() {
    return TemporalGraph(3, std::vector<std::vector<std::pair<int, int>>>{
                                {{0, 1}}, {{1, 2}}, {{0, 2}}});
}

std::vector<std::pair<int, int>> structural_edges(const AuxiliaryGraph& aux) {
    std::vector<std::pair<int, int>> result;
    for (std::size_t i = 0; i < aux.edges().size(); ++i) {
        if (aux.classes()[i] == AuxEdgeClass::Structural) result.push_back(aux.edges()[i]);
    }
    return result;
}

}  // namespace

TEST_CASE("auxiliary graph of the triangle instance") {
    const AuxiliaryGraph aux = build_auxiliary(triangle_over_three());
    CHECK(aux.node_count() == 9);
    CHECK(aux.temporal_edge_count() == 6);
    CHECK(aux.structural_edge_count() == 3);

    // one structural pair per snapshot; singleton components contribute none
    const auto s = structural_edges(aux);
    CHECK(s == std::vector<std::pair<int, int>>{
                   {aux.node_id(0, 1), aux.node_id(1, 1)},
                   {aux.node_id(1, 2), aux.node_id(2, 2)},
                   {aux.node_id(0, 3), aux.node_id(2, 3)}});
}

TEST_CASE("auxiliary graph of one edge at lifetime 1") {
    TemporalGraph g(2, {{{0, 1}}});
    const AuxiliaryGraph aux = build_auxiliary(g);
    CHECK(aux.node_count() == 2);
    CHECK(aux.temporal_edge_count() == 0);
    CHECK(aux.structural_edge_count() == 1);
    CHECK(auxiliary_to_json(aux) == R"({"classes":["S"],"edges":[[0,1]],"nodes":2})");
}

TEST_CASE("structural pairs are all opposite-colour pairs, not only snapshot edges") {
    TemporalGraph path(3, {{{0, 1}, {1, 2}}});
    const AuxiliaryGraph aux = build_auxiliary(path);
    // 0 and 2 share the reference colour, so only the two snapshot edges remain
    CHECK(structural_edges(aux) ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    // a four-path has an opposite-colour pair that is NOT a snapshot edge
    TemporalGraph longer(4, {{{0, 1}, {1, 2}, {2, 3}}});
    const auto s = structural_edges(build_auxiliary(longer));
    CHECK(std::find(s.begin(), s.end(), std::make_pair(0, 3)) != s.end());
    CHECK(s.size() == 4);  // (0,1) (1,2) (2,3) (0,3)
}

TEST_CASE("every snapshot edge appears as a structural pair") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const TemporalGraph g = testsup::random_instance(seed, 6, 4);
        const AuxiliaryGraph aux = build_auxiliary(g);
        CHECK(aux.temporal_edge_count() ==
              static_cast<std::size_t>(g.vertex_count()) * (g.lifetime() - 1));
        const auto s = structural_edges(aux);
        for (int t = 1; t <= g.lifetime(); ++t) {
            const ComponentStructure cs = components(g.vertex_count(), g.snapshot(t));
            for (const Edge& e : g.snapshot(t)) {
                const auto pair = std::make_pair(aux.node_id(e.u, t), aux.node_id(e.v, t));
                CHECK(std::find(s.begin(), s.end(), pair) != s.end());
            }
            for (const auto& [a, b] : s) {
                const auto [va, ta] = aux.node_origin(a);
                const auto [vb, tb] = aux.node_origin(b);
                if (ta != t || tb != t) continue;
                CHECK(cs.component_of[va] == cs.component_of[vb]);
                CHECK((*cs.reference)[va] != (*cs.reference)[vb]);
            }
        }
    }
}

TEST_CASE("non-bipartite snapshots make the auxiliary graph undefined") {
    TemporalGraph g(3, {{{0, 1}, {1, 2}, {0, 2}}});
    CHECK_THROWS_AS(build_auxiliary(g), NonBipartiteError);
}

TEST_CASE("partition induced by a sequence has exactly cost-many monochromatic edges") {
    const TemporalGraph g = triangle_over_three();

    // a zero-cost instance first
    TemporalGraph path(3, {{{0, 1}}, {{1, 2}}});
    const Colouring zero = *zero_cost_check(path);
    ColouringSequence constant{{zero, zero}};
    CHECK(count_monochromatic(build_auxiliary(path).as_static(),
                              colouring_to_partition(path, constant)) == 0);

    // the optimal triangle sequence has cost 1
    const ColouringSequence optimal{{{0, 1, 0}, {0, 1, 0}, {0, 1, 1}}};
    REQUIRE(cost(g, optimal).total == 1);
    CHECK(count_monochromatic(build_auxiliary(g).as_static(),
                              colouring_to_partition(g, optimal)) == 1);

    CHECK_THROWS_AS(colouring_to_partition(g, ColouringSequence{{{0, 0, 0}, {0, 1, 0}, {0, 1, 1}}}),
                    InvalidInputError);
}

TEST_CASE("monochromatic count equals cost on random valid sequences") {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        const TemporalGraph g = testsup::random_instance(seed, 6, 4);
        std::mt19937_64 rng(seed);
        const ColouringSequence seq = testsup::random_valid_sequence(rng, g);
        CHECK(count_monochromatic(build_auxiliary(g).as_static(),
                                  colouring_to_partition(g, seq)) == cost(g, seq).total);
    }
}

TEST_CASE("round trip through the partition reproduces the sequence") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        const TemporalGraph g = testsup::random_instance(seed, 6, 4);
        std::mt19937_64 rng(seed);
        const ColouringSequence seq = testsup::random_valid_sequence(rng, g);
        const AuxiliaryGraph aux = build_auxiliary(g);
        const ColouringSequence back =
            partition_to_colouring(g, aux, colouring_to_partition(g, seq));
        CHECK(back.steps == seq.steps);
    }
}

TEST_CASE("partitions with no monochromatic structural edge need no repair") {
    // assemble per-snapshot proper colourings independently: the parity-rule
    // partition then has monochromatic edges only in the temporal class, and
    // converting back reproduces the partition exactly
    for (std::uint64_t seed = 600; seed < 630; ++seed) {
        const TemporalGraph g = testsup::random_instance(seed, 6, 4);
        std::mt19937_64 rng(seed);
        const ColouringSequence seq = testsup::random_valid_sequence(rng, g);
        const Partition p = colouring_to_partition(g, seq);

        const AuxiliaryGraph aux = build_auxiliary(g);
        long long structural_mono = 0;
        for (std::size_t i = 0; i < aux.edges().size(); ++i) {
            if (aux.classes()[i] != AuxEdgeClass::Structural) continue;
            const auto [a, b] = aux.edges()[i];
            structural_mono += (p.side[a] == p.side[b]) ? 1 : 0;
        }
        CHECK(structural_mono == 0);

        const Partition back = colouring_to_partition(g, partition_to_colouring(g, aux, p));
        CHECK(back.side == p.side);
    }
}

TEST_CASE("repair on the all-A partition of a single edge keeps the anchor") {
    TemporalGraph g(2, {{{0, 1}}});
    const AuxiliaryGraph aux = build_auxiliary(g);
    Partition all_a{{Side::A, Side::A}};
    CHECK(count_monochromatic(aux.as_static(), all_a) == 1);
    const ColouringSequence repaired = partition_to_colouring(g, aux, all_a);
    // initial colours at t=1 are both 1; the tie flips the non-anchor class
    CHECK(repaired.steps == std::vector<Colouring>{{1, 0}});
    CHECK(cost(g, repaired).total == 0);
}

TEST_CASE("any total partition repairs to a valid sequence within twice its uncut") {
    for (std::uint64_t seed = 300; seed < 380; ++seed) {
        const TemporalGraph g = testsup::random_instance(seed, 6, 4);
        const AuxiliaryGraph aux = build_auxiliary(g);
        std::mt19937_64 rng(seed);
        Partition p;
        p.side.resize(static_cast<std::size_t>(aux.node_count()));
        for (auto& s : p.side) s = (rng() & 1u) ? Side::B : Side::A;

        const long long uncut = count_monochromatic(aux.as_static(), p);
        const ColouringSequence seq = partition_to_colouring(g, aux, p);
        CHECK(validate_sequence(g, seq).ok);
        CHECK(cost(g, seq).total <= 2 * uncut);
    }
}

TEST_CASE("approximation pipeline: exact solver sandwich on small instances") {
    TemporalGraph path(3, {{{0, 1}}, {{1, 2}}});
    ApproxOptions exact;
    exact.solver = ApproxSolver::Exact;
    CHECK(solve_approx(path, exact).cost == 0);

    const TemporalGraph g = triangle_over_three();
    const ApproxResult r = solve_approx(g, exact);
    CHECK(r.uncut == 1);
    CHECK(r.cost >= 1);
    CHECK(r.cost <= 2);
    CHECK(validate_sequence(g, r.sequence).ok);

    // reduction instance of the triangle: optimum 1, so cost at most 2
    const StaticGraph triangle = make_static_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    const TemporalGraph reduced = reduce_minuncut_to_trec(triangle).graph;
    const ApproxResult rr = solve_approx(reduced, exact);
    CHECK(rr.cost <= 2);
}

TEST_CASE("approximation pipeline bounds hold for both solvers on random instances") {
    for (std::uint64_t seed = 400; seed < 440; ++seed) {
        const TemporalGraph g = testsup::random_instance(seed, 5, 4);
        const long long optimum = build_cost_table(g).optimum();

        ApproxOptions exact;
        exact.solver = ApproxSolver::Exact;
        const ApproxResult re = solve_approx(g, exact);
        CHECK(re.uncut <= optimum);        // exact uncut lower-bounds the optimum
        CHECK(re.cost <= 2 * re.uncut);
        CHECK(re.cost >= optimum);

        ApproxOptions local;
        local.solver = ApproxSolver::LocalSearch;
        local.seed = seed;
        const ApproxResult rl = solve_approx(g, local);
        CHECK(rl.uncut >= re.uncut);
        CHECK(rl.cost >= optimum);
        CHECK(rl.cost <= 2 * rl.uncut);
        CHECK(validate_sequence(g, rl.sequence).ok);
    }
}
