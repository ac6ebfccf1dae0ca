#include "trec/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "trec/bipartite.hpp"
#include "trec/rng.hpp"

namespace trec {

MinUnCutReduction reduce_minuncut_to_trec(const StaticGraph& h) {
    validate_static_graph(h);
    if (h.n == 0) throw InvalidInputError("reduction needs a non-empty graph");

    std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(h.n));
    for (const Edge& e : h.edges) {
        nbrs[e.u].push_back(e.v);
        nbrs[e.v].push_back(e.u);
    }
    for (Vertex v = 0; v < h.n; ++v) {
        if (nbrs[v].empty()) {
            throw InvalidInputError("vertex " + std::to_string(v) +
                                    " is isolated; strip isolated vertices first "
                                    "(they do not change the optimum)");
        }
        std::sort(nbrs[v].begin(), nbrs[v].end());
    }

    GadgetMap map;
    map.h_edges = h.edges;
    map.vertex_gadgets.resize(static_cast<std::size_t>(h.n));

    // Vertex v with degree d becomes a path on 2d-1 fresh vertices,
    // alternating a^1, b^1, a^2, ..., a^d; consecutive ids along the path.
    int next_id = 0;
    std::vector<int> start(static_cast<std::size_t>(h.n), 0);
    EdgeList first_snapshot;
    for (Vertex v = 0; v < h.n; ++v) {
        const int d = static_cast<int>(nbrs[v].size());
        start[v] = next_id;
        auto& gadget = map.vertex_gadgets[v];
        gadget.resize(static_cast<std::size_t>(2 * d - 1));
        std::iota(gadget.begin(), gadget.end(), next_id);
        for (int off = 0; off + 1 < 2 * d - 1; ++off) {
            first_snapshot.emplace_back(next_id + off, next_id + off + 1);
        }
        next_id += 2 * d - 1;
    }

    // Edge (u, v) that is the p-th edge of u and the q-th of v (ascending
    // neighbour ids, 1-based) becomes the matching edge (a_u^p, a_v^q);
    // a^p sits at offset 2(p-1) within the gadget.
    EdgeList second_snapshot;
    map.edge_gadgets.reserve(h.edges.size());
    for (const Edge& e : h.edges) {
        const auto& un = nbrs[e.u];
        const auto& vn = nbrs[e.v];
        const int p = static_cast<int>(std::lower_bound(un.begin(), un.end(), e.v) - un.begin()) + 1;
        const int q = static_cast<int>(std::lower_bound(vn.begin(), vn.end(), e.u) - vn.begin()) + 1;
        const Vertex a_u = start[e.u] + 2 * (p - 1);
        const Vertex a_v = start[e.v] + 2 * (q - 1);
        map.edge_gadgets.emplace_back(a_u, a_v);
        second_snapshot.emplace_back(a_u, a_v);
    }

    std::vector<EdgeList> snapshots{std::move(first_snapshot), std::move(second_snapshot)};
    return MinUnCutReduction{TemporalGraph::from_edge_lists(next_id, std::move(snapshots)), std::move(map)};
}

StaticGraph strip_isolated(const StaticGraph& g) {
    validate_static_graph(g);
    std::vector<char> used(static_cast<std::size_t>(g.n), 0);
    for (const Edge& e : g.edges) used[e.u] = used[e.v] = 1;
    std::vector<int> remap(static_cast<std::size_t>(g.n), -1);
    int next = 0;
    for (Vertex v = 0; v < g.n; ++v) {
        if (used[v]) remap[v] = next++;
    }
    StaticGraph out;
    out.n = next;
    out.edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) out.edges.emplace_back(remap[e.u], remap[e.v]);
    return out;
}

TemporalGraph reduce_colouring_to_zero_cost(const StaticGraph& g) {
    validate_static_graph(g);
    if (g.edges.empty()) {
        throw InvalidInputError("zero-cost reduction needs at least one edge");
    }
    std::vector<EdgeList> snapshots;
    snapshots.reserve(g.edges.size());
    for (const Edge& e : g.edges) snapshots.push_back(EdgeList{e});
    return TemporalGraph::from_edge_lists(g.n, std::move(snapshots));
}

namespace {

[[noreturn]] void infeasible(const std::string& msg) {
    throw InvalidInputError("generator: " + msg);
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[static_cast<std::size_t>(next_below(rng, i + 1))]);
    }
    return perm;
}

// Chooses which candidate edges survive: Bernoulli(p) per candidate, or a
// partial shuffle picking exactly `count`.
std::vector<std::size_t> pick(std::mt19937_64& rng, std::size_t candidates,
                              const GeneratorSpec& spec, const char* what) {
    std::vector<std::size_t> chosen;
    if (spec.edge_probability) {
        for (std::size_t i = 0; i < candidates; ++i) {
            if (next_unit(rng) < *spec.edge_probability) chosen.push_back(i);
        }
    } else {
        const int want = *spec.edges_per_snapshot;
        if (static_cast<std::size_t>(want) > candidates) {
            infeasible(std::string(what) + " admits only " + std::to_string(candidates) +
                       " edges, " + std::to_string(want) + " requested");
        }
        std::vector<std::size_t> pool(candidates);
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < want; ++i) {
            const std::size_t j = i + next_below(rng, candidates - i);
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        }
        chosen.assign(pool.begin(), pool.begin() + want);
        std::sort(chosen.begin(), chosen.end());
    }
    return chosen;
}

EdgeList path_snapshot(std::mt19937_64& rng, const GeneratorSpec& spec) {
    // adjacent pairs of a random permutation: any subset is a union of paths
    const auto perm = random_permutation(rng, spec.n);
    const auto slots = pick(rng, spec.n > 0 ? static_cast<std::size_t>(spec.n - 1) : 0, spec,
                            "a path snapshot");
    EdgeList edges;
    edges.reserve(slots.size());
    for (std::size_t s : slots) edges.emplace_back(perm[s], perm[s + 1]);
    std::sort(edges.begin(), edges.end());
    return edges;
}

EdgeList bipartition_snapshot(std::mt19937_64& rng, const GeneratorSpec& spec) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<char> left(static_cast<std::size_t>(spec.n));
        for (auto& b : left) b = static_cast<char>(rng() & 1u);
        std::vector<Edge> cross;
        for (Vertex i = 0; i < spec.n; ++i) {
            for (Vertex j = i + 1; j < spec.n; ++j) {
                if (left[i] != left[j]) cross.emplace_back(i, j);
            }
        }
        if (spec.edges_per_snapshot &&
            static_cast<std::size_t>(*spec.edges_per_snapshot) > cross.size()) {
            continue;  // unlucky sides; try another bipartition
        }
        const auto chosen = pick(rng, cross.size(), spec, "a bipartition snapshot");
        EdgeList edges;
        edges.reserve(chosen.size());
        for (std::size_t c : chosen) edges.push_back(cross[c]);
        std::sort(edges.begin(), edges.end());
        return edges;
    }
    infeasible("could not draw a bipartition with enough cross pairs");
}

EdgeList arbitrary_bipartite_snapshot(std::mt19937_64& rng, const GeneratorSpec& spec) {
    // arbitrary simple graphs, resampled until the draw happens to be bipartite
    std::vector<Edge> all;
    for (Vertex i = 0; i < spec.n; ++i) {
        for (Vertex j = i + 1; j < spec.n; ++j) all.emplace_back(i, j);
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const auto chosen = pick(rng, all.size(), spec, "a snapshot");
        EdgeList edges;
        edges.reserve(chosen.size());
        for (std::size_t c : chosen) edges.push_back(all[c]);
        std::sort(edges.begin(), edges.end());
        if (components(spec.n, edges).bipartite()) return edges;
    }
    infeasible("rejection sampling found no bipartite snapshot in 1000 draws; lower the density");
}

}  // namespace

TemporalGraph generate_random(const GeneratorSpec& spec) {
    if (spec.n < 1) infeasible("vertex count must be >= 1");
    if (spec.lifetime < 1) infeasible("lifetime must be >= 1");
    if (spec.edge_probability.has_value() == spec.edges_per_snapshot.has_value()) {
        infeasible("specify exactly one of edge probability and edges per snapshot");
    }
    if (spec.edge_probability && (*spec.edge_probability < 0.0 || *spec.edge_probability > 1.0)) {
        infeasible("edge probability outside [0, 1]");
    }
    if (spec.edges_per_snapshot && *spec.edges_per_snapshot < 0) {
        infeasible("negative edge count");
    }

    std::mt19937_64 rng(splitmix64(spec.seed));
    std::vector<EdgeList> snapshots;
    snapshots.reserve(static_cast<std::size_t>(spec.lifetime));
    for (int t = 0; t < spec.lifetime; ++t) {
        switch (spec.family) {
            case Family::AlwaysPath:
                snapshots.push_back(path_snapshot(rng, spec));
                break;
            case Family::AlwaysBipartite:
                snapshots.push_back(bipartition_snapshot(rng, spec));
                break;
            case Family::ArbitraryBipartite:
                snapshots.push_back(arbitrary_bipartite_snapshot(rng, spec));
                break;
        }
    }
    return TemporalGraph::from_edge_lists(spec.n, std::move(snapshots));
}

}  // namespace trec
