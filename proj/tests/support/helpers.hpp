#pragma once

// Test-only helpers. Everything that acts as ground truth here is written
// directly against the data model, independent of the solver code it checks.

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "trec/colouring.hpp"
#include "trec/graph.hpp"
#include "trec/reductions.hpp"
#include "trec/rng.hpp"

namespace testsup {

inline long long count_proper_colourings(int n, const trec::EdgeList& edges, int palette) {
    std::vector<int> colours(static_cast<std::size_t>(n), 0);
    long long count = 0;
    while (true) {
        bool proper = true;
        for (const trec::Edge& e : edges) {
            if (colours[e.u] == colours[e.v]) {
                proper = false;
                break;
            }
        }
        if (proper) ++count;
        int i = 0;
        while (i < n && ++colours[i] == palette) colours[i++] = 0;
        if (i == n) return count;
    }
}

inline trec::Colouring random_proper_colouring(std::mt19937_64& rng, int n,
                                               const trec::EdgeList& edges) {
    for (int attempt = 0; attempt < 1 << 16; ++attempt) {
        trec::Colouring colouring(static_cast<std::size_t>(n));
        for (auto& c : colouring) c = static_cast<int>(rng() & 1u);
        if (trec::is_proper(colouring, edges)) return colouring;
    }
    throw std::runtime_error("rejection sampling found no proper colouring");
}

inline trec::ColouringSequence random_valid_sequence(std::mt19937_64& rng,
                                                     const trec::TemporalGraph& g) {
    trec::ColouringSequence seq;
    for (int t = 1; t <= g.lifetime(); ++t) {
        seq.steps.push_back(random_proper_colouring(rng, g.vertex_count(), g.snapshot(t)));
    }
    return seq;
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

inline int component_count(int n, const trec::EdgeList& edges) {
    UnionFind uf(n);
    int merges = 0;
    for (const trec::Edge& e : edges) merges += uf.unite(e.u, e.v) ? 1 : 0;
    return n - merges;
}

inline bool is_connected(int n, const trec::EdgeList& edges) {
    return n <= 1 || component_count(n, edges) == 1;
}

inline std::vector<int> degrees(int n, const trec::EdgeList& edges) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const trec::Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

inline bool is_union_of_paths(int n, const trec::EdgeList& edges) {
    for (int d : degrees(n, edges)) {
        if (d > 2) return false;
    }
    // acyclic: every edge merges two components
    UnionFind uf(n);
    for (const trec::Edge& e : edges) {
        if (!uf.unite(e.u, e.v)) return false;
    }
    return true;
}

inline bool is_matching(int n, const trec::EdgeList& edges) {
    for (int d : degrees(n, edges)) {
        if (d > 1) return false;
    }
    return true;
}

/// Exact minimum-change cost for lifetime-2 instances whose second snapshot is
/// a matching plus isolated vertices: enumerates every proper 2-colouring of
/// snapshot 1 (two choices per component, found by its own BFS) and completes
/// snapshot 2 component by component, which is exhaustive because snapshot-2
/// components are single edges or single vertices.
inline long long t2_matching_optimum(const trec::TemporalGraph& g) {
    if (g.lifetime() != 2) throw std::runtime_error("t2_matching_optimum needs lifetime 2");
    const int n = g.vertex_count();
    const trec::EdgeList& first = g.snapshot(1);
    const trec::EdgeList& second = g.snapshot(2);
    if (!is_matching(n, second)) throw std::runtime_error("second snapshot is not a matching");

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const trec::Edge& e : first) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> base(static_cast<std::size_t>(n), 0);
    int k = 0;
    for (int seed = 0; seed < n; ++seed) {
        if (comp[seed] != -1) continue;
        comp[seed] = k;
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : adj[v]) {
                if (comp[u] != -1) continue;
                comp[u] = k;
                base[u] = 1 - base[v];
                stack.push_back(u);
            }
        }
        ++k;
    }
    for (const trec::Edge& e : first) {
        if (base[e.u] == base[e.v]) throw std::runtime_error("first snapshot is not bipartite");
    }
    if (k > 26) throw std::runtime_error("too many snapshot-1 components for enumeration");

    long long best = LLONG_MAX;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        long long total = 0;
        for (const trec::Edge& e : second) {
            const int cu = base[e.u] ^ static_cast<int>((mask >> comp[e.u]) & 1u);
            const int cv = base[e.v] ^ static_cast<int>((mask >> comp[e.v]) & 1u);
            const int keep_uv = (cu != 0) + (cv != 1);  // colour e.u 0, e.v 1
            const int keep_vu = (cu != 1) + (cv != 0);
            total += std::min(keep_uv, keep_vu);
        }
        best = std::min(best, total);
    }
    return best;
}

/// Calls f(edges) for every simple graph on n labelled vertices.
template <typename F>
void for_each_graph(int n, F&& f) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        trec::EdgeList edges;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if ((mask >> b) & 1u) edges.emplace_back(pairs[b].first, pairs[b].second);
        }
        f(edges);
    }
}

template <typename F>
void for_each_connected_graph(int n, F&& f) {
    for_each_graph(n, [&](const trec::EdgeList& edges) {
        if (is_connected(n, edges)) f(edges);
    });
}

/// Random connected graph: random attachment spanning tree plus extra edges.
inline trec::StaticGraph random_connected_graph(std::mt19937_64& rng, int n, int m) {
    if (m < n - 1 || m > n * (n - 1) / 2) throw std::runtime_error("infeasible (n, m)");
    std::vector<std::pair<int, int>> picked;
    for (int v = 1; v < n; ++v) {
        picked.emplace_back(static_cast<int>(trec::next_below(rng, v)), v);
    }
    std::vector<std::pair<int, int>> rest;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::find(picked.begin(), picked.end(), std::make_pair(i, j)) == picked.end()) {
                rest.emplace_back(i, j);
            }
        }
    }
    while (static_cast<int>(picked.size()) < m) {
        const std::size_t i = trec::next_below(rng, rest.size());
        picked.push_back(rest[i]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return trec::make_static_graph(n, picked);
}

/// Seeded mixed-family instance corpus for property tests.
inline trec::TemporalGraph random_instance(std::uint64_t seed, int max_n, int max_t) {
    std::mt19937_64 rng(trec::splitmix64(seed));
    trec::GeneratorSpec spec;
    spec.n = 1 + static_cast<int>(trec::next_below(rng, max_n));
    spec.lifetime = 1 + static_cast<int>(trec::next_below(rng, max_t));
    spec.seed = rng();
    switch (trec::next_below(rng, 3)) {
        case 0: spec.family = trec::Family::AlwaysPath; break;
        case 1: spec.family = trec::Family::AlwaysBipartite; break;
        default: spec.family = trec::Family::ArbitraryBipartite; break;
    }
    if (spec.family == trec::Family::ArbitraryBipartite) {
        spec.edge_probability = 0.15 + 0.2 * trec::next_unit(rng);
    } else {
        spec.edge_probability = 0.2 + 0.5 * trec::next_unit(rng);
    }
    return trec::generate_random(spec);
}

}  // namespace testsup
