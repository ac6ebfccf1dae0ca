#include "trec/minuncut.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "trec/rng.hpp"

namespace trec {

long long count_monochromatic(const StaticGraph& g, const Partition& p) {
    if (static_cast<int>(p.side.size()) != g.n) {
        throw InvalidInputError("partition covers " + std::to_string(p.side.size()) +
                                " nodes, graph has " + std::to_string(g.n));
    }
    long long mono = 0;
    for (const Edge& e : g.edges) mono += (p.side[e.u] == p.side[e.v]) ? 1 : 0;
    return mono;
}

namespace {

std::vector<std::vector<int>> adjacency(const StaticGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

struct BranchAndBound {
    const std::vector<std::vector<int>>& adj;
    const std::vector<int>& order;       // exploration order
    std::vector<int> rank;               // vertex -> position in order
    std::vector<Side> side;
    std::vector<int> to_a, to_b;         // edges from v into assigned A/B
    long long best_uncut;
    std::vector<Side> best_side;
    std::uint64_t nodes = 0;

    BranchAndBound(const std::vector<std::vector<int>>& adj_, const std::vector<int>& order_,
                   const Partition& initial, long long initial_uncut)
        : adj(adj_),
          order(order_),
          rank(order_.size()),
          side(order_.size(), Side::A),
          to_a(order_.size(), 0),
          to_b(order_.size(), 0),
          best_uncut(initial_uncut),
          best_side(initial.side) {
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    }

    long long unassigned_bound(std::size_t depth) const {
        // each still-unassigned vertex must pay min(edges to A, edges to B)
        long long lb = 0;
        for (std::size_t i = depth; i < order.size(); ++i) {
            const int v = order[i];
            lb += std::min(to_a[v], to_b[v]);
        }
        return lb;
    }

    void assign(int v, Side s, std::size_t depth, long long mono) {
        side[v] = s;
        for (int u : adj[v]) {
            if (s == Side::A) ++to_a[u]; else ++to_b[u];
        }
        dfs(depth + 1, mono);
        for (int u : adj[v]) {
            if (s == Side::A) --to_a[u]; else --to_b[u];
        }
    }

    void dfs(std::size_t depth, long long mono) {
        ++nodes;
        if (mono + unassigned_bound(depth) >= best_uncut) return;
        if (depth == order.size()) {
            best_uncut = mono;
            best_side = side;
            return;
        }
        const int v = order[depth];
        assign(v, Side::A, depth, mono + to_a[v]);
        if (depth == 0) return;  // complement symmetry: pin the first vertex
        assign(v, Side::B, depth, mono + to_b[v]);
    }
};

}  // namespace

Partition greedy_bipartition(const StaticGraph& g) {
    auto adj = adjacency(g);
    Partition p;
    p.side.assign(static_cast<std::size_t>(g.n), Side::A);
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    for (int seed = 0; seed < g.n; ++seed) {
        if (seen[seed]) continue;
        seen[seed] = 1;
        std::queue<int> frontier;
        frontier.push(seed);
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (int u : adj[v]) {
                if (seen[u]) continue;
                seen[u] = 1;
                p.side[u] = p.side[v] == Side::A ? Side::B : Side::A;
                frontier.push(u);
            }
        }
    }
    return p;
}

MinUnCutResult solve_minuncut_exact(const StaticGraph& g, int node_cap) {
    validate_static_graph(g);
    if (g.n > node_cap) {
        throw CapExceededError("exact MinUnCut solver capped at " + std::to_string(node_cap) +
                               " nodes, graph has " + std::to_string(g.n));
    }

    Partition initial = greedy_bipartition(g);
    long long initial_uncut = count_monochromatic(g, initial);

    MinUnCutResult result;
    result.solver_tag = "branch-and-bound";
    result.exact = true;
    if (g.n == 0 || initial_uncut == 0) {
        result.partition = std::move(initial);
        result.uncut = initial_uncut;
        return result;
    }

    auto adj = adjacency(g);
    std::vector<int> order(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return adj[a].size() > adj[b].size();
    });

    BranchAndBound search(adj, order, initial, initial_uncut);
    search.dfs(0, 0);

    result.partition.side = std::move(search.best_side);
    result.uncut = search.best_uncut;
    result.work_units = search.nodes;
    return result;
}

namespace {

// First-improvement sweeps until no single flip lowers the uncut count.
std::uint64_t local_search(const std::vector<std::vector<int>>& adj, Partition& p) {
    std::uint64_t evaluations = 0;
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t v = 0; v < p.side.size(); ++v) {
            ++evaluations;
            int same = 0;
            for (int u : adj[v]) same += (p.side[u] == p.side[v]) ? 1 : 0;
            const int other = static_cast<int>(adj[v].size()) - same;
            if (same > other) {
                p.side[v] = p.side[v] == Side::A ? Side::B : Side::A;
                improved = true;
            }
        }
    }
    return evaluations;
}

}  // namespace

MinUnCutResult solve_minuncut_heuristic(const StaticGraph& g, const LocalSearchOptions& options) {
    validate_static_graph(g);
    auto adj = adjacency(g);
    const int restarts = std::max(1, options.restarts);

    MinUnCutResult best;
    best.solver_tag = "flip-local-search";
    best.exact = false;
    best.uncut = -1;

    for (int r = 0; r < restarts; ++r) {
        Partition p;
        if (r == 0) {
            p = greedy_bipartition(g);
        } else {
            std::mt19937_64 rng(splitmix64(options.seed ^ static_cast<std::uint64_t>(r)));
            p.side.resize(static_cast<std::size_t>(g.n));
            for (auto& s : p.side) s = (rng() & 1u) ? Side::B : Side::A;
        }
        const std::uint64_t evals = local_search(adj, p);
        const long long uncut = count_monochromatic(g, p);
        best.work_units += evals;
        if (best.uncut < 0 || uncut < best.uncut) {
            best.uncut = uncut;
            best.partition = std::move(p);
        }
    }
    return best;
}

}  // namespace trec
