#include "trec/bipartite.hpp"

#include <queue>
#include <string>

namespace trec {

ComponentStructure components(int n, const EdgeList& edges) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    ComponentStructure s;
    s.component_of.assign(static_cast<std::size_t>(n), -1);
    Colouring colour(static_cast<std::size_t>(n), 0);

    // Seeds scanned ascending, so component j's smallest vertex precedes
    // component j+1's smallest vertex.
    for (Vertex seed = 0; seed < n; ++seed) {
        if (s.component_of[seed] != -1) continue;
        const int comp = s.component_count++;
        s.component_of[seed] = comp;
        colour[seed] = 0;
        std::queue<Vertex> frontier;
        frontier.push(seed);
        while (!frontier.empty()) {
            Vertex v = frontier.front();
            frontier.pop();
            for (Vertex u : adj[v]) {
                if (s.component_of[u] != -1) continue;
                s.component_of[u] = comp;
                colour[u] = 1 - colour[v];
                frontier.push(u);
            }
        }
    }

    bool bipartite = true;
    for (const Edge& e : edges) {
        if (colour[e.u] == colour[e.v]) {
            bipartite = false;
            break;
        }
    }
    if (bipartite) s.reference = std::move(colour);
    return s;
}

ComponentStructure components(const StaticGraph& g) { return components(g.n, g.edges); }

SnapshotColouringSet::SnapshotColouringSet(ComponentStructure structure)
    : structure_(std::move(structure)) {
    if (!structure_.bipartite()) {
        throw NonBipartiteError("snapshot colouring set requires a bipartite snapshot");
    }
}

Colouring SnapshotColouringSet::at(std::uint64_t index) const {
    const Colouring& ref = *structure_.reference;
    Colouring result(ref.size());
    for (std::size_t v = 0; v < ref.size(); ++v) {
        const int flip = static_cast<int>((index >> structure_.component_of[v]) & 1u);
        result[v] = ref[v] ^ flip;
    }
    return result;
}

SnapshotColouringSet enumerate_colourings(const ComponentStructure& structure,
                                          std::uint64_t work_cap) {
    if (!structure.bipartite()) {
        throw NonBipartiteError("cannot enumerate 2-colourings of a non-bipartite snapshot");
    }
    const int k = structure.component_count;
    const std::uint64_t n = static_cast<std::uint64_t>(structure.vertex_count());
    if (k >= 63 || ((std::uint64_t{1} << k) > work_cap / (n == 0 ? 1 : n))) {
        throw CapExceededError("enumerating 2^" + std::to_string(k) + " colourings of " +
                               std::to_string(n) + " vertices exceeds the work cap of " +
                               std::to_string(work_cap));
    }
    return SnapshotColouringSet(structure);
}

std::optional<Colouring> zero_cost_check(const TemporalGraph& g) {
    ComponentStructure s = components(underlying_graph(g));
    if (!s.bipartite()) return std::nullopt;
    return std::move(s.reference);
}

}  // namespace trec
