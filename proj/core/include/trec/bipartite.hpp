#pragma once

#include <cstdint>
#include <optional>

#include "trec/colouring.hpp"
#include "trec/graph.hpp"

namespace trec {

/// Default budget for enumeration/DP work, measured in colourings-times-vertices
/// units (and, for the DP, colouring-pair evaluations). Operations refuse with
/// CapExceededError instead of exceeding it.
inline constexpr std::uint64_t default_work_cap = std::uint64_t{1} << 24;

/// Connected components of one static graph (isolated vertices are singleton
/// components) plus one fixed proper 2-colouring when the graph is bipartite.
///
/// Component indices are assigned by smallest contained vertex id; the
/// reference colouring gives colour 0 to the smallest vertex of each
/// component, with BFS layer parity from there.
struct ComponentStructure {
    int component_count = 0;
    std::vector<int> component_of;     // vertex -> component index
    std::optional<Colouring> reference;  // absent iff not bipartite

    bool bipartite() const { return reference.has_value(); }
    int vertex_count() const { return static_cast<int>(component_of.size()); }
};

ComponentStructure components(int n, const EdgeList& edges);
ComponentStructure components(const StaticGraph& g);

/// The 2^k proper 2-colourings of a bipartite snapshot, indexed so that bit j
/// of the index complements the reference colouring on component j. Index 0
/// is the reference colouring itself. Members are materialized lazily.
class SnapshotColouringSet {
public:
    explicit SnapshotColouringSet(ComponentStructure structure);

    std::uint64_t size() const { return std::uint64_t{1} << structure_.component_count; }
    Colouring at(std::uint64_t index) const;
    const ComponentStructure& structure() const { return structure_; }

private:
    ComponentStructure structure_;
};

/// Throws NonBipartiteError when the structure has no reference colouring and
/// CapExceededError when 2^k * n exceeds work_cap.
SnapshotColouringSet enumerate_colourings(const ComponentStructure& structure,
                                          std::uint64_t work_cap = default_work_cap);

/// A colouring whose constant repetition is proper in every snapshot, when one
/// exists: the BFS 2-colouring of the underlying graph if that is bipartite.
std::optional<Colouring> zero_cost_check(const TemporalGraph& g);

}  // namespace trec
