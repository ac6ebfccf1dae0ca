#include "trec/exact_dp.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace trec {

namespace {

// Colourings of one snapshot packed as bit rows so that transition costs are
// XOR + popcount. Row m equals row (m with its lowest bit cleared) XOR the
// vertex mask of that bit's component, so the index semantics match
// SnapshotColouringSet exactly.
struct PackedSet {
    int words = 0;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> bits;

    const std::uint64_t* row(std::uint64_t m) const { return bits.data() + m * words; }
};

PackedSet pack_colourings(const ComponentStructure& s) {
    const int n = s.vertex_count();
    PackedSet p;
    p.words = (n + 63) / 64;
    p.count = std::uint64_t{1} << s.component_count;
    p.bits.assign(p.count * static_cast<std::uint64_t>(p.words), 0);

    std::vector<std::uint64_t> mask(
        static_cast<std::size_t>(s.component_count) * static_cast<std::size_t>(p.words), 0);
    for (int v = 0; v < n; ++v) {
        mask[static_cast<std::size_t>(s.component_of[v]) * p.words + v / 64] |=
            std::uint64_t{1} << (v % 64);
    }
    const Colouring& ref = *s.reference;
    for (int v = 0; v < n; ++v) {
        if (ref[v]) p.bits[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
    }
    for (std::uint64_t m = 1; m < p.count; ++m) {
        const int j = std::countr_zero(m);
        const std::uint64_t* src = p.row(m & (m - 1));
        const std::uint64_t* flip = mask.data() + static_cast<std::size_t>(j) * p.words;
        std::uint64_t* dst = p.bits.data() + m * p.words;
        for (int w = 0; w < p.words; ++w) dst[w] = src[w] ^ flip[w];
    }
    return p;
}

long long hamming(const std::uint64_t* a, const std::uint64_t* b, int words) {
    long long h = 0;
    for (int w = 0; w < words; ++w) h += std::popcount(a[w] ^ b[w]);
    return h;
}

[[noreturn]] void cap_error(const std::string& what, std::uint64_t cap) {
    throw CapExceededError(what + " exceeds the work cap of " + std::to_string(cap) +
                           "; raise --cap or shrink the instance");
}

}  // namespace

long long transition_cost(const Colouring& a, const Colouring& b) {
    if (a.size() != b.size()) {
        throw InvalidInputError("transition cost between colourings of lengths " +
                                std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    long long h = 0;
    for (std::size_t v = 0; v < a.size(); ++v) h += (a[v] != b[v]) ? 1 : 0;
    return h;
}

long long CostTable::optimum() const {
    long long best = std::numeric_limits<long long>::max();
    for (long long v : columns_.back()) best = std::min(best, v);
    return best;
}

const std::vector<long long>& CostTable::column(int t) const {
    if (t < 1 || t > lifetime()) throw std::out_of_range("table column " + std::to_string(t));
    if (cost_only_) {
        if (t != lifetime()) {
            throw std::logic_error("cost-only table retains only the final column");
        }
        return columns_.back();
    }
    return columns_[static_cast<std::size_t>(t - 1)];
}

const ComponentStructure& CostTable::structure(int t) const {
    if (t < 1 || t > lifetime()) throw std::out_of_range("table structure " + std::to_string(t));
    return structures_[static_cast<std::size_t>(t - 1)];
}

CostTable build_cost_table(const TemporalGraph& g, const DpOptions& options) {
    const int T = g.lifetime();
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    const std::uint64_t cap = std::min(options.work_cap, std::uint64_t{1} << 62);

    CostTable table;
    table.cost_only_ = options.cost_only;
    table.structures_.reserve(static_cast<std::size_t>(T));
    for (int t = 1; t <= T; ++t) {
        ComponentStructure s = components(g.vertex_count(), g.snapshot(t));
        if (!s.bipartite()) {
            throw NonBipartiteError("snapshot " + std::to_string(t) +
                                        " is not bipartite; no proper 2-colouring exists",
                                    t);
        }
        table.structures_.push_back(std::move(s));
    }

    // Refuse up front if either the enumeration or the transition phase would
    // blow the cap; no partial work is done.
    std::uint64_t enum_units = 0;
    std::uint64_t pair_units = 0;
    for (int t = 0; t < T; ++t) {
        const int k = table.structures_[static_cast<std::size_t>(t)].component_count;
        if (k >= 62 || (std::uint64_t{1} << k) > cap / n) {
            cap_error("enumerating 2^" + std::to_string(k) + " colourings of snapshot " +
                          std::to_string(t + 1),
                      cap);
        }
        enum_units += (std::uint64_t{1} << k) * n;
        if (enum_units > cap) cap_error("total colouring enumeration", cap);
        if (t > 0) {
            const int kp = table.structures_[static_cast<std::size_t>(t - 1)].component_count;
            if (kp + k >= 62) cap_error("transition block at snapshot " + std::to_string(t + 1), cap);
            pair_units += std::uint64_t{1} << (kp + k);
            if (pair_units > cap) {
                cap_error("transition evaluations at snapshot " + std::to_string(t + 1), cap);
            }
        }
    }

    PackedSet prev = pack_colourings(table.structures_[0]);
    table.work_.colourings_enumerated += prev.count;
    std::vector<long long> prev_col(prev.count, 0);
    if (!table.cost_only_) table.columns_.push_back(prev_col);

    for (int t = 2; t <= T; ++t) {
        PackedSet cur = pack_colourings(table.structures_[static_cast<std::size_t>(t - 1)]);
        table.work_.colourings_enumerated += cur.count;
        std::vector<long long> col(cur.count, 0);
        for (std::uint64_t m = 0; m < cur.count; ++m) {
            const std::uint64_t* target = cur.row(m);
            long long best = std::numeric_limits<long long>::max();
            // ascending scan with strict '<': ties keep the smallest index
            for (std::uint64_t mp = 0; mp < prev.count; ++mp) {
                const long long c = prev_col[mp] + hamming(prev.row(mp), target, prev.words);
                if (c < best) best = c;
            }
            col[m] = best;
        }
        table.work_.pair_evaluations += prev.count * cur.count;
        if (!table.cost_only_) table.columns_.push_back(col);
        prev_col = std::move(col);
        prev = std::move(cur);
    }

    if (table.cost_only_) table.columns_.push_back(std::move(prev_col));
    return table;
}

ColouringSequence recover_sequence(const TemporalGraph& g, const CostTable& table) {
    if (table.cost_only()) {
        throw std::logic_error("recover_sequence requires a fully retained table");
    }
    if (table.lifetime() != g.lifetime() ||
        (table.lifetime() > 0 && table.structure(1).vertex_count() != g.vertex_count())) {
        throw InvalidInputError("cost table does not match this instance");
    }

    const int T = g.lifetime();
    std::vector<std::uint64_t> chosen(static_cast<std::size_t>(T), 0);

    const std::vector<long long>& last = table.column(T);
    long long best = std::numeric_limits<long long>::max();
    for (std::uint64_t m = 0; m < last.size(); ++m) {
        if (last[m] < best) {
            best = last[m];
            chosen[static_cast<std::size_t>(T - 1)] = m;
        }
    }

    for (int t = T - 1; t >= 1; --t) {
        const PackedSet cur = pack_colourings(table.structure(t));
        const PackedSet next = pack_colourings(table.structure(t + 1));
        const std::uint64_t* target = next.row(chosen[static_cast<std::size_t>(t)]);
        const long long want = table.column(t + 1)[chosen[static_cast<std::size_t>(t)]];
        const std::vector<long long>& col = table.column(t);
        bool found = false;
        for (std::uint64_t m = 0; m < cur.count; ++m) {
            if (col[m] + hamming(cur.row(m), target, cur.words) == want) {
                chosen[static_cast<std::size_t>(t - 1)] = m;
                found = true;
                break;
            }
        }
        if (!found) {
            throw Error("cost table inconsistency: no predecessor for snapshot " +
                        std::to_string(t + 1));
        }
    }

    ColouringSequence seq;
    seq.steps.reserve(static_cast<std::size_t>(T));
    for (int t = 1; t <= T; ++t) {
        seq.steps.push_back(
            SnapshotColouringSet(table.structure(t)).at(chosen[static_cast<std::size_t>(t - 1)]));
    }
    return seq;
}

}  // namespace trec
