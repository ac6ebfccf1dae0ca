#include "trec/colouring.hpp"

#include <stdexcept>
#include <string>

namespace trec {

bool is_proper(const Colouring& colouring, const EdgeList& edges) {
    const int n = static_cast<int>(colouring.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n) {
            throw std::out_of_range("edge endpoint outside colouring of length " +
                                    std::to_string(n));
        }
        if (colouring[e.u] == colouring[e.v]) return false;
    }
    return true;
}

namespace {

void check_shape(const TemporalGraph& g, const ColouringSequence& seq) {
    if (static_cast<int>(seq.steps.size()) != g.lifetime()) {
        throw InvalidInputError("sequence has " + std::to_string(seq.steps.size()) +
                                " steps, instance lifetime is " + std::to_string(g.lifetime()));
    }
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        if (static_cast<int>(seq.steps[i].size()) != g.vertex_count()) {
            throw InvalidInputError("step " + std::to_string(i + 1) + " colours " +
                                    std::to_string(seq.steps[i].size()) + " vertices, expected " +
                                    std::to_string(g.vertex_count()));
        }
    }
}

}  // namespace

CostReport cost(const TemporalGraph& g, const ColouringSequence& seq) {
    check_shape(g, seq);
    const int n = g.vertex_count();
    const int T = g.lifetime();
    CostReport report;
    report.per_vertex.assign(static_cast<std::size_t>(n), 0);
    report.per_transition.assign(static_cast<std::size_t>(T > 0 ? T - 1 : 0), 0);
    for (int t = 0; t + 1 < T; ++t) {
        for (int v = 0; v < n; ++v) {
            if (seq.steps[t][v] != seq.steps[t + 1][v]) {
                ++report.total;
                ++report.per_vertex[v];
                ++report.per_transition[t];
            }
        }
    }
    return report;
}

ValidationResult validate_sequence(const TemporalGraph& g, const ColouringSequence& seq,
                                   int palette) {
    check_shape(g, seq);
    for (int t = 1; t <= g.lifetime(); ++t) {
        const Colouring& step = seq.steps[static_cast<std::size_t>(t - 1)];
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (step[v] < 0 || step[v] >= palette) {
                ValidationResult r;
                r.ok = false;
                r.timestep = t;
                r.bad_colour_vertex = v;
                return r;
            }
        }
        for (const Edge& e : g.snapshot(t)) {
            if (step[e.u] == step[e.v]) {
                ValidationResult r;
                r.ok = false;
                r.timestep = t;
                r.monochrome_edge = e;
                return r;
            }
        }
    }
    return ValidationResult{};
}

}  // namespace trec
