#pragma once

#include <string>

#include "trec/auxiliary.hpp"
#include "trec/colouring.hpp"
#include "trec/graph.hpp"
#include "trec/reductions.hpp"

namespace trec {

/// JSON wire formats. Field names are part of the contract:
///   instance      {"n": <int>, "snapshots": [ [[u,v], ...], ... ]}
///   sequence      {"steps": [[c_0, ..., c_{n-1}], ...]}
///   static graph  {"n": <int>, "edges": [[u,v], ...]}
///   auxiliary     {"nodes": nT, "edges": [[a,b], ...], "classes": ["C"|"S", ...]}
/// Parsers throw ParseError on malformed JSON (message carries line/column)
/// and InvalidInputError on model violations; serializers emit edges sorted.

TemporalGraph parse_instance_json(const std::string& text);
std::string instance_to_json(const TemporalGraph& g, int indent = -1);

ColouringSequence parse_sequence_json(const std::string& text);
std::string sequence_to_json(const ColouringSequence& seq, int indent = -1);

StaticGraph parse_static_graph_json(const std::string& text);
std::string static_graph_to_json(const StaticGraph& g, int indent = -1);

std::string auxiliary_to_json(const AuxiliaryGraph& aux, int indent = -1);

/// Sidecar emitted next to reduced instances for traceability.
std::string gadget_map_to_json(const GadgetMap& map, int indent = -1);

/// Whole-file helpers; path "-" reads stdin.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace trec
