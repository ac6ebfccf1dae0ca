#include "trec/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace trec {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann's message already carries line/column context
        throw ParseError(e.what());
    }
}

int require_int(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer()) {
        throw ParseError(std::string("missing or non-integer field \"") + field + "\"");
    }
    return j[field].get<int>();
}

std::vector<std::pair<int, int>> read_pairs(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + " must be an array of [u,v] pairs");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw ParseError(where + " contains a malformed pair");
        }
        pairs.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return pairs;
}

json edges_to_json(const EdgeList& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(json::array({e.u, e.v}));
    return arr;
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

TemporalGraph parse_instance_json(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    const int n = require_int(j, "n");
    if (!j.contains("snapshots") || !j["snapshots"].is_array()) {
        throw ParseError("missing or non-array field \"snapshots\"");
    }
    std::vector<std::vector<std::pair<int, int>>> snapshots;
    snapshots.reserve(j["snapshots"].size());
    int t = 1;
    for (const auto& snap : j["snapshots"]) {
        snapshots.push_back(read_pairs(snap, "snapshot " + std::to_string(t++)));
    }
    return TemporalGraph(n, std::move(snapshots));
}

std::string instance_to_json(const TemporalGraph& g, int indent) {
    json snaps = json::array();
    for (const auto& edges : g.snapshots()) snaps.push_back(edges_to_json(edges));
    return dump(json{{"n", g.vertex_count()}, {"snapshots", snaps}}, indent);
}

ColouringSequence parse_sequence_json(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array()) {
        throw ParseError("sequence must be an object with a \"steps\" array");
    }
    ColouringSequence seq;
    seq.steps.reserve(j["steps"].size());
    for (const auto& step : j["steps"]) {
        if (!step.is_array()) throw ParseError("each step must be an array of colours");
        Colouring colours;
        colours.reserve(step.size());
        for (const auto& c : step) {
            if (!c.is_number_integer() || c.get<int>() < 0) {
                throw ParseError("colours must be non-negative integers");
            }
            colours.push_back(c.get<int>());
        }
        seq.steps.push_back(std::move(colours));
    }
    return seq;
}

std::string sequence_to_json(const ColouringSequence& seq, int indent) {
    json steps = json::array();
    for (const auto& step : seq.steps) steps.push_back(step);
    return dump(json{{"steps", steps}}, indent);
}

StaticGraph parse_static_graph_json(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("static graph must be a JSON object");
    const int n = require_int(j, "n");
    if (!j.contains("edges")) throw ParseError("missing field \"edges\"");
    return make_static_graph(n, read_pairs(j["edges"], "edges"));
}

std::string static_graph_to_json(const StaticGraph& g, int indent) {
    return dump(json{{"n", g.n}, {"edges", edges_to_json(g.edges)}}, indent);
}

std::string auxiliary_to_json(const AuxiliaryGraph& aux, int indent) {
    json edges = json::array();
    json classes = json::array();
    for (std::size_t i = 0; i < aux.edges().size(); ++i) {
        edges.push_back(json::array({aux.edges()[i].first, aux.edges()[i].second}));
        classes.push_back(aux.classes()[i] == AuxEdgeClass::Temporal ? "C" : "S");
    }
    return dump(json{{"nodes", aux.node_count()}, {"edges", edges}, {"classes", classes}}, indent);
}

std::string gadget_map_to_json(const GadgetMap& map, int indent) {
    json gadgets = json::array();
    for (const auto& g : map.vertex_gadgets) gadgets.push_back(g);
    json edges = json::array();
    for (std::size_t i = 0; i < map.h_edges.size(); ++i) {
        edges.push_back(json{{"h", json::array({map.h_edges[i].u, map.h_edges[i].v})},
                             {"g2", json::array({map.edge_gadgets[i].first,
                                                 map.edge_gadgets[i].second})}});
    }
    return dump(json{{"vertex_gadgets", gadgets}, {"edges", edges}}, indent);
}

std::string read_text_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

}  // namespace trec
