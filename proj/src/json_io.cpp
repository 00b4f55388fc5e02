#include "mixedsearch/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mixedsearch {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse(const std::string& text, const char* what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("failed to parse ") + what + ": " + ex.what());
    }
}

void check_id(const std::string& id, const char* what) {
    if (id.empty()) {
        throw InputError(std::string(what) + " ids may not be empty");
    }
    if (id.find('-') != std::string::npos) {
        throw InputError(std::string(what) + " id '" + id +
                         "' contains '-', which is reserved as the edge separator");
    }
}

std::vector<Vertex> id_array(const ordered_json& j, const char* what) {
    if (!j.is_array()) {
        throw InputError(std::string(what) + " must be an array of strings");
    }
    std::vector<Vertex> out;
    for (const ordered_json& item : j) {
        if (!item.is_string()) {
            throw InputError(std::string(what) + " must be an array of strings");
        }
        out.push_back(item.get<std::string>());
        check_id(out.back(), what);
    }
    return out;
}

std::vector<Edge> edge_array(const ordered_json& j, const char* what) {
    if (!j.is_array()) {
        throw InputError(std::string(what) + " must be an array of vertex pairs");
    }
    std::vector<Edge> out;
    for (const ordered_json& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
            !item[1].is_string()) {
            throw InputError(std::string(what) + " entries must be pairs of strings");
        }
        std::string a = item[0].get<std::string>();
        std::string b = item[1].get<std::string>();
        check_id(a, what);
        check_id(b, what);
        out.emplace_back(a, b);
    }
    return out;
}

const ordered_json& field(const ordered_json& j, const char* name, const char* what) {
    auto it = j.find(name);
    if (it == j.end()) {
        throw InputError(std::string(what) + " is missing the '" + name + "' field");
    }
    return *it;
}

Graph graph_from_parsed(const ordered_json& j) {
    if (!j.is_object()) {
        throw InputError("graph must be a JSON object");
    }
    std::vector<Vertex> verts = id_array(field(j, "vertices", "graph"), "graph vertex");
    std::vector<Edge> edges = edge_array(field(j, "edges", "graph"), "graph edge");
    return Graph(verts, edges);
}

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["vertices"] = g.vertices();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back(ordered_json::array({e.a, e.b}));
    }
    j["edges"] = std::move(edges);
    return j;
}

ordered_json vertex_set_json(const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (const Vertex& v : s) arr.push_back(v);
    return arr;
}

ordered_json edge_str_array(const EdgeSet& s) {
    ordered_json arr = ordered_json::array();
    for (const Edge& e : s) arr.push_back(e.str());
    return arr;
}

std::string quote_dot(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph graph_from_json(const std::string& text) {
    return graph_from_parsed(parse(text, "graph"));
}

Graph load_graph(const std::string& path) {
    return graph_from_json(slurp_file(path));
}

std::string graph_to_json(const Graph& g) {
    return graph_json(g).dump(2) + "\n";
}

LooseTreeDecomposition ltd_from_json(const std::string& text, const std::string& base_dir,
                                     const std::optional<std::string>& graph_path) {
    ordered_json j = parse(text, "decomposition");
    if (!j.is_object()) {
        throw InputError("decomposition must be a JSON object");
    }
    LooseTreeDecomposition d;

    const ordered_json& nodes = field(j, "nodes", "decomposition");
    if (!nodes.is_array() || nodes.empty()) {
        throw InputError("decomposition 'nodes' must be a nonempty array");
    }
    std::vector<Vertex> node_ids;
    for (const ordered_json& node : nodes) {
        if (!node.is_object()) {
            throw InputError("decomposition nodes must be objects with 'id' and 'bag'");
        }
        const ordered_json& id_field = field(node, "id", "decomposition node");
        if (!id_field.is_string()) {
            throw InputError("decomposition node 'id' must be a string");
        }
        std::string id = id_field.get<std::string>();
        check_id(id, "decomposition node");
        if (d.bags.count(id)) {
            throw InputError("duplicate decomposition node id '" + id + "'");
        }
        std::vector<Vertex> bag = id_array(field(node, "bag", "decomposition node"), "bag vertex");
        d.bags[id] = VertexSet(bag.begin(), bag.end());
        node_ids.push_back(id);
    }
    std::vector<Edge> tree_edges = edge_array(field(j, "tree_edges", "decomposition"),
                                              "decomposition tree edge");
    d.tree = Graph(node_ids, tree_edges);

    if (graph_path) {
        d.graph = load_graph(*graph_path);
    } else {
        auto it = j.find("graph");
        if (it == j.end()) {
            throw InputError("decomposition needs a 'graph' field or an explicit graph file");
        }
        if (it->is_string()) {
            std::filesystem::path p = it->get<std::string>();
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            d.graph = load_graph(p.string());
        } else {
            d.graph = graph_from_parsed(*it);
        }
    }
    return d;
}

LooseTreeDecomposition load_ltd(const std::string& path,
                                const std::optional<std::string>& graph_path) {
    std::string base = std::filesystem::path(path).parent_path().string();
    if (base.empty()) base = ".";
    return ltd_from_json(slurp_file(path), base, graph_path);
}

std::string ltd_to_json(const LooseTreeDecomposition& d) {
    ordered_json j;
    ordered_json nodes = ordered_json::array();
    for (const auto& [id, bag] : d.bags) {
        ordered_json node;
        node["id"] = id;
        node["bag"] = vertex_set_json(bag);
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    ordered_json tree_edges = ordered_json::array();
    for (const Edge& e : d.tree.edges()) {
        tree_edges.push_back(ordered_json::array({e.a, e.b}));
    }
    j["tree_edges"] = std::move(tree_edges);
    j["graph"] = graph_json(d.graph);
    return j.dump(2) + "\n";
}

TightBramble bramble_from_json(const std::string& text) {
    ordered_json j = parse(text, "bramble");
    if (!j.is_object()) {
        throw InputError("bramble must be a JSON object");
    }
    const ordered_json& elements = field(j, "elements", "bramble");
    if (!elements.is_array()) {
        throw InputError("bramble 'elements' must be an array of vertex arrays");
    }
    TightBramble b;
    for (const ordered_json& elem : elements) {
        std::vector<Vertex> verts = id_array(elem, "bramble element vertex");
        b.elements.emplace_back(verts.begin(), verts.end());
    }
    std::sort(b.elements.begin(), b.elements.end());
    b.elements.erase(std::unique(b.elements.begin(), b.elements.end()), b.elements.end());
    return b;
}

TightBramble load_bramble(const std::string& path) {
    return bramble_from_json(slurp_file(path));
}

std::string bramble_to_json(const TightBramble& b) {
    ordered_json j;
    ordered_json elements = ordered_json::array();
    for (const VertexSet& elem : b.elements) {
        elements.push_back(vertex_set_json(elem));
    }
    j["elements"] = std::move(elements);
    return j.dump(2) + "\n";
}

std::string model_to_json(const MinorModel& m) {
    ordered_json j;
    ordered_json sets = ordered_json::object();
    for (const auto& [v, set] : m.branch_sets) {
        sets[v] = vertex_set_json(set);
    }
    j["branch_sets"] = std::move(sets);
    return j.dump(2) + "\n";
}

std::string embedding_to_json(const Embedding& e) {
    ordered_json j;
    j["k"] = e.k;
    j["product"] = graph_json(e.product.product);
    ordered_json sets = ordered_json::object();
    for (const auto& [v, set] : e.model.branch_sets) {
        sets[v] = vertex_set_json(set);
    }
    j["branch_sets"] = std::move(sets);
    ordered_json slots = ordered_json::object();
    for (const auto& [v, s] : e.slot) {
        slots[v] = s;
    }
    j["slots"] = std::move(slots);
    j["completion"] = graph_json(e.completion);
    return j.dump(2) + "\n";
}

std::string ltd_to_dot(const LooseTreeDecomposition& d) {
    std::ostringstream os;
    os << "graph decomposition {\n  node [shape=box];\n";
    for (const auto& [id, bag] : d.bags) {
        std::string label = id + "\\n{";
        bool first = true;
        for (const Vertex& v : bag) {
            if (!first) label += ", ";
            label += v;
            first = false;
        }
        label += "}";
        os << "  " << quote_dot(id) << " [label=" << quote_dot(label) << "];\n";
    }
    for (const Edge& e : d.tree.edges()) {
        os << "  " << quote_dot(e.a) << " -- " << quote_dot(e.b) << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (const Vertex& v : g.vertices()) {
        os << "  " << quote_dot(v) << ";\n";
    }
    for (const Edge& e : g.edges()) {
        os << "  " << quote_dot(e.a) << " -- " << quote_dot(e.b) << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string match_to_jsonl(const MatchResult& r) {
    std::ostringstream os;
    ordered_json head;
    head["step"] = 0;
    head["searchers"] = ordered_json::array();
    head["fugitive"] = r.play.initial_fugitive.str();
    os << head.dump() << "\n";

    EdgeSet cleared_before;
    bool monotone = true;
    int step_no = 0;
    for (const PlayStep& step : r.play.steps) {
        ++step_no;
        ordered_json line;
        line["step"] = step_no;
        ordered_json mv;
        switch (step.move.kind) {
            case MoveKind::place:
                mv["kind"] = "place";
                mv["vertex"] = step.move.v;
                break;
            case MoveKind::remove:
                mv["kind"] = "remove";
                mv["vertex"] = step.move.v;
                break;
            case MoveKind::slide:
                mv["kind"] = "slide";
                mv["from"] = step.move.from;
                mv["to"] = step.move.to;
                break;
        }
        line["move"] = std::move(mv);
        line["searchers"] = vertex_set_json(step.searchers);
        if (step.fugitive) {
            if (cleared_before.count(*step.fugitive)) monotone = false;
            line["fugitive"] = step.fugitive->str();
        } else {
            line["fugitive"] = "CAPTURED";
        }
        line["cleared_now"] = edge_str_array(step.cleared_now);
        line["monotone_so_far"] = monotone;
        os << line.dump() << "\n";
        cleared_before.insert(step.cleared_now.begin(), step.cleared_now.end());
    }

    ordered_json tail;
    tail["verdict"] = verdict_str(r.verdict);
    tail["cost"] = play_cost(r.play);
    tail["steps"] = step_no;
    tail["monotone"] = monotone;
    os << tail.dump() << "\n";
    return os.str();
}

} // namespace mixedsearch
