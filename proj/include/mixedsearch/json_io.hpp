#pragma once

#include <optional>
#include <string>

#include "mixedsearch/bramble.hpp"
#include "mixedsearch/cartesian.hpp"
#include "mixedsearch/decomposition.hpp"
#include "mixedsearch/game.hpp"
#include "mixedsearch/strategies.hpp"

namespace mixedsearch {

// All loaders throw InputError on unreadable files, malformed JSON, missing
// fields, or vertex ids that are empty or contain '-' (reserved as the edge
// separator in trace output).

// {"vertices": ["a", ...], "edges": [["a","b"], ...]}
Graph graph_from_json(const std::string& text);
Graph load_graph(const std::string& path);
std::string graph_to_json(const Graph& g);

// {"nodes": [{"id": "t1", "bag": ["a","b"]}, ...],
//  "tree_edges": [["t1","t2"], ...],
//  "graph": <graph object> | "<path relative to this file>"}
// An explicit graph_path overrides the embedded graph.
LooseTreeDecomposition ltd_from_json(const std::string& text, const std::string& base_dir,
                                     const std::optional<std::string>& graph_path = {});
LooseTreeDecomposition load_ltd(const std::string& path,
                                const std::optional<std::string>& graph_path = {});
std::string ltd_to_json(const LooseTreeDecomposition& d);

// {"elements": [["a","b"], ...]}
TightBramble bramble_from_json(const std::string& text);
TightBramble load_bramble(const std::string& path);
std::string bramble_to_json(const TightBramble& b);

// {"branch_sets": {"a": ["a#1","b#1"], ...}}
std::string model_to_json(const MinorModel& m);

// Embedding summary: k, product and completion graphs, branch sets, slots.
std::string embedding_to_json(const Embedding& e);

// Graphviz form of a decomposition (boxes labeled with bags) and of a graph.
std::string ltd_to_dot(const LooseTreeDecomposition& d);
std::string graph_to_dot(const Graph& g, const std::string& name = "g");

// One JSON object per line: step 0 carries the fugitive's opening edge, each
// later line one move with the resulting position, the edges cleared by the
// move, and whether the play is monotone so far; a final line carries the
// verdict, cost, and step count.
std::string match_to_jsonl(const MatchResult& r);

std::string slurp_file(const std::string& path);

} // namespace mixedsearch
