#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixedsearch/decomposition.hpp"
#include "mixedsearch/graph.hpp"

namespace mixedsearch {

// Exact number of searchers needed to capture the fugitive, by a least
// fixpoint over positions (searcher set, fugitive edge). Implemented on bit
// masks, independently of the play engine. The fixpoint is order-invariant;
// `shuffle_seed` != 0 permutes the sweep order to exercise that. Guards:
// at most 7 vertices and 12 edges (ResourceError), at least one edge.
int brute_avms(const Graph& g, unsigned shuffle_seed = 0);

// Same value under the restriction that the searchers may never let the
// fugitive reach a previously cleared edge (monotone play). States carry the
// cleared set; guards: at most 6 vertices and 9 edges.
int brute_mavms(const Graph& g);

// Minimum width over all decompositions, by exhaustive assembly of full
// decompositions with uniform bag size (every tree edge swaps one vertex for
// a globally fresh one; any width can be met that way). Guard: at most 5
// vertices, at least one edge.
int brute_min_ltd_width(const Graph& g);

// A witness decomposition of that minimum width.
LooseTreeDecomposition brute_min_ltd_witness(const Graph& g);

struct TheoremReport {
    std::optional<int> avms;          // game value
    std::optional<int> monotone_avms; // game value under monotone play
    std::optional<int> min_width;     // minimum decomposition width
    std::optional<int> bramble_order; // maximum tight bramble order
    bool values_consistent = true;    // all computed values pairwise equal
    bool searcher_check_ok = true;    // width-many searchers capture via the witness
    bool fugitive_check_ok = true;    // bramble fugitive survives order-1 searchers
    std::vector<std::string> notes;   // skipped parts and failure details
    bool ok() const { return values_consistent && searcher_check_ok && fugitive_check_ok; }
};

// Cross-checks the min-max equivalences on one graph: computes every value
// whose guard admits the graph, compares them, and replays both constructive
// directions (decomposition-guided searchers capture every fugitive
// behaviour at cost min_width; a bramble fugitive of order k survives any
// k-1 searchers). Out-of-guard computations are skipped with a note.
TheoremReport verify_theorem(const Graph& g);

// All graphs with 1..max_n vertices (letter labels) and 1..max_edges edges,
// up to isomorphism (canonical adjacency masks). Connected only, unless
// include_disconnected. Guard: max_n <= 7.
std::vector<Graph> enumerate_connected_graphs(int max_n, int max_edges,
                                              bool include_disconnected = false);

} // namespace mixedsearch
