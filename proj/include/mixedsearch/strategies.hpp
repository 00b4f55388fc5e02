#pragma once

#include <memory>
#include <optional>
#include <string>

#include "mixedsearch/bramble.hpp"
#include "mixedsearch/decomposition.hpp"
#include "mixedsearch/game.hpp"

namespace mixedsearch {

// A deterministic searcher-side policy. Implementations may keep internal
// state; `state_key` must determine future behaviour together with the
// observed position, and `clone` must copy that state.
class SearcherStrategy {
public:
    virtual ~SearcherStrategy() = default;
    virtual void reset() = 0;
    virtual SearcherMove next_move(const VertexSet& s, const Edge& fugitive) = 0;
    virtual std::string state_key() const = 0;
    virtual std::string describe() const = 0;
    virtual std::unique_ptr<SearcherStrategy> clone() const = 0;
    // False while the strategy is still performing its initial placements.
    virtual bool in_response_phase() const { return true; }
};

// A deterministic fugitive-side policy; emissions are validated against the
// fugitive space by the engine.
class FugitiveStrategy {
public:
    virtual ~FugitiveStrategy() = default;
    virtual void reset() = 0;
    virtual Edge initial_edge() = 0;
    virtual Edge respond(const VertexSet& s_prev, const Edge& e, const VertexSet& s_next,
                         const EdgeSet& space) = 0;
    virtual std::string state_key() const = 0;
    virtual std::string describe() const = 0;
    virtual std::unique_ptr<FugitiveStrategy> clone() const = 0;
};

// Width-many searchers walking a full decomposition: occupy a bag containing
// the fugitive's edge (smallest node id), then repeatedly step the bag along
// the tree towards a bag pair covering the fugitive's edge, swapping one
// vertex per tree-edge (slide when the swap pair is an edge, else remove
// then place). Input must be full and valid.
std::unique_ptr<SearcherStrategy> searcher_from_ltd(const LooseTreeDecomposition& d);

// One searcher on a tree: slide from x towards the component of tree - x
// holding the fugitive's edge. Default start: smallest vertex.
std::unique_ptr<SearcherStrategy> tree_searcher(const Graph& tree,
                                                const std::optional<Vertex>& start = {});

// One greedy searcher on a connected graph: walk a shortest path towards the
// nearer endpoint of the fugitive's edge. Without an explicit start it
// begins at the smaller endpoint of the first observed edge.
std::unique_ptr<SearcherStrategy> pursuit_searcher(const Graph& g,
                                                   const std::optional<Vertex>& start = {});

// Fugitive guided by a tight bramble of order k >= 2: sit on the smallest
// edge inside the current element; ignore searcher moves that miss the
// element; when the element is hit, relocate to the first element disjoint
// from the new searcher set.
std::unique_ptr<FugitiveStrategy> fugitive_from_bramble(const Graph& g, const TightBramble& b,
                                                        int k);

// Baseline fugitive: starts on the smallest edge, always picks the smallest
// edge of the fugitive space.
std::unique_ptr<FugitiveStrategy> first_edge_fugitive(const Graph& g);

enum class MatchVerdict { captured, escaped_by_limit, cycle_detected };
std::string verdict_str(MatchVerdict v);

struct MatchResult {
    Play play;
    MatchVerdict verdict = MatchVerdict::escaped_by_limit;
};

// Plays both strategies against each other. Positions (searchers, fugitive
// edge, both internal states) are hashed; a repeat ends the match as
// cycle_detected. Illegal emissions raise StrategyFault naming the side.
MatchResult run_match(const Graph& g, SearcherStrategy& searcher, FugitiveStrategy& fugitive,
                      int step_limit = 200);

struct FugitiveExhaustion {
    bool all_captured = true;
    bool all_monotone = true;
    // Response-phase fugitive spaces shrink strictly between consecutive
    // non-removal moves, and no two removals are adjacent.
    bool progress_ok = true;
    int max_cost = 0;
    int max_play_length = 0;
    long long positions = 0;
    std::string failure; // first violation, when any flag is false
};

// Plays the searcher strategy against every fugitive behaviour (all choices
// in every fugitive space), sharing work between plays that reach the same
// position. `position_cap` guards runaway searches (ResourceError).
FugitiveExhaustion exhaust_fugitive_choices(const Graph& g, const SearcherStrategy& searcher,
                                            long long position_cap = 2000000);

struct SearcherExhaustion {
    bool captured_somewhere = false;
    long long positions = 0;
    long long transitions = 0;
    std::string capture_witness; // how the fugitive was captured, when it was
};

// Drives the fugitive strategy against every sequence of legitimate moves by
// at most `k` searchers, with repetition cutoff on (state, searchers, edge).
// Fugitive emissions outside the space raise StrategyFault.
SearcherExhaustion exhaust_searcher_moves(const Graph& g, const FugitiveStrategy& fugitive,
                                          int k, long long position_cap = 2000000);

} // namespace mixedsearch
