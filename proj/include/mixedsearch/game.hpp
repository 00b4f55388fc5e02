#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixedsearch/graph.hpp"

namespace mixedsearch {

// The searcher team changes its occupied set one vertex at a time:
// place a searcher, remove one, or slide one along an edge.
enum class MoveKind { place, remove, slide };

struct SearcherMove {
    MoveKind kind = MoveKind::place;
    Vertex v;        // place / remove target
    Vertex from, to; // slide endpoints

    static SearcherMove make_place(Vertex v);
    static SearcherMove make_remove(Vertex v);
    static SearcherMove make_slide(Vertex from, Vertex to);
    std::string str() const;
};

// Applies a move to an occupied set, validating it (InputError when illegal).
VertexSet apply_move(const Graph& g, const VertexSet& s, const SearcherMove& m);

// True iff s_next arises from s by exactly one place, remove, or slide.
bool legitimate(const Graph& g, const VertexSet& s, const VertexSet& s_next);

// Recovers the move that turns s into s_next, if the transition is legitimate.
std::optional<SearcherMove> move_between(const Graph& g, const VertexSet& s,
                                         const VertexSet& s_next);

// Edges swept by the transition: when a searcher arrives at y (by placement
// or slide), every edge from the previously occupied set to y is cleared;
// removals clear nothing. InputError on illegitimate transitions.
EdgeSet clear_set(const Graph& g, const VertexSet& s, const VertexSet& s_next);

// The edge slid along, when the transition is a slide.
std::optional<Edge> slide_edge(const Graph& g, const VertexSet& s, const VertexSet& s_next);

// An avoiding pathway for the transition s -> s_next is a pathway whose
// consecutive edges meet outside s intersect s_next and which never uses the
// slid edge (when the transition is a slide). Returns true iff such a
// pathway leads from e to target; a single edge e != slid edge is always a
// pathway from e to itself.
bool avoiding_pathway_exists(const Graph& g, const VertexSet& s, const VertexSet& s_next,
                             const Edge& e, const Edge& target);

// Edges reachable from e by an avoiding pathway, except those with both
// endpoints occupied after the move.
EdgeSet accessible_edges(const Graph& g, const VertexSet& s, const Edge& e,
                         const VertexSet& s_next);

// Reference implementation: enumerates pathway endpoints layer by layer up to
// length 2|E| (edges may repeat along a pathway, so no visited pruning).
EdgeSet accessible_edges_naive(const Graph& g, const VertexSet& s, const Edge& e,
                               const VertexSet& s_next);

// Where the fugitive may sit after the move: its current edge unless it was
// just cleared, plus everything accessible. Empty means capture.
EdgeSet fugitive_space(const Graph& g, const VertexSet& s, const Edge& e,
                       const VertexSet& s_next);

struct GameState {
    VertexSet searchers;
    std::optional<Edge> fugitive; // nullopt once captured
    EdgeSet cleared;              // union of all clear sets so far
};

// Start of a play: no searchers, fugitive on e1.
GameState initial_state(const Graph& g, const Edge& e1);

// One searcher move plus the fugitive's response. `choice` must lie in the
// fugitive space (InputError otherwise); without a choice the smallest edge
// of the space is taken. Capture leaves `fugitive` empty.
GameState step(const Graph& g, const GameState& st, const SearcherMove& m,
               const std::optional<Edge>& choice = std::nullopt);

struct PlayStep {
    SearcherMove move;
    VertexSet searchers;          // after the move
    std::optional<Edge> fugitive; // after the response; nullopt = captured
    EdgeSet cleared_now;          // clear set of this move
};

struct Play {
    Edge initial_fugitive;
    std::vector<PlayStep> steps;
    bool captured() const { return !steps.empty() && !steps.back().fugitive.has_value(); }
};

// Maximum number of searchers used at any point of the play.
int play_cost(const Play& p);

// A play is monotone when no fugitive edge was cleared at any earlier step.
bool is_monotone(const Play& p);

// Re-simulates the play through `step`, checking every recorded searcher
// set, clear set, and fugitive response. Throws InputError on any mismatch.
void replay_play(const Graph& g, const Play& p);

} // namespace mixedsearch
