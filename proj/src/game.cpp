#include "mixedsearch/game.hpp"

#include <algorithm>
#include <deque>

namespace mixedsearch {

SearcherMove SearcherMove::make_place(Vertex v) {
    SearcherMove m;
    m.kind = MoveKind::place;
    m.v = std::move(v);
    return m;
}

SearcherMove SearcherMove::make_remove(Vertex v) {
    SearcherMove m;
    m.kind = MoveKind::remove;
    m.v = std::move(v);
    return m;
}

SearcherMove SearcherMove::make_slide(Vertex from, Vertex to) {
    SearcherMove m;
    m.kind = MoveKind::slide;
    m.from = std::move(from);
    m.to = std::move(to);
    return m;
}

std::string SearcherMove::str() const {
    switch (kind) {
        case MoveKind::place: return "place " + v;
        case MoveKind::remove: return "remove " + v;
        case MoveKind::slide: return "slide " + from + "->" + to;
    }
    return "?";
}

VertexSet apply_move(const Graph& g, const VertexSet& s, const SearcherMove& m) {
    VertexSet out = s;
    switch (m.kind) {
        case MoveKind::place:
            g.require_vertex(m.v);
            if (s.count(m.v)) {
                throw InputError("illegal move '" + m.str() + "': vertex already occupied");
            }
            out.insert(m.v);
            return out;
        case MoveKind::remove:
            g.require_vertex(m.v);
            if (!s.count(m.v)) {
                throw InputError("illegal move '" + m.str() + "': vertex not occupied");
            }
            out.erase(m.v);
            return out;
        case MoveKind::slide:
            g.require_vertex(m.from);
            g.require_vertex(m.to);
            if (!g.has_edge(m.from, m.to)) {
                throw InputError("illegal move '" + m.str() + "': no such edge");
            }
            if (!s.count(m.from)) {
                throw InputError("illegal move '" + m.str() + "': source not occupied");
            }
            if (s.count(m.to)) {
                throw InputError("illegal move '" + m.str() + "': destination occupied");
            }
            out.erase(m.from);
            out.insert(m.to);
            return out;
    }
    throw InputError("illegal move: unknown kind");
}

std::optional<SearcherMove> move_between(const Graph& g, const VertexSet& s,
                                         const VertexSet& s_next) {
    for (const Vertex& v : s) g.require_vertex(v);
    for (const Vertex& v : s_next) g.require_vertex(v);
    VertexSet added, removed;
    std::set_difference(s_next.begin(), s_next.end(), s.begin(), s.end(),
                        std::inserter(added, added.end()));
    std::set_difference(s.begin(), s.end(), s_next.begin(), s_next.end(),
                        std::inserter(removed, removed.end()));
    if (added.size() == 1 && removed.empty()) {
        return SearcherMove::make_place(*added.begin());
    }
    if (added.empty() && removed.size() == 1) {
        return SearcherMove::make_remove(*removed.begin());
    }
    if (added.size() == 1 && removed.size() == 1 &&
        g.has_edge(*removed.begin(), *added.begin())) {
        return SearcherMove::make_slide(*removed.begin(), *added.begin());
    }
    return std::nullopt;
}

bool legitimate(const Graph& g, const VertexSet& s, const VertexSet& s_next) {
    return move_between(g, s, s_next).has_value();
}

namespace {

void require_legitimate(const Graph& g, const VertexSet& s, const VertexSet& s_next,
                        const std::string& op) {
    if (!legitimate(g, s, s_next)) {
        throw InputError(op + ": transition is not a single place, remove, or slide");
    }
}

std::optional<Vertex> added_vertex(const VertexSet& s, const VertexSet& s_next) {
    for (const Vertex& v : s_next) {
        if (!s.count(v)) return v;
    }
    return std::nullopt;
}

} // namespace

EdgeSet clear_set(const Graph& g, const VertexSet& s, const VertexSet& s_next) {
    require_legitimate(g, s, s_next, "clear_set");
    EdgeSet out;
    std::optional<Vertex> y = added_vertex(s, s_next);
    if (!y) return out; // removal clears nothing
    for (const Vertex& x : s) {
        if (g.has_edge(x, *y)) out.insert(Edge(x, *y));
    }
    return out;
}

std::optional<Edge> slide_edge(const Graph& g, const VertexSet& s, const VertexSet& s_next) {
    std::optional<SearcherMove> m = move_between(g, s, s_next);
    if (!m) {
        throw InputError("slide_edge: transition is not a single place, remove, or slide");
    }
    if (m->kind != MoveKind::slide) return std::nullopt;
    return Edge(m->from, m->to);
}

namespace {

// Reachability over edge-adjacency: consecutive pathway edges must share a
// vertex outside `blocked`, and the slid edge (if any) is banned outright.
EdgeSet pathway_reachable(const Graph& g, const Edge& e, const VertexSet& blocked,
                          const std::optional<Edge>& banned) {
    EdgeSet seen;
    if (banned && e == *banned) return seen;
    seen.insert(e);
    std::deque<Edge> queue{e};
    while (!queue.empty()) {
        Edge cur = queue.front();
        queue.pop_front();
        for (const Vertex& junction : {cur.a, cur.b}) {
            if (blocked.count(junction)) continue;
            for (const Vertex& w : g.neighbors(junction)) {
                Edge next(junction, w);
                if (next == cur) continue;
                if (banned && next == *banned) continue;
                if (seen.count(next)) continue;
                seen.insert(next);
                queue.push_back(next);
            }
        }
    }
    return seen;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

} // namespace

bool avoiding_pathway_exists(const Graph& g, const VertexSet& s, const VertexSet& s_next,
                             const Edge& e, const Edge& target) {
    g.require_edge(e);
    g.require_edge(target);
    require_legitimate(g, s, s_next, "avoiding_pathway_exists");
    std::optional<Edge> banned = slide_edge(g, s, s_next);
    EdgeSet reach = pathway_reachable(g, e, intersect(s, s_next), banned);
    return reach.count(target) != 0;
}

EdgeSet accessible_edges(const Graph& g, const VertexSet& s, const Edge& e,
                         const VertexSet& s_next) {
    g.require_edge(e);
    require_legitimate(g, s, s_next, "accessible_edges");
    std::optional<Edge> banned = slide_edge(g, s, s_next);
    EdgeSet reach = pathway_reachable(g, e, intersect(s, s_next), banned);
    EdgeSet out;
    for (const Edge& f : reach) {
        if (s_next.count(f.a) && s_next.count(f.b)) continue;
        out.insert(f);
    }
    return out;
}

EdgeSet accessible_edges_naive(const Graph& g, const VertexSet& s, const Edge& e,
                               const VertexSet& s_next) {
    g.require_edge(e);
    require_legitimate(g, s, s_next, "accessible_edges_naive");
    std::optional<Edge> banned = slide_edge(g, s, s_next);
    VertexSet blocked = intersect(s, s_next);

    EdgeSet reached;
    EdgeSet layer;
    if (!banned || e != *banned) layer.insert(e);
    reached = layer;
    // Pathways may repeat edges, so extend layer by layer without pruning;
    // 2|E| steps dominate every minimal pathway length.
    for (std::size_t t = 1; t < 2 * g.edge_count(); ++t) {
        EdgeSet next;
        for (const Edge& cur : layer) {
            for (const Edge& cand : g.edges()) {
                if (cand == cur) continue;
                if (banned && cand == *banned) continue;
                bool ok = false;
                for (const Vertex& junction : {cur.a, cur.b}) {
                    if (blocked.count(junction)) continue;
                    if (cand.contains(junction)) {
                        ok = true;
                        break;
                    }
                }
                if (ok) next.insert(cand);
            }
        }
        layer = std::move(next);
        reached.insert(layer.begin(), layer.end());
    }
    EdgeSet out;
    for (const Edge& f : reached) {
        if (s_next.count(f.a) && s_next.count(f.b)) continue;
        out.insert(f);
    }
    return out;
}

EdgeSet fugitive_space(const Graph& g, const VertexSet& s, const Edge& e,
                       const VertexSet& s_next) {
    EdgeSet out = accessible_edges(g, s, e, s_next);
    if (!clear_set(g, s, s_next).count(e)) out.insert(e);
    return out;
}

GameState initial_state(const Graph& g, const Edge& e1) {
    if (g.edge_count() == 0) {
        throw InputError("the game needs a graph with at least one edge");
    }
    g.require_edge(e1);
    return {{}, e1, {}};
}

GameState step(const Graph& g, const GameState& st, const SearcherMove& m,
               const std::optional<Edge>& choice) {
    if (!st.fugitive) {
        throw InputError("step: the fugitive is already captured");
    }
    VertexSet s_next = apply_move(g, st.searchers, m);
    EdgeSet cleared_now = clear_set(g, st.searchers, s_next);
    EdgeSet space = fugitive_space(g, st.searchers, *st.fugitive, s_next);

    GameState out;
    out.searchers = std::move(s_next);
    out.cleared = st.cleared;
    out.cleared.insert(cleared_now.begin(), cleared_now.end());
    if (space.empty()) {
        return out; // captured
    }
    if (choice) {
        if (!space.count(*choice)) {
            throw InputError("step: fugitive choice " + choice->str() +
                             " is outside the fugitive space");
        }
        out.fugitive = *choice;
    } else {
        out.fugitive = *space.begin();
    }
    return out;
}

int play_cost(const Play& p) {
    std::size_t cost = 0;
    for (const PlayStep& st : p.steps) {
        cost = std::max(cost, st.searchers.size());
    }
    return static_cast<int>(cost);
}

bool is_monotone(const Play& p) {
    EdgeSet cleared;
    for (const PlayStep& st : p.steps) {
        cleared.insert(st.cleared_now.begin(), st.cleared_now.end());
        if (st.fugitive && cleared.count(*st.fugitive)) return false;
    }
    return true;
}

void replay_play(const Graph& g, const Play& p) {
    GameState st = initial_state(g, p.initial_fugitive);
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const PlayStep& rec = p.steps[i];
        if (!st.fugitive) {
            throw InputError("replay: step " + std::to_string(i + 1) + " after capture");
        }
        EdgeSet expect_clear = clear_set(g, st.searchers, apply_move(g, st.searchers, rec.move));
        GameState next = step(g, st, rec.move, rec.fugitive);
        if (next.searchers != rec.searchers) {
            throw InputError("replay: searcher set mismatch at step " + std::to_string(i + 1));
        }
        if (expect_clear != rec.cleared_now) {
            throw InputError("replay: clear set mismatch at step " + std::to_string(i + 1));
        }
        if (next.fugitive != rec.fugitive) {
            throw InputError("replay: fugitive mismatch at step " + std::to_string(i + 1));
        }
        st = std::move(next);
    }
}

} // namespace mixedsearch
