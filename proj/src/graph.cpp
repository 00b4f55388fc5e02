#include "mixedsearch/graph.hpp"

#include <algorithm>
#include <deque>

namespace mixedsearch {

Edge::Edge(Vertex x, Vertex y) {
    if (x == y) {
        throw InputError("loop edge '" + x + "-" + y + "' is not allowed");
    }
    if (x < y) {
        a = std::move(x);
        b = std::move(y);
    } else {
        a = std::move(y);
        b = std::move(x);
    }
}

const Vertex& Edge::other(const Vertex& v) const {
    if (v == a) return b;
    if (v == b) return a;
    throw InputError("vertex '" + v + "' is not an endpoint of edge " + str());
}

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end()) {
        throw InputError("duplicate vertex id in graph");
    }
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        vidx_[verts_[i]] = i;
        adj_[verts_[i]] = {};
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw InputError("duplicate edge in graph");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!has_vertex(e.a) || !has_vertex(e.b)) {
            throw InputError("edge " + e.str() + " references an unknown vertex");
        }
        eidx_[e] = i;
        adj_[e.a].push_back(e.b);
        adj_[e.b].push_back(e.a);
    }
    for (auto& [v, nbrs] : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

bool Graph::has_edge(const Vertex& x, const Vertex& y) const {
    if (x == y) return false;
    return eidx_.count(Edge(x, y)) != 0;
}

const std::vector<Vertex>& Graph::neighbors(const Vertex& v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) {
        throw InputError("unknown vertex '" + v + "'");
    }
    return it->second;
}

std::size_t Graph::vertex_index(const Vertex& v) const {
    auto it = vidx_.find(v);
    if (it == vidx_.end()) {
        throw InputError("unknown vertex '" + v + "'");
    }
    return it->second;
}

std::size_t Graph::edge_index(const Edge& e) const {
    auto it = eidx_.find(e);
    if (it == eidx_.end()) {
        throw InputError("unknown edge " + e.str());
    }
    return it->second;
}

void Graph::require_vertex(const Vertex& v) const {
    if (!has_vertex(v)) {
        throw InputError("unknown vertex '" + v + "'");
    }
}

void Graph::require_edge(const Edge& e) const {
    if (!has_edge(e)) {
        throw InputError("unknown edge " + e.str());
    }
}

VertexSet component_of(const Graph& g, const VertexSet& removed, const Vertex& start) {
    g.require_vertex(start);
    if (removed.count(start)) {
        throw InputError("component_of: start vertex '" + start + "' is removed");
    }
    VertexSet seen{start};
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (const Vertex& w : g.neighbors(v)) {
            if (removed.count(w) || seen.count(w)) continue;
            seen.insert(w);
            queue.push_back(w);
        }
    }
    return seen;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet assigned;
    for (const Vertex& v : g.vertices()) {
        if (assigned.count(v)) continue;
        VertexSet comp = component_of(g, {}, v);
        assigned.insert(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return component_of(g, {}, g.vertices().front()).size() == g.vertex_count();
}

bool is_tree(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count()) return false;
    for (const Vertex& v : g.vertices()) {
        if (g.degree(v) != 2) return false;
    }
    return is_connected(g);
}

bool induced_connected(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    for (const Vertex& v : s) g.require_vertex(v);
    VertexSet seen{*s.begin()};
    std::deque<Vertex> queue{*s.begin()};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (const Vertex& w : g.neighbors(v)) {
            if (!s.count(w) || seen.count(w)) continue;
            seen.insert(w);
            queue.push_back(w);
        }
    }
    return seen.size() == s.size();
}

std::vector<Edge> induced_edges(const Graph& g, const VertexSet& s) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (s.count(e.a) && s.count(e.b)) out.push_back(e);
    }
    return out;
}

bool is_separator(const Graph& g, const VertexSet& s) {
    for (const Vertex& v : s) g.require_vertex(v);
    std::size_t before = connected_components(g).size();
    std::size_t after = 0;
    VertexSet assigned;
    for (const Vertex& v : g.vertices()) {
        if (s.count(v) || assigned.count(v)) continue;
        VertexSet comp = component_of(g, s, v);
        assigned.insert(comp.begin(), comp.end());
        ++after;
    }
    return after > before;
}

bool separates(const Graph& g, const VertexSet& s, const VertexSet& x, const VertexSet& y) {
    for (const Vertex& v : s) g.require_vertex(v);
    for (const Vertex& v : x) g.require_vertex(v);
    for (const Vertex& v : y) g.require_vertex(v);
    VertexSet xs, ys;
    std::set_difference(x.begin(), x.end(), s.begin(), s.end(), std::inserter(xs, xs.end()));
    std::set_difference(y.begin(), y.end(), s.begin(), s.end(), std::inserter(ys, ys.end()));
    if (xs.empty() || ys.empty()) return false;
    VertexSet assigned;
    for (const Vertex& v : g.vertices()) {
        if (s.count(v) || assigned.count(v)) continue;
        VertexSet comp = component_of(g, s, v);
        assigned.insert(comp.begin(), comp.end());
        bool meets_x = std::any_of(xs.begin(), xs.end(),
                                   [&](const Vertex& u) { return comp.count(u) != 0; });
        bool meets_y = std::any_of(ys.begin(), ys.end(),
                                   [&](const Vertex& u) { return comp.count(u) != 0; });
        if (meets_x && meets_y) return false;
    }
    return true;
}

Graph delete_vertex(const Graph& g, const Vertex& v) {
    g.require_vertex(v);
    std::vector<Vertex> verts;
    for (const Vertex& u : g.vertices()) {
        if (u != v) verts.push_back(u);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (!e.contains(v)) edges.push_back(e);
    }
    return Graph(std::move(verts), std::move(edges));
}

Graph delete_edge(const Graph& g, const Edge& e) {
    g.require_edge(e);
    std::vector<Edge> edges;
    for (const Edge& f : g.edges()) {
        if (f != e) edges.push_back(f);
    }
    return Graph(g.vertices(), std::move(edges));
}

Vertex contracted_vertex_id(const Graph& g, const Edge& e) {
    Vertex merged = e.a + e.b;
    while (g.has_vertex(merged)) merged += "'";
    return merged;
}

Graph contract_edge(const Graph& g, const Edge& e) {
    g.require_edge(e);
    Vertex merged = contracted_vertex_id(g, e);
    std::vector<Vertex> verts{merged};
    for (const Vertex& u : g.vertices()) {
        if (!e.contains(u)) verts.push_back(u);
    }
    EdgeSet edges;
    for (const Edge& f : g.edges()) {
        if (f == e) continue;
        Vertex x = e.contains(f.a) ? merged : f.a;
        Vertex y = e.contains(f.b) ? merged : f.b;
        edges.insert(Edge(x, y));
    }
    return Graph(std::move(verts), std::vector<Edge>(edges.begin(), edges.end()));
}

std::map<Vertex, int> bfs_distances(const Graph& g, const Vertex& start, const VertexSet& removed) {
    g.require_vertex(start);
    std::map<Vertex, int> dist;
    if (removed.count(start)) return dist;
    dist[start] = 0;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (const Vertex& w : g.neighbors(v)) {
            if (removed.count(w) || dist.count(w)) continue;
            dist[w] = dist[v] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

bool pathway_valid(const Graph& g, const Pathway& w) {
    if (w.empty()) return false;
    for (const Edge& e : w) g.require_edge(e);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const Edge& e = w[i];
        const Edge& f = w[i + 1];
        if (e == f) return false;
        bool share = e.contains(f.a) || e.contains(f.b);
        if (!share) return false;
    }
    return true;
}

ModelCheck verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& m) {
    for (const Vertex& v : pattern.vertices()) {
        auto it = m.branch_sets.find(v);
        if (it == m.branch_sets.end() || it->second.empty()) {
            return {false, "pattern vertex '" + v + "' has no (nonempty) branch set"};
        }
    }
    for (const auto& [v, set] : m.branch_sets) {
        if (!pattern.has_vertex(v)) {
            return {false, "branch set key '" + v + "' is not a pattern vertex"};
        }
        for (const Vertex& u : set) {
            if (!host.has_vertex(u)) {
                return {false, "branch set of '" + v + "' uses unknown host vertex '" + u + "'"};
            }
        }
        if (!induced_connected(host, set)) {
            return {false, "branch set of '" + v + "' does not induce a connected subgraph"};
        }
    }
    for (auto it1 = m.branch_sets.begin(); it1 != m.branch_sets.end(); ++it1) {
        for (auto it2 = std::next(it1); it2 != m.branch_sets.end(); ++it2) {
            for (const Vertex& u : it1->second) {
                if (it2->second.count(u)) {
                    return {false, "branch sets of '" + it1->first + "' and '" + it2->first +
                                       "' both contain host vertex '" + u + "'"};
                }
            }
        }
    }
    for (const Edge& e : pattern.edges()) {
        const VertexSet& sa = m.branch_sets.at(e.a);
        const VertexSet& sb = m.branch_sets.at(e.b);
        bool found = false;
        for (const Vertex& u : sa) {
            for (const Vertex& w : sb) {
                if (host.has_edge(u, w)) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) {
            return {false, "no host edge realizes pattern edge " + e.str()};
        }
    }
    return {true, ""};
}

} // namespace mixedsearch
