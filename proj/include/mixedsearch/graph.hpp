#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mixedsearch/errors.hpp"

namespace mixedsearch {

using Vertex = std::string;
using VertexSet = std::set<Vertex>;

// Undirected edge stored as a canonical ordered pair (a < b).
struct Edge {
    Vertex a;
    Vertex b;

    Edge(Vertex x, Vertex y);

    bool contains(const Vertex& v) const { return v == a || v == b; }
    const Vertex& other(const Vertex& v) const;
    std::string str() const { return a + "-" + b; }

    auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

// Finite simple undirected graph with string vertex ids.
// Vertices and edges are kept sorted, so iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const Vertex& v) const { return vidx_.count(v) != 0; }
    bool has_edge(const Vertex& x, const Vertex& y) const;
    bool has_edge(const Edge& e) const { return eidx_.count(e) != 0; }

    // Sorted neighbour list; throws InputError on unknown vertex.
    const std::vector<Vertex>& neighbors(const Vertex& v) const;
    std::size_t degree(const Vertex& v) const { return neighbors(v).size(); }

    std::size_t vertex_index(const Vertex& v) const;
    std::size_t edge_index(const Edge& e) const;

    void require_vertex(const Vertex& v) const;
    void require_edge(const Edge& e) const;

private:
    std::vector<Vertex> verts_;
    std::vector<Edge> edges_;
    std::map<Vertex, std::vector<Vertex>> adj_;
    std::map<Vertex, std::size_t> vidx_;
    std::map<Edge, std::size_t> eidx_;
};

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_cycle_graph(const Graph& g);

// Vertices reachable from `start` in g - removed (start must not be removed).
VertexSet component_of(const Graph& g, const VertexSet& removed, const Vertex& start);

// True iff the induced subgraph g[s] is connected (false for empty s).
bool induced_connected(const Graph& g, const VertexSet& s);

// Edges of the induced subgraph g[s], sorted.
std::vector<Edge> induced_edges(const Graph& g, const VertexSet& s);

// True iff g - s has more connected components than g.
bool is_separator(const Graph& g, const VertexSet& s);

// True iff x\s and y\s are nonempty and no component of g - s meets both
// (equivalently: every x-y path intersects s).
bool separates(const Graph& g, const VertexSet& s, const VertexSet& x, const VertexSet& y);

// Minor operations. Contraction merges xy into one vertex whose id is the
// concatenation of the endpoint ids in sorted order (primed on collision).
Graph delete_vertex(const Graph& g, const Vertex& v);
Graph delete_edge(const Graph& g, const Edge& e);
Graph contract_edge(const Graph& g, const Edge& e);
Vertex contracted_vertex_id(const Graph& g, const Edge& e);

// BFS distances from `start` over g - removed; unreachable vertices absent.
std::map<Vertex, int> bfs_distances(const Graph& g, const Vertex& start,
                                    const VertexSet& removed = {});

// A pathway is a sequence of edges in which consecutive edges are distinct
// and share a vertex. Edges may repeat at non-adjacent positions.
using Pathway = std::vector<Edge>;
bool pathway_valid(const Graph& g, const Pathway& w);

// Minor model: branch sets indexed by pattern vertex.
struct MinorModel {
    std::map<Vertex, VertexSet> branch_sets;
};

struct ModelCheck {
    bool ok = true;
    std::string violation; // empty when ok
};

// Checks that `m` witnesses `pattern` as a minor of `host`: branch sets are
// nonempty, disjoint, induce connected subgraphs of the host, and every
// pattern edge has a host edge between the corresponding branch sets.
ModelCheck verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& m);

} // namespace mixedsearch
