#include "mixedsearch/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mixedsearch {

namespace {

// Structural preconditions: tree-shaped tree field, one bag per node, bag
// contents drawn from the graph. Violations are errors, not failed reports.
void check_structure(const LooseTreeDecomposition& d) {
    if (!is_tree(d.tree)) {
        throw InputError("decomposition tree field is not a tree");
    }
    for (const NodeId& t : d.tree.vertices()) {
        if (!d.bags.count(t)) {
            throw InputError("tree node '" + t + "' has no bag");
        }
    }
    for (const auto& [t, bag] : d.bags) {
        if (!d.tree.has_vertex(t)) {
            throw InputError("bag key '" + t + "' is not a tree node");
        }
        for (const Vertex& v : bag) {
            if (!d.graph.has_vertex(v)) {
                throw InputError("bag of '" + t + "' contains unknown graph vertex '" + v + "'");
            }
        }
    }
}

std::vector<Edge> crossing_edges(const Graph& g, const VertexSet& bag1, const VertexSet& bag2) {
    VertexSet only1, only2;
    std::set_difference(bag1.begin(), bag1.end(), bag2.begin(), bag2.end(),
                        std::inserter(only1, only1.end()));
    std::set_difference(bag2.begin(), bag2.end(), bag1.begin(), bag1.end(),
                        std::inserter(only2, only2.end()));
    std::vector<Edge> out;
    for (const Vertex& x : only1) {
        for (const Vertex& y : only2) {
            if (g.has_edge(x, y)) out.push_back(Edge(x, y));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void require_full_valid(const LooseTreeDecomposition& d, const std::string& op) {
    ValidationReport r = validate(d);
    if (!r.ok) {
        throw InputError(op + " requires a valid decomposition: " + r.message());
    }
    if (!is_full(d)) {
        throw InputError(op + " requires a full decomposition");
    }
}

} // namespace

std::string ValidationReport::message() const {
    if (ok) return "valid";
    return condition + " violated (" + witness + ")";
}

std::vector<NodeId> node_ids(const LooseTreeDecomposition& d) {
    return d.tree.vertices();
}

std::set<NodeId> trace(const LooseTreeDecomposition& d, const Vertex& v) {
    std::set<NodeId> out;
    for (const auto& [t, bag] : d.bags) {
        if (bag.count(v)) out.insert(t);
    }
    return out;
}

ValidationReport validate(const LooseTreeDecomposition& d) {
    check_structure(d);
    // (T1) nonempty connected traces.
    for (const Vertex& v : d.graph.vertices()) {
        std::set<NodeId> tr = trace(d, v);
        if (tr.empty()) {
            return {false, "T1", "vertex '" + v + "' appears in no bag"};
        }
        VertexSet as_nodes(tr.begin(), tr.end());
        if (!induced_connected(d.tree, as_nodes)) {
            return {false, "T1", "trace of vertex '" + v + "' is not connected"};
        }
    }
    // (T2) every graph edge lies inside a bag or crosses a tree-edge.
    for (const Edge& e : d.graph.edges()) {
        bool covered = false;
        for (const auto& [t, bag] : d.bags) {
            if (bag.count(e.a) && bag.count(e.b)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            for (const Edge& f : d.tree.edges()) {
                const VertexSet& b1 = d.bags.at(f.a);
                const VertexSet& b2 = d.bags.at(f.b);
                bool cross12 = b1.count(e.a) && !b2.count(e.a) && b2.count(e.b) && !b1.count(e.b);
                bool cross21 = b1.count(e.b) && !b2.count(e.b) && b2.count(e.a) && !b1.count(e.a);
                if (cross12 || cross21) {
                    covered = true;
                    break;
                }
            }
        }
        if (!covered) {
            return {false, "T2", "edge " + e.str() + " is not covered"};
        }
    }
    // (T3) at most one crossing edge per tree-edge.
    for (const Edge& f : d.tree.edges()) {
        std::vector<Edge> cross = crossing_edges(d.graph, d.bags.at(f.a), d.bags.at(f.b));
        if (cross.size() > 1) {
            return {false, "T3",
                    "tree-edge " + f.str() + " carries " + std::to_string(cross.size()) +
                        " crossing edges (" + cross[0].str() + ", " + cross[1].str() + ", ...)"};
        }
    }
    return {true, "", ""};
}

int width(const LooseTreeDecomposition& d) {
    check_structure(d);
    std::size_t w = 0;
    for (const auto& [t, bag] : d.bags) {
        w = std::max(w, bag.size());
    }
    return static_cast<int>(w);
}

std::vector<Edge> MarginalEdgeReport::all() const {
    EdgeSet set;
    for (const auto& [f, cross] : per_tree_edge) {
        set.insert(cross.begin(), cross.end());
    }
    return std::vector<Edge>(set.begin(), set.end());
}

MarginalEdgeReport marginal_edges(const LooseTreeDecomposition& d) {
    check_structure(d);
    MarginalEdgeReport rep;
    for (const Edge& f : d.tree.edges()) {
        rep.per_tree_edge[f] = crossing_edges(d.graph, d.bags.at(f.a), d.bags.at(f.b));
    }
    return rep;
}

bool is_full(const LooseTreeDecomposition& d) {
    check_structure(d);
    std::size_t k = static_cast<std::size_t>(width(d));
    for (const auto& [t, bag] : d.bags) {
        if (bag.size() != k) return false;
    }
    for (const Edge& f : d.tree.edges()) {
        const VertexSet& b1 = d.bags.at(f.a);
        const VertexSet& b2 = d.bags.at(f.b);
        VertexSet only1, only2;
        std::set_difference(b1.begin(), b1.end(), b2.begin(), b2.end(),
                            std::inserter(only1, only1.end()));
        std::set_difference(b2.begin(), b2.end(), b1.begin(), b1.end(),
                            std::inserter(only2, only2.end()));
        if (only1.size() != 1 || only2.size() != 1) return false;
    }
    return true;
}

std::pair<Vertex, Vertex> swap_pair(const LooseTreeDecomposition& d,
                                    const NodeId& t1, const NodeId& t2) {
    if (!d.tree.has_edge(Edge(t1, t2))) {
        throw InputError("no tree-edge between '" + t1 + "' and '" + t2 + "'");
    }
    const VertexSet& b1 = d.bags.at(t1);
    const VertexSet& b2 = d.bags.at(t2);
    VertexSet only1, only2;
    std::set_difference(b1.begin(), b1.end(), b2.begin(), b2.end(),
                        std::inserter(only1, only1.end()));
    std::set_difference(b2.begin(), b2.end(), b1.begin(), b1.end(),
                        std::inserter(only2, only2.end()));
    if (only1.size() != 1 || only2.size() != 1) {
        throw InputError("tree-edge " + t1 + "-" + t2 + " is not a single swap");
    }
    return {*only1.begin(), *only2.begin()};
}

namespace {

// Mutable working copy of a decomposition's tree and bags.
struct Work {
    std::map<NodeId, VertexSet> bags;
    std::map<NodeId, std::set<NodeId>> adj;
};

Work to_work(const LooseTreeDecomposition& d) {
    Work w;
    w.bags = d.bags;
    for (const NodeId& t : d.tree.vertices()) w.adj[t];
    for (const Edge& f : d.tree.edges()) {
        w.adj[f.a].insert(f.b);
        w.adj[f.b].insert(f.a);
    }
    return w;
}

LooseTreeDecomposition from_work(const Work& w, const Graph& graph) {
    std::vector<Vertex> nodes;
    std::vector<Edge> edges;
    for (const auto& [t, nbrs] : w.adj) {
        nodes.push_back(t);
        for (const NodeId& u : nbrs) {
            if (t < u) edges.push_back(Edge(t, u));
        }
    }
    return {Graph(std::move(nodes), std::move(edges)), w.bags, graph};
}

void merge_node(Work& w, const NodeId& removed, const NodeId& kept) {
    for (const NodeId& n : w.adj.at(removed)) {
        if (n == kept) continue;
        w.adj.at(n).erase(removed);
        w.adj.at(n).insert(kept);
        w.adj.at(kept).insert(n);
    }
    w.adj.at(kept).erase(removed);
    w.adj.erase(removed);
    w.bags.erase(removed);
}

// Repeatedly contracts tree-edges whose bags are nested, keeping the node
// with the larger bag (lower id on ties).
void contract_nested(Work& w) {
    bool again = true;
    while (again) {
        again = false;
        std::vector<std::pair<NodeId, NodeId>> tree_edges;
        for (const auto& [t, nbrs] : w.adj) {
            for (const NodeId& u : nbrs) {
                if (t < u) tree_edges.emplace_back(t, u);
            }
        }
        std::sort(tree_edges.begin(), tree_edges.end());
        for (const auto& [a, b] : tree_edges) {
            const VertexSet& ba = w.bags.at(a);
            const VertexSet& bb = w.bags.at(b);
            if (ba == bb) {
                merge_node(w, b, a);
            } else if (std::includes(bb.begin(), bb.end(), ba.begin(), ba.end())) {
                merge_node(w, a, b);
            } else if (std::includes(ba.begin(), ba.end(), bb.begin(), bb.end())) {
                merge_node(w, b, a);
            } else {
                continue;
            }
            again = true;
            break;
        }
    }
}

NodeId fresh_node_id(const Work& w, const NodeId& base) {
    NodeId id = base;
    while (w.bags.count(id)) id += "'";
    return id;
}

} // namespace

LooseTreeDecomposition fullify(const LooseTreeDecomposition& d) {
    ValidationReport r = validate(d);
    if (!r.ok) {
        throw InputError("fullify requires a valid decomposition: " + r.message());
    }
    std::size_t k = static_cast<std::size_t>(width(d));
    if (k == 0) {
        throw InputError("fullify requires width >= 1");
    }

    Work w = to_work(d);
    contract_nested(w);

    // Pad undersized bags outward from a largest bag: each node inherits
    // missing vertices from its already-padded BFS parent, smallest id first,
    // skipping vertices of this tree-edge's crossing edge.
    NodeId root;
    for (const auto& [t, bag] : w.bags) {
        if (bag.size() == k) {
            root = t;
            break;
        }
    }
    std::deque<NodeId> queue{root};
    std::map<NodeId, NodeId> parent{{root, root}};
    std::vector<NodeId> order;
    while (!queue.empty()) {
        NodeId t = queue.front();
        queue.pop_front();
        order.push_back(t);
        for (const NodeId& u : w.adj.at(t)) {
            if (parent.count(u)) continue;
            parent[u] = t;
            queue.push_back(u);
        }
    }
    for (const NodeId& c : order) {
        if (c == root) continue;
        const NodeId& p = parent.at(c);
        while (w.bags.at(c).size() < k) {
            std::vector<Edge> cross = crossing_edges(d.graph, w.bags.at(p), w.bags.at(c));
            VertexSet excluded;
            for (const Edge& e : cross) {
                excluded.insert(e.a);
                excluded.insert(e.b);
            }
            std::optional<Vertex> pick;
            for (const Vertex& v : w.bags.at(p)) {
                if (!w.bags.at(c).count(v) && !excluded.count(v)) {
                    pick = v;
                    break;
                }
            }
            if (!pick) {
                throw std::logic_error("fullify: no padding candidate available");
            }
            w.bags.at(c).insert(*pick);
        }
    }
    contract_nested(w);

    // Interpolate multi-vertex bag differences into chains of single swaps.
    // The crossing edge's endpoints (at most one crossing edge per tree-edge)
    // are scheduled as one swap so the edge stays covered.
    std::vector<std::pair<NodeId, NodeId>> tree_edges;
    for (const auto& [t, nbrs] : w.adj) {
        for (const NodeId& u : nbrs) {
            if (t < u) tree_edges.emplace_back(t, u);
        }
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    for (const auto& [t1, t2] : tree_edges) {
        const VertexSet b1 = w.bags.at(t1);
        const VertexSet b2 = w.bags.at(t2);
        VertexSet dset, aset;
        std::set_difference(b1.begin(), b1.end(), b2.begin(), b2.end(),
                            std::inserter(dset, dset.end()));
        std::set_difference(b2.begin(), b2.end(), b1.begin(), b1.end(),
                            std::inserter(aset, aset.end()));
        std::size_t m = dset.size();
        if (m <= 1) continue;
        std::vector<Vertex> drops(dset.begin(), dset.end());
        std::vector<Vertex> adds(aset.begin(), aset.end());
        std::vector<Edge> cross = crossing_edges(d.graph, b1, b2);
        if (!cross.empty()) {
            const Edge& uv = cross.front();
            const Vertex& u = dset.count(uv.a) ? uv.a : uv.b;
            const Vertex& v = uv.other(u);
            drops.erase(std::find(drops.begin(), drops.end(), u));
            drops.push_back(u);
            adds.erase(std::find(adds.begin(), adds.end(), v));
            adds.push_back(v);
        }
        w.adj.at(t1).erase(t2);
        w.adj.at(t2).erase(t1);
        NodeId prev = t1;
        VertexSet bag = b1;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            bag.erase(drops[i]);
            bag.insert(adds[i]);
            NodeId node = fresh_node_id(w, t1 + "|" + t2 + "|" + std::to_string(i + 1));
            w.bags[node] = bag;
            w.adj[node].insert(prev);
            w.adj.at(prev).insert(node);
            prev = node;
        }
        w.adj.at(prev).insert(t2);
        w.adj.at(t2).insert(prev);
    }

    LooseTreeDecomposition out = from_work(w, d.graph);
    ValidationReport check = validate(out);
    if (!check.ok || !is_full(out) || width(out) != static_cast<int>(k)) {
        throw std::logic_error("fullify: result is not a full decomposition of the same width (" +
                               check.message() + ")");
    }
    return out;
}

bool check_internal_node_separator(const LooseTreeDecomposition& d, const NodeId& t) {
    require_full_valid(d, "check_internal_node_separator");
    d.tree.require_vertex(t);
    if (d.tree.degree(t) < 2) {
        throw InputError("node '" + t + "' is not internal");
    }
    return is_separator(d.graph, d.bags.at(t));
}

TreeEdgeSepResult check_tree_edge_separator(const LooseTreeDecomposition& d, const Edge& tree_edge) {
    require_full_valid(d, "check_tree_edge_separator");
    if (!d.tree.has_edge(tree_edge)) {
        throw InputError("unknown tree-edge " + tree_edge.str());
    }
    auto [x1, x2] = swap_pair(d, tree_edge.a, tree_edge.b);
    if (d.graph.has_edge(x1, x2)) {
        return TreeEdgeSepResult::not_applicable;
    }
    VertexSet shared;
    const VertexSet& b1 = d.bags.at(tree_edge.a);
    const VertexSet& b2 = d.bags.at(tree_edge.b);
    std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(),
                          std::inserter(shared, shared.end()));
    return separates(d.graph, shared, {x1}, {x2}) ? TreeEdgeSepResult::holds
                                                  : TreeEdgeSepResult::fails;
}

LooseTreeDecomposition extend_traces(const LooseTreeDecomposition& d,
                                     const std::map<Vertex, std::set<NodeId>>& extension) {
    ValidationReport r = validate(d);
    if (!r.ok) {
        throw InputError("extend_traces requires a valid decomposition: " + r.message());
    }
    LooseTreeDecomposition out = d;
    for (const auto& [v, new_trace] : extension) {
        d.graph.require_vertex(v);
        std::set<NodeId> old_trace = trace(d, v);
        for (const NodeId& t : new_trace) {
            if (!d.tree.has_vertex(t)) {
                throw InputError("extension of '" + v + "' uses unknown tree node '" + t + "'");
            }
        }
        if (!std::includes(new_trace.begin(), new_trace.end(),
                           old_trace.begin(), old_trace.end())) {
            throw InputError("extension of '" + v + "' does not contain its current trace");
        }
        VertexSet as_nodes(new_trace.begin(), new_trace.end());
        if (!induced_connected(d.tree, as_nodes)) {
            throw InputError("extension of '" + v + "' is not connected in the tree");
        }
        for (const NodeId& t : new_trace) {
            out.bags.at(t).insert(v);
        }
    }
    ValidationReport check = validate(out);
    if (!check.ok) {
        throw std::logic_error("extend_traces: result invalid (" + check.message() + ")");
    }
    return out;
}

LooseTreeDecomposition restrict_delete_vertex(const LooseTreeDecomposition& d, const Vertex& v) {
    ValidationReport r = validate(d);
    if (!r.ok) {
        throw InputError("restrict_delete_vertex requires a valid decomposition: " + r.message());
    }
    LooseTreeDecomposition out = d;
    out.graph = delete_vertex(d.graph, v);
    for (auto& [t, bag] : out.bags) {
        bag.erase(v);
    }
    ValidationReport check = validate(out);
    if (!check.ok) {
        throw std::logic_error("restrict_delete_vertex: result invalid (" + check.message() + ")");
    }
    return out;
}

LooseTreeDecomposition restrict_delete_edge(const LooseTreeDecomposition& d, const Edge& e) {
    ValidationReport r = validate(d);
    if (!r.ok) {
        throw InputError("restrict_delete_edge requires a valid decomposition: " + r.message());
    }
    LooseTreeDecomposition out = d;
    out.graph = delete_edge(d.graph, e);
    ValidationReport check = validate(out);
    if (!check.ok) {
        throw std::logic_error("restrict_delete_edge: result invalid (" + check.message() + ")");
    }
    return out;
}

LooseTreeDecomposition restrict_contract_edge(const LooseTreeDecomposition& d, const Edge& e) {
    ValidationReport r = validate(d);
    if (!r.ok) {
        throw InputError("restrict_contract_edge requires a valid decomposition: " + r.message());
    }
    d.graph.require_edge(e);
    Vertex merged = contracted_vertex_id(d.graph, e);
    LooseTreeDecomposition out = d;
    out.graph = contract_edge(d.graph, e);
    for (auto& [t, bag] : out.bags) {
        if (bag.count(e.a) || bag.count(e.b)) {
            bag.erase(e.a);
            bag.erase(e.b);
            bag.insert(merged);
        }
    }
    ValidationReport check = validate(out);
    if (!check.ok) {
        throw std::logic_error("restrict_contract_edge: result invalid (" + check.message() + ")");
    }
    return out;
}

} // namespace mixedsearch
