#include "mixedsearch/cartesian.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mixedsearch {

Vertex product_vertex(const Vertex& t, int slot) {
    return t + "#" + std::to_string(slot);
}

CartesianProduct build_product(const Graph& tree, int k) {
    if (!is_tree(tree)) {
        throw InputError("build_product requires a tree");
    }
    if (k < 1) {
        throw InputError("build_product requires k >= 1");
    }
    std::vector<Vertex> verts;
    std::vector<Edge> edges;
    for (const Vertex& t : tree.vertices()) {
        for (int i = 1; i <= k; ++i) {
            verts.push_back(product_vertex(t, i));
            for (int j = i + 1; j <= k; ++j) {
                edges.push_back(Edge(product_vertex(t, i), product_vertex(t, j)));
            }
        }
    }
    for (const Edge& f : tree.edges()) {
        for (int i = 1; i <= k; ++i) {
            edges.push_back(Edge(product_vertex(f.a, i), product_vertex(f.b, i)));
        }
    }
    return {tree, k, Graph(std::move(verts), std::move(edges))};
}

namespace {

NodeId chain_node(const Vertex& t, int j) {
    return t + ":" + std::to_string(j);
}

// BFS parents rooted at `root`; parent of root is root itself.
std::map<Vertex, Vertex> tree_parents(const Graph& tree, const Vertex& root) {
    std::map<Vertex, Vertex> parent{{root, root}};
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
        Vertex t = queue.front();
        queue.pop_front();
        for (const Vertex& u : tree.neighbors(t)) {
            if (parent.count(u)) continue;
            parent[u] = t;
            queue.push_back(u);
        }
    }
    return parent;
}

} // namespace

LooseTreeDecomposition canonical_ltd(const Graph& tree, const Vertex& root, int k) {
    CartesianProduct prod = build_product(tree, k);
    tree.require_vertex(root);
    std::map<Vertex, Vertex> parent = tree_parents(tree, root);

    std::map<NodeId, VertexSet> bags;
    std::vector<Vertex> nodes;
    std::vector<Edge> node_edges;

    // Root bag: the root's whole clique.
    NodeId root_node = chain_node(root, k);
    nodes.push_back(root_node);
    VertexSet root_bag;
    for (int j = 1; j <= k; ++j) root_bag.insert(product_vertex(root, j));
    bags[root_node] = root_bag;

    // Per non-root vertex t: bags v_(t,j) = {t#1..t#j} + {p#(j+1)..p#k},
    // chained v_(t,1) - ... - v_(t,k) and attached to v_(p,k).
    for (const Vertex& t : tree.vertices()) {
        if (t == root) continue;
        const Vertex& p = parent.at(t);
        for (int j = 1; j <= k; ++j) {
            NodeId id = chain_node(t, j);
            nodes.push_back(id);
            VertexSet bag;
            for (int i = 1; i <= j; ++i) bag.insert(product_vertex(t, i));
            for (int i = j + 1; i <= k; ++i) bag.insert(product_vertex(p, i));
            bags[id] = std::move(bag);
            if (j > 1) {
                node_edges.push_back(Edge(chain_node(t, j - 1), id));
            }
        }
        node_edges.push_back(Edge(chain_node(p, k), chain_node(t, 1)));
    }

    LooseTreeDecomposition d{Graph(std::move(nodes), std::move(node_edges)), std::move(bags),
                             prod.product};
    ValidationReport r = validate(d);
    if (!r.ok || !is_full(d) || width(d) != k) {
        throw std::logic_error("canonical_ltd: produced an invalid decomposition (" +
                               r.message() + ")");
    }
    return d;
}

Embedding embed_in_cartesian_product(const LooseTreeDecomposition& d) {
    ValidationReport r = validate(d);
    if (!r.ok) {
        throw InputError("embed_in_cartesian_product requires a valid decomposition: " +
                         r.message());
    }
    if (!is_full(d)) {
        throw InputError("embed_in_cartesian_product requires a full decomposition");
    }
    int k = width(d);

    // Assign a clique slot to every graph vertex: seed the lowest node's bag
    // in sorted order, then propagate across tree-edges; the swapped-in
    // vertex takes the slot the swapped-out vertex vacates.
    std::map<Vertex, int> slot;
    const NodeId seed = d.tree.vertices().front();
    {
        int i = 1;
        for (const Vertex& v : d.bags.at(seed)) slot[v] = i++;
    }
    std::map<NodeId, NodeId> parent{{seed, seed}};
    std::deque<NodeId> queue{seed};
    while (!queue.empty()) {
        NodeId t = queue.front();
        queue.pop_front();
        for (const NodeId& u : d.tree.neighbors(t)) {
            if (parent.count(u)) continue;
            parent[u] = t;
            auto [out, in] = swap_pair(d, t, u);
            if (slot.count(in)) {
                throw std::logic_error("embed: vertex '" + in + "' assigned a slot twice");
            }
            slot[in] = slot.at(out);
            queue.push_back(u);
        }
    }
    for (const Vertex& v : d.graph.vertices()) {
        if (!slot.count(v)) {
            throw std::logic_error("embed: vertex '" + v + "' never received a slot");
        }
    }

    CartesianProduct prod = build_product(d.tree, k);

    MinorModel model;
    for (const Vertex& v : d.graph.vertices()) {
        VertexSet branch;
        for (const NodeId& t : trace(d, v)) {
            branch.insert(product_vertex(t, slot.at(v)));
        }
        model.branch_sets[v] = std::move(branch);
    }

    // Completion: all in-bag pairs plus the swap pair of every tree-edge.
    EdgeSet comp_edges;
    for (const auto& [t, bag] : d.bags) {
        for (auto it1 = bag.begin(); it1 != bag.end(); ++it1) {
            for (auto it2 = std::next(it1); it2 != bag.end(); ++it2) {
                comp_edges.insert(Edge(*it1, *it2));
            }
        }
    }
    for (const Edge& f : d.tree.edges()) {
        auto [x1, x2] = swap_pair(d, f.a, f.b);
        comp_edges.insert(Edge(x1, x2));
    }
    Graph completion(d.graph.vertices(),
                     std::vector<Edge>(comp_edges.begin(), comp_edges.end()));

    ModelCheck against_graph = verify_minor_model(prod.product, d.graph, model);
    if (!against_graph.ok) {
        throw std::logic_error("embed: model fails for the graph: " + against_graph.violation);
    }
    ModelCheck against_completion = verify_minor_model(prod.product, completion, model);
    if (!against_completion.ok) {
        throw std::logic_error("embed: model fails for the completion: " +
                               against_completion.violation);
    }

    return {d.tree, k, std::move(prod), std::move(model), std::move(completion), std::move(slot)};
}

} // namespace mixedsearch
