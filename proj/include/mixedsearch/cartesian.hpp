#pragma once

#include <map>

#include "mixedsearch/decomposition.hpp"
#include "mixedsearch/graph.hpp"

namespace mixedsearch {

// Product vertex id: "<tree vertex>#<slot>" with slots 1..k.
Vertex product_vertex(const Vertex& t, int slot);

struct CartesianProduct {
    Graph tree;
    int k = 0;
    Graph product; // tree [] K_k: k copies of the tree plus a clique per tree vertex
};

// Cartesian product of a tree with the complete graph K_k (k >= 1).
CartesianProduct build_product(const Graph& tree, int k);

// The canonical full width-k decomposition of tree [] K_k: per non-root tree
// vertex t a chain of k bags that swaps the parent's clique out for t's
// clique one slot at a time; the root contributes its full clique as one bag.
// Every tree-edge of the decomposition carries exactly one crossing edge.
LooseTreeDecomposition canonical_ltd(const Graph& tree, const Vertex& root, int k);

struct Embedding {
    Graph tree;                 // shape of the decomposition tree
    int k = 0;
    CartesianProduct product;   // tree [] K_k
    MinorModel model;           // branch sets of the decomposed graph's vertices
    Graph completion;           // bag cliques + swap pairs; contains the graph
    std::map<Vertex, int> slot; // clique slot used by each graph vertex
};

// Embeds the graph of a full decomposition (width k) as a minor of the
// product of the decomposition tree with K_k. Each vertex keeps one clique
// slot along its whole trace, so branch sets are paths in one copy layer.
Embedding embed_in_cartesian_product(const LooseTreeDecomposition& d);

} // namespace mixedsearch
