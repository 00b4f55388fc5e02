#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mixedsearch/graph.hpp"

namespace mixedsearch {

using NodeId = std::string;

// Loose tree-decomposition of a graph:
//   (T1) every graph vertex has a nonempty trace that induces a subtree,
//   (T2) every graph edge lies inside some bag or crosses some tree-edge,
//   (T3) each tree-edge carries at most one crossing graph edge.
struct LooseTreeDecomposition {
    Graph tree;                       // decomposition tree; node ids are its vertices
    std::map<NodeId, VertexSet> bags; // one entry per tree node
    Graph graph;                      // the decomposed graph
};

struct ValidationReport {
    bool ok = true;
    std::string condition; // "T1" | "T2" | "T3" when !ok
    std::string witness;   // offending vertex / edge / tree-edge
    std::string message() const;
};

// Checks (T1)-(T3). Structural problems (tree field not a tree, missing bag
// entries, bag vertices outside the graph) throw InputError instead of
// producing a failed report.
ValidationReport validate(const LooseTreeDecomposition& d);

// Largest bag size.
int width(const LooseTreeDecomposition& d);

// The crossing ("marginal") graph edges, per tree-edge and as a sorted list.
struct MarginalEdgeReport {
    std::map<Edge, std::vector<Edge>> per_tree_edge; // tree-edge -> crossing graph edges
    std::vector<Edge> all() const;                   // sorted, deduplicated
};
MarginalEdgeReport marginal_edges(const LooseTreeDecomposition& d);

// Full: every bag has exactly `width` vertices and adjacent bags differ by
// exactly one vertex on each side (a swap pair).
bool is_full(const LooseTreeDecomposition& d);

// Nodes of the decomposition tree, sorted by id.
std::vector<NodeId> node_ids(const LooseTreeDecomposition& d);

// The trace of a graph vertex: tree nodes whose bag contains it.
std::set<NodeId> trace(const LooseTreeDecomposition& d, const Vertex& v);

// Swap pair of a tree-edge of a full decomposition:
// first = the vertex only in t1's bag, second = the vertex only in t2's bag.
std::pair<Vertex, Vertex> swap_pair(const LooseTreeDecomposition& d,
                                    const NodeId& t1, const NodeId& t2);

// Converts a valid decomposition of width k >= 1 into a full one of the same
// width for the same graph: contracts nested adjacent bags, pads undersized
// bags from their neighbours (never with a vertex of that tree-edge's
// crossing edge), and interpolates multi-vertex bag differences into chains
// of single swaps, scheduling the crossing edge's endpoints as one swap.
// Width 0 input -> InputError.
LooseTreeDecomposition fullify(const LooseTreeDecomposition& d);

// For a full valid decomposition: asserts that the bag of an internal
// (degree >= 2) node separates the graph. Leaf or isolated node -> InputError.
bool check_internal_node_separator(const LooseTreeDecomposition& d, const NodeId& t);

enum class TreeEdgeSepResult { holds, fails, not_applicable };

// For a full valid decomposition and tree-edge {t1,t2} with swap pair {x1,x2}:
// when x1x2 is not a graph edge, reports whether the shared bag separates x1
// from x2; when x1x2 is a graph edge the check does not apply.
TreeEdgeSepResult check_tree_edge_separator(const LooseTreeDecomposition& d, const Edge& tree_edge);

// Enlarges traces: `extension` maps a vertex to its new trace, which must
// contain the old trace and induce a subtree. Unlisted vertices keep theirs.
LooseTreeDecomposition extend_traces(const LooseTreeDecomposition& d,
                                     const std::map<Vertex, std::set<NodeId>>& extension);

// Decomposition of a one-step minor with no larger width: bags lose the
// deleted vertex / merge the contracted pair; the tree is unchanged.
LooseTreeDecomposition restrict_delete_vertex(const LooseTreeDecomposition& d, const Vertex& v);
LooseTreeDecomposition restrict_delete_edge(const LooseTreeDecomposition& d, const Edge& e);
LooseTreeDecomposition restrict_contract_edge(const LooseTreeDecomposition& d, const Edge& e);

} // namespace mixedsearch
