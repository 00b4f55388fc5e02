#pragma once

#include <string>
#include <vector>

#include "mixedsearch/graph.hpp"

namespace mixedsearch {

// Tight bramble: a family of connected vertex sets of size >= 2 that
// pairwise either intersect or are joined by at least two distinct edges.
// Elements are kept sorted and deduplicated.
struct TightBramble {
    std::vector<VertexSet> elements;
};

// True iff s1 and s2 intersect or at least two distinct graph edges join them.
bool tightly_touching(const Graph& g, const VertexSet& s1, const VertexSet& s2);

struct BrambleCheck {
    bool ok = true;
    std::string violation; // empty when ok
};

// Checks the tight-bramble conditions for a family (duplicates are ignored).
// Edgeless graphs are rejected with InputError.
BrambleCheck is_tight_bramble(const Graph& g, const std::vector<VertexSet>& family);

// True iff s intersects every family element.
bool is_cover(const Graph& g, const std::vector<VertexSet>& family, const VertexSet& s);

// Smallest size of a cover, by exhaustive subset search (guard |V| <= 10).
// Works on arbitrary families; the empty family has cover size 0.
int min_cover_size(const Graph& g, const std::vector<VertexSet>& family);

// Order of a tight bramble = minimum cover size. Validates the family.
int order(const Graph& g, const TightBramble& b);

// Replaces each singleton element {x} by edge sets {x,y} into the other
// elements (two per element when x lies outside it), producing a tight
// bramble of the same order. Isolated x -> InputError.
TightBramble normalize_singletons(const Graph& g, const std::vector<VertexSet>& family);

enum class SeparatorCoverResult { holds, fails, not_applicable };

// For covers s1, s2 of a tight bramble and a set s separating s1 from s2:
// reports whether s is itself a cover. Unmet preconditions -> not_applicable.
SeparatorCoverResult check_separator_cover(const Graph& g, const std::vector<VertexSet>& family,
                                           const VertexSet& s1, const VertexSet& s2,
                                           const VertexSet& s);

struct MaxBrambleResult {
    TightBramble bramble;
    int order = 0;
};

// Maximum-order tight bramble, found by enumerating maximal pairwise-touching
// families of connected sets (order never drops when elements are added).
// Guards: |V| <= 7 (ResourceError), >= 1 edge (InputError).
MaxBrambleResult max_order_bramble(const Graph& g);

// Order-2 bramble of a cycle: the lexicographically smallest edge {u,v},
// the next edge around the cycle at v, and everything except v.
TightBramble cycle_bramble(const Graph& g);

} // namespace mixedsearch
