#include "mixedsearch/bramble.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <set>
#include <stdexcept>

namespace mixedsearch {

bool tightly_touching(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
    if (s1.empty() || s2.empty()) {
        throw InputError("tightly_touching requires nonempty sets");
    }
    for (const Vertex& v : s1) g.require_vertex(v);
    for (const Vertex& v : s2) g.require_vertex(v);
    for (const Vertex& v : s1) {
        if (s2.count(v)) return true;
    }
    int crossing = 0;
    for (const Edge& e : g.edges()) {
        bool a1 = s1.count(e.a) != 0, b1 = s1.count(e.b) != 0;
        bool a2 = s2.count(e.a) != 0, b2 = s2.count(e.b) != 0;
        if ((a1 && b2) || (b1 && a2)) {
            if (++crossing >= 2) return true;
        }
    }
    return false;
}

namespace {

std::vector<VertexSet> dedupe(const std::vector<VertexSet>& family) {
    std::set<VertexSet> set(family.begin(), family.end());
    return std::vector<VertexSet>(set.begin(), set.end());
}

std::string set_str(const VertexSet& s) {
    std::string out = "{";
    for (const Vertex& v : s) {
        if (out.size() > 1) out += ",";
        out += v;
    }
    return out + "}";
}

void require_edges(const Graph& g, const std::string& op) {
    if (g.edge_count() == 0) {
        throw InputError(op + " requires a graph with at least one edge");
    }
}

} // namespace

BrambleCheck is_tight_bramble(const Graph& g, const std::vector<VertexSet>& family) {
    require_edges(g, "is_tight_bramble");
    std::vector<VertexSet> elems = dedupe(family);
    for (const VertexSet& s : elems) {
        for (const Vertex& v : s) g.require_vertex(v);
        if (s.size() < 2) {
            return {false, "element " + set_str(s) + " has fewer than two vertices"};
        }
        if (!induced_connected(g, s)) {
            return {false, "element " + set_str(s) + " is not connected"};
        }
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (!tightly_touching(g, elems[i], elems[j])) {
                return {false, "elements " + set_str(elems[i]) + " and " + set_str(elems[j]) +
                                   " do not touch tightly"};
            }
        }
    }
    return {true, ""};
}

bool is_cover(const Graph& g, const std::vector<VertexSet>& family, const VertexSet& s) {
    for (const Vertex& v : s) g.require_vertex(v);
    for (const VertexSet& elem : family) {
        bool hit = std::any_of(elem.begin(), elem.end(),
                               [&](const Vertex& v) { return s.count(v) != 0; });
        if (!hit) return false;
    }
    return true;
}

int min_cover_size(const Graph& g, const std::vector<VertexSet>& family) {
    if (g.vertex_count() > 10) {
        throw ResourceError("min_cover_size is limited to graphs with at most 10 vertices");
    }
    std::vector<VertexSet> elems = dedupe(family);
    if (elems.empty()) return 0;
    const std::vector<Vertex>& verts = g.vertices();
    std::size_t n = verts.size();
    std::vector<unsigned> elem_masks;
    for (const VertexSet& s : elems) {
        unsigned m = 0;
        for (const Vertex& v : s) m |= 1u << g.vertex_index(v);
        elem_masks.push_back(m);
    }
    for (std::size_t size = 1; size <= n; ++size) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
            bool covers = std::all_of(elem_masks.begin(), elem_masks.end(),
                                      [&](unsigned em) { return (em & mask) != 0; });
            if (covers) return static_cast<int>(size);
        }
    }
    throw std::logic_error("min_cover_size: no cover found");
}

int order(const Graph& g, const TightBramble& b) {
    BrambleCheck check = is_tight_bramble(g, b.elements);
    if (!check.ok) {
        throw InputError("order requires a tight bramble: " + check.violation);
    }
    return min_cover_size(g, b.elements);
}

TightBramble normalize_singletons(const Graph& g, const std::vector<VertexSet>& family) {
    require_edges(g, "normalize_singletons");
    std::vector<VertexSet> elems = dedupe(family);
    for (const VertexSet& s : elems) {
        if (s.empty()) throw InputError("normalize_singletons: empty element");
        for (const Vertex& v : s) g.require_vertex(v);
        if (!induced_connected(g, s)) {
            throw InputError("normalize_singletons: element " + set_str(s) + " is not connected");
        }
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (!tightly_touching(g, elems[i], elems[j])) {
                throw InputError("normalize_singletons: elements " + set_str(elems[i]) + " and " +
                                 set_str(elems[j]) + " do not touch tightly");
            }
        }
    }

    std::set<VertexSet> result;
    for (const VertexSet& s : elems) {
        if (s.size() >= 2) result.insert(s);
    }
    for (const VertexSet& s : elems) {
        if (s.size() != 1) continue;
        const Vertex& x = *s.begin();
        if (g.degree(x) == 0) {
            throw InputError("normalize_singletons: vertex '" + x + "' has no neighbours");
        }
        bool replaced = false;
        for (const VertexSet& other : elems) {
            if (other == s) continue;
            // Up to two smallest neighbours of x inside the other element.
            int added = 0;
            for (const Vertex& y : other) {
                if (!g.has_edge(x, y)) continue;
                result.insert(VertexSet{x, y});
                replaced = true;
                if (++added == 2) break;
            }
        }
        if (!replaced) {
            // x forms the whole family (or meets others only at itself):
            // use its two smallest neighbours directly.
            int added = 0;
            for (const Vertex& y : g.neighbors(x)) {
                result.insert(VertexSet{x, y});
                if (++added == 2) break;
            }
        }
    }

    TightBramble out{std::vector<VertexSet>(result.begin(), result.end())};
    BrambleCheck check = is_tight_bramble(g, out.elements);
    if (!check.ok) {
        throw std::logic_error("normalize_singletons: result is not a tight bramble: " +
                               check.violation);
    }
    return out;
}

SeparatorCoverResult check_separator_cover(const Graph& g, const std::vector<VertexSet>& family,
                                           const VertexSet& s1, const VertexSet& s2,
                                           const VertexSet& s) {
    BrambleCheck check = is_tight_bramble(g, family);
    if (!check.ok) return SeparatorCoverResult::not_applicable;
    if (!is_cover(g, family, s1) || !is_cover(g, family, s2)) {
        return SeparatorCoverResult::not_applicable;
    }
    if (s.size() >= g.vertex_count()) return SeparatorCoverResult::not_applicable;
    if (!separates(g, s, s1, s2)) return SeparatorCoverResult::not_applicable;
    return is_cover(g, family, s) ? SeparatorCoverResult::holds : SeparatorCoverResult::fails;
}

namespace {

// Bron-Kerbosch with pivoting over the touching graph of connected sets.
struct CliqueSearch {
    const std::vector<std::bitset<128>>& touch;
    std::size_t n;
    long long explored = 0;
    long long cap;
    std::vector<std::vector<int>> cliques;

    void run(std::bitset<128> r, std::bitset<128> p, std::bitset<128> x) {
        if (p.none() && x.none()) {
            if (++explored > cap) {
                throw ResourceError("max_order_bramble: too many maximal families");
            }
            std::vector<int> clique;
            for (std::size_t i = 0; i < n; ++i) {
                if (r[i]) clique.push_back(static_cast<int>(i));
            }
            cliques.push_back(std::move(clique));
            return;
        }
        // Pivot: the candidate with the most neighbours in p.
        std::bitset<128> px = p | x;
        int pivot = -1;
        std::size_t best = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!px[i]) continue;
            std::size_t cnt = (p & touch[i]).count();
            if (pivot < 0 || cnt > best) {
                pivot = static_cast<int>(i);
                best = cnt;
            }
        }
        std::bitset<128> candidates = p & ~touch[static_cast<std::size_t>(pivot)];
        for (std::size_t i = 0; i < n; ++i) {
            if (!candidates[i]) continue;
            std::bitset<128> ri = r;
            ri.set(i);
            run(ri, p & touch[i], x & touch[i]);
            p.reset(i);
            x.set(i);
        }
    }
};

} // namespace

MaxBrambleResult max_order_bramble(const Graph& g) {
    require_edges(g, "max_order_bramble");
    if (g.vertex_count() > 7) {
        throw ResourceError("max_order_bramble is limited to graphs with at most 7 vertices");
    }
    const std::vector<Vertex>& verts = g.vertices();
    std::size_t n = verts.size();

    // All connected vertex sets of size >= 2, as masks.
    std::vector<unsigned> sets;
    std::vector<VertexSet> set_vs;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        VertexSet s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) s.insert(verts[i]);
        }
        if (!induced_connected(g, s)) continue;
        sets.push_back(mask);
        set_vs.push_back(std::move(s));
    }
    if (sets.empty()) {
        throw std::logic_error("max_order_bramble: no connected sets in a graph with an edge");
    }

    std::vector<std::bitset<128>> touch(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (tightly_touching(g, set_vs[i], set_vs[j])) {
                touch[i].set(j);
                touch[j].set(i);
            }
        }
    }

    CliqueSearch search{touch, sets.size(), 0, 500000, {}};
    std::bitset<128> p;
    for (std::size_t i = 0; i < sets.size(); ++i) p.set(i);
    search.run({}, p, {});

    MaxBrambleResult best;
    best.order = 0;
    for (const std::vector<int>& clique : search.cliques) {
        std::vector<VertexSet> family;
        for (int i : clique) family.push_back(set_vs[static_cast<std::size_t>(i)]);
        int ord = min_cover_size(g, family);
        if (ord > best.order) {
            best.order = ord;
            best.bramble.elements = dedupe(family);
        }
    }
    return best;
}

TightBramble cycle_bramble(const Graph& g) {
    if (!is_cycle_graph(g)) {
        throw InputError("cycle_bramble requires a cycle graph");
    }
    const Edge& f1 = g.edges().front(); // lexicographically smallest, {u,v} with u < v
    const Vertex& v = f1.b;
    // The other cycle edge at v.
    const std::vector<Vertex>& nbrs = g.neighbors(v);
    const Vertex& w = nbrs[0] == f1.a ? nbrs[1] : nbrs[0];
    Edge f2(v, w);
    VertexSet rest;
    for (const Vertex& u : g.vertices()) {
        if (u != v) rest.insert(u);
    }
    std::set<VertexSet> elems{VertexSet{f1.a, f1.b}, VertexSet{f2.a, f2.b}, rest};
    TightBramble out{std::vector<VertexSet>(elems.begin(), elems.end())};
    BrambleCheck check = is_tight_bramble(g, out.elements);
    if (!check.ok) {
        throw std::logic_error("cycle_bramble: result is not a tight bramble: " + check.violation);
    }
    return out;
}

} // namespace mixedsearch
