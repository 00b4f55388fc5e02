#include "mixedsearch/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mixedsearch/bramble.hpp"
#include "mixedsearch/strategies.hpp"

namespace mixedsearch {

namespace {

constexpr int kMaxOracleEdges = 12;

// Index-based view of a small graph plus every legitimate transition,
// with the fugitive space precomputed per (searcher set, move, edge).
struct Arena {
    int n = 0;
    int m = 0;
    std::vector<Vertex> verts;
    std::vector<std::pair<int, int>> edges; // endpoint indices, a < b

    struct Trans {
        std::uint8_t s2 = 0;                  // searcher set after the move
        std::uint16_t clear = 0;              // edges cleared by the move
        bool is_place = false;                // needs |s| < k
        std::array<std::uint16_t, kMaxOracleEdges> fsp{}; // per fugitive edge
    };
    std::vector<std::vector<Trans>> trans; // by searcher mask

    explicit Arena(const Graph& g) {
        verts = g.vertices();
        n = static_cast<int>(verts.size());
        for (const Edge& e : g.edges()) {
            edges.emplace_back(index_of(e.a), index_of(e.b));
        }
        m = static_cast<int>(edges.size());

        // Common vertex of two edges (at most one in a simple graph).
        std::array<std::array<std::uint8_t, kMaxOracleEdges>, kMaxOracleEdges> shared{};
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                std::uint8_t a = static_cast<std::uint8_t>(
                    (1u << edges[i].first) | (1u << edges[i].second));
                std::uint8_t b = static_cast<std::uint8_t>(
                    (1u << edges[j].first) | (1u << edges[j].second));
                shared[i][j] = a & b;
            }
        }

        trans.resize(std::size_t{1} << n);
        for (int s = 0; s < (1 << n); ++s) {
            for (int v = 0; v < n; ++v) {
                if (!(s >> v & 1)) add_trans(shared, s, s | (1 << v), -1, true);
            }
            for (int v = 0; v < n; ++v) {
                if (s >> v & 1) add_trans(shared, s, s & ~(1 << v), -1, false);
            }
            for (int i = 0; i < m; ++i) {
                auto [u, v] = edges[i];
                if ((s >> u & 1) && !(s >> v & 1)) {
                    add_trans(shared, s, (s & ~(1 << u)) | (1 << v), i, false);
                }
                if ((s >> v & 1) && !(s >> u & 1)) {
                    add_trans(shared, s, (s & ~(1 << v)) | (1 << u), i, false);
                }
            }
        }
    }

    int index_of(const Vertex& v) const {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    }

    std::uint16_t edges_inside(int vmask) const {
        std::uint16_t out = 0;
        for (int i = 0; i < m; ++i) {
            if ((vmask >> edges[i].first & 1) && (vmask >> edges[i].second & 1)) {
                out |= static_cast<std::uint16_t>(1u << i);
            }
        }
        return out;
    }

private:
    void add_trans(const std::array<std::array<std::uint8_t, kMaxOracleEdges>,
                                    kMaxOracleEdges>& shared,
                   int s, int s2, int banned, bool is_place) {
        Trans t;
        t.s2 = static_cast<std::uint8_t>(s2);
        t.is_place = is_place;
        int added = s2 & ~s;
        if (added) {
            int y = std::countr_zero(static_cast<unsigned>(added));
            for (int i = 0; i < m; ++i) {
                auto [a, b] = edges[i];
                int other = a == y ? b : (b == y ? a : -1);
                if (other >= 0 && (s >> other & 1)) {
                    t.clear |= static_cast<std::uint16_t>(1u << i);
                }
            }
        }

        // Pathway steps may pivot on any vertex outside s & s2, and the slid
        // edge is barred from every pathway position.
        int blocked = s & s2;
        std::uint16_t banned_bit =
            banned >= 0 ? static_cast<std::uint16_t>(1u << banned) : 0;
        std::array<std::uint16_t, kMaxOracleEdges> adj{};
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (i != j && (shared[i][j] & ~blocked)) {
                    adj[i] |= static_cast<std::uint16_t>(1u << j);
                }
            }
            adj[i] &= static_cast<std::uint16_t>(~banned_bit);
        }
        std::uint16_t inside = edges_inside(s2);

        for (int e = 0; e < m; ++e) {
            std::uint16_t res = 0;
            if (e != banned) {
                std::uint16_t reach = static_cast<std::uint16_t>(1u << e);
                std::uint16_t frontier = reach;
                while (frontier) {
                    std::uint16_t next = 0;
                    for (int i = 0; i < m; ++i) {
                        if (frontier >> i & 1) next |= adj[i];
                    }
                    frontier = next & static_cast<std::uint16_t>(~reach);
                    reach |= frontier;
                }
                res = reach & static_cast<std::uint16_t>(~inside);
            }
            if (!(t.clear >> e & 1)) {
                res |= static_cast<std::uint16_t>(1u << e);
            }
            t.fsp[e] = res;
        }
        trans[static_cast<std::size_t>(s)].push_back(t);
    }
};

void require_oracle_graph(const Graph& g, int max_n, int max_m, const char* who) {
    if (g.edge_count() == 0) {
        throw InputError(std::string(who) + ": graph has no edges");
    }
    if (static_cast<int>(g.vertex_count()) > max_n ||
        static_cast<int>(g.edge_count()) > max_m) {
        throw ResourceError(std::string(who) + " is limited to " + std::to_string(max_n) +
                            " vertices and " + std::to_string(max_m) + " edges");
    }
}

} // namespace

int brute_avms(const Graph& g, unsigned shuffle_seed) {
    require_oracle_graph(g, 7, kMaxOracleEdges, "brute_avms");
    Arena a(g);
    std::vector<int> order;
    for (int k = 1; k <= a.n; ++k) {
        order.clear();
        for (int s = 0; s < (1 << a.n); ++s) {
            if (std::popcount(static_cast<unsigned>(s)) > k) continue;
            for (int e = 0; e < a.m; ++e) order.push_back(s * kMaxOracleEdges + e);
        }
        if (shuffle_seed != 0) {
            std::mt19937 rng(shuffle_seed);
            std::shuffle(order.begin(), order.end(), rng);
        }
        std::vector<std::uint16_t> win(std::size_t{1} << a.n, 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int code : order) {
                int s = code / kMaxOracleEdges;
                int e = code % kMaxOracleEdges;
                if (win[static_cast<std::size_t>(s)] >> e & 1) continue;
                int size = std::popcount(static_cast<unsigned>(s));
                for (const Arena::Trans& t : a.trans[static_cast<std::size_t>(s)]) {
                    if (t.is_place && size >= k) continue;
                    if ((t.fsp[static_cast<std::size_t>(e)] & ~win[t.s2]) == 0) {
                        win[static_cast<std::size_t>(s)] |=
                            static_cast<std::uint16_t>(1u << e);
                        changed = true;
                        break;
                    }
                }
            }
        }
        bool all = true;
        for (int e = 0; e < a.m; ++e) {
            if (!(win[0] >> e & 1)) all = false;
        }
        if (all) return k;
    }
    throw std::logic_error("brute_avms: no winning team size up to the vertex count");
}

int brute_mavms(const Graph& g) {
    require_oracle_graph(g, 6, 9, "brute_mavms");
    Arena a(g);
    for (int k = 1; k <= a.n; ++k) {
        // win[(s << m) | cleared] holds an e-bit row. Transitions never shrink
        // the cleared set, so one descending sweep over cleared layers with an
        // inner fixpoint per layer reaches the least fixpoint.
        std::vector<std::uint16_t> win(std::size_t{1} << (a.n + a.m), 0);
        for (int r = (1 << a.m) - 1; r >= 0; --r) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int s = 0; s < (1 << a.n); ++s) {
                    int size = std::popcount(static_cast<unsigned>(s));
                    if (size > k) continue;
                    std::uint16_t& row =
                        win[(static_cast<std::size_t>(s) << a.m) | static_cast<unsigned>(r)];
                    for (int e = 0; e < a.m; ++e) {
                        if (row >> e & 1) continue;
                        for (const Arena::Trans& t :
                             a.trans[static_cast<std::size_t>(s)]) {
                            if (t.is_place && size >= k) continue;
                            int r2 = r | t.clear;
                            std::uint16_t f = t.fsp[static_cast<std::size_t>(e)];
                            if (f & static_cast<std::uint16_t>(r2)) continue;
                            if ((f & ~win[(static_cast<std::size_t>(t.s2) << a.m) |
                                          static_cast<unsigned>(r2)]) == 0) {
                                row |= static_cast<std::uint16_t>(1u << e);
                                changed = true;
                                break;
                            }
                        }
                    }
                }
            }
        }
        bool all = true;
        for (int e = 0; e < a.m; ++e) {
            if (!(win[0] >> e & 1)) all = false;
        }
        if (all) return k;
    }
    throw std::logic_error("brute_mavms: no winning team size up to the vertex count");
}

namespace {

struct AssemblyState {
    std::vector<VertexSet> bags;
    std::vector<int> parents; // parent index per node, -1 for the root
};

LooseTreeDecomposition to_decomposition(const Graph& g, const AssemblyState& st) {
    std::vector<Vertex> node_ids;
    for (std::size_t i = 0; i < st.bags.size(); ++i) {
        node_ids.push_back("n" + std::to_string(i + 1));
    }
    std::vector<Edge> tree_edges;
    for (std::size_t i = 1; i < st.bags.size(); ++i) {
        tree_edges.emplace_back(node_ids[static_cast<std::size_t>(st.parents[i])],
                                node_ids[i]);
    }
    LooseTreeDecomposition d;
    d.tree = Graph(node_ids, tree_edges);
    for (std::size_t i = 0; i < st.bags.size(); ++i) {
        d.bags[node_ids[i]] = st.bags[i];
    }
    d.graph = g;
    return d;
}

bool assemble(const Graph& g, std::size_t total_nodes, AssemblyState& st, VertexSet& used,
              LooseTreeDecomposition& out) {
    if (st.bags.size() == total_nodes) {
        LooseTreeDecomposition d = to_decomposition(g, st);
        if (!validate(d).ok) return false;
        out = std::move(d);
        return true;
    }
    std::vector<Vertex> fresh;
    for (const Vertex& v : g.vertices()) {
        if (!used.count(v)) fresh.push_back(v);
    }
    for (std::size_t attach = 0; attach < st.bags.size(); ++attach) {
        VertexSet base = st.bags[attach];
        for (const Vertex& drop : base) {
            for (const Vertex& add : fresh) {
                VertexSet bag = base;
                bag.erase(drop);
                bag.insert(add);
                st.bags.push_back(bag);
                st.parents.push_back(static_cast<int>(attach));
                used.insert(add);
                if (assemble(g, total_nodes, st, used, out)) return true;
                used.erase(add);
                st.bags.pop_back();
                st.parents.pop_back();
            }
        }
    }
    return false;
}

std::optional<LooseTreeDecomposition> min_width_search(const Graph& g, int k) {
    const std::vector<Vertex>& verts = g.vertices();
    int n = static_cast<int>(verts.size());
    std::size_t total_nodes = static_cast<std::size_t>(n - k + 1);
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        AssemblyState st;
        VertexSet used;
        VertexSet root;
        for (int idx : pick) root.insert(verts[static_cast<std::size_t>(idx)]);
        st.bags.push_back(root);
        st.parents.push_back(-1);
        used = root;
        LooseTreeDecomposition out;
        if (assemble(g, total_nodes, st, used, out)) return out;
        // next k-combination of [0, n)
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == i + n - k) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

} // namespace

int brute_min_ltd_width(const Graph& g) {
    require_oracle_graph(g, 5, kMaxOracleEdges, "brute_min_ltd_width");
    int n = static_cast<int>(g.vertex_count());
    for (int k = 1; k <= n; ++k) {
        if (min_width_search(g, k)) return k;
    }
    throw std::logic_error("brute_min_ltd_width: no decomposition up to full width");
}

LooseTreeDecomposition brute_min_ltd_witness(const Graph& g) {
    require_oracle_graph(g, 5, kMaxOracleEdges, "brute_min_ltd_witness");
    int n = static_cast<int>(g.vertex_count());
    for (int k = 1; k <= n; ++k) {
        if (std::optional<LooseTreeDecomposition> d = min_width_search(g, k)) {
            return *d;
        }
    }
    throw std::logic_error("brute_min_ltd_witness: no decomposition up to full width");
}

TheoremReport verify_theorem(const Graph& g) {
    if (g.edge_count() == 0) {
        throw InputError("verify_theorem: graph has no edges");
    }
    TheoremReport rep;
    int n = static_cast<int>(g.vertex_count());
    int m = static_cast<int>(g.edge_count());

    if (n <= 7 && m <= 12) {
        rep.avms = brute_avms(g);
    } else {
        rep.notes.push_back("game value skipped (graph beyond 7 vertices / 12 edges)");
    }
    if (n <= 6 && m <= 9) {
        rep.monotone_avms = brute_mavms(g);
    } else {
        rep.notes.push_back("monotone game value skipped (graph beyond 6 vertices / 9 edges)");
    }
    if (n <= 5) {
        rep.min_width = brute_min_ltd_width(g);
    } else {
        rep.notes.push_back("minimum width skipped (graph beyond 5 vertices)");
    }
    if (n <= 7) {
        rep.bramble_order = max_order_bramble(g).order;
    } else {
        rep.notes.push_back("bramble order skipped (graph beyond 7 vertices)");
    }

    std::vector<int> values;
    for (const std::optional<int>& v :
         {rep.avms, rep.monotone_avms, rep.min_width, rep.bramble_order}) {
        if (v) values.push_back(*v);
    }
    for (int v : values) {
        if (v != values.front()) {
            rep.values_consistent = false;
            rep.notes.push_back("computed values disagree");
            break;
        }
    }

    if (rep.min_width) {
        LooseTreeDecomposition witness = brute_min_ltd_witness(g);
        std::unique_ptr<SearcherStrategy> s = searcher_from_ltd(witness);
        FugitiveExhaustion fe = exhaust_fugitive_choices(g, *s);
        if (!fe.all_captured || fe.max_cost != *rep.min_width || !fe.all_monotone ||
            !fe.progress_ok) {
            rep.searcher_check_ok = false;
            rep.notes.push_back("searcher side failed: " +
                                (fe.failure.empty()
                                     ? "cost " + std::to_string(fe.max_cost) + " vs width " +
                                           std::to_string(*rep.min_width)
                                     : fe.failure));
        }
    } else {
        rep.notes.push_back("searcher side skipped (no exhaustive witness)");
    }

    if (rep.bramble_order && *rep.bramble_order >= 2) {
        auto [bramble, k] = max_order_bramble(g);
        std::unique_ptr<FugitiveStrategy> f = fugitive_from_bramble(g, bramble, k);
        SearcherExhaustion se = exhaust_searcher_moves(g, *f, k - 1);
        if (se.captured_somewhere) {
            rep.fugitive_check_ok = false;
            rep.notes.push_back("fugitive side failed: " + se.capture_witness);
        }
    } else {
        rep.notes.push_back("fugitive side skipped (no bramble of order >= 2)");
    }
    return rep;
}

std::vector<Graph> enumerate_connected_graphs(int max_n, int max_edges,
                                              bool include_disconnected) {
    if (max_n < 1) {
        throw InputError("enumerate_connected_graphs requires max_n >= 1");
    }
    if (max_n > 7) {
        throw ResourceError("enumerate_connected_graphs is limited to 7 vertices");
    }
    std::vector<Graph> out;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        std::array<std::array<int, 7>, 7> pair_idx{};
        for (int i = 0; i < n; ++i) {
            for (int j= i + 1; j < n; ++j) {
                pair_idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<int>(pairs.size());
                pairs.emplace_back(i, j);
            }
        }
        int p = static_cast<int>(pairs.size());
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (unsigned mask = 1; mask < (1u << p); ++mask) {
            if (std::popcount(mask) > max_edges) continue;

            if (!include_disconnected) {
                // Union-find over vertices joined by mask edges.
                std::array<int, 7> root{};
                for (int i = 0; i < n; ++i) root[static_cast<std::size_t>(i)] = i;
                auto find = [&](int x) {
                    while (root[static_cast<std::size_t>(x)] != x) {
                        x = root[static_cast<std::size_t>(x)];
                    }
                    return x;
                };
                for (int i = 0; i < p; ++i) {
                    if (mask >> i & 1) {
                        root[static_cast<std::size_t>(find(pairs[static_cast<std::size_t>(i)]
                                                               .first))] =
                            find(pairs[static_cast<std::size_t>(i)].second);
                    }
                }
                bool connected = true;
                for (int v = 0; v < n; ++v) {
                    if (find(v) != find(0)) connected = false;
                }
                if (!connected) continue;
            }

            // Keep only the lexicographically smallest relabeling.
            std::iota(perm.begin(), perm.end(), 0);
            bool canonical = true;
            while (std::next_permutation(perm.begin(), perm.end())) {
                unsigned relabeled = 0;
                for (int i = 0; i < p; ++i) {
                    if (!(mask >> i & 1)) continue;
                    int u = perm[static_cast<std::size_t>(
                        pairs[static_cast<std::size_t>(i)].first)];
                    int v = perm[static_cast<std::size_t>(
                        pairs[static_cast<std::size_t>(i)].second)];
                    if (u > v) std::swap(u, v);
                    relabeled |= 1u << pair_idx[static_cast<std::size_t>(u)]
                                              [static_cast<std::size_t>(v)];
                }
                if (relabeled < mask) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;

            std::vector<Vertex> verts;
            for (int v = 0; v < n; ++v) {
                verts.push_back(std::string(1, static_cast<char>('a' + v)));
            }
            std::vector<Edge> edges;
            for (int i = 0; i < p; ++i) {
                if (mask >> i & 1) {
                    edges.emplace_back(verts[static_cast<std::size_t>(
                                           pairs[static_cast<std::size_t>(i)].first)],
                                       verts[static_cast<std::size_t>(
                                           pairs[static_cast<std::size_t>(i)].second)]);
                }
            }
            out.emplace_back(verts, edges);
        }
    }
    return out;
}

} // namespace mixedsearch
