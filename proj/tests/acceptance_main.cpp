// Acceptance gate: seven end-to-end checks over the library, each printing
// one PASS/FAIL line. All tolerances are exact (integer / boolean equality);
// the only numeric budget is the two-minute wall-clock cap on the sweep in
// check 2. Exit code = number of failed checks.

#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mixedsearch/bramble.hpp"
#include "mixedsearch/cartesian.hpp"
#include "mixedsearch/decomposition.hpp"
#include "mixedsearch/game.hpp"
#include "mixedsearch/graph.hpp"
#include "mixedsearch/json_io.hpp"
#include "mixedsearch/oracle.hpp"
#include "mixedsearch/strategies.hpp"
#include "test_util.hpp"

using namespace mixedsearch;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail; // headline numbers on success, first problem on failure

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

Graph corpus_graph(const std::string& name) { return load_graph(corpus_path(name + ".json")); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. The checked-in fixtures reproduce their frozen forms: the 3-sun
//    decomposition validates with width 3 and marginal edges {a-c, b-d, c-f};
//    the canonical decomposition of the 5-vertex tree at k=3 yields the
//    pinned bag table; the 6-cycle bramble is the pinned 3-element family of
//    order 2.
Outcome check_fixtures() {
    Outcome r;

    LooseTreeDecomposition sun = load_ltd(corpus_path("sun3_ltd.json"));
    ValidationReport rep = validate(sun);
    if (!rep.ok) r.fail("3-sun decomposition rejected: " + rep.message());
    if (width(sun) != 3) r.fail("3-sun decomposition width != 3");
    std::vector<Edge> marg = marginal_edges(sun).all();
    std::vector<Edge> want_marg = {Edge("a", "c"), Edge("b", "d"), Edge("c", "f")};
    if (marg != want_marg) r.fail("3-sun marginal edges differ from {a-c, b-d, c-f}");

    Graph t5 = corpus_graph("t5");
    LooseTreeDecomposition d = canonical_ltd(t5, "a", 3);
    std::map<NodeId, VertexSet> want_bags = {
        {"a:3", {"a#1", "a#2", "a#3"}}, {"b:1", {"b#1", "a#2", "a#3"}},
        {"b:2", {"b#1", "b#2", "a#3"}}, {"b:3", {"b#1", "b#2", "b#3"}},
        {"c:1", {"c#1", "b#2", "b#3"}}, {"c:2", {"c#1", "c#2", "b#3"}},
        {"c:3", {"c#1", "c#2", "c#3"}}, {"d:1", {"d#1", "c#2", "c#3"}},
        {"d:2", {"d#1", "d#2", "c#3"}}, {"d:3", {"d#1", "d#2", "d#3"}},
        {"f:1", {"f#1", "c#2", "c#3"}}, {"f:2", {"f#1", "f#2", "c#3"}},
        {"f:3", {"f#1", "f#2", "f#3"}},
    };
    if (d.bags != want_bags) r.fail("canonical bags differ from the pinned table");
    std::vector<Edge> want_tree = {
        Edge("a:3", "b:1"), Edge("b:1", "b:2"), Edge("b:2", "b:3"), Edge("b:3", "c:1"),
        Edge("c:1", "c:2"), Edge("c:2", "c:3"), Edge("c:3", "d:1"), Edge("c:3", "f:1"),
        Edge("d:1", "d:2"), Edge("d:2", "d:3"), Edge("f:1", "f:2"), Edge("f:2", "f:3"),
    };
    if (d.tree.edges() != want_tree) r.fail("canonical tree edges differ from the pinned table");

    Graph c6 = corpus_graph("c6");
    TightBramble cyc = cycle_bramble(c6);
    std::vector<VertexSet> want_elems = {{"a", "b"}, {"a", "c", "d", "e", "f"}, {"b", "c"}};
    if (cyc.elements != want_elems) r.fail("6-cycle bramble family differs from the pinned one");
    if (order(c6, cyc) != 2) r.fail("6-cycle bramble order != 2");

    r.detail = "width 3, 3 marginal edges, 13 bags, bramble order 2";
    return r;
}

// 2. On every connected graph with at most 6 vertices and 9 edges (up to
//    isomorphism) the game value equals the maximum bramble order; on the
//    ones with at most 5 vertices it also equals the monotone game value and
//    the minimum decomposition width. Budget: two minutes.
Outcome check_value_equalities() {
    Outcome r;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Graph> graphs = enumerate_connected_graphs(6, 9);
    if (graphs.size() != 109) r.fail("expected 109 graphs up to isomorphism");
    int small = 0;
    for (const Graph& g : graphs) {
        int value = brute_avms(g);
        if (value != max_order_bramble(g).order) {
            r.fail("game value vs bramble order mismatch on a " +
                   std::to_string(g.vertex_count()) + "-vertex graph");
            break;
        }
        if (g.vertex_count() <= 5) {
            ++small;
            if (brute_mavms(g) != value) {
                r.fail("monotone game value mismatch on a small graph");
                break;
            }
            if (brute_min_ltd_width(g) != value) {
                r.fail("minimum width mismatch on a small graph");
                break;
            }
        }
    }
    double dt = seconds_since(t0);
    if (small != 29) r.fail("expected 29 graphs with at most 5 vertices");
    if (dt > 120.0) r.fail("sweep exceeded the two-minute budget");
    std::ostringstream os;
    os << "109 graphs, 29 with all four values, " << std::fixed;
    os.precision(1);
    os << dt << "s";
    if (r.ok) r.detail = os.str();
    return r;
}

// 3. Decomposition-guided searchers capture every fugitive behaviour under
//    exhaustive adversary expansion, monotonely, at cost exactly the width:
//    3 on the 3-sun, 3 on the tree-times-K3 sample (and 2 on the K2 one).
Outcome check_upper_bound() {
    Outcome r;
    struct Sample {
        const char* graph;
        const char* ltd;
        int cost;
    };
    for (const Sample& s : {Sample{"sun3", "sun3_ltd", 3}, Sample{"tk3", "tk3_ltd", 3},
                            Sample{"tk2", "tk2_ltd", 2}}) {
        Graph g = corpus_graph(s.graph);
        LooseTreeDecomposition d = fullify(load_ltd(corpus_path(std::string(s.ltd) + ".json")));
        std::unique_ptr<SearcherStrategy> strat = searcher_from_ltd(d);
        FugitiveExhaustion fe = exhaust_fugitive_choices(g, *strat);
        if (!fe.all_captured) r.fail(std::string(s.graph) + ": some behaviour escapes");
        if (!fe.all_monotone) r.fail(std::string(s.graph) + ": a play is not monotone");
        if (!fe.progress_ok) r.fail(std::string(s.graph) + ": the sweep can stall");
        if (fe.max_cost != s.cost) {
            r.fail(std::string(s.graph) + ": cost " + std::to_string(fe.max_cost) + " != " +
                   std::to_string(s.cost));
        }
    }
    r.detail = "3-sun cost 3, tree-times-K3 cost 3, tree-times-K2 cost 2";
    return r;
}

// 4. Bramble-guided fugitives survive exhaustive exploration by one searcher
//    fewer than the bramble order, on the 6-cycle's cycle bramble and on the
//    maximum-order bramble of every non-tree corpus graph, without ever
//    emitting an edge outside the fugitive space (the driver would throw).
Outcome check_lower_bound() {
    Outcome r;
    Graph c6 = corpus_graph("c6");
    TightBramble cyc = cycle_bramble(c6);
    std::unique_ptr<FugitiveStrategy> f = fugitive_from_bramble(c6, cyc, 2);
    SearcherExhaustion se = exhaust_searcher_moves(c6, *f, 1);
    if (se.captured_somewhere) r.fail("6-cycle: one searcher captured the bramble fugitive");

    int cases = 1;
    for (const char* name : {"c3", "c4", "c5", "c6", "diamond", "k4", "sun3"}) {
        Graph g = corpus_graph(name);
        MaxBrambleResult mb = max_order_bramble(g);
        std::unique_ptr<FugitiveStrategy> fug = fugitive_from_bramble(g, mb.bramble, mb.order);
        SearcherExhaustion ex = exhaust_searcher_moves(g, *fug, mb.order - 1);
        if (ex.captured_somewhere) {
            r.fail(std::string(name) + ": " + std::to_string(mb.order - 1) +
                   " searchers captured the bramble fugitive: " + ex.capture_witness);
        }
        ++cases;
    }
    r.detail = std::to_string(cases) + " brambles, no capture, no illegal emission";
    return r;
}

// 5. Every corpus decomposition, made full, embeds its graph as a minor of
//    the product of its tree with a clique of size width.
Outcome check_embedding_chain() {
    Outcome r;
    for (const char* name : {"sun3_ltd", "tk2_ltd", "tk3_ltd"}) {
        LooseTreeDecomposition d = fullify(load_ltd(corpus_path(std::string(name) + ".json")));
        Embedding e = embed_in_cartesian_product(d);
        ModelCheck chk = verify_minor_model(e.product.product, d.graph, e.model);
        if (!chk.ok) r.fail(std::string(name) + ": " + chk.violation);
    }
    r.detail = "3 decompositions embed as minors";
    return r;
}

// 6. The worklist closure behind the fugitive space agrees with the naive
//    bounded-length pathway enumerator on every graph with at most 5
//    vertices, every legitimate searcher transition, every source edge.
Outcome check_space_equivalence() {
    Outcome r;
    auto t0 = std::chrono::steady_clock::now();
    long long checked = 0;
    for (const Graph& g : enumerate_connected_graphs(5, 10, true)) {
        const std::vector<Vertex>& vs = g.vertices();
        int n = static_cast<int>(vs.size());
        for (unsigned sm = 0; sm < (1u << n); ++sm) {
            VertexSet s;
            for (int i = 0; i < n; ++i) {
                if (sm >> i & 1) s.insert(vs[static_cast<std::size_t>(i)]);
            }
            std::vector<VertexSet> nexts;
            for (const Vertex& v : vs) { // place or remove one searcher
                VertexSet t = s;
                if (s.count(v)) t.erase(v); else t.insert(v);
                nexts.push_back(std::move(t));
            }
            for (const Edge& e : g.edges()) { // slides along an edge
                if (s.count(e.a) != s.count(e.b)) {
                    VertexSet t = s;
                    if (s.count(e.a)) { t.erase(e.a); t.insert(e.b); }
                    else { t.erase(e.b); t.insert(e.a); }
                    nexts.push_back(std::move(t));
                }
            }
            for (const VertexSet& s2 : nexts) {
                for (const Edge& e : g.edges()) {
                    ++checked;
                    if (accessible_edges(g, s, e, s2) != accessible_edges_naive(g, s, e, s2)) {
                        r.fail("closure vs enumerator mismatch from edge " + e.str());
                        return r;
                    }
                }
            }
        }
    }
    if (checked != 46746) r.fail("expected 46746 comparisons, got " + std::to_string(checked));
    std::ostringstream os;
    os << "46746 comparisons, " << std::fixed;
    os.precision(1);
    os << seconds_since(t0) << "s";
    if (r.ok) r.detail = os.str();
    return r;
}

// 7. Known values: one searcher suffices exactly on the corpus trees; the
//    6-cycle needs two (bramble lower bound, solver upper bound); on K4 the
//    game value and the maximum bramble order agree at 3.
Outcome check_known_values(std::string& note) {
    Outcome r;
    for (const char* name : {"p2", "p3", "p4", "p5", "star3", "star4", "t5"}) {
        if (brute_avms(corpus_graph(name)) != 1) {
            r.fail(std::string(name) + ": tree value != 1");
        }
    }
    Graph c6 = corpus_graph("c6");
    if (order(c6, cycle_bramble(c6)) != 2) r.fail("6-cycle bramble order != 2");
    if (brute_avms(c6) != 2) r.fail("6-cycle game value != 2");

    Graph k4 = corpus_graph("k4");
    int value = brute_avms(k4);
    int ord = max_order_bramble(k4).order;
    if (value != 3) r.fail("K4 game value != 3");
    if (ord != value) r.fail("K4 bramble order != game value");
    note = "note: order-4 families quoted for K4 count single-vertex elements; the"
           " definition used here requires elements of size >= 2, and exhaustive"
           " search confirms the maximum order is 3.";
    r.detail = "7 trees at 1, 6-cycle at 2, K4 at 3";
    return r;
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&failures](const char* label, const Outcome& r) {
        if (r.ok) {
            std::printf("PASS: %s (%s)\n", label, r.detail.c_str());
        } else {
            ++failures;
            std::printf("FAIL: %s (%s)\n", label, r.detail.c_str());
        }
    };

    report("fixture decompositions, canonical bags and the cycle bramble match their"
           " frozen forms",
           check_fixtures());
    report("game value, monotone value, minimum width and bramble order agree on every"
           " small connected graph",
           check_value_equalities());
    report("decomposition-guided searchers capture every fugitive behaviour at width"
           " cost, monotonely",
           check_upper_bound());
    report("bramble-guided fugitives survive one searcher fewer than the bramble order",
           check_lower_bound());
    report("full decompositions embed their graphs into tree-clique products",
           check_embedding_chain());
    report("the fugitive-space closure matches the naive pathway enumerator",
           check_space_equivalence());
    std::string note;
    Outcome known = check_known_values(note);
    report("known game values: trees at 1, the 6-cycle at 2, K4 at 3", known);
    if (!note.empty()) std::printf("%s\n", note.c_str());

    return failures;
}
