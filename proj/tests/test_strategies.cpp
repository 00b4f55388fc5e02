#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mixedsearch/errors.hpp"
#include "mixedsearch/json_io.hpp"
#include "mixedsearch/strategies.hpp"
#include "test_util.hpp"

using namespace mixedsearch;

namespace {

Graph sun3() { return load_graph(corpus_path("sun3.json")); }

LooseTreeDecomposition sun3_full() { return fullify(load_ltd(corpus_path("sun3_ltd.json"))); }

Graph c6() { return load_graph(corpus_path("c6.json")); }

// Deliberately broken strategies for fault handling.
class StuckSearcher final : public SearcherStrategy {
public:
    void reset() override {}
    SearcherMove next_move(const VertexSet&, const Edge&) override {
        return SearcherMove::make_remove("a"); // illegal on an empty board
    }
    std::string state_key() const override { return "x"; }
    std::string describe() const override { return "stuck"; }
    std::unique_ptr<SearcherStrategy> clone() const override {
        return std::make_unique<StuckSearcher>(*this);
    }
};

class CheatingFugitive final : public FugitiveStrategy {
public:
    explicit CheatingFugitive(Graph g) : g_(std::move(g)) {}
    void reset() override {}
    Edge initial_edge() override { return g_.edges().front(); }
    Edge respond(const VertexSet&, const Edge&, const VertexSet&, const EdgeSet& space) override {
        for (const Edge& e : g_.edges()) { // prefer an edge outside the space
            if (!space.count(e)) return e;
        }
        return *space.begin();
    }
    std::string state_key() const override { return "x"; }
    std::string describe() const override { return "cheater"; }
    std::unique_ptr<FugitiveStrategy> clone() const override {
        return std::make_unique<CheatingFugitive>(*this);
    }

private:
    Graph g_;
};

class ScriptedSearcher final : public SearcherStrategy {
public:
    explicit ScriptedSearcher(std::vector<SearcherMove> moves) : moves_(std::move(moves)) {}
    void reset() override { next_ = 0; }
    SearcherMove next_move(const VertexSet&, const Edge&) override {
        if (next_ >= moves_.size()) return SearcherMove::make_remove("a");
        return moves_[next_++];
    }
    std::string state_key() const override { return std::to_string(next_); }
    std::string describe() const override { return "scripted"; }
    std::unique_ptr<SearcherStrategy> clone() const override {
        return std::make_unique<ScriptedSearcher>(*this);
    }

private:
    std::vector<SearcherMove> moves_;
    std::size_t next_ = 0;
};

} // namespace

TEST_CASE("decomposition searcher requires a full valid decomposition") {
    LooseTreeDecomposition loose = load_ltd(corpus_path("sun3_ltd.json"));
    CHECK_THROWS_AS(searcher_from_ltd(loose), InputError); // not full
    CHECK_NOTHROW(searcher_from_ltd(sun3_full()));
}

TEST_CASE("decomposition searcher wins the 3-sun and its plays replay") {
    Graph g = sun3();
    auto searcher = searcher_from_ltd(sun3_full());
    auto fugitive = first_edge_fugitive(g);
    MatchResult r = run_match(g, *searcher, *fugitive);
    CHECK(r.verdict == MatchVerdict::captured);
    CHECK(r.play.captured());
    CHECK(play_cost(r.play) <= 3);
    CHECK(is_monotone(r.play));
    replay_play(g, r.play);
}

TEST_CASE("exhausting every fugitive behaviour on the 3-sun") {
    FugitiveExhaustion r = exhaust_fugitive_choices(sun3(), *searcher_from_ltd(sun3_full()));
    CHECK(r.all_captured);
    CHECK(r.all_monotone);
    CHECK(r.progress_ok);
    CHECK(r.max_cost == 3);
    CHECK(r.failure.empty());
    CHECK(r.positions > 0);
}

TEST_CASE("canonical product strategies pay exactly the clique size") {
    Graph g2 = load_graph(corpus_path("tk2.json"));
    FugitiveExhaustion r2 =
        exhaust_fugitive_choices(g2, *searcher_from_ltd(load_ltd(corpus_path("tk2_ltd.json"))));
    CHECK(r2.all_captured);
    CHECK(r2.all_monotone);
    CHECK(r2.max_cost == 2);
}

TEST_CASE("tree searcher clears any tree alone") {
    for (const char* name : {"p2", "p3", "p4", "p5", "star3", "star4", "t5"}) {
        Graph g = load_graph(corpus_path(std::string(name) + ".json"));
        FugitiveExhaustion r = exhaust_fugitive_choices(g, *tree_searcher(g));
        CHECK(r.all_captured);
        CHECK(r.all_monotone);
        CHECK(r.max_cost == 1);
    }

    CHECK_THROWS_AS(tree_searcher(c6()), InputError);
    CHECK_THROWS_AS(tree_searcher(load_graph(corpus_path("p4.json")), Vertex("z")), InputError);

    // explicit start vertex is honoured
    Graph p4 = load_graph(corpus_path("p4.json"));
    auto s = tree_searcher(p4, Vertex("d"));
    SearcherMove first = s->next_move({}, Edge("a", "b"));
    CHECK(first.kind == MoveKind::place);
    CHECK(first.v == "d");
}

TEST_CASE("pursuit searcher works on connected graphs only") {
    Graph p4 = load_graph(corpus_path("p4.json"));
    FugitiveExhaustion r = exhaust_fugitive_choices(p4, *pursuit_searcher(p4));
    CHECK(r.all_captured);
    CHECK(r.max_cost == 1);

    Graph split({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK_THROWS_AS(pursuit_searcher(split), InputError);
}

TEST_CASE("one pursuer cannot clear a cycle: the match cycles") {
    Graph g = c6();
    auto searcher = pursuit_searcher(g);
    auto fugitive = fugitive_from_bramble(g, cycle_bramble(g), 2);
    MatchResult r = run_match(g, *searcher, *fugitive);
    CHECK(r.verdict == MatchVerdict::cycle_detected);
    CHECK_FALSE(r.play.captured());
    replay_play(g, r.play);
}

TEST_CASE("bramble fugitive escapes one searcher below the order") {
    Graph g = c6();
    TightBramble b = cycle_bramble(g);
    int k = order(g, b);
    REQUIRE(k == 2);
    SearcherExhaustion r = exhaust_searcher_moves(g, *fugitive_from_bramble(g, b, k), k - 1);
    CHECK_FALSE(r.captured_somewhere);
    CHECK(r.capture_witness.empty());
    CHECK(r.positions > 0);
    CHECK(r.transitions > r.positions);
}

TEST_CASE("bramble fugitive construction validates its input") {
    Graph g = c6();
    TightBramble b = cycle_bramble(g);
    CHECK_THROWS_AS(fugitive_from_bramble(g, b, 1), InputError);
    CHECK_THROWS_AS(fugitive_from_bramble(g, TightBramble{{{"a", "b"}, {"c", "d"}}}, 2),
                    InputError);
}

TEST_CASE("three searchers do catch the bramble fugitive eventually") {
    Graph g = sun3();
    auto searcher = searcher_from_ltd(sun3_full());
    auto [b, k] = max_order_bramble(g);
    REQUIRE(k == 3);
    auto fugitive = fugitive_from_bramble(g, b, k);
    MatchResult r = run_match(g, *searcher, *fugitive);
    CHECK(r.verdict == MatchVerdict::captured);
    CHECK(play_cost(r.play) == 3);
    CHECK(is_monotone(r.play));
    replay_play(g, r.play);
}

TEST_CASE("baseline fugitive opens on the smallest edge") {
    Graph g = c6();
    auto f = first_edge_fugitive(g);
    f->reset();
    CHECK(f->initial_edge() == Edge("a", "b"));
    EdgeSet space{Edge("c", "d"), Edge("b", "c")};
    CHECK(f->respond({}, Edge("a", "b"), {"a"}, space) == Edge("b", "c"));
}

TEST_CASE("clones behave like their originals") {
    Graph g = sun3();
    auto s = searcher_from_ltd(sun3_full());
    s->reset();
    SearcherMove m1 = s->next_move({}, Edge("d", "e"));
    auto s2 = s->clone();
    CHECK(s->state_key() == s2->state_key());
    CHECK(s->next_move(apply_move(g, {}, m1), Edge("d", "e")).str() ==
          s2->next_move(apply_move(g, {}, m1), Edge("d", "e")).str());
}

TEST_CASE("illegal emissions raise strategy faults naming the side") {
    Graph g = c6();

    StuckSearcher bad_searcher;
    auto f = first_edge_fugitive(g);
    CHECK_THROWS_WITH_AS(run_match(g, bad_searcher, *f),
                         doctest::Contains("searcher strategy"), StrategyFault);

    // Placing onto the fugitive's opening edge makes it slip out through the
    // arriving vertex, so the space is nonempty but excludes a-b; the cheater
    // then emits the freshly cleared edge.
    ScriptedSearcher clearer{{SearcherMove::make_place("a"), SearcherMove::make_place("b")}};
    CheatingFugitive bad_fugitive{g};
    CHECK_THROWS_WITH_AS(run_match(g, clearer, bad_fugitive),
                         doctest::Contains("fugitive strategy"), StrategyFault);

    // the exhaustive searcher driver performs the same policing
    CHECK_THROWS_AS(exhaust_searcher_moves(g, bad_fugitive, 1), StrategyFault);
}

TEST_CASE("match driver validates its limit") {
    Graph g = c6();
    auto s = pursuit_searcher(g);
    auto f = first_edge_fugitive(g);
    CHECK_THROWS_AS(run_match(g, *s, *f, 0), InputError);
}
