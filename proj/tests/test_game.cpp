#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mixedsearch/errors.hpp"
#include "mixedsearch/game.hpp"

using namespace mixedsearch;

namespace {

Graph path4() { return Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}); }

Graph triangle_tail() {
    // triangle a,b,c with a pendant d on c
    return Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"c", "d"}});
}

} // namespace

TEST_CASE("searcher moves apply one change at a time") {
    Graph g = path4();

    CHECK(apply_move(g, {}, SearcherMove::make_place("a")) == VertexSet{"a"});
    CHECK(apply_move(g, {"a", "c"}, SearcherMove::make_remove("a")) == VertexSet{"c"});
    CHECK(apply_move(g, {"a"}, SearcherMove::make_slide("a", "b")) == VertexSet{"b"});

    CHECK_THROWS_AS(apply_move(g, {"a"}, SearcherMove::make_place("a")), InputError);
    CHECK_THROWS_AS(apply_move(g, {}, SearcherMove::make_remove("a")), InputError);
    CHECK_THROWS_AS(apply_move(g, {}, SearcherMove::make_slide("a", "b")), InputError);
    CHECK_THROWS_AS(apply_move(g, {"a", "b"}, SearcherMove::make_slide("a", "b")), InputError);
    CHECK_THROWS_AS(apply_move(g, {"a"}, SearcherMove::make_slide("a", "c")), InputError);
    CHECK_THROWS_AS(apply_move(g, {"a"}, SearcherMove::make_place("z")), InputError);

    CHECK(SearcherMove::make_place("a").str() == "place a");
    CHECK(SearcherMove::make_remove("a").str() == "remove a");
    CHECK(SearcherMove::make_slide("a", "b").str() == "slide a->b");
}

TEST_CASE("legitimate transitions and move recovery") {
    Graph g = path4();

    CHECK(legitimate(g, {}, {"a"}));
    CHECK(legitimate(g, {"a"}, {}));
    CHECK(legitimate(g, {"a"}, {"b"}));  // slide along ab
    CHECK_FALSE(legitimate(g, {"a"}, {"c"})); // not adjacent
    CHECK_FALSE(legitimate(g, {"a"}, {"a"})); // nothing changed
    CHECK_FALSE(legitimate(g, {}, {"a", "b"})); // two placements

    auto mv = move_between(g, {"a"}, {"a", "b"});
    REQUIRE(mv.has_value());
    CHECK(mv->kind == MoveKind::place);
    CHECK(mv->v == "b");

    mv = move_between(g, {"a", "b"}, {"a"});
    REQUIRE(mv.has_value());
    CHECK(mv->kind == MoveKind::remove);

    mv = move_between(g, {"b"}, {"c"});
    REQUIRE(mv.has_value());
    CHECK(mv->kind == MoveKind::slide);
    CHECK(mv->from == "b");
    CHECK(mv->to == "c");

    CHECK_FALSE(move_between(g, {"a"}, {"c"}).has_value());
}

TEST_CASE("clear sets") {
    Graph g = triangle_tail();

    // placement clears all edges from the old set to the new vertex
    CHECK(clear_set(g, {"a", "b"}, {"a", "b", "c"}) == EdgeSet{Edge("a", "c"), Edge("b", "c")});
    // removal clears nothing
    CHECK(clear_set(g, {"a", "b"}, {"a"}) == EdgeSet{});
    // slide clears edges into the target, including the slid edge
    CHECK(clear_set(g, {"a", "c"}, {"b", "c"}) == EdgeSet{Edge("a", "b"), Edge("b", "c")});
    CHECK_THROWS_AS(clear_set(path4(), {"a"}, {"c"}), InputError);

    CHECK(slide_edge(g, {"a"}, {"b"}) == Edge("a", "b"));
    CHECK_FALSE(slide_edge(g, {"a"}, {"a", "b"}).has_value());
}

TEST_CASE("avoiding pathways respect retained searchers and the slid edge") {
    Graph g = path4();

    // placing c while b stays: the junction b is blocked, a-b only reaches itself
    CHECK(avoiding_pathway_exists(g, {"b"}, {"b", "c"}, Edge("a", "b"), Edge("a", "b")));
    CHECK_FALSE(avoiding_pathway_exists(g, {"b"}, {"b", "c"}, Edge("a", "b"), Edge("b", "c")));

    // removing b frees the junction
    CHECK(avoiding_pathway_exists(g, {"b", "d"}, {"d"}, Edge("a", "b"), Edge("b", "c")));

    // a slide bans its own edge everywhere in the pathway
    CHECK_FALSE(avoiding_pathway_exists(g, {"b"}, {"c"}, Edge("b", "c"), Edge("b", "c")));
    CHECK_FALSE(avoiding_pathway_exists(g, {"b"}, {"c"}, Edge("a", "b"), Edge("c", "d")));
    // ... but other edges still form pathways around it
    CHECK(avoiding_pathway_exists(g, {"b"}, {"c"}, Edge("a", "b"), Edge("a", "b")));
}

TEST_CASE("accessible edges and the fugitive space") {
    Graph g = path4();

    // slide b->c: fugitive on c-d keeps only its own edge
    CHECK(accessible_edges(g, {"b"}, Edge("c", "d"), {"c"}) == EdgeSet{Edge("c", "d")});
    CHECK(fugitive_space(g, {"b"}, Edge("c", "d"), {"c"}) == EdgeSet{Edge("c", "d")});

    // slide a->b captures a fugitive sitting on the slid edge
    CHECK(fugitive_space(g, {"a"}, Edge("a", "b"), {"b"}) == EdgeSet{});

    // the first placement blocks nothing: no searcher was present before
    CHECK(fugitive_space(g, {}, Edge("a", "b"), {"b"}) ==
          EdgeSet{Edge("a", "b"), Edge("b", "c"), Edge("c", "d")});

    // placing onto the fugitive's edge clears it, but the fugitive slips out
    // through the arriving endpoint
    CHECK(fugitive_space(g, {"a"}, Edge("a", "b"), {"a", "b"}) ==
          EdgeSet{Edge("b", "c"), Edge("c", "d")});

    // removal opens the whole path back up
    CHECK(fugitive_space(g, {"b", "d"}, Edge("c", "d"), {"d"}) ==
          EdgeSet{Edge("a", "b"), Edge("b", "c"), Edge("c", "d")});
}

TEST_CASE("an edge with both endpoints occupied survives until actually cleared") {
    Graph g = triangle_tail();
    // searchers already sit on a and b; placing d clears nothing near a-b,
    // so the fugitive on a-b stays even though both endpoints are occupied.
    EdgeSet space = fugitive_space(g, {"a", "b"}, Edge("a", "b"), {"a", "b", "d"});
    CHECK(space == EdgeSet{Edge("a", "b")});

    // newly reachable edges with both endpoints occupied are excluded, though
    EdgeSet reach = accessible_edges(g, {"a"}, Edge("c", "d"), {"a", "b"});
    CHECK(reach.count(Edge("a", "b")) == 0);
    CHECK(reach.count(Edge("a", "c")) == 1);
    CHECK(reach.count(Edge("b", "c")) == 1);
}

TEST_CASE("naive pathway enumeration agrees on a small graph") {
    Graph g = triangle_tail();
    for (const Edge& e : g.edges()) {
        CHECK(accessible_edges(g, {"c"}, e, {"c", "a"}) ==
              accessible_edges_naive(g, {"c"}, e, {"c", "a"}));
        CHECK(accessible_edges(g, {"a", "c"}, e, {"a", "b"}) ==
              accessible_edges_naive(g, {"a", "c"}, e, {"a", "b"}));
        CHECK(accessible_edges(g, {"b"}, e, {"c"}) ==
              accessible_edges_naive(g, {"b"}, e, {"c"}));
    }
}

TEST_CASE("stepping a game to capture") {
    Graph g = path4();
    GameState st = initial_state(g, Edge("a", "b"));
    CHECK(st.searchers.empty());
    CHECK(st.fugitive == Edge("a", "b"));
    CHECK(st.cleared.empty());
    CHECK_THROWS_AS(initial_state(g, Edge("a", "c")), InputError);
    CHECK_THROWS_AS(initial_state(Graph({"a"}, {}), Edge("a", "b")), InputError);

    st = step(g, st, SearcherMove::make_place("a"), Edge("a", "b"));
    CHECK(st.fugitive == Edge("a", "b"));
    CHECK(st.cleared.empty());

    // fugitive choice must lie in the space; placing b clears a-b and leaves
    // only the far side open
    CHECK_THROWS_AS(step(g, st, SearcherMove::make_place("b"), Edge("a", "b")), InputError);

    st = step(g, st, SearcherMove::make_slide("a", "b"));
    CHECK_FALSE(st.fugitive.has_value()); // captured on the slid edge
    CHECK(st.cleared == EdgeSet{Edge("a", "b")});
    CHECK_THROWS_AS(step(g, st, SearcherMove::make_place("c")), InputError);
}

TEST_CASE("play bookkeeping") {
    Graph g = path4();
    Play p{Edge("c", "d"), {}};

    GameState st = initial_state(g, p.initial_fugitive);
    auto record = [&](const SearcherMove& m, const std::optional<Edge>& choice) {
        GameState before = st;
        st = step(g, st, m, choice);
        EdgeSet now = clear_set(g, before.searchers, st.searchers);
        p.steps.push_back({m, st.searchers, st.fugitive, now});
    };

    record(SearcherMove::make_place("c"), Edge("c", "d"));
    record(SearcherMove::make_slide("c", "d"), std::nullopt);
    CHECK(p.captured());
    CHECK(play_cost(p) == 1);
    CHECK(is_monotone(p));
    replay_play(g, p); // must not throw

    // tampering with the record is caught on replay
    Play bad = p;
    bad.steps[0].searchers = {"b"};
    CHECK_THROWS_AS(replay_play(g, bad), InputError);

    Play bad2 = p;
    bad2.steps[1].cleared_now = {};
    CHECK_THROWS_AS(replay_play(g, bad2), InputError);

    // a recorded fugitive edge inside previously cleared territory is
    // visible to the monotonicity check
    Play fake{Edge("a", "b"), {}};
    fake.steps.push_back({SearcherMove::make_place("b"), {"b"}, Edge("a", "b"),
                          {Edge("a", "b"), Edge("b", "c")}});
    fake.steps.push_back({SearcherMove::make_remove("b"), {}, Edge("b", "c"), {}});
    CHECK_FALSE(is_monotone(fake));
    CHECK(play_cost(fake) == 1);
}
