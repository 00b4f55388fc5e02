#include "mixedsearch/strategies.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mixedsearch {

namespace {

std::string join(const VertexSet& s) {
    std::string out;
    for (const Vertex& v : s) {
        if (!out.empty()) out += ",";
        out += v;
    }
    return out;
}

std::uint64_t edge_mask(const Graph& g, const EdgeSet& s) {
    std::uint64_t m = 0;
    for (const Edge& e : s) m |= std::uint64_t{1} << g.edge_index(e);
    return m;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

// --- decomposition-guided searcher -------------------------------------

class LtdSearcher final : public SearcherStrategy {
public:
    explicit LtdSearcher(const LooseTreeDecomposition& d) : d_(d) {
        ValidationReport r = validate(d_);
        if (!r.ok) {
            throw InputError("searcher_from_ltd requires a valid decomposition: " + r.message());
        }
        if (!is_full(d_)) {
            throw InputError("searcher_from_ltd requires a full decomposition");
        }
        if (d_.graph.edge_count() == 0) {
            throw InputError("searcher_from_ltd: graph has no edges");
        }
        k_ = width(d_);
        for (const NodeId& target : d_.tree.vertices()) {
            std::map<NodeId, NodeId> parent{{target, target}};
            std::deque<NodeId> queue{target};
            while (!queue.empty()) {
                NodeId t = queue.front();
                queue.pop_front();
                for (const NodeId& u : d_.tree.neighbors(t)) {
                    if (parent.count(u)) continue;
                    parent[u] = t;
                    dist_[{u, target}] = dist_[{t, target}] + 1;
                    queue.push_back(u);
                }
                if (t == target) dist_[{t, target}] = 0;
            }
            for (const auto& [n, par] : parent) {
                if (n != target) toward_[{n, target}] = par;
            }
        }
        reset();
    }

    void reset() override {
        setup_ = true;
        started_ = false;
        idx_ = 0;
        pending_.reset();
        cur_.clear();
    }

    bool in_response_phase() const override { return !setup_; }

    SearcherMove next_move(const VertexSet& s, const Edge& e) override {
        if (pending_) {
            auto [v, target] = *pending_;
            pending_.reset();
            cur_ = target;
            return SearcherMove::make_place(v);
        }
        if (setup_) {
            if (!started_) {
                started_ = true;
                start_ = pick_start(e);
                const VertexSet& bag = d_.bags.at(start_);
                setup_order_.assign(bag.begin(), bag.end());
            }
            Vertex v = setup_order_[idx_++];
            if (idx_ == setup_order_.size()) {
                setup_ = false;
                cur_ = start_;
            }
            return SearcherMove::make_place(v);
        }
        if (s != d_.bags.at(cur_)) {
            throw std::logic_error("decomposition searcher out of sync with its bag");
        }
        // Nearest bag pair covering the fugitive's edge (ties: smallest pair).
        std::optional<Edge> best;
        int best_dist = 0;
        for (const Edge& f : d_.tree.edges()) {
            const VertexSet& b1 = d_.bags.at(f.a);
            const VertexSet& b2 = d_.bags.at(f.b);
            bool covers = (b1.count(e.a) || b2.count(e.a)) && (b1.count(e.b) || b2.count(e.b));
            if (!covers) continue;
            int dist = std::min(dist_.at({cur_, f.a}), dist_.at({cur_, f.b}));
            if (!best || dist < best_dist) {
                best = f;
                best_dist = dist;
            }
        }
        if (!best) {
            throw std::logic_error("decomposition searcher: no bag pair covers edge " + e.str());
        }
        NodeId next;
        if (cur_ == best->a) {
            next = best->b;
        } else if (cur_ == best->b) {
            next = best->a;
        } else {
            const NodeId& closer =
                dist_.at({cur_, best->a}) <= dist_.at({cur_, best->b}) ? best->a : best->b;
            next = toward_.at({cur_, closer});
        }
        auto [out, in] = swap_pair(d_, cur_, next);
        if (d_.graph.has_edge(out, in)) {
            cur_ = next;
            return SearcherMove::make_slide(out, in);
        }
        pending_ = std::make_pair(in, next);
        return SearcherMove::make_remove(out);
    }

    std::string state_key() const override {
        if (setup_) {
            return started_ ? "s|" + start_ + "|" + std::to_string(idx_) : "s|-";
        }
        if (pending_) {
            return "p|" + cur_ + ">" + pending_->second;
        }
        return "r|" + cur_;
    }

    std::string describe() const override {
        return "decomposition-guided searcher (width " + std::to_string(k_) + ", " +
               std::to_string(d_.tree.vertex_count()) + " bags)";
    }

    std::unique_ptr<SearcherStrategy> clone() const override {
        return std::make_unique<LtdSearcher>(*this);
    }

private:
    NodeId pick_start(const Edge& e) const {
        for (const NodeId& t : d_.tree.vertices()) {
            const VertexSet& bag = d_.bags.at(t);
            if (bag.count(e.a) && bag.count(e.b)) return t;
        }
        return d_.tree.vertices().front();
    }

    LooseTreeDecomposition d_;
    int k_ = 0;
    std::map<std::pair<NodeId, NodeId>, int> dist_;
    std::map<std::pair<NodeId, NodeId>, NodeId> toward_;

    bool setup_ = true;
    bool started_ = false;
    NodeId start_;
    std::vector<Vertex> setup_order_;
    std::size_t idx_ = 0;
    NodeId cur_;
    std::optional<std::pair<Vertex, NodeId>> pending_;
};

// --- single-searcher strategies ----------------------------------------

class TreeSearcher final : public SearcherStrategy {
public:
    TreeSearcher(const Graph& tree, const std::optional<Vertex>& start) : t_(tree) {
        if (!is_tree(t_)) {
            throw InputError("tree_searcher requires a tree");
        }
        if (t_.edge_count() == 0) {
            throw InputError("tree_searcher: tree has no edges");
        }
        if (start) {
            t_.require_vertex(*start);
            start_ = *start;
        } else {
            start_ = t_.vertices().front();
        }
    }

    void reset() override {}

    SearcherMove next_move(const VertexSet& s, const Edge& e) override {
        if (s.empty()) return SearcherMove::make_place(start_);
        if (s.size() != 1) {
            throw std::logic_error("tree searcher controls exactly one searcher");
        }
        const Vertex& x = *s.begin();
        if (e.contains(x)) return SearcherMove::make_slide(x, e.other(x));
        VertexSet comp = component_of(t_, {x}, e.a);
        for (const Vertex& nb : t_.neighbors(x)) {
            if (comp.count(nb)) return SearcherMove::make_slide(x, nb);
        }
        throw std::logic_error("tree searcher: fugitive edge unreachable from " + x);
    }

    std::string state_key() const override { return "t"; }
    std::string describe() const override { return "single tree searcher from " + start_; }
    std::unique_ptr<SearcherStrategy> clone() const override {
        return std::make_unique<TreeSearcher>(*this);
    }

private:
    Graph t_;
    Vertex start_;
};

class PursuitSearcher final : public SearcherStrategy {
public:
    PursuitSearcher(const Graph& g, const std::optional<Vertex>& start) : g_(g), start_(start) {
        if (g_.edge_count() == 0) {
            throw InputError("pursuit_searcher: graph has no edges");
        }
        if (!is_connected(g_)) {
            throw InputError("pursuit_searcher requires a connected graph");
        }
        if (start_) g_.require_vertex(*start_);
    }

    void reset() override {}

    SearcherMove next_move(const VertexSet& s, const Edge& e) override {
        if (s.empty()) {
            return SearcherMove::make_place(start_ ? *start_ : e.a);
        }
        if (s.size() != 1) {
            throw std::logic_error("pursuit searcher controls exactly one searcher");
        }
        const Vertex& x = *s.begin();
        if (e.contains(x)) return SearcherMove::make_slide(x, e.other(x));
        std::map<Vertex, int> from_x = bfs_distances(g_, x);
        const Vertex& target = from_x.at(e.a) <= from_x.at(e.b) ? e.a : e.b;
        std::map<Vertex, int> from_target = bfs_distances(g_, target);
        std::optional<Vertex> best;
        for (const Vertex& nb : g_.neighbors(x)) {
            if (!best || from_target.at(nb) < from_target.at(*best)) best = nb;
        }
        return SearcherMove::make_slide(x, *best);
    }

    std::string state_key() const override { return "p"; }
    std::string describe() const override { return "single pursuit searcher"; }
    std::unique_ptr<SearcherStrategy> clone() const override {
        return std::make_unique<PursuitSearcher>(*this);
    }

private:
    Graph g_;
    std::optional<Vertex> start_;
};

// --- fugitive strategies ------------------------------------------------

class BrambleFugitive final : public FugitiveStrategy {
public:
    BrambleFugitive(const Graph& g, const TightBramble& b, int k) : g_(g), k_(k) {
        BrambleCheck check = is_tight_bramble(g_, b.elements);
        if (!check.ok) {
            throw InputError("fugitive_from_bramble requires a tight bramble: " + check.violation);
        }
        if (k_ < 2) {
            throw InputError("fugitive_from_bramble requires a bramble of order >= 2");
        }
        std::set<VertexSet> sorted(b.elements.begin(), b.elements.end());
        elements_.assign(sorted.begin(), sorted.end());
        if (elements_.empty()) {
            throw InputError("fugitive_from_bramble requires a nonempty bramble");
        }
    }

    void reset() override { idx_ = 0; }

    Edge initial_edge() override { return lowest_edge_of(elements_[idx_]); }

    Edge respond(const VertexSet& s_prev, const Edge& e, const VertexSet& s_next,
                 const EdgeSet& space) override {
        VertexSet added;
        std::set_difference(s_next.begin(), s_next.end(), s_prev.begin(), s_prev.end(),
                            std::inserter(added, added.end()));
        if (added.empty()) return e; // removal: stay put
        const Vertex& w = *added.begin();
        if (!elements_[idx_].count(w)) return e; // element untouched: stay put
        for (std::size_t j = 0; j < elements_.size(); ++j) {
            bool disjoint = std::none_of(elements_[j].begin(), elements_[j].end(),
                                         [&](const Vertex& v) { return s_next.count(v) != 0; });
            if (disjoint) {
                idx_ = j;
                return lowest_edge_of(elements_[j]);
            }
        }
        // Every element is hit: the team has reached the order. Stay legal.
        if (space.count(e)) return e;
        return *space.begin();
    }

    std::string state_key() const override { return "B" + std::to_string(idx_); }
    std::string describe() const override {
        return "bramble fugitive (order " + std::to_string(k_) + ", " +
               std::to_string(elements_.size()) + " elements)";
    }
    std::unique_ptr<FugitiveStrategy> clone() const override {
        return std::make_unique<BrambleFugitive>(*this);
    }

private:
    Edge lowest_edge_of(const VertexSet& elem) const {
        std::vector<Edge> edges = induced_edges(g_, elem);
        if (edges.empty()) {
            throw std::logic_error("bramble element without an induced edge");
        }
        return edges.front();
    }

    Graph g_;
    int k_ = 0;
    std::vector<VertexSet> elements_;
    std::size_t idx_ = 0;
};

class FirstEdgeFugitive final : public FugitiveStrategy {
public:
    explicit FirstEdgeFugitive(const Graph& g) : g_(g) {
        if (g_.edge_count() == 0) {
            throw InputError("first_edge_fugitive: graph has no edges");
        }
    }

    void reset() override {}
    Edge initial_edge() override { return g_.edges().front(); }
    Edge respond(const VertexSet&, const Edge&, const VertexSet&, const EdgeSet& space) override {
        return *space.begin();
    }
    std::string state_key() const override { return "f"; }
    std::string describe() const override { return "smallest-edge fugitive"; }
    std::unique_ptr<FugitiveStrategy> clone() const override {
        return std::make_unique<FirstEdgeFugitive>(*this);
    }

private:
    Graph g_;
};

} // namespace

std::unique_ptr<SearcherStrategy> searcher_from_ltd(const LooseTreeDecomposition& d) {
    return std::make_unique<LtdSearcher>(d);
}

std::unique_ptr<SearcherStrategy> tree_searcher(const Graph& tree,
                                                const std::optional<Vertex>& start) {
    return std::make_unique<TreeSearcher>(tree, start);
}

std::unique_ptr<SearcherStrategy> pursuit_searcher(const Graph& g,
                                                   const std::optional<Vertex>& start) {
    return std::make_unique<PursuitSearcher>(g, start);
}

std::unique_ptr<FugitiveStrategy> fugitive_from_bramble(const Graph& g, const TightBramble& b,
                                                        int k) {
    return std::make_unique<BrambleFugitive>(g, b, k);
}

std::unique_ptr<FugitiveStrategy> first_edge_fugitive(const Graph& g) {
    return std::make_unique<FirstEdgeFugitive>(g);
}

std::string verdict_str(MatchVerdict v) {
    switch (v) {
        case MatchVerdict::captured: return "captured";
        case MatchVerdict::escaped_by_limit: return "escaped-by-limit";
        case MatchVerdict::cycle_detected: return "cycle-detected";
    }
    return "?";
}

MatchResult run_match(const Graph& g, SearcherStrategy& searcher, FugitiveStrategy& fugitive,
                      int step_limit) {
    if (step_limit < 1) {
        throw InputError("run_match requires a positive step limit");
    }
    searcher.reset();
    fugitive.reset();
    Edge e1 = fugitive.initial_edge();
    if (!g.has_edge(e1)) {
        throw StrategyFault("fugitive strategy opened on unknown edge " + e1.str());
    }
    GameState st = initial_state(g, e1);
    MatchResult res{Play{e1, {}}, MatchVerdict::escaped_by_limit};
    std::set<std::string> seen;
    for (int i = 0; i < step_limit; ++i) {
        std::string key = join(st.searchers) + "|" + st.fugitive->str() + "|" +
                          searcher.state_key() + "|" + fugitive.state_key();
        if (!seen.insert(key).second) {
            res.verdict = MatchVerdict::cycle_detected;
            return res;
        }
        SearcherMove m = searcher.next_move(st.searchers, *st.fugitive);
        VertexSet s_next;
        try {
            s_next = apply_move(g, st.searchers, m);
        } catch (const InputError& ex) {
            throw StrategyFault(std::string("searcher strategy: ") + ex.what());
        }
        EdgeSet cleared_now = clear_set(g, st.searchers, s_next);
        EdgeSet space = fugitive_space(g, st.searchers, *st.fugitive, s_next);
        PlayStep rec{m, s_next, std::nullopt, cleared_now};
        if (space.empty()) {
            res.play.steps.push_back(std::move(rec));
            res.verdict = MatchVerdict::captured;
            return res;
        }
        Edge e2 = fugitive.respond(st.searchers, *st.fugitive, s_next, space);
        if (!space.count(e2)) {
            throw StrategyFault("fugitive strategy emitted " + e2.str() +
                                " outside the fugitive space");
        }
        rec.fugitive = e2;
        res.play.steps.push_back(std::move(rec));
        st.searchers = std::move(s_next);
        st.fugitive = e2;
        st.cleared.insert(cleared_now.begin(), cleared_now.end());
    }
    return res;
}

namespace {

struct ExhaustCtx {
    const Graph& g;
    FugitiveExhaustion res;
    long long cap;
    // 1 = on the current play prefix, 2 = fully explored.
    std::unordered_map<std::string, int> status;
    std::unordered_map<std::string, int> depth_memo;
};

// Returns the maximum number of further moves below this position.
int explore(ExhaustCtx& C, std::unique_ptr<SearcherStrategy> strat, const VertexSet& s,
            const Edge& e, std::uint64_t cleared, std::optional<std::uint64_t> last_space,
            bool last_was_removal) {
    std::string key = strat->state_key() + "\x1f" + join(s) + "\x1f" + e.str() + "\x1f" +
                      hex64(cleared) + "\x1f" + (last_space ? hex64(*last_space) : "-") +
                      "\x1f" + (last_was_removal ? "1" : "0");
    auto it = C.status.find(key);
    if (it != C.status.end()) {
        if (it->second == 1) {
            if (C.res.all_captured) {
                C.res.all_captured = false;
                C.res.failure = "the fugitive can revisit searchers {" + join(s) + "} on edge " +
                                e.str() + " forever";
            }
            return 0;
        }
        return C.depth_memo.at(key);
    }
    if (++C.res.positions > C.cap) {
        throw ResourceError("exhaust_fugitive_choices: position cap exceeded");
    }
    C.status[key] = 1;

    bool response = strat->in_response_phase();
    SearcherMove m = strat->next_move(s, e);
    VertexSet s_next;
    try {
        s_next = apply_move(C.g, s, m);
    } catch (const InputError& ex) {
        throw StrategyFault(std::string("searcher strategy: ") + ex.what());
    }
    EdgeSet cleared_now = clear_set(C.g, s, s_next);
    EdgeSet space = fugitive_space(C.g, s, e, s_next);
    std::uint64_t space_mask = edge_mask(C.g, space);
    bool removal = m.kind == MoveKind::remove;

    if (removal && last_was_removal && C.res.progress_ok) {
        C.res.progress_ok = false;
        C.res.failure = "two consecutive removals (second: " + m.str() + ")";
    }
    if (response && !removal && last_space && C.res.progress_ok) {
        bool strictly_smaller =
            (space_mask & ~*last_space) == 0 && space_mask != *last_space;
        if (!strictly_smaller) {
            C.res.progress_ok = false;
            C.res.failure = "fugitive space did not shrink at " + m.str() + " against " + e.str();
        }
    }
    if ((space_mask & cleared) != 0 && C.res.all_monotone) {
        C.res.all_monotone = false;
        C.res.failure = "a previously cleared edge re-enters the fugitive space after " + m.str();
    }
    C.res.max_cost = std::max(C.res.max_cost, static_cast<int>(s_next.size()));

    std::optional<std::uint64_t> next_space_ctx;
    if (response) next_space_ctx = removal ? last_space : std::optional<std::uint64_t>(space_mask);

    int depth = 1;
    if (!space.empty()) {
        std::uint64_t cleared_next = cleared | edge_mask(C.g, cleared_now);
        for (const Edge& e2 : space) {
            int d = explore(C, strat->clone(), s_next, e2, cleared_next, next_space_ctx, removal);
            depth = std::max(depth, 1 + d);
        }
    }
    C.status[key] = 2;
    C.depth_memo[key] = depth;
    return depth;
}

} // namespace

FugitiveExhaustion exhaust_fugitive_choices(const Graph& g, const SearcherStrategy& searcher,
                                            long long position_cap) {
    if (g.edge_count() == 0) {
        throw InputError("exhaust_fugitive_choices: graph has no edges");
    }
    if (g.edge_count() > 64) {
        throw ResourceError("exhaust_fugitive_choices is limited to 64 edges");
    }
    ExhaustCtx C{g, {}, position_cap, {}, {}};
    for (const Edge& e1 : g.edges()) {
        std::unique_ptr<SearcherStrategy> strat = searcher.clone();
        strat->reset();
        int d = explore(C, std::move(strat), {}, e1, 0, std::nullopt, false);
        C.res.max_play_length = std::max(C.res.max_play_length, d);
    }
    return C.res;
}

SearcherExhaustion exhaust_searcher_moves(const Graph& g, const FugitiveStrategy& fugitive,
                                          int k, long long position_cap) {
    if (g.edge_count() == 0) {
        throw InputError("exhaust_searcher_moves: graph has no edges");
    }
    if (k < 0) {
        throw InputError("exhaust_searcher_moves requires k >= 0");
    }
    SearcherExhaustion res;
    struct Pos {
        std::unique_ptr<FugitiveStrategy> fug;
        VertexSet s;
        Edge e;
    };
    std::unique_ptr<FugitiveStrategy> proto = fugitive.clone();
    proto->reset();
    Edge e1 = proto->initial_edge();
    if (!g.has_edge(e1)) {
        throw StrategyFault("fugitive strategy opened on unknown edge " + e1.str());
    }
    std::set<std::string> visited{proto->state_key() + "\x1f\x1f" + e1.str()};
    std::vector<Pos> stack;
    stack.push_back({std::move(proto), {}, e1});
    res.positions = 1;
    while (!stack.empty()) {
        Pos pos = std::move(stack.back());
        stack.pop_back();
        std::vector<SearcherMove> moves;
        if (static_cast<int>(pos.s.size()) < k) {
            for (const Vertex& v : g.vertices()) {
                if (!pos.s.count(v)) moves.push_back(SearcherMove::make_place(v));
            }
        }
        for (const Vertex& v : pos.s) moves.push_back(SearcherMove::make_remove(v));
        for (const Vertex& from : pos.s) {
            for (const Vertex& to : g.neighbors(from)) {
                if (!pos.s.count(to)) moves.push_back(SearcherMove::make_slide(from, to));
            }
        }
        for (const SearcherMove& m : moves) {
            ++res.transitions;
            VertexSet s_next = apply_move(g, pos.s, m);
            EdgeSet space = fugitive_space(g, pos.s, pos.e, s_next);
            if (space.empty()) {
                res.captured_somewhere = true;
                res.capture_witness = "searchers at {" + join(pos.s) + "} capture " +
                                      pos.e.str() + " with " + m.str();
                return res;
            }
            std::unique_ptr<FugitiveStrategy> fug = pos.fug->clone();
            Edge e2 = fug->respond(pos.s, pos.e, s_next, space);
            if (!space.count(e2)) {
                throw StrategyFault("fugitive strategy emitted " + e2.str() +
                                    " outside the fugitive space");
            }
            std::string key = fug->state_key() + "\x1f" + join(s_next) + "\x1f" + e2.str();
            if (visited.insert(key).second) {
                if (++res.positions > position_cap) {
                    throw ResourceError("exhaust_searcher_moves: position cap exceeded");
                }
                stack.push_back({std::move(fug), s_next, e2});
            }
        }
    }
    return res;
}

} // namespace mixedsearch
