#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mixedsearch/bramble.hpp"
#include "mixedsearch/cartesian.hpp"
#include "mixedsearch/decomposition.hpp"
#include "mixedsearch/errors.hpp"
#include "mixedsearch/game.hpp"
#include "mixedsearch/graph.hpp"
#include "mixedsearch/json_io.hpp"
#include "mixedsearch/oracle.hpp"
#include "mixedsearch/strategies.hpp"

namespace {

using mixedsearch::Edge;
using mixedsearch::EdgeSet;
using mixedsearch::Graph;
using mixedsearch::InputError;
using mixedsearch::ResourceError;
using mixedsearch::StrategyFault;
using mixedsearch::Vertex;
using mixedsearch::VertexSet;
using ordered_json = nlohmann::ordered_json;

// Payload goes to stdout; -o additionally writes the same bytes to a file.
void emit(const std::string& payload, const std::string& out_path) {
    std::cout << payload;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            throw InputError("cannot write file: " + out_path);
        }
        f << payload;
    }
}

void require_same_graph(const Graph& a, const Graph& b, const std::string& what) {
    if (a.vertices() != b.vertices() || a.edges() != b.edges()) {
        throw InputError(what + " was built for a different graph");
    }
}

std::unique_ptr<mixedsearch::SearcherStrategy> make_searcher(const std::string& spec,
                                                             const Graph& g) {
    if (spec.rfind("ltd:", 0) == 0) {
        mixedsearch::LooseTreeDecomposition d = mixedsearch::load_ltd(spec.substr(4));
        require_same_graph(d.graph, g, "the decomposition");
        return mixedsearch::searcher_from_ltd(d);
    }
    if (spec == "tree") return mixedsearch::tree_searcher(g);
    if (spec.rfind("tree:", 0) == 0) return mixedsearch::tree_searcher(g, spec.substr(5));
    if (spec == "pursuit") return mixedsearch::pursuit_searcher(g);
    if (spec.rfind("pursuit:", 0) == 0) {
        return mixedsearch::pursuit_searcher(g, spec.substr(8));
    }
    throw InputError("unknown searcher spec '" + spec +
                     "' (use ltd:FILE, tree[:START] or pursuit[:START])");
}

std::unique_ptr<mixedsearch::FugitiveStrategy> make_fugitive(const std::string& spec,
                                                             const Graph& g) {
    if (spec == "auto") return mixedsearch::first_edge_fugitive(g);
    if (spec.rfind("bramble:", 0) == 0) {
        mixedsearch::TightBramble b = mixedsearch::load_bramble(spec.substr(8));
        int k = mixedsearch::order(g, b);
        return mixedsearch::fugitive_from_bramble(g, b, k);
    }
    throw InputError("unknown fugitive spec '" + spec + "' (use auto or bramble:FILE)");
}

// Reads fugitive choices from stdin, prompting on stderr. Every state key is
// unique so cycle detection never cuts an interactive match short.
class InteractiveFugitive final : public mixedsearch::FugitiveStrategy {
public:
    explicit InteractiveFugitive(const Graph& g) : g_(g) {
        if (g_.edge_count() == 0) {
            throw InputError("interactive fugitive: graph has no edges");
        }
    }

    void reset() override {}

    Edge initial_edge() override {
        EdgeSet all(g_.edges().begin(), g_.edges().end());
        return ask("choose the fugitive's starting edge", all);
    }

    Edge respond(const VertexSet&, const Edge& e, const VertexSet& s_next,
                 const EdgeSet& space) override {
        std::cerr << "searchers now on {";
        bool first = true;
        for (const Vertex& v : s_next) {
            if (!first) std::cerr << ", ";
            std::cerr << v;
            first = false;
        }
        std::cerr << "}; fugitive on " << e.str() << "\n";
        return ask("choose an edge", space);
    }

    std::string state_key() const override { return "i" + std::to_string(n_++); }
    std::string describe() const override { return "interactive fugitive"; }
    std::unique_ptr<FugitiveStrategy> clone() const override {
        return std::make_unique<InteractiveFugitive>(*this);
    }

private:
    Edge ask(const std::string& prompt, const EdgeSet& options) {
        while (true) {
            std::cerr << prompt << " [";
            bool first = true;
            for (const Edge& e : options) {
                if (!first) std::cerr << " ";
                std::cerr << e.str();
                first = false;
            }
            std::cerr << "]: " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) {
                throw InputError("interactive fugitive: input ended");
            }
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
                line.pop_back();
            }
            std::size_t start = line.find_first_not_of(' ');
            if (start != std::string::npos) line = line.substr(start);
            std::size_t dash = line.find('-');
            if (dash == std::string::npos || dash == 0 || dash + 1 == line.size()) {
                std::cerr << "enter an edge as u-v\n";
                continue;
            }
            try {
                Edge e(line.substr(0, dash), line.substr(dash + 1));
                if (options.count(e)) return e;
            } catch (const InputError&) {
            }
            std::cerr << "that edge is not available\n";
        }
    }

    Graph g_;
    mutable long long n_ = 0;
};

ordered_json theorem_json(const std::string& name, const mixedsearch::TheoremReport& rep) {
    ordered_json line;
    line["graph"] = name;
    if (rep.avms) line["avms"] = *rep.avms;
    if (rep.monotone_avms) line["monotone_avms"] = *rep.monotone_avms;
    if (rep.min_width) line["min_width"] = *rep.min_width;
    if (rep.bramble_order) line["bramble_order"] = *rep.bramble_order;
    line["consistent"] = rep.values_consistent;
    line["searcher_check"] = rep.searcher_check_ok;
    line["fugitive_check"] = rep.fugitive_check_ok;
    line["ok"] = rep.ok();
    line["notes"] = rep.notes;
    return line;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed search games: decompositions, brambles and strategies"};
    app.set_version_flag("--version", "msgame 0.1.0");
    app.require_subcommand(1);
    std::function<int()> action;

    // --- validate-ltd ----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("validate-ltd", "check a decomposition file");
        auto file = std::make_shared<std::string>();
        auto graph_path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--ltd", *file, "decomposition JSON file")->required();
        cmd->add_option("--graph", *graph_path, "graph JSON file (overrides the embedded one)");
        cmd->add_option("-o,--output", *out, "also write the report to this file");
        cmd->callback([=, &action] {
            action = [=] {
                std::optional<std::string> gp;
                if (!graph_path->empty()) gp = *graph_path;
                mixedsearch::LooseTreeDecomposition d = mixedsearch::load_ltd(*file, gp);
                mixedsearch::ValidationReport rep = mixedsearch::validate(d);
                ordered_json j;
                j["ok"] = rep.ok;
                if (rep.ok) {
                    j["width"] = mixedsearch::width(d);
                    j["full"] = mixedsearch::is_full(d);
                    ordered_json marg = ordered_json::array();
                    for (const Edge& e : mixedsearch::marginal_edges(d).all()) {
                        marg.push_back(e.str());
                    }
                    j["marginal_edges"] = std::move(marg);
                } else {
                    j["condition"] = rep.condition;
                    j["witness"] = rep.witness;
                    j["message"] = rep.message();
                }
                emit(j.dump(2) + "\n", *out);
                return rep.ok ? 0 : 1;
            };
        });
    }

    // --- fullify -----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("fullify", "turn a decomposition into a full one");
        auto file = std::make_shared<std::string>();
        auto graph_path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("json");
        cmd->add_option("--ltd", *file, "decomposition JSON file")->required();
        cmd->add_option("--graph", *graph_path, "graph JSON file (overrides the embedded one)");
        cmd->add_option("-o,--output", *out, "also write the result to this file");
        cmd->add_option("--format", *format, "output format")
            ->check(CLI::IsMember({"json", "dot"}));
        cmd->callback([=, &action] {
            action = [=] {
                std::optional<std::string> gp;
                if (!graph_path->empty()) gp = *graph_path;
                mixedsearch::LooseTreeDecomposition d = mixedsearch::load_ltd(*file, gp);
                mixedsearch::LooseTreeDecomposition full = mixedsearch::fullify(d);
                emit(*format == "dot" ? mixedsearch::ltd_to_dot(full)
                                      : mixedsearch::ltd_to_json(full),
                     *out);
                return 0;
            };
        });
    }

    // --- cartesian ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "cartesian", "product of a tree with a complete graph, and its decomposition");
        auto tree_path = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        auto root = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("json");
        cmd->add_option("--tree", *tree_path, "tree graph JSON file")->required();
        cmd->add_option("-k,--clique", *k, "clique size (>= 1)")->required();
        cmd->add_option("--root", *root,
                        "root for the canonical decomposition (default: smallest vertex)");
        cmd->add_option("-o,--output", *out, "also write the result to this file");
        cmd->add_option("--format", *format, "output format")
            ->check(CLI::IsMember({"json", "dot"}));
        cmd->callback([=, &action] {
            action = [=] {
                Graph tree = mixedsearch::load_graph(*tree_path);
                Vertex r = root->empty() ? tree.vertices().front() : *root;
                mixedsearch::CartesianProduct p = mixedsearch::build_product(tree, *k);
                mixedsearch::LooseTreeDecomposition d = mixedsearch::canonical_ltd(tree, r, *k);
                if (*format == "dot") {
                    emit(mixedsearch::graph_to_dot(p.product, "product") +
                             mixedsearch::ltd_to_dot(d),
                         *out);
                } else {
                    ordered_json j;
                    j["k"] = *k;
                    j["root"] = r;
                    j["product"] = ordered_json::parse(mixedsearch::graph_to_json(p.product));
                    j["decomposition"] = ordered_json::parse(mixedsearch::ltd_to_json(d));
                    emit(j.dump(2) + "\n", *out);
                }
                return 0;
            };
        });
    }

    // --- embed ---------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "embed", "embed a full decomposition's graph into a tree-clique product");
        auto file = std::make_shared<std::string>();
        auto graph_path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--ltd", *file, "full decomposition JSON file")->required();
        cmd->add_option("--graph", *graph_path, "graph JSON file (overrides the embedded one)");
        cmd->add_option("-o,--output", *out, "also write the result to this file");
        cmd->callback([=, &action] {
            action = [=] {
                std::optional<std::string> gp;
                if (!graph_path->empty()) gp = *graph_path;
                mixedsearch::LooseTreeDecomposition d = mixedsearch::load_ltd(*file, gp);
                mixedsearch::Embedding e = mixedsearch::embed_in_cartesian_product(d);
                emit(mixedsearch::embedding_to_json(e), *out);
                return 0;
            };
        });
    }

    // --- bramble-order --------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("bramble-order", "check a bramble and compute its order");
        auto file = std::make_shared<std::string>();
        auto graph_path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--bramble", *file, "bramble JSON file")->required();
        cmd->add_option("--graph", *graph_path, "graph JSON file")->required();
        cmd->add_option("-o,--output", *out, "also write the report to this file");
        cmd->callback([=, &action] {
            action = [=] {
                Graph g = mixedsearch::load_graph(*graph_path);
                mixedsearch::TightBramble b = mixedsearch::load_bramble(*file);
                mixedsearch::BrambleCheck check = mixedsearch::is_tight_bramble(g, b.elements);
                ordered_json j;
                j["ok"] = check.ok;
                if (check.ok) {
                    j["order"] = mixedsearch::order(g, b);
                    j["elements"] = b.elements.size();
                } else {
                    j["violation"] = check.violation;
                }
                emit(j.dump(2) + "\n", *out);
                return check.ok ? 0 : 1;
            };
        });
    }

    // --- bramble-max -----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("bramble-max", "maximum-order tight bramble");
        auto graph_path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--graph", *graph_path, "graph JSON file")->required();
        cmd->add_option("-o,--output", *out, "also write the result to this file");
        cmd->callback([=, &action] {
            action = [=] {
                Graph g = mixedsearch::load_graph(*graph_path);
                mixedsearch::MaxBrambleResult r = mixedsearch::max_order_bramble(g);
                ordered_json j;
                j["order"] = r.order;
                ordered_json elements = ordered_json::array();
                for (const VertexSet& e : r.bramble.elements) {
                    ordered_json arr = ordered_json::array();
                    for (const Vertex& v : e) arr.push_back(v);
                    elements.push_back(std::move(arr));
                }
                j["elements"] = std::move(elements);
                emit(j.dump(2) + "\n", *out);
                return 0;
            };
        });
    }

    // --- solve -------------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("solve", "exact game value on a small graph");
        auto graph_path = std::make_shared<std::string>();
        auto monotone = std::make_shared<bool>(false);
        auto seed = std::make_shared<unsigned>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--graph", *graph_path, "graph JSON file")->required();
        cmd->add_flag("--monotone", *monotone, "restrict the searchers to monotone play");
        cmd->add_option("--seed", *seed, "shuffle the fixpoint sweep order (sanity knob)");
        cmd->add_option("-o,--output", *out, "also write the result to this file");
        cmd->callback([=, &action] {
            action = [=] {
                Graph g = mixedsearch::load_graph(*graph_path);
                ordered_json j;
                j["value"] = *monotone ? mixedsearch::brute_mavms(g)
                                       : mixedsearch::brute_avms(g, *seed);
                j["monotone"] = *monotone;
                emit(j.dump(2) + "\n", *out);
                return 0;
            };
        });
    }

    // --- strategy -----------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "strategy", "serialize a strategy built from a decomposition or a bramble");
        auto graph_path = std::make_shared<std::string>();
        auto ltd_path = std::make_shared<std::string>();
        auto bramble_path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--graph", *graph_path, "graph JSON file")->required();
        auto* source = cmd->add_option_group("source", "what the strategy is built from");
        source->add_option("--ltd", *ltd_path, "full decomposition JSON file (searcher side)");
        source->add_option("--bramble", *bramble_path,
                           "tight bramble JSON file (fugitive side)");
        source->require_option(1);
        cmd->add_option("-o,--output", *out, "also write the descriptor to this file");
        cmd->callback([=, &action] {
            action = [=] {
                Graph g = mixedsearch::load_graph(*graph_path);
                ordered_json j;
                if (!ltd_path->empty()) {
                    mixedsearch::LooseTreeDecomposition d = mixedsearch::load_ltd(*ltd_path);
                    require_same_graph(d.graph, g, "the decomposition");
                    std::unique_ptr<mixedsearch::SearcherStrategy> s =
                        mixedsearch::searcher_from_ltd(d);
                    j["side"] = "searcher";
                    j["kind"] = "decomposition-guided";
                    j["description"] = s->describe();
                    j["searchers"] = mixedsearch::width(d);
                    j["decomposition"] = ordered_json::parse(mixedsearch::ltd_to_json(d));
                } else {
                    mixedsearch::TightBramble b = mixedsearch::load_bramble(*bramble_path);
                    int k = mixedsearch::order(g, b);
                    std::unique_ptr<mixedsearch::FugitiveStrategy> f =
                        mixedsearch::fugitive_from_bramble(g, b, k);
                    j["side"] = "fugitive";
                    j["kind"] = "bramble-guided";
                    j["description"] = f->describe();
                    j["order"] = k;
                    j["bramble"] = ordered_json::parse(mixedsearch::bramble_to_json(b));
                }
                emit(j.dump(2) + "\n", *out);
                return 0;
            };
        });
    }

    // --- exhaust -----------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "exhaust", "drive a searcher strategy against every fugitive behaviour");
        auto graph_path = std::make_shared<std::string>();
        auto spec = std::make_shared<std::string>();
        auto cap = std::make_shared<long long>(2000000);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--graph", *graph_path, "graph JSON file")->required();
        cmd->add_option("--searcher", *spec, "ltd:FILE, tree[:START] or pursuit[:START]")
            ->required();
        cmd->add_option("--cap", *cap, "position cap for the exploration");
        cmd->add_option("-o,--output", *out, "also write the report to this file");
        cmd->callback([=, &action] {
            action = [=] {
                Graph g = mixedsearch::load_graph(*graph_path);
                std::unique_ptr<mixedsearch::SearcherStrategy> s = make_searcher(*spec, g);
                mixedsearch::FugitiveExhaustion r =
                    mixedsearch::exhaust_fugitive_choices(g, *s, *cap);
                ordered_json j;
                j["strategy"] = s->describe();
                j["all_captured"] = r.all_captured;
                j["all_monotone"] = r.all_monotone;
                j["progress_ok"] = r.progress_ok;
                j["max_cost"] = r.max_cost;
                j["max_play_length"] = r.max_play_length;
                j["positions"] = r.positions;
                if (!r.failure.empty()) j["failure"] = r.failure;
                emit(j.dump(2) + "\n", *out);
                return r.all_captured ? 0 : 1;
            };
        });
    }

    // --- match -----------------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("match", "play one searcher strategy against a fugitive");
        auto graph_path = std::make_shared<std::string>();
        auto searcher_spec = std::make_shared<std::string>();
        auto fugitive_spec = std::make_shared<std::string>("auto");
        auto limit = std::make_shared<int>(200);
        auto interactive = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--graph", *graph_path, "graph JSON file")->required();
        cmd->add_option("--searcher", *searcher_spec, "ltd:FILE, tree[:START] or pursuit[:START]")
            ->required();
        cmd->add_option("--fugitive", *fugitive_spec, "auto or bramble:FILE");
        cmd->add_option("--limit", *limit, "step limit before the match is called");
        cmd->add_flag("--interactive-fugitive", *interactive,
                      "read fugitive choices from stdin (prompts on stderr)");
        cmd->add_option("-o,--output", *out, "also write the trace to this file");
        cmd->callback([=, &action] {
            action = [=] {
                Graph g = mixedsearch::load_graph(*graph_path);
                std::unique_ptr<mixedsearch::SearcherStrategy> s =
                    make_searcher(*searcher_spec, g);
                std::unique_ptr<mixedsearch::FugitiveStrategy> f =
                    *interactive ? std::make_unique<InteractiveFugitive>(g)
                                 : make_fugitive(*fugitive_spec, g);
                mixedsearch::MatchResult r = mixedsearch::run_match(g, *s, *f, *limit);
                emit(mixedsearch::match_to_jsonl(r), *out);
                return 0;
            };
        });
    }

    // --- verify-theorem -------------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "verify-theorem", "cross-check game value, width and bramble order");
        auto graph_path = std::make_shared<std::string>();
        auto corpus = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--graph", *graph_path, "graph JSON file");
        cmd->add_option("--corpus", *corpus, "directory of graph JSON files");
        cmd->add_option("-o,--output", *out, "also write the report to this file");
        cmd->callback([=, &action] {
            action = [=] {
                if (graph_path->empty() == corpus->empty()) {
                    throw InputError("verify-theorem needs exactly one of --graph or --corpus");
                }
                std::string payload;
                bool all_ok = true;
                if (!graph_path->empty()) {
                    Graph g = mixedsearch::load_graph(*graph_path);
                    mixedsearch::TheoremReport rep = mixedsearch::verify_theorem(g);
                    all_ok = rep.ok();
                    payload = theorem_json(
                                  std::filesystem::path(*graph_path).stem().string(), rep)
                                  .dump() +
                              "\n";
                } else {
                    std::vector<std::filesystem::path> files;
                    for (const auto& entry :
                         std::filesystem::directory_iterator(*corpus)) {
                        if (entry.path().extension() == ".json") files.push_back(entry.path());
                    }
                    std::sort(files.begin(), files.end());
                    if (files.empty()) {
                        throw InputError("no .json files in " + *corpus);
                    }
                    for (const std::filesystem::path& p : files) {
                        ordered_json probe;
                        try {
                            probe = ordered_json::parse(mixedsearch::slurp_file(p.string()));
                        } catch (const nlohmann::json::exception&) {
                            continue; // not a graph file
                        }
                        if (!probe.is_object() || !probe.contains("vertices") ||
                            !probe.contains("edges")) {
                            continue; // decomposition or bramble file
                        }
                        Graph g = mixedsearch::load_graph(p.string());
                        mixedsearch::TheoremReport rep = mixedsearch::verify_theorem(g);
                        all_ok = all_ok && rep.ok();
                        payload += theorem_json(p.stem().string(), rep).dump() + "\n";
                    }
                    if (payload.empty()) {
                        throw InputError("no graph files in " + *corpus);
                    }
                }
                emit(payload, *out);
                return all_ok ? 0 : 1;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) { // help and version requests
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        return action();
    } catch (const ResourceError& ex) {
        std::cerr << "resource limit: " << ex.what() << "\n";
        return 3;
    } catch (const StrategyFault& ex) {
        std::cerr << "strategy fault: " << ex.what() << "\n";
        return 1;
    } catch (const InputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 4;
    }
}
