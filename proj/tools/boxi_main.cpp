// boxi: exact boxicity computations built on interval-order subgraph covers.
//
// Exit codes: 0 computed, 2 refuted / decided no / verification failed,
// 3 input error, 4 work budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "boxi/coline_box.hpp"
#include "boxi/cover.hpp"
#include "boxi/cover_search.hpp"
#include "boxi/errors.hpp"
#include "boxi/graph.hpp"
#include "boxi/interval_order.hpp"
#include "boxi/line_box.hpp"
#include "boxi/lkn_catalog.hpp"
#include "boxi/oracle.hpp"
#include "boxi/serialize.hpp"

namespace {

constexpr int kExitComputed = 0;
constexpr int kExitRefuted = 2;
constexpr int kExitInputError = 3;
constexpr int kExitBudget = 4;

int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void write_cover_file(const std::string& path, const boxi::Graph& host,
                      const boxi::Cover& cover) {
    std::ostringstream out;
    boxi::write_cover(out, host, cover);
    boxi::write_text_file(path, out.str());
}

struct CommonOutputs {
    std::string out;
    std::string out_target;

    void emit(const boxi::Graph& host, const boxi::Cover& cover) const {
        if (!out.empty()) write_cover_file(out, host, cover);
        if (!out_target.empty())
            boxi::write_text_file(out_target, boxi::serialize_edge_list(host));
    }
};

int run(int argc, char** argv) {
    CLI::App app{"exact boxicity toolkit based on interval-order covers"};
    app.require_subcommand(1);
    app.fallthrough();

    boxi::SearchOptions search;
    search.jobs = default_jobs();
    app.add_option("--budget", search.budget, "work budget for searches");
    app.add_option("--jobs", search.jobs, "worker threads for searches");

    // kneser-boxicity
    auto* kneser = app.add_subcommand("kneser-boxicity", "boxicity of KG(n,2) with certificates");
    int kneser_n = 0;
    bool refute_n7 = false;
    CommonOutputs kneser_out;
    kneser->add_option("n", kneser_n, "base vertex count, n >= 5")->required();
    kneser->add_flag("--refute-n7", refute_n7, "run the exhaustive lower bound for n = 7");
    kneser->add_option("--out", kneser_out.out, "write the upper cover certificate");
    kneser->add_option("--out-target", kneser_out.out_target, "write the host line graph");

    // coline-decide
    auto* decide = app.add_subcommand("coline-decide",
                                      "decide boxi(complement(L(G))) <= k for the graph in --graph");
    std::string decide_graph;
    int decide_k = 0;
    CommonOutputs decide_out;
    decide->add_option("--graph", decide_graph, "edge-list file of G")->required();
    decide->add_option("--k", decide_k, "bound to decide")->required();
    decide->add_option("--out", decide_out.out, "write the cover certificate on success");
    decide->add_option("--out-target", decide_out.out_target, "write the host line graph");

    // igc
    auto* igc = app.add_subcommand("igc", "minimum interval completion of complement(L(G))");
    std::string igc_graph, igc_out;
    igc->add_option("--graph", igc_graph, "edge-list file of G")->required();
    igc->add_option("--out", igc_out, "write the added edges and the witness certificate");

    // completions
    auto* completions = app.add_subcommand("completions",
                                           "all minimal interval completions of complement(L(G))");
    std::string completions_graph, completions_out;
    completions->add_option("--graph", completions_graph, "edge-list file of G")->required();
    completions->add_option("--out", completions_out, "write the full completion list");

    // catalog
    auto* catalog = app.add_subcommand("catalog",
                                       "maximal interval-order subgraphs of L(K_n)");
    int catalog_n = 0;
    std::string catalog_out;
    catalog->add_option("n", catalog_n, "base vertex count, n >= 5")->required();
    catalog->add_option("--out", catalog_out, "write one descriptor per line");

    // enumerate-io
    auto* enum_io = app.add_subcommand("enumerate-io",
                                       "maximal interval-order subgraphs of the graph in --graph");
    std::string enum_graph, enum_out;
    enum_io->add_option("--graph", enum_graph, "edge-list file of the host")->required();
    enum_io->add_option("--out", enum_out, "write the subgraphs as a cover-format file");

    // line-upper
    auto* line_upper = app.add_subcommand("line-upper",
                                          "cover of E(complement(L(G))) from base permutations");
    std::string lu_graph;
    CommonOutputs lu_out;
    int lu_samples = 0;
    std::uint64_t lu_seed = 0;
    bool lu_seed_set = false;
    line_upper->add_option("--graph", lu_graph, "edge-list file of G")->required();
    line_upper->add_option("--sample", lu_samples, "permutations sampled per round (default 64)")
        ->expected(0, 1)->default_val(0);
    line_upper->add_option("--seed", lu_seed, "seed for --sample mode")
        ->each([&](const std::string&) { lu_seed_set = true; });
    line_upper->add_option("--out", lu_out.out, "write the cover certificate");
    line_upper->add_option("--out-target", lu_out.out_target, "write the host complement(L(G))");

    // refute-perms
    auto* refute = app.add_subcommand("refute-perms",
                                      "edge of complement(L(K_n)) uncovered by the given permutations");
    int refute_n = 0;
    std::string refute_perms_file;
    refute->add_option("n", refute_n, "base vertex count, n >= 5")->required();
    refute->add_option("--perms", refute_perms_file, "permutation file, one rank list per line")
        ->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact boxicity by brute-force cover search");
    std::string oracle_graph;
    std::optional<int> oracle_cap;
    int oracle_cap_value = 0;
    CommonOutputs oracle_out;
    oracle->add_option("--graph", oracle_graph, "edge-list file of the graph")->required();
    oracle->add_option("--cap", oracle_cap_value, "stop the deepening at this bound")
        ->each([&](const std::string&) { oracle_cap = oracle_cap_value; });
    oracle->add_option("--out", oracle_out.out, "write the optimal cover certificate");
    oracle->add_option("--out-target", oracle_out.out_target, "write the complement host");

    // verify
    auto* verify = app.add_subcommand("verify", "independently check a cover certificate");
    std::string verify_target, verify_cover_file;
    verify->add_option("--target", verify_target, "edge-list file of the host/target")->required();
    verify->add_option("--cover", verify_cover_file, "cover certificate file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitComputed : kExitInputError;
    }

    if (*kneser) {
        boxi::KneserOptions opts;
        opts.search = search;
        opts.refute_n7 = refute_n7;
        auto result = boxi::kneser_boxicity(kneser_n, opts);
        std::cout << "boxicity " << result.value << '\n';
        std::cout << "upper cover: " << result.upper.members.size() << " members, union "
                  << result.upper.target.count() << " edges\n";
        if (result.refutation)
            std::cout << "lower bound: no " << result.refutation->refuted_k
                      << "-cover exists (exhaustive, " << result.refutation->nodes << " nodes)\n";
        else
            std::cout << "lower bound: exact value known; exhaustive recheck limited to n <= 7\n";
        boxi::LknHost host = boxi::LknHost::make(kneser_n);
        kneser_out.emit(host.line, result.upper);
        return kExitComputed;
    }

    if (*decide) {
        boxi::Graph g = boxi::read_graph_file(decide_graph);
        boxi::Graph lg = boxi::line_graph(g);
        auto cover = boxi::decide_boxicity_coline(g, decide_k, search);
        if (!cover) {
            auto family = boxi::family_b(g);
            std::cout << "no: E(L(G)) (" << lg.edge_count() << " edges) has no cover by "
                      << decide_k << " of the " << family.size()
                      << " maximal interval-order subgraphs\n";
            return kExitRefuted;
        }
        std::cout << "yes: cover by " << cover->members.size() << " interval-order subgraphs\n";
        decide_out.emit(lg, *cover);
        return kExitComputed;
    }

    if (*igc) {
        boxi::Graph g = boxi::read_graph_file(igc_graph);
        auto result = boxi::igc_minimum_completion(g);
        std::cout << "minimum interval completion: " << result.total_edges << " edges ("
                  << result.added_edges.size() << " added)\n";
        if (!igc_out.empty()) {
            std::ostringstream out;
            out << "completion " << result.total_edges << " added " << result.added_edges.size()
                << '\n';
            for (auto [x, y] : result.added_edges) out << x << ' ' << y << '\n';
            out << "ordering";
            for (int v : result.witness.ordering) out << ' ' << v;
            out << '\n';
            for (const auto& np : result.witness.out_neighborhoods) {
                out << "nplus";
                for (int v : np) out << ' ' << v;
                out << '\n';
            }
            boxi::write_text_file(igc_out, out.str());
        }
        return kExitComputed;
    }

    if (*completions) {
        boxi::Graph g = boxi::read_graph_file(completions_graph);
        auto list = boxi::minimal_interval_completions(g);
        std::cout << list.size() << " minimal interval completions; edge totals "
                  << (list.empty() ? 0 : list.front().total_edges) << ".."
                  << (list.empty() ? 0 : list.back().total_edges) << '\n';
        if (!completions_out.empty()) {
            std::ostringstream out;
            for (const auto& c : list) {
                out << "completion " << c.total_edges << " added " << c.added_edges.size() << '\n';
                for (auto [x, y] : c.added_edges) out << x << ' ' << y << '\n';
            }
            boxi::write_text_file(completions_out, out.str());
        }
        return kExitComputed;
    }

    if (*catalog) {
        auto entries = boxi::enumerate_catalog(catalog_n);
        int counts[4] = {0, 0, 0, 0};
        for (const auto& e : entries) counts[static_cast<int>(e.descriptor.kind)]++;
        std::cout << entries.size() << " maximal interval-order subgraphs of L(K_" << catalog_n
                  << "): A " << counts[0] << ", B " << counts[1] << ", CF " << counts[2]
                  << ", CF' " << counts[3] << '\n';
        if (!catalog_out.empty()) {
            std::ostringstream out;
            for (const auto& e : entries)
                out << boxi::to_string(e.descriptor) << '\n';
            boxi::write_text_file(catalog_out, out.str());
        }
        return kExitComputed;
    }

    if (*enum_io) {
        boxi::Graph host = boxi::read_graph_file(enum_graph);
        boxi::EnumerateOptions opts;
        opts.budget = search.budget;
        opts.jobs = search.jobs;
        auto subs = boxi::enumerate_maximal_io(host, opts);
        std::cout << subs.size() << " maximal interval-order subgraphs\n";
        if (!enum_out.empty()) {
            boxi::Cover as_cover;
            as_cover.target = boxi::EdgeSet(host);
            as_cover.target.bits.fill();
            boxi::Bitset covered(host.edge_count());
            for (auto& s : subs) {
                covered |= s.edges.bits;
                as_cover.members.push_back(
                    boxi::CoverMember{std::move(s.edges), std::move(s.cert), {}, {}});
            }
            as_cover.complete = covered == as_cover.target.bits;
            write_cover_file(enum_out, host, as_cover);
        }
        return kExitComputed;
    }

    if (*line_upper) {
        boxi::Graph g = boxi::read_graph_file(lu_graph);
        boxi::LineUpperOptions opts;
        if (line_upper->count("--sample")) {
            if (!lu_seed_set)
                throw boxi::InputError("line-upper: --sample requires an explicit --seed");
            opts.sampling = {lu_samples > 0 ? lu_samples : 64, lu_seed};
        }
        boxi::Cover cover = boxi::line_upper_cover(g, opts);
        boxi::Graph coline = boxi::complement(boxi::line_graph(g));
        std::cout << "cover of " << cover.target.count() << " edges by " << cover.members.size()
                  << " permutation subgraphs\n";
        lu_out.emit(coline, cover);
        return kExitComputed;
    }

    if (*refute) {
        std::ifstream in(refute_perms_file);
        if (!in) throw boxi::InputError("cannot open file \"" + refute_perms_file + "\"");
        auto perms = boxi::read_permutations(in, refute_n);
        auto witness = boxi::refute_permutation_cover(refute_n, perms);
        std::cout << "uncovered edge: {" << witness.x.u << "," << witness.x.v << "} x {"
                  << witness.y.u << "," << witness.y.v << "}";
        if (witness.triple)
            std::cout << " (monotone triple " << (*witness.triple)[0] << " "
                      << (*witness.triple)[1] << " " << (*witness.triple)[2] << ")";
        else
            std::cout << " (by exhaustive scan)";
        std::cout << '\n';
        return kExitComputed;
    }

    if (*oracle) {
        boxi::Graph g = boxi::read_graph_file(oracle_graph);
        auto result = boxi::brute_boxicity(g, oracle_cap, search);
        if (!result) {
            std::cout << "boxicity > " << *oracle_cap << " (cap reached)\n";
            return kExitRefuted;
        }
        std::cout << "boxicity " << result->value << '\n';
        if (result->value > 0) oracle_out.emit(boxi::complement(g), result->cover);
        return kExitComputed;
    }

    if (*verify) {
        boxi::Graph host = boxi::read_graph_file(verify_target);
        std::ifstream in(verify_cover_file);
        if (!in) throw boxi::InputError("cannot open file \"" + verify_cover_file + "\"");
        boxi::Cover cover = boxi::read_cover(in, host);
        bool ok = boxi::verify_cover(host, cover.target, cover);
        std::cout << (ok ? "cover verified: complete\n" : "cover INVALID or incomplete\n");
        return ok ? kExitComputed : kExitRefuted;
    }

    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const boxi::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const boxi::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}
