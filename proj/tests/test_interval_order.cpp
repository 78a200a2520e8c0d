#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "boxi/errors.hpp"
#include "boxi/graph.hpp"
#include "boxi/interval_order.hpp"
#include "helpers.hpp"

using namespace boxi;
using namespace boxi_test;

namespace {

EdgeSet all_edges(const Graph& g) {
    EdgeSet e(g);
    e.bits.fill();
    return e;
}

Graph two_k2() { return matching_graph(2); }

}  // namespace

TEST_CASE("verify_chain on the triangle") {
    Graph k3 = complete_graph(3);
    CHECK(verify_chain(k3, all_edges(k3), {0, 1, 2}));
    CHECK(verify_chain(k3, all_edges(k3), {2, 0, 1}));
}

TEST_CASE("verify_chain on C4 with the interleaved ordering") {
    Graph c4 = cycle_graph(4);
    CHECK(verify_chain(c4, all_edges(c4), {0, 2, 1, 3}));
    CHECK_FALSE(verify_chain(c4, all_edges(c4), {0, 1, 2, 3}));
}

TEST_CASE("verify_chain rejects 2K2 under every ordering") {
    Graph g = two_k2();
    std::vector<int> perm{0, 1, 2, 3};
    do {
        CHECK_FALSE(verify_chain(g, all_edges(g), perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("verify_chain input errors") {
    Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(verify_chain(k3, all_edges(k3), {0, 1}), InputError);     // missing endpoint
    CHECK_THROWS_AS(verify_chain(k3, all_edges(k3), {0, 0, 1}), InputError);  // repeat
    CHECK_THROWS_AS(verify_chain(k3, all_edges(k3), {0, 1, 5}), InputError);  // out of range
}

TEST_CASE("build_gsigma on 2K2 takes only the first edge") {
    Graph g = two_k2();
    auto r = build_gsigma(g, {0, 1, 2, 3});
    CHECK(r.edges.count() == 1);
    CHECK(r.edges.bits.test(g.edge_id(0, 1)));
    CHECK(verify_certificate(g, r.edges, r.cert));
}

TEST_CASE("build_gsigma on K3 takes everything") {
    Graph k3 = complete_graph(3);
    auto r = build_gsigma(k3, {0, 1, 2});
    CHECK(r.edges.count() == 3);
    CHECK(verify_certificate(k3, r.edges, r.cert));
}

TEST_CASE("build_gsigma accepts prefixes and covers endpoints in the certificate") {
    Graph g = two_k2();
    auto r = build_gsigma(g, {0});
    CHECK(r.edges.count() == 1);
    CHECK(verify_chain(g, r.edges, r.cert.ordering));
}

TEST_CASE("build_gsigma matches the definitional loop on the corpus") {
    std::mt19937_64 rng(7);
    for (const Graph& g : property_corpus()) {
        if (g.vertex_count() == 0) continue;
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        for (int rep = 0; rep < 4; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(build_gsigma(g, perm).edges == gsigma_edges(g, perm));
        }
    }
}

TEST_CASE("candidate_next examples") {
    Graph star = star_graph(3);  // center 0, leaves 1..3
    CHECK(candidate_next(star, {1}) == std::vector<int>{2, 3});
    Graph g = two_k2();
    CHECK(candidate_next(g, {0, 1}) == std::vector<int>{2, 3});
    Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(candidate_next(k3, {}), InputError);
}

// Appending a candidate must leave the running intersection intact, so a
// member of the intersection itself never qualifies: on K_3 after (v0) the
// intersection is {v1, v2} and no remaining vertex contains it.
TEST_CASE("candidate_next preserves the running intersection") {
    Graph k3 = complete_graph(3);
    CHECK(candidate_next(k3, {0}).empty());
    for (const Graph& g : property_corpus()) {
        int n = g.vertex_count();
        if (n < 2 || n > 6) continue;
        std::mt19937_64 rng(n * 1000003);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int len = 1; len < n; ++len) {
            std::vector<int> prefix(perm.begin(), perm.begin() + len);
            Bitset running = g.full_vertex_set();
            for (int v : prefix) running &= g.neighbors(v);
            for (int cand : candidate_next(g, prefix)) {
                Bitset after = running & g.neighbors(cand);
                CHECK(after == running);
            }
        }
    }
}

TEST_CASE("is_interval_order examples") {
    Graph c4 = cycle_graph(4);
    auto cert = is_interval_order(c4);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(c4, all_edges(c4), *cert));

    CHECK_FALSE(is_interval_order(two_k2()).has_value());

    Graph p4 = path_graph(4);
    auto pcert = is_interval_order(p4);
    REQUIRE(pcert.has_value());
    CHECK(verify_certificate(p4, all_edges(p4), *pcert));
}

TEST_CASE("is_interval_order agrees with brute force on all graphs up to 6 vertices") {
    for (int n = 0; n <= 6; ++n) {
        int bits = n * (n - 1) / 2;
        std::uint64_t step = n <= 5 ? 1 : 11;  // all graphs below 6, a lattice at 6
        for (std::uint64_t mask = 0; mask < (1ull << bits); mask += step) {
            Graph g = graph_from_mask(n, mask);
            auto cert = is_interval_order(g);
            CHECK(cert.has_value() == is_interval_order_bruteforce(g));
            if (cert) CHECK(verify_certificate(g, all_edges(g), *cert));
        }
    }
}

TEST_CASE("enumerate_maximal_io small examples") {
    Graph p4 = path_graph(4);
    auto subs = enumerate_maximal_io(p4);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].edges == all_edges(p4));

    Graph g = two_k2();
    auto two = enumerate_maximal_io(g);
    REQUIRE(two.size() == 2);
    CHECK(two[0].edges.count() == 1);
    CHECK(two[1].edges.count() == 1);

    Graph edgeless(3, {});
    auto none = enumerate_maximal_io(edgeless);
    REQUIRE(none.size() == 1);
    CHECK(none[0].edges.empty());
}

TEST_CASE("enumerate_maximal_io equals the all-orderings brute force on the corpus") {
    for (const Graph& g : property_corpus()) {
        if (g.vertex_count() > 7) continue;
        auto pruned = edge_families(enumerate_maximal_io(g));
        auto brute = enumerate_maximal_io_bruteforce(g);
        REQUIRE(pruned.size() == brute.size());
        for (std::size_t i = 0; i < pruned.size(); ++i) CHECK(pruned[i] == brute[i]);
    }
}

TEST_CASE("enumerate_maximal_io certificates verify and sizes are chain-monotone") {
    for (const Graph& g : property_corpus()) {
        if (g.vertex_count() > 7) continue;
        for (const auto& sub : enumerate_maximal_io(g)) {
            CHECK(verify_certificate(g, sub.edges, sub.cert));
            int prev = g.vertex_count() + 1;
            int nonempty = 0;
            for (const auto& np : sub.cert.out_neighborhoods) {
                CHECK(static_cast<int>(np.size()) <= prev);
                prev = static_cast<int>(np.size());
                if (!np.empty()) ++nonempty;
            }
            CHECK(nonempty <= g.max_degree());
        }
    }
}

TEST_CASE("members of enumerate_maximal_io are maximal: any added edge breaks the property") {
    for (const Graph& g : property_corpus()) {
        if (g.vertex_count() > 6 || g.vertex_count() < 2) continue;
        auto subs = enumerate_maximal_io(g);
        for (const auto& sub : subs) {
            for (int id = 0; id < g.edge_count(); ++id) {
                if (sub.edges.bits.test(id)) continue;
                EdgeSet bigger = sub.edges;
                bigger.bits.set(id);
                CHECK_FALSE(is_interval_order(subgraph_of(g, bigger)).has_value());
            }
        }
    }
}

TEST_CASE("is_interval_order iff the full edge set appears among the maximal subgraphs") {
    for (int n = 0; n <= 6; ++n) {
        int bits = n * (n - 1) / 2;
        std::uint64_t step = n <= 5 ? 1 : 29;
        for (std::uint64_t mask = 0; mask < (1ull << bits); mask += step) {
            Graph g = graph_from_mask(n, mask);
            bool recognized = is_interval_order(g).has_value();
            bool listed = false;
            for (const auto& sub : enumerate_maximal_io(g))
                if (sub.edges == all_edges(g)) listed = true;
            CHECK(recognized == listed);
        }
    }
}

// The swap rule: with u, v unplaced after a prefix and N(u) containing
// N(v) cap P, moving u in front of v never shrinks the subgraph size, and on
// a witness ordering of a maximal subgraph it reproduces the same edge set.
TEST_CASE("swap safety: size never drops, maximal witnesses are preserved") {
    std::mt19937_64 rng(99);
    for (const Graph& g : property_corpus()) {
        int n = g.vertex_count();
        if (n < 4 || n > 7) continue;
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        for (int rep = 0; rep < 8; ++rep) {
            std::shuffle(sigma.begin(), sigma.end(), rng);
            int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2));
            Bitset running = g.full_vertex_set();
            for (int j = 0; j < i; ++j) running &= g.neighbors(sigma[j]);
            for (int pv = i; pv < n; ++pv)
                for (int pu = pv + 1; pu < n; ++pu) {
                    int u = sigma[pu], v = sigma[pv];
                    Bitset nv_cap_p = g.neighbors(v) & running;
                    if (!nv_cap_p.is_subset_of(g.neighbors(u))) continue;
                    std::vector<int> swapped = sigma;
                    std::swap(swapped[pu], swapped[pv]);
                    CHECK(gsigma_edges(g, swapped).count() >= gsigma_edges(g, sigma).count());
                }
        }
        // maximal witnesses: swapping inside the witness keeps the edge set
        for (const auto& sub : enumerate_maximal_io(g)) {
            const auto& ord = sub.cert.ordering;
            if (ord.size() < 3) continue;
            Bitset running = g.full_vertex_set();
            running &= g.neighbors(ord[0]);
            for (std::size_t pv = 1; pv < ord.size(); ++pv)
                for (std::size_t pu = pv + 1; pu < ord.size(); ++pu) {
                    Bitset nv_cap_p = g.neighbors(ord[pv]) & running;
                    if (!nv_cap_p.is_subset_of(g.neighbors(ord[pu]))) continue;
                    std::vector<int> swapped = ord;
                    std::swap(swapped[pu], swapped[pv]);
                    CHECK(gsigma_edges(g, swapped) == sub.edges);
                }
        }
    }
}

TEST_CASE("budget exhaustion raises a resource error") {
    Graph g = line_graph(complete_graph(5));
    EnumerateOptions opts;
    opts.budget = 10;
    CHECK_THROWS_AS(enumerate_maximal_io(g, opts), BudgetExceeded);
}

TEST_CASE("parallel enumeration matches single-threaded") {
    Graph g = line_graph(complete_graph(5));
    auto seq = edge_families(enumerate_maximal_io(g));
    EnumerateOptions opts;
    opts.jobs = 4;
    auto par = edge_families(enumerate_maximal_io(g, opts));
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(seq[i] == par[i]);
}

// The heavyweight oracle: every one of the 10! orderings of L(K_5), reduced
// to maximal edge sets, must equal the pruned enumeration.
TEST_CASE("L(K_5): pruned enumeration equals the full 10! sweep") {
    Graph host = line_graph(complete_graph(5));
    const int n = host.vertex_count();
    REQUIRE(host.edge_count() == 30);
    std::vector<Bitset> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = host.neighbors(v);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::uint64_t> distinct;
    do {
        std::uint64_t acc = 0;
        Bitset running = host.full_vertex_set();
        for (int v : perm) {
            running &= rows[v];
            running.for_each([&](int w) { acc |= 1ull << host.edge_id(v, w); });
            if (running.none()) break;
        }
        distinct.insert(acc);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::uint64_t> maximal;
    for (std::uint64_t cand : distinct) {
        bool dominated = false;
        for (std::uint64_t other : distinct)
            if (cand != other && (cand & other) == cand) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(cand);
    }
    std::sort(maximal.begin(), maximal.end());

    std::vector<std::uint64_t> pruned;
    for (const auto& sub : enumerate_maximal_io(host)) {
        std::uint64_t word = 0;
        sub.edges.bits.for_each([&](int id) { word |= 1ull << id; });
        pruned.push_back(word);
    }
    std::sort(pruned.begin(), pruned.end());
    REQUIRE(pruned.size() == maximal.size());
    CHECK(pruned == maximal);
}

// After the prefix (0, 2) on C_4 the intersection is {1, 3} and both of its
// members already have every neighbor placed, so the two continuations
// collapse to the same edge set: the whole cycle, exactly once.
TEST_CASE("two-element intersection with both continuations empty") {
    Graph c4 = cycle_graph(4);
    auto one = build_gsigma(c4, {0, 2, 1, 3});
    auto other = build_gsigma(c4, {0, 2, 3, 1});
    CHECK(one.edges == other.edges);
    CHECK(one.edges == all_edges(c4));
    auto subs = enumerate_maximal_io(c4);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].edges == all_edges(c4));
}
