#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "boxi/coline_box.hpp"
#include "boxi/errors.hpp"
#include "boxi/interval_order.hpp"
#include "boxi/lkn_catalog.hpp"
#include "helpers.hpp"

using namespace boxi;
using namespace boxi_test;

namespace {

std::vector<Bitset> family_bits(const std::vector<FamilyMember>& fam) {
    std::vector<Bitset> out;
    for (const auto& m : fam) out.push_back(m.edges.bits);
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) { return lex_less(a, b); });
    return out;
}

std::vector<Bitset> generic_bits(const Graph& host) {
    std::vector<Bitset> out;
    for (const auto& s : enumerate_maximal_io(host)) out.push_back(s.edges.bits);
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) { return lex_less(a, b); });
    return out;
}

}  // namespace

TEST_CASE("family_b on K_5 is exactly the catalog") {
    Graph k5 = complete_graph(5);
    auto fam = family_b(k5);
    auto cat = enumerate_catalog(5);
    REQUIRE(fam.size() == cat.size());
    std::vector<Bitset> a = family_bits(fam), b;
    for (const auto& e : cat) b.push_back(e.edges.bits);
    std::sort(b.begin(), b.end(), [](const Bitset& x, const Bitset& y) { return lex_less(x, y); });
    CHECK(a == b);
    for (const auto& m : fam) REQUIRE(m.origin.has_value());
}

TEST_CASE("family_b on K_5 minus an edge: verified, maximal, complete") {
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    REQUIRE(g.edge_count() == 9);
    Graph lg = line_graph(g);
    auto fam = family_b(g);
    for (const auto& m : fam) {
        CHECK(verify_certificate(lg, m.edges, m.cert));
        CHECK_FALSE(m.origin.has_value());
    }
    // inclusion-maximality within the family
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j)
            if (i != j) CHECK_FALSE(fam[i].edges.bits.is_subset_of(fam[j].edges.bits));
    CHECK(family_bits(fam) == generic_bits(lg));
}

TEST_CASE("family_b on C_5 equals generic enumeration (L(C_5) = C_5)") {
    Graph c5 = cycle_graph(5);
    Graph lc5 = line_graph(c5);
    REQUIRE(lc5.vertex_count() == 5);
    REQUIRE(lc5.edge_count() == 5);
    CHECK(family_bits(family_b(c5)) == generic_bits(lc5));
}

TEST_CASE("family_b equals generic enumeration across the small corpus") {
    for (const Graph& g : property_corpus()) {
        int n = g.vertex_count();
        if (n < 5 || n > 6) continue;
        CHECK(family_bits(family_b(g)) == generic_bits(line_graph(g)));
    }
}

TEST_CASE("family_b falls back to generic enumeration below five vertices") {
    Graph k4 = complete_graph(4);
    CHECK(family_bits(family_b(k4)) == generic_bits(line_graph(k4)));
}

TEST_CASE("family_b size stays under n^5 on the corpus") {
    for (const Graph& g : property_corpus()) {
        int n = g.vertex_count();
        if (n < 5) continue;
        long long bound = 1;
        for (int i = 0; i < 5; ++i) bound *= n;
        CHECK(static_cast<long long>(family_b(g).size()) <= bound);
    }
}

TEST_CASE("minimal completions of the Petersen graph") {
    Graph k5 = complete_graph(5);
    auto completions = minimal_interval_completions(k5);
    REQUIRE_FALSE(completions.empty());
    CHECK(completions.front().total_edges == 29);  // 45 - 16
    // every completion contains all Petersen edges: the added edges plus the
    // complement of L(K_5) must account for total_edges
    Graph lk5 = line_graph(k5);
    Graph pete = complement(lk5);
    for (const auto& c : completions) {
        CHECK(c.total_edges == pete.edge_count() + static_cast<long long>(c.added_edges.size()));
        for (auto [x, y] : c.added_edges) CHECK(lk5.adjacent(x, y));
    }
}

TEST_CASE("igc minima: 29 for K_5 and 85 for K_6, matching the completion scan") {
    Graph k5 = complete_graph(5);
    auto igc5 = igc_minimum_completion(k5);
    CHECK(igc5.total_edges == 29);
    auto scan5 = minimal_interval_completions(k5);
    long long best5 = scan5.front().total_edges;
    for (const auto& c : scan5) best5 = std::min(best5, c.total_edges);
    CHECK(igc5.total_edges == best5);

    Graph k6 = complete_graph(6);
    auto igc6 = igc_minimum_completion(k6);
    CHECK(igc6.total_edges == 85);  // 105 - 20
    auto scan6 = minimal_interval_completions(k6);
    long long best6 = scan6.front().total_edges;
    for (const auto& c : scan6) best6 = std::min(best6, c.total_edges);
    CHECK(igc6.total_edges == best6);
}

TEST_CASE("igc on a two-edge path adds nothing") {
    Graph p3 = path_graph(3);
    auto r = igc_minimum_completion(p3);
    CHECK(r.total_edges == 0);
    CHECK(r.added_edges.empty());
}

TEST_CASE("igc witness certifies the completion's complement") {
    Graph k5 = complete_graph(5);
    auto r = igc_minimum_completion(k5);
    Graph lk5 = line_graph(k5);
    // the completion's complement is E(L(K_5)) minus the added edges
    EdgeSet member(lk5);
    member.bits.fill();
    for (auto [x, y] : r.added_edges) member.bits.reset(lk5.edge_id(x, y));
    CHECK(verify_certificate(lk5, member, r.witness));
}

TEST_CASE("decide_boxicity_coline refutes 2 for K_5 and 3 for K_6") {
    CHECK_FALSE(decide_boxicity_coline(complete_graph(5), 2).has_value());
    CHECK_FALSE(decide_boxicity_coline(complete_graph(6), 3).has_value());
}

TEST_CASE("decide_boxicity_coline accepts n-2 for complete graphs via the direct cover") {
    for (int n = 5; n <= 7; ++n) {
        auto cover = decide_boxicity_coline(complete_graph(n), n - 2);
        REQUIRE(cover.has_value());
        CHECK(static_cast<int>(cover->members.size()) == n - 2);
        Graph lg = line_graph(complete_graph(n));
        CHECK(verify_cover(lg, cover->target, *cover));
        CHECK(cover->target.count() == lg.edge_count());
    }
}

TEST_CASE("decide handles trivial bounds") {
    Graph single_edge(2, {{0, 1}});  // L(g) has one vertex, no edges
    auto cover = decide_boxicity_coline(single_edge, 0);
    REQUIRE(cover.has_value());
    CHECK(cover->members.empty());
    Graph p3 = path_graph(3);  // L(g) = K_2: one edge
    CHECK_FALSE(decide_boxicity_coline(p3, 0).has_value());
    auto one = decide_boxicity_coline(p3, 1);
    REQUIRE(one.has_value());
    CHECK(verify_cover(line_graph(p3), one->target, *one));
}

TEST_CASE("decide is monotone in k on the corpus") {
    for (const Graph& g : property_corpus()) {
        int n = g.vertex_count();
        if (n < 4 || n > 5 || g.edge_count() < 3) continue;
        int first_yes = -1;
        for (int k = 0; k <= 4; ++k) {
            bool yes = decide_boxicity_coline(g, k).has_value();
            if (yes && first_yes < 0) first_yes = k;
            if (first_yes >= 0) CHECK(yes);
        }
        CHECK(first_yes >= 0);
    }
}

TEST_CASE("kneser_cover shapes: 3 members/30 edges at n=5, 4/60 at n=6, 7/252 at n=9") {
    struct Row { int n, members, union_edges; };
    for (auto [n, members, union_edges] : {Row{5, 3, 30}, Row{6, 4, 60}, Row{9, 7, 252}}) {
        Cover cover = kneser_cover(n);
        CHECK(static_cast<int>(cover.members.size()) == members);
        CHECK(cover.target.count() == union_edges);
        Graph host = line_graph(complete_graph(n));
        CHECK(verify_cover(host, cover.target, cover));
        for (const auto& m : cover.members) {
            REQUIRE(m.descriptor.has_value());
            CHECK(m.descriptor->kind == CatalogKind::TypeA);
        }
    }
    CHECK_THROWS_AS(kneser_cover(4), InputError);
}

TEST_CASE("kneser_boxicity values and certificates") {
    auto r5 = kneser_boxicity(5);
    CHECK(r5.value == 3);
    REQUIRE(r5.refutation.has_value());
    CHECK(r5.refutation->refuted_k == 2);
    CHECK(verify_cover(line_graph(complete_graph(5)), r5.upper.target, r5.upper));

    auto r6 = kneser_boxicity(6);
    CHECK(r6.value == 4);
    REQUIRE(r6.refutation.has_value());
    CHECK(r6.refutation->refuted_k == 3);

    auto r8 = kneser_boxicity(8);
    CHECK(r8.value == 6);
    CHECK_FALSE(r8.refutation.has_value());
    CHECK(verify_cover(line_graph(complete_graph(8)), r8.upper.target, r8.upper));

    CHECK_THROWS_AS(kneser_boxicity(4), InputError);
}

// Two double stars intersect exactly when their defining triples do.
TEST_CASE("double-star cores intersect iff their triples intersect (n=5,6,7)") {
    for (int n = 5; n <= 7; ++n) {
        LknHost host = LknHost::make(n);
        std::vector<std::array<int, 3>> triples;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (a != b && a != c) triples.push_back({a, b, c});
        std::vector<Bitset> cores;
        for (auto [a, b, c] : triples) {
            EdgeSet core = primitive_edge_set(host, PrimDelta{a, b});
            core.bits |= primitive_edge_set(host, PrimDelta{a, c}).bits;
            cores.push_back(core.bits);
        }
        for (std::size_t i = 0; i < triples.size(); ++i)
            for (std::size_t j = 0; j < triples.size(); ++j) {
                std::set<int> s{triples[i][0], triples[i][1], triples[i][2]};
                bool share = s.count(triples[j][0]) || s.count(triples[j][1]) ||
                             s.count(triples[j][2]);
                CHECK(cores[i].intersects(cores[j]) == share);
            }
    }
}

// With 60 edges and 20-edge members, a 3-cover of L(K_6) would need three
// pairwise-disjoint members whose core triples use 9 distinct vertices;
// K_6 has only 6, so no disjoint triple of members may exist at all.
TEST_CASE("no pairwise-disjoint member triple exists at n=6") {
    auto cat = enumerate_catalog(6);
    int disjoint_pairs = 0;
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j) {
            if (cat[i].edges.bits.intersects(cat[j].edges.bits)) continue;
            ++disjoint_pairs;
            auto ti = core_triple(cat[i].descriptor);
            auto tj = core_triple(cat[j].descriptor);
            std::set<int> all(ti.begin(), ti.end());
            all.insert(tj.begin(), tj.end());
            CHECK(all.size() == 6);
            for (std::size_t k = 0; k < cat.size(); ++k) {
                if (k == i || k == j) continue;
                bool third_disjoint = !cat[k].edges.bits.intersects(cat[i].edges.bits) &&
                                      !cat[k].edges.bits.intersects(cat[j].edges.bits);
                CHECK_FALSE(third_disjoint);
            }
        }
    CHECK(disjoint_pairs > 0);
}

TEST_CASE("the optional n=7 exhaustive lower bound runs via orbit representatives") {
    KneserOptions opts;
    opts.refute_n7 = true;
    auto r = kneser_boxicity(7, opts);
    CHECK(r.value == 5);
    REQUIRE(r.refutation.has_value());
    CHECK(r.refutation->refuted_k == 4);
    CHECK(verify_cover(line_graph(complete_graph(7)), r.upper.target, r.upper));
}

TEST_CASE("decide accepts any k at or above n-2 on complete graphs without searching") {
    for (int k : {3, 4, 10}) {
        auto cover = decide_boxicity_coline(complete_graph(5), k);
        REQUIRE(cover.has_value());
        CHECK(cover->members.size() == 3);
        CHECK(verify_cover(line_graph(complete_graph(5)), cover->target, *cover));
    }
}
