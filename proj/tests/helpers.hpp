#pragma once

// Shared test utilities: brute-force oracles that stay independent of the
// pruned implementation paths, and the small-graph corpus the property
// suites run on.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "boxi/graph.hpp"
#include "boxi/interval_order.hpp"

namespace boxi_test {

using boxi::Bitset;
using boxi::EdgeSet;
using boxi::Graph;

// E^sigma computed directly from the definition; no shortcuts shared with
// the library (which intersects neighborhoods via Bitset too, but this loop
// is written against the definition: V_i = V_{i-1} cap N(v_i)).
inline EdgeSet gsigma_edges(const Graph& g, const std::vector<int>& ordering) {
    EdgeSet acc(g);
    std::vector<bool> in_running(g.vertex_count(), true);
    int running_size = g.vertex_count();
    for (int v : ordering) {
        std::vector<bool> next(g.vertex_count(), false);
        int next_size = 0;
        for (int w = 0; w < g.vertex_count(); ++w)
            if (in_running[w] && g.adjacent(v, w)) {
                next[w] = true;
                ++next_size;
            }
        in_running = next;
        running_size = next_size;
        for (int w = 0; w < g.vertex_count(); ++w)
            if (in_running[w]) acc.bits.set(g.edge_id(v, w));
        if (running_size == 0) break;
    }
    return acc;
}

// Every distinct E^sigma over all |V|! orderings, reduced to the
// inclusion-maximal ones. Exponential: keep hosts at <= 8 vertices (the
// dedicated L(K_5) check uses a tuned variant).
inline std::vector<Bitset> enumerate_maximal_io_bruteforce(const Graph& g) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Bitset> distinct;
    do {
        EdgeSet es = gsigma_edges(g, perm);
        std::vector<std::uint64_t> key;
        es.bits.for_each([&](int id) { key.push_back(static_cast<std::uint64_t>(id)); });
        if (seen.insert(key).second) distinct.push_back(es.bits);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Bitset> maximal;
    for (const auto& cand : distinct) {
        bool dominated = false;
        for (const auto& other : distinct)
            if (!(cand == other) && cand.is_subset_of(other)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(cand);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const Bitset& a, const Bitset& b) { return lex_less(a, b); });
    return maximal;
}

inline bool is_interval_order_bruteforce(const Graph& g) {
    if (g.edge_count() == 0) return true;
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (gsigma_edges(g, perm).count() == g.edge_count()) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::vector<Bitset> edge_families(const std::vector<boxi::IoSubgraph>& subs) {
    std::vector<Bitset> out;
    for (const auto& s : subs) out.push_back(s.edges.bits);
    std::sort(out.begin(), out.end(),
              [](const Bitset& a, const Bitset& b) { return lex_less(a, b); });
    return out;
}

// Graph from an edge-presence bitmask over the C(n,2) vertex pairs in
// lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) es.emplace_back(u, v);
    return Graph(n, es);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

inline Graph matching_graph(int pairs) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < pairs; ++i) es.emplace_back(2 * i, 2 * i + 1);
    return Graph(2 * pairs, es);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph(a + b, es);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return Graph(n, es);
}

// The fixed corpus the property suites run on: every graph on at most 5
// vertices, the structured standards, and seeded random 6- and 7-vertex
// graphs.
inline std::vector<Graph> property_corpus() {
    std::vector<Graph> corpus;
    for (int n = 0; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask)
            corpus.push_back(graph_from_mask(n, mask));
    }
    for (int n = 4; n <= 7; ++n) {
        corpus.push_back(boxi::complete_graph(n));
        corpus.push_back(path_graph(n));
        corpus.push_back(cycle_graph(n));
        corpus.push_back(star_graph(n - 1));
    }
    corpus.push_back(matching_graph(3));
    corpus.push_back(complete_bipartite(2, 3));
    corpus.push_back(complete_bipartite(3, 3));
    corpus.push_back(boxi::line_graph(boxi::complete_graph(4)));
    std::mt19937_64 rng(20240517);
    for (double p : {0.25, 0.5, 0.75})
        for (int i = 0; i < 20; ++i) corpus.push_back(random_graph(6, p, rng));
    for (double p : {0.3, 0.6})
        for (int i = 0; i < 10; ++i) corpus.push_back(random_graph(7, p, rng));
    return corpus;
}

}  // namespace boxi_test
