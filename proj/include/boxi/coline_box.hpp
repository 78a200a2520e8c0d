#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boxi/cover.hpp"
#include "boxi/cover_search.hpp"
#include "boxi/graph.hpp"
#include "boxi/interval_order.hpp"
#include "boxi/lkn_catalog.hpp"

namespace boxi {

struct FamilyMember {
    EdgeSet edges;  // over line_graph(g)
    ChainCertificate cert;
    std::optional<CatalogDescriptor> origin;  // set when g is complete
};

// Family B: every maximal interval-order subgraph of L(g), obtained by
// restricting the catalog members of L(K_n) to the edges of g (generic
// enumeration below 5 base vertices). At most n^5 members.
std::vector<FamilyMember> family_b(const Graph& g);

// An interval completion of complement(L(g)): the added line-vertex pairs,
// the completed graph's edge total, and the chain certificate of the
// completion's complement.
struct CompletionResult {
    std::vector<std::pair<int, int>> added_edges;
    long long total_edges = 0;
    ChainCertificate witness;
};

// All inclusion-wise minimal interval completions of complement(L(g)):
// complements of the maximal members of family B. Sorted by (total edge
// count, added edge list).
std::vector<CompletionResult> minimal_interval_completions(const Graph& g);

// A completion of complement(L(g)) with the fewest edges; ties broken by
// canonical edge-list order.
CompletionResult igc_minimum_completion(const Graph& g);

// Exact decision of boxi(complement(L(g))) <= k: a complete cover of
// E(L(g)) by at most k members of family B, or std::nullopt.
std::optional<Cover> decide_boxicity_coline(const Graph& g, int k, const SearchOptions& opts = {},
                                            CoverSearchStats* stats = nullptr);

// The (n-2)-member cover of E(L(K_n)) by TypeA subgraphs anchored at
// v_0..v_{n-3} with the double stars towards v_{n-2} and v_{n-1}.
Cover kneser_cover(int n);

struct RefutationInfo {
    int refuted_k = 0;
    std::uint64_t nodes = 0;
};

struct KneserBoxicityResult {
    int value = 0;
    Cover upper;
    std::optional<RefutationInfo> refutation;
};

struct KneserOptions {
    SearchOptions search;
    // The n = 7 exhaustive lower bound is far more expensive than n <= 6;
    // opt in explicitly.
    bool refute_n7 = false;
};

// boxi(KG(n,2)) = n - 2 with the cover above as the upper certificate; the
// lower bound is recomputed exhaustively for n in {5, 6} (optionally 7).
KneserBoxicityResult kneser_boxicity(int n, const KneserOptions& opts = {});

}  // namespace boxi
