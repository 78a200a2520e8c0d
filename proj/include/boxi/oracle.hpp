#pragma once

#include <optional>

#include "boxi/cover.hpp"
#include "boxi/cover_search.hpp"
#include "boxi/graph.hpp"

namespace boxi {

// floor(n/2), an unconditional upper bound on boxicity.
int roberts_bound(int n);

struct BruteResult {
    int value = 0;
    Cover cover;  // over complement(g); empty with empty target when value is 0
};

// Exact boxicity by iterative deepening over interval-order covers of the
// complement: 0 for complete graphs, otherwise the least k admitting a
// k-cover of E(complement(g)) by maximal interval-order subgraphs. Returns
// std::nullopt when `cap` is exhausted first (the value then exceeds cap).
std::optional<BruteResult> brute_boxicity(const Graph& g, std::optional<int> cap = {},
                                          const SearchOptions& opts = {});

}  // namespace boxi
