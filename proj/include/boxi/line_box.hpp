#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "boxi/cover.hpp"
#include "boxi/graph.hpp"
#include "boxi/interval_order.hpp"

namespace boxi {

// A permutation of the base-graph vertices, stored as ranks in [1, n].
struct BasePermutation {
    std::vector<int> ranks;
    int size() const { return static_cast<int>(ranks.size()); }
};

BasePermutation identity_permutation(int n);
// Validates bijectivity onto [1, n]; throws InputError otherwise.
void check_permutation(const BasePermutation& pi, int n);

struct CoveredResult {
    EdgeSet edges;  // over complement(line_graph(g))
    ChainCertificate cert;
};

// The edges {ab, cd} of complement(L(g)) whose rank intervals are separated
// under pi (in either direction), certified along an edge ordering by
// increasing larger endpoint rank.
CoveredResult covered_edges(const Graph& g, const BasePermutation& pi);

// Deterministic permutation covering at least ceil(|remaining|/3) of
// `remaining` (edge ids of complement(L(g))), by the method of conditional
// expectations: ranks are assigned low to high, each step maximizing the
// exact expected coverage over the <= 24 relative orders of the endpoints.
BasePermutation best_permutation(const Graph& g, const EdgeSet& remaining);

// Best of `samples` seeded uniform permutations; faster, no coverage
// guarantee.
BasePermutation sample_best_permutation(const Graph& g, const EdgeSet& remaining, int samples,
                                        std::uint64_t seed);

struct LineUpperOptions {
    // When set, rounds use seeded sampling, falling back to the
    // derandomized construction on rounds that make no progress.
    std::optional<std::pair<int, std::uint64_t>> sampling;  // (samples, seed)
};

// A complete cover of E(complement(L(g))) by covered_edges sets, at most
// ceil(5 log2 m) rounds where m = |E(g)|.
Cover line_upper_cover(const Graph& g, const LineUpperOptions& opts = {});

// An ordered triple (a, b, c) with b strictly between a and c in every
// permutation, i.e. every restriction is increasing or decreasing. Exhaustive
// scan in lexicographic order; std::nullopt when none exists.
std::optional<std::array<int, 3>> common_monotone_triple(
    const std::vector<BasePermutation>& perms);

struct PermRefutation {
    LineVertex x, y;  // the uncovered edge {x, y} of complement(L(K_n))
    std::optional<std::array<int, 3>> triple;  // the monotone triple used, if one was found
};

// An edge of complement(L(K_n)) covered by none of the permutations: take a
// common monotone triple (a,b,c), the smallest d outside it, and return
// {ac, bd}; re-verified against covered_edges for every permutation. Accepts
// |perms| <= floor(log2 log2 (n-1)) + 2. When no triple exists the uncovered
// edges are scanned directly; throws InputError when the permutations
// actually cover everything (then no refutation exists).
PermRefutation refute_permutation_cover(int n, const std::vector<BasePermutation>& perms);

}  // namespace boxi
