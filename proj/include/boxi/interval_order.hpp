#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boxi/bitset.hpp"
#include "boxi/budget.hpp"
#include "boxi/graph.hpp"

namespace boxi {

// A set of edges of a host graph, indexed by the host's edge ids.
struct EdgeSet {
    Bitset bits;
    EdgeSet() = default;
    explicit EdgeSet(const Graph& host) : bits(host.edge_count()) {}
    explicit EdgeSet(Bitset b) : bits(std::move(b)) {}
    int count() const { return bits.count(); }
    bool empty() const { return bits.none(); }
    friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.bits == b.bits; }
};

std::vector<std::pair<int, int>> edge_pairs(const Graph& host, const EdgeSet& es);

// Builds a host graph carrying exactly the given edge subset (same vertex
// count as `host`). Used to feed edge subsets to graph-level recognition.
Graph subgraph_of(const Graph& host, const EdgeSet& es);

// Witness that an edge set is an interval-order graph: a vertex ordering
// whose out-neighborhoods within the edge set form a decreasing chain.
struct ChainCertificate {
    std::vector<int> ordering;
    std::vector<std::vector<int>> out_neighborhoods;  // one per ordering entry
};

// True iff the out-neighborhoods of `edges` along `ordering` are nested
// (each one contains the next). Throws InputError when the ordering repeats
// a vertex, leaves the host, or misses an endpoint of `edges`.
bool verify_chain(const Graph& host, const EdgeSet& edges, const std::vector<int>& ordering);

// Recomputes the certificate's out-neighborhoods from `edges` and checks
// both consistency with the stored ones and the nesting property.
bool verify_certificate(const Graph& host, const EdgeSet& edges, const ChainCertificate& cert);

// Certificate with out-neighborhoods computed from `edges` along `ordering`.
ChainCertificate make_chain_certificate(const Graph& host, const EdgeSet& edges,
                                        std::vector<int> ordering);

struct GsigmaResult {
    EdgeSet edges;
    ChainCertificate cert;
};

// The interval-order subgraph obtained by processing `ordering` (a
// permutation of V or a prefix of one): each vertex is joined to the running
// intersection of the neighborhoods processed so far. Stops early once the
// running intersection is empty. The certificate ordering is extended past
// the prefix just enough to place every endpoint of the result.
GsigmaResult build_gsigma(const Graph& host, const std::vector<int>& ordering);

// Vertices outside the prefix whose full neighborhood contains the prefix's
// running intersection; appending any of them keeps the intersection intact.
// Throws InputError on an empty or invalid prefix.
std::vector<int> candidate_next(const Graph& host, const std::vector<int>& prefix);

// Exact recognition: a certificate for E(g) when g is an interval-order
// graph, std::nullopt otherwise. Search over placement orders with lost-edge
// pruning, memoized on the set of placed vertices.
std::optional<ChainCertificate> is_interval_order(const Graph& g, WorkBudget* budget = nullptr);

struct IoSubgraph {
    EdgeSet edges;
    ChainCertificate cert;
};

struct EnumerateOptions {
    std::uint64_t budget = kDefaultWorkBudget;
    int jobs = 1;
};

// All inclusion-wise edge-maximal interval-order subgraphs of g, each with a
// witnessing certificate, deduplicated and sorted by canonical edge list.
std::vector<IoSubgraph> enumerate_maximal_io(const Graph& g, const EnumerateOptions& opts = {});

}  // namespace boxi
