#pragma once

#include <optional>
#include <vector>

#include "boxi/graph.hpp"
#include "boxi/interval_order.hpp"
#include "boxi/lkn_catalog.hpp"

namespace boxi {

// One interval-order subgraph in a cover, with its chain certificate. The
// optional tags record where it came from: a catalog descriptor for members
// of L(K_n), or the base permutation for members of a co-line-graph cover.
struct CoverMember {
    EdgeSet edges;
    ChainCertificate cert;
    std::optional<CatalogDescriptor> descriptor;
    std::optional<std::vector<int>> perm_ranks;
};

// A family of interval-order subgraphs claiming to cover `target` (an edge
// set of the host graph) when `complete` is set.
struct Cover {
    std::vector<CoverMember> members;
    EdgeSet target;
    bool complete = false;
};

// True iff every member's certificate verifies against its edge set and the
// union of the members equals the target. Pure re-verification: recomputes
// the out-neighborhood chains, shares no search code with any producer.
bool verify_cover(const Graph& host, const EdgeSet& target, const Cover& cover);

}  // namespace boxi
