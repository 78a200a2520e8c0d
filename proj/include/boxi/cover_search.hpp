#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boxi/budget.hpp"
#include "boxi/interval_order.hpp"

namespace boxi {

struct SearchOptions {
    std::uint64_t budget = kDefaultWorkBudget;
    int jobs = 1;
};

struct CoverSearchStats {
    std::uint64_t nodes = 0;
};

// Exact decision: indices of at most k members whose union covers `target`,
// or std::nullopt when no such selection exists. Branches on an uncovered
// element lying in the fewest members, with the bound
//   (uncovered count) <= (k - depth) * (largest member size)
// and failure memoization on the uncovered set (disabled above 64 target
// edges). Throws BudgetExceeded when the node budget runs out.
std::optional<std::vector<int>> find_k_cover(const EdgeSet& target,
                                             const std::vector<EdgeSet>& members, int k,
                                             const SearchOptions& opts = {},
                                             CoverSearchStats* stats = nullptr);

}  // namespace boxi
