#include "boxi/cover_search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "boxi/errors.hpp"

namespace boxi {

namespace {

struct CoverContext {
    const std::vector<EdgeSet>& members;
    const std::vector<std::vector<int>>& containing;  // per target edge
    const std::vector<int>& static_count;             // per target edge
    int k;
    int max_member_size;
    bool memo_enabled;
    WorkBudget& budget;
    std::atomic<std::uint64_t>& nodes;
    std::atomic<bool>& stop;
};

struct CoverWorker {
    CoverContext& ctx;
    std::vector<int> chosen;
    // uncovered set -> largest remaining member count that already failed
    std::unordered_map<Bitset, int, Bitset::Hash> failed;

    explicit CoverWorker(CoverContext& c) : ctx(c) {}

    int pick_branch_edge(const Bitset& uncovered) const {
        int best = -1, best_count = std::numeric_limits<int>::max();
        uncovered.for_each([&](int e) {
            if (ctx.static_count[e] < best_count) {
                best_count = ctx.static_count[e];
                best = e;
            }
        });
        return best;
    }

    bool dfs(const Bitset& uncovered, int depth) {
        if (uncovered.none()) return true;
        if (ctx.stop.load(std::memory_order_relaxed)) return false;
        int remaining_members = ctx.k - depth;
        if (remaining_members <= 0) return false;
        if (uncovered.count() > remaining_members * ctx.max_member_size) return false;
        if (ctx.memo_enabled) {
            auto it = failed.find(uncovered);
            if (it != failed.end() && it->second >= remaining_members) return false;
        }
        ctx.nodes.fetch_add(1, std::memory_order_relaxed);
        ctx.budget.charge(1, "cover search");

        int e = pick_branch_edge(uncovered);
        for (int idx : ctx.containing[e]) {
            Bitset next = uncovered;
            next.subtract(ctx.members[idx].bits);
            chosen.push_back(idx);
            if (dfs(next, depth + 1)) return true;
            chosen.pop_back();
        }
        if (ctx.memo_enabled) {
            auto [it, inserted] = failed.emplace(uncovered, remaining_members);
            if (!inserted) it->second = std::max(it->second, remaining_members);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_k_cover(const EdgeSet& target,
                                             const std::vector<EdgeSet>& members, int k,
                                             const SearchOptions& opts, CoverSearchStats* stats) {
    if (target.empty()) return std::vector<int>{};
    if (k <= 0) return std::nullopt;

    const int edge_capacity = target.bits.capacity();
    std::vector<std::vector<int>> containing(edge_capacity);
    std::vector<int> static_count(edge_capacity, 0);
    int max_member_size = 0;
    for (int i = 0; i < static_cast<int>(members.size()); ++i) {
        Bitset useful = members[i].bits & target.bits;
        max_member_size = std::max(max_member_size, useful.count());
        useful.for_each([&](int e) { containing[e].push_back(i); });
    }
    bool coverable = true;
    target.bits.for_each([&](int e) {
        static_count[e] = static_cast<int>(containing[e].size());
        if (containing[e].empty()) coverable = false;
    });
    if (!coverable || max_member_size == 0) return std::nullopt;

    WorkBudget budget(opts.budget);
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    bool memo_enabled = target.count() <= 64;
    CoverContext ctx{members,      containing, static_count, k, max_member_size,
                     memo_enabled, budget,     nodes,        stop};

    std::optional<std::vector<int>> result;
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        CoverWorker worker(ctx);
        if (worker.dfs(target.bits, 0)) result = worker.chosen;
    } else {
        // Fan out over the first member choice; each worker keeps its own
        // memo, the budget and stop flag are shared.
        int root_edge = CoverWorker(ctx).pick_branch_edge(target.bits);
        const auto& root_candidates = containing[root_edge];
        std::mutex result_mutex;
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> threads;
        std::exception_ptr error;
        if (target.count() <= k * max_member_size) {
            nodes.fetch_add(1, std::memory_order_relaxed);
            for (int t = 0; t < std::min<int>(jobs, static_cast<int>(root_candidates.size()));
                 ++t) {
                threads.emplace_back([&] {
                    CoverWorker worker(ctx);
                    try {
                        while (!stop.load(std::memory_order_relaxed)) {
                            std::size_t i = cursor.fetch_add(1);
                            if (i >= root_candidates.size()) break;
                            int idx = root_candidates[i];
                            Bitset next = target.bits;
                            next.subtract(members[idx].bits);
                            worker.chosen.assign(1, idx);
                            if (worker.dfs(next, 1)) {
                                std::scoped_lock lock(result_mutex);
                                if (!result) result = worker.chosen;
                                stop.store(true, std::memory_order_relaxed);
                                break;
                            }
                        }
                    } catch (...) {
                        std::scoped_lock lock(result_mutex);
                        if (!error) error = std::current_exception();
                        stop.store(true, std::memory_order_relaxed);
                    }
                });
            }
            for (auto& th : threads) th.join();
            if (error && !result) std::rethrow_exception(error);
        }
    }
    if (stats) stats->nodes = nodes.load();
    return result;
}

}  // namespace boxi
