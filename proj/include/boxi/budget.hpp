#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "boxi/errors.hpp"

namespace boxi {

inline constexpr std::uint64_t kDefaultWorkBudget = 100'000'000;

// Monotone work counter shared by all workers of one search. Increments are
// relaxed; the limit check may overshoot by a few units under contention,
// which is acceptable for a resource guard.
class WorkBudget {
public:
    explicit WorkBudget(std::uint64_t limit = kDefaultWorkBudget) : limit_(limit) {}

    void charge(std::uint64_t units, const char* what) {
        std::uint64_t seen = used_.fetch_add(units, std::memory_order_relaxed) + units;
        if (seen > limit_) {
            throw BudgetExceeded(std::string(what) + ": work budget of " +
                                 std::to_string(limit_) + " steps exceeded");
        }
    }

    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const { return limit_; }

private:
    std::atomic<std::uint64_t> used_{0};
    std::uint64_t limit_;
};

}  // namespace boxi
