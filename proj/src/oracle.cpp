#include "boxi/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "boxi/errors.hpp"
#include "boxi/interval_order.hpp"

namespace boxi {

int roberts_bound(int n) {
    if (n < 0) throw InputError("roberts_bound: negative n");
    return n / 2;
}

std::optional<BruteResult> brute_boxicity(const Graph& g, std::optional<int> cap,
                                          const SearchOptions& opts) {
    if (g.is_complete()) {
        BruteResult r;
        r.value = 0;
        r.cover.target = EdgeSet(Bitset(0));
        r.cover.complete = true;
        return r;
    }
    Graph h = complement(g);
    EnumerateOptions enum_opts;
    enum_opts.budget = opts.budget;
    enum_opts.jobs = opts.jobs;
    auto family = enumerate_maximal_io(h, enum_opts);
    std::vector<EdgeSet> member_sets;
    member_sets.reserve(family.size());
    for (const auto& m : family) member_sets.push_back(m.edges);

    EdgeSet target(h);
    target.bits.fill();
    int kmax = roberts_bound(g.vertex_count());
    if (cap) kmax = std::min(kmax, *cap);
    for (int k = 1; k <= kmax; ++k) {
        auto chosen = find_k_cover(target, member_sets, k, opts);
        if (!chosen) continue;
        BruteResult r;
        r.value = k;
        r.cover.target = target;
        r.cover.complete = true;
        for (int idx : *chosen)
            r.cover.members.push_back(CoverMember{family[idx].edges, family[idx].cert,
                                                  std::nullopt, std::nullopt});
        assert(verify_cover(h, target, r.cover));
        return r;
    }
    return std::nullopt;
}

}  // namespace boxi
