#include "boxi/line_box.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <random>

#include "boxi/errors.hpp"

namespace boxi {

BasePermutation identity_permutation(int n) {
    BasePermutation pi;
    pi.ranks.resize(n);
    std::iota(pi.ranks.begin(), pi.ranks.end(), 1);
    return pi;
}

void check_permutation(const BasePermutation& pi, int n) {
    if (pi.size() != n) throw InputError("permutation has the wrong ground set size");
    std::vector<bool> seen(n + 1, false);
    for (int r : pi.ranks) {
        if (r < 1 || r > n || seen[r]) throw InputError("ranks are not a bijection onto [1, n]");
        seen[r] = true;
    }
}

namespace {

struct ColineHost {
    Graph base;
    Graph line;
    Graph coline;

    explicit ColineHost(const Graph& g) : base(g), line(line_graph(g)), coline(complement(line)) {}
};

bool separated(int ra, int rb, int rc, int rd) {
    return std::max(ra, rb) < std::min(rc, rd) || std::max(rc, rd) < std::min(ra, rb);
}

// Line vertices ordered by increasing larger endpoint rank; ties (the edges
// arriving with the same vertex) in index order.
std::vector<int> edge_ordering(const ColineHost& host, const BasePermutation& pi) {
    std::vector<int> order(host.line.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        auto [a, b] = host.base.edges()[x];
        auto [c, d] = host.base.edges()[y];
        return std::max(pi.ranks[a], pi.ranks[b]) < std::max(pi.ranks[c], pi.ranks[d]);
    });
    return order;
}

CoveredResult covered_on_host(const ColineHost& host, const BasePermutation& pi) {
    check_permutation(pi, host.base.vertex_count());
    EdgeSet covered(host.coline);
    for (int id = 0; id < host.coline.edge_count(); ++id) {
        auto [x, y] = host.coline.edge_endpoints(id);
        auto [a, b] = host.base.edges()[x];
        auto [c, d] = host.base.edges()[y];
        if (separated(pi.ranks[a], pi.ranks[b], pi.ranks[c], pi.ranks[d])) covered.bits.set(id);
    }
    CoveredResult out{std::move(covered), {}};
    out.cert = make_chain_certificate(host.coline, out.edges, edge_ordering(host, pi));
    return out;
}

}  // namespace

CoveredResult covered_edges(const Graph& g, const BasePermutation& pi) {
    ColineHost host(g);
    return covered_on_host(host, pi);
}

namespace {

struct CoLineEdgeEndpoints {
    std::array<int, 4> v;  // a, b, c, d with {a,b} and {c,d} the two base edges
};

std::vector<CoLineEdgeEndpoints> remaining_endpoints(const ColineHost& host,
                                                     const EdgeSet& remaining) {
    std::vector<CoLineEdgeEndpoints> out;
    remaining.bits.for_each([&](int id) {
        auto [x, y] = host.coline.edge_endpoints(id);
        auto [a, b] = host.base.edges()[x];
        auto [c, d] = host.base.edges()[y];
        out.push_back(CoLineEdgeEndpoints{{a, b, c, d}});
    });
    return out;
}

// All 24 relative orders of four endpoint slots, precomputed once.
const std::vector<std::array<int, 4>>& slot_orders() {
    static const std::vector<std::array<int, 4>> orders = [] {
        std::vector<std::array<int, 4>> v;
        std::array<int, 4> p{0, 1, 2, 3};
        do v.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return v;
    }();
    return orders;
}

// 24 * P(edge separated | partial ranks), an exact integer. rank 0 means
// unassigned; assigned ranks are the smallest, so in any consistent relative
// order every assigned slot precedes every unassigned one.
long long separation_score_24(const CoLineEdgeEndpoints& e, const std::vector<int>& rank) {
    int assigned = 0;
    for (int s = 0; s < 4; ++s)
        if (rank[e.v[s]] > 0) ++assigned;
    int unassigned = 4 - assigned;
    static const int factorial[5] = {1, 1, 2, 6, 24};
    int consistent_sep = 0;
    for (const auto& order : slot_orders()) {
        bool ok = true;
        int prev_rank = 0;
        for (int pos = 0; pos < 4 && ok; ++pos) {
            int r = rank[e.v[order[pos]]];
            if (r > 0) {
                if (pos >= assigned || r < prev_rank) ok = false;
                prev_rank = r;
            } else if (pos < assigned) {
                ok = false;
            }
        }
        if (!ok) continue;
        bool first_two_same_edge = (order[0] ^ order[1]) == 1 && (order[0] >> 1) == (order[1] >> 1);
        if (first_two_same_edge) ++consistent_sep;
    }
    return static_cast<long long>(consistent_sep) * (24 / factorial[unassigned]);
}

}  // namespace

BasePermutation best_permutation(const Graph& g, const EdgeSet& remaining) {
    ColineHost host(g);
    const int n = g.vertex_count();
    auto edges = remaining_endpoints(host, remaining);

    std::vector<int> rank(n, 0);
    for (int next_rank = 1; next_rank <= n; ++next_rank) {
        int best = -1;
        long long best_score = -1;
        for (int x = 0; x < n; ++x) {
            if (rank[x] != 0) continue;
            rank[x] = next_rank;
            long long score = 0;
            for (const auto& e : edges) score += separation_score_24(e, rank);
            rank[x] = 0;
            if (score > best_score) {
                best_score = score;
                best = x;
            }
        }
        rank[best] = next_rank;
    }
    BasePermutation pi{std::move(rank)};
    check_permutation(pi, n);
    return pi;
}

BasePermutation sample_best_permutation(const Graph& g, const EdgeSet& remaining, int samples,
                                        std::uint64_t seed) {
    if (samples <= 0) throw InputError("sample_best_permutation: samples must be positive");
    ColineHost host(g);
    const int n = g.vertex_count();
    std::mt19937_64 rng(seed);
    BasePermutation best = identity_permutation(n);
    int best_cover = -1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int s = 0; s < samples; ++s) {
        std::shuffle(perm.begin(), perm.end(), rng);
        BasePermutation pi{perm};
        auto cov = covered_on_host(host, pi);
        Bitset gained = cov.edges.bits & remaining.bits;
        int count = gained.count();
        if (count > best_cover) {
            best_cover = count;
            best = pi;
        }
    }
    return best;
}

Cover line_upper_cover(const Graph& g, const LineUpperOptions& opts) {
    ColineHost host(g);
    Cover cover;
    cover.target = EdgeSet(host.coline);
    cover.target.bits.fill();
    cover.complete = true;

    EdgeSet remaining = cover.target;
    std::uint64_t round = 0;
    while (!remaining.empty()) {
        BasePermutation pi;
        if (opts.sampling) {
            pi = sample_best_permutation(g, remaining, opts.sampling->first,
                                         opts.sampling->second + round);
            auto cov = covered_on_host(host, pi);
            if (!(cov.edges.bits & remaining.bits).any()) pi = best_permutation(g, remaining);
        } else {
            pi = best_permutation(g, remaining);
        }
        auto cov = covered_on_host(host, pi);
        Bitset gained = cov.edges.bits & remaining.bits;
        int need = (remaining.count() + 2) / 3;
        if (!opts.sampling && gained.count() < need)
            throw std::logic_error("line_upper_cover: round below the one-third guarantee");
        CoverMember member;
        member.edges = std::move(cov.edges);
        member.cert = std::move(cov.cert);
        member.perm_ranks = pi.ranks;
        cover.members.push_back(std::move(member));
        remaining.bits.subtract(cover.members.back().edges.bits);
        ++round;
    }
    return cover;
}

std::optional<std::array<int, 3>> common_monotone_triple(
    const std::vector<BasePermutation>& perms) {
    int n = perms.empty() ? 3 : perms.front().size();
    for (const auto& pi : perms) check_permutation(pi, n);
    if (n < 3) return std::nullopt;
    auto middle_everywhere = [&](int mid, int lo, int hi) {
        for (const auto& pi : perms) {
            int rl = pi.ranks[lo], rm = pi.ranks[mid], rh = pi.ranks[hi];
            if (!((rl < rm && rm < rh) || (rh < rm && rm < rl))) return false;
        }
        return true;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                if (middle_everywhere(y, x, z)) return std::array<int, 3>{x, y, z};
                if (middle_everywhere(x, y, z)) return std::array<int, 3>{y, x, z};
                if (middle_everywhere(z, x, y)) return std::array<int, 3>{x, z, y};
            }
    return std::nullopt;
}

PermRefutation refute_permutation_cover(int n, const std::vector<BasePermutation>& perms) {
    if (n < 5) throw InputError("refute_permutation_cover: n must be at least 5");
    for (const auto& pi : perms) check_permutation(pi, n);
    int limit = static_cast<int>(std::floor(std::log2(std::floor(std::log2(n - 1))))) + 2;
    if (static_cast<int>(perms.size()) > limit)
        throw InputError("refute_permutation_cover: " + std::to_string(perms.size()) +
                         " permutations exceed the guaranteed bound of " + std::to_string(limit) +
                         " for n = " + std::to_string(n));

    Graph kn = complete_graph(n);
    ColineHost host(kn);
    auto lv_index = [&](LineVertex lv) { return host.base.edge_id(lv.u, lv.v); };

    auto triple = common_monotone_triple(perms.empty()
                                             ? std::vector<BasePermutation>{identity_permutation(n)}
                                             : perms);
    if (triple) {
        auto [a, b, c] = *triple;
        int d = 0;
        while (d == a || d == b || d == c) ++d;
        PermRefutation out{LineVertex(a, c), LineVertex(b, d), *triple};
        // b's rank lies inside the {a,c} rank interval in every permutation,
        // so none of them separates {a,c} from {b,d}; re-check through the
        // public coverage routine anyway.
        int witness_edge = host.coline.edge_id(lv_index(out.x), lv_index(out.y));
        if (witness_edge < 0)
            throw std::logic_error("refute_permutation_cover: witness is not an edge");
        for (const auto& pi : perms) {
            if (covered_on_host(host, pi).edges.bits.test(witness_edge))
                throw std::logic_error("refute_permutation_cover: witness unexpectedly covered");
        }
        return out;
    }

    // No common monotone triple. An uncovered edge may still exist; scan for
    // the first one.
    Bitset covered(host.coline.edge_count());
    for (const auto& pi : perms) covered |= covered_on_host(host, pi).edges.bits;
    for (int id = 0; id < host.coline.edge_count(); ++id) {
        if (covered.test(id)) continue;
        auto [x, y] = host.coline.edge_endpoints(id);
        auto [a, b] = host.base.edges()[x];
        auto [c, d] = host.base.edges()[y];
        return PermRefutation{LineVertex(a, b), LineVertex(c, d), std::nullopt};
    }
    throw InputError("refute_permutation_cover: the permutations cover complement(L(K_n)); "
                     "no refutation exists");
}

}  // namespace boxi
