#include "boxi/coline_box.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "boxi/errors.hpp"

namespace boxi {

namespace {

// g's edges as line-vertex ids of L(K_n); ascending since both lists are
// lexicographic.
std::vector<int> base_edge_lv_ids(const LknHost& host, const Graph& g) {
    std::vector<int> ids;
    ids.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) ids.push_back(host.lv_id(u, v));
    return ids;
}

}  // namespace

std::vector<FamilyMember> family_b(const Graph& g) {
    const int n = g.vertex_count();
    Graph lg = line_graph(g);

    if (n < 5) {
        std::vector<FamilyMember> out;
        for (auto& sub : enumerate_maximal_io(lg))
            out.push_back(FamilyMember{std::move(sub.edges), std::move(sub.cert), std::nullopt});
        return out;
    }

    LknHost host = LknHost::make(n);
    const bool complete = g.is_complete();
    std::vector<int> lv_of = base_edge_lv_ids(host, g);  // L(g) vertex -> L(K_n) vertex
    std::vector<int> gv_of(host.line.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(lv_of.size()); ++i) gv_of[lv_of[i]] = i;

    // Restrict every catalog member to the line vertices that are edges of g.
    auto catalog = enumerate_catalog(host);
    struct Candidate {
        Bitset bits;
        CatalogDescriptor origin;
    };
    std::unordered_map<Bitset, CatalogDescriptor, Bitset::Hash> dedup;
    for (const auto& entry : catalog) {
        EdgeSet restricted(lg);
        for (int id = 0; id < lg.edge_count(); ++id) {
            auto [x, y] = lg.edge_endpoints(id);
            if (entry.edges.bits.test(host.edge_id(lv_of[x], lv_of[y]))) restricted.bits.set(id);
        }
        dedup.emplace(std::move(restricted.bits), entry.descriptor);
    }

    std::vector<Candidate> all;
    all.reserve(dedup.size());
    for (auto& [bits, d] : dedup) all.push_back(Candidate{bits, d});
    std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
        int ca = a.bits.count(), cb = b.bits.count();
        if (ca != cb) return ca > cb;
        return lex_less(a.bits, b.bits);
    });

    std::vector<FamilyMember> result;
    for (auto& cand : all) {
        bool dominated = false;
        for (const auto& kept : result) {
            if (cand.bits.count() < kept.edges.count() && cand.bits.is_subset_of(kept.edges.bits)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        // A maximal restriction equals the subgraph its restricted ordering
        // constructs over L(g), which yields the certificate.
        std::vector<int> order;
        for (int lv : catalog_ordering(host, cand.origin))
            if (gv_of[lv] >= 0) order.push_back(gv_of[lv]);
        auto built = build_gsigma(lg, order);
        if (!(built.edges.bits == cand.bits))
            throw std::logic_error("family_b: restricted ordering does not rebuild the member");
        FamilyMember member{std::move(built.edges), std::move(built.cert), std::nullopt};
        if (complete) member.origin = cand.origin;
        result.push_back(std::move(member));
    }
    std::sort(result.begin(), result.end(), [](const FamilyMember& a, const FamilyMember& b) {
        return lex_less(a.edges.bits, b.edges.bits);
    });
    return result;
}

std::vector<CompletionResult> minimal_interval_completions(const Graph& g) {
    Graph lg = line_graph(g);
    const long long m = lg.vertex_count();
    const long long all_pairs = m * (m - 1) / 2;
    std::vector<CompletionResult> out;
    for (auto& member : family_b(g)) {
        CompletionResult r;
        r.total_edges = all_pairs - member.edges.count();
        for (int id = 0; id < lg.edge_count(); ++id)
            if (!member.edges.bits.test(id)) r.added_edges.push_back(lg.edge_endpoints(id));
        r.witness = member.cert;
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const CompletionResult& a, const CompletionResult& b) {
        if (a.total_edges != b.total_edges) return a.total_edges < b.total_edges;
        return a.added_edges < b.added_edges;
    });
    return out;
}

CompletionResult igc_minimum_completion(const Graph& g) {
    auto all = minimal_interval_completions(g);
    if (all.empty()) throw InputError("igc_minimum_completion: no completions produced");
    return all.front();
}

std::optional<Cover> decide_boxicity_coline(const Graph& g, int k, const SearchOptions& opts,
                                            CoverSearchStats* stats) {
    if (k < 0) throw InputError("decide_boxicity_coline: negative k");
    const int n = g.vertex_count();
    Graph lg = line_graph(g);
    EdgeSet target(lg);
    target.bits.fill();

    if (target.empty()) return Cover{{}, target, true};
    if (k == 0) return std::nullopt;
    if (n >= 5 && g.is_complete() && k >= n - 2) return kneser_cover(n);

    auto family = family_b(g);
    std::vector<EdgeSet> member_sets;
    member_sets.reserve(family.size());
    for (const auto& mbr : family) member_sets.push_back(mbr.edges);
    auto chosen = find_k_cover(target, member_sets, k, opts, stats);
    if (!chosen) return std::nullopt;

    Cover cover;
    cover.target = target;
    cover.complete = true;
    for (int idx : *chosen) {
        CoverMember m;
        m.edges = family[idx].edges;
        m.cert = family[idx].cert;
        m.descriptor = family[idx].origin;
        cover.members.push_back(std::move(m));
    }
    assert(verify_cover(lg, target, cover));
    return cover;
}

Cover kneser_cover(int n) {
    if (n < 5) throw InputError("kneser_cover: n must be at least 5");
    LknHost host = LknHost::make(n);
    Cover cover;
    cover.target = EdgeSet(host.line);
    cover.target.bits.fill();
    for (int a = 0; a <= n - 3; ++a) {
        const int b = n - 2, d = n - 1;
        int c = 0;
        while (c == a || c == b || c == d) ++c;
        int e = c + 1;
        while (e == a || e == b || e == d) ++e;
        CatalogDescriptor desc = type_a(a, b, c, d, e);
        CoverMember m;
        m.edges = catalog_edge_set(host, desc);
        auto built = build_gsigma(host.line, catalog_ordering(host, desc));
        if (!(built.edges == m.edges))
            throw std::logic_error("kneser_cover: ordering does not rebuild the member");
        m.cert = std::move(built.cert);
        m.descriptor = desc;
        cover.members.push_back(std::move(m));
    }
    Bitset covered(host.line.edge_count());
    for (const auto& m : cover.members) covered |= m.edges.bits;
    if (!(covered == cover.target.bits))
        throw std::logic_error("kneser_cover: constructed family does not cover L(K_n)");
    cover.complete = true;
    return cover;
}

KneserBoxicityResult kneser_boxicity(int n, const KneserOptions& opts) {
    if (n < 5) throw InputError("kneser_boxicity: n must be at least 5");
    KneserBoxicityResult result;
    result.value = n - 2;
    result.upper = kneser_cover(n);
    if (n <= 6) {
        CoverSearchStats stats;
        Graph kn = complete_graph(n);
        auto cover = decide_boxicity_coline(kn, n - 3, opts.search, &stats);
        if (cover) throw std::logic_error("kneser_boxicity: found a cover that must not exist");
        result.refutation = RefutationInfo{n - 3, stats.nodes};
    } else if (n == 7 && opts.refute_n7) {
        // Relabeling the base vertices permutes the family, so some member of
        // any cover can be mapped onto one representative per descriptor
        // type; refuting the four reduced instances refutes every cover.
        Graph kn = complete_graph(n);
        Graph lg = line_graph(kn);
        EdgeSet target(lg);
        target.bits.fill();
        auto family = family_b(kn);
        std::vector<EdgeSet> member_sets;
        for (const auto& mbr : family) member_sets.push_back(mbr.edges);
        bool kind_done[4] = {false, false, false, false};
        std::uint64_t nodes = 0;
        for (std::size_t i = 0; i < family.size(); ++i) {
            int kind = static_cast<int>(family[i].origin->kind);
            if (kind_done[kind]) continue;
            kind_done[kind] = true;
            EdgeSet rest = target;
            rest.bits.subtract(family[i].edges.bits);
            CoverSearchStats stats;
            auto chosen = find_k_cover(rest, member_sets, n - 4, opts.search, &stats);
            nodes += stats.nodes;
            if (chosen) throw std::logic_error("kneser_boxicity: found a cover that must not exist");
        }
        result.refutation = RefutationInfo{n - 3, nodes};
    }
    return result;
}

}  // namespace boxi
