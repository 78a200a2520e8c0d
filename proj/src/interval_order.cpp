#include "boxi/interval_order.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "boxi/errors.hpp"

namespace boxi {

std::vector<std::pair<int, int>> edge_pairs(const Graph& host, const EdgeSet& es) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(es.count()));
    es.bits.for_each([&](int id) { out.push_back(host.edge_endpoints(id)); });
    return out;
}

Graph subgraph_of(const Graph& host, const EdgeSet& es) {
    return Graph(host.vertex_count(), edge_pairs(host, es));
}

namespace {

void check_ordering(const Graph& host, const std::vector<int>& ordering) {
    Bitset seen(host.vertex_count());
    for (int v : ordering) {
        if (v < 0 || v >= host.vertex_count())
            throw InputError("ordering: vertex id out of range");
        if (seen.test(v)) throw InputError("ordering: repeated vertex");
        seen.set(v);
    }
}

// Positions of the ordering's vertices, -1 for vertices not listed.
std::vector<int> position_map(const Graph& host, const std::vector<int>& ordering) {
    std::vector<int> pos(host.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(ordering.size()); ++i) pos[ordering[i]] = i;
    return pos;
}

std::vector<Bitset> out_neighborhood_bits(const Graph& host, const EdgeSet& edges,
                                          const std::vector<int>& ordering,
                                          const std::vector<int>& pos) {
    std::vector<Bitset> nplus(ordering.size(), Bitset(host.vertex_count()));
    edges.bits.for_each([&](int id) {
        auto [x, y] = host.edge_endpoints(id);
        if (pos[x] < 0 || pos[y] < 0)
            throw InputError("ordering is missing an endpoint of the edge set");
        if (pos[x] > pos[y]) std::swap(x, y);
        nplus[pos[x]].set(y);
    });
    return nplus;
}

}  // namespace

bool verify_chain(const Graph& host, const EdgeSet& edges, const std::vector<int>& ordering) {
    check_ordering(host, ordering);
    auto pos = position_map(host, ordering);
    auto nplus = out_neighborhood_bits(host, edges, ordering, pos);
    for (std::size_t i = 1; i < nplus.size(); ++i)
        if (!nplus[i].is_subset_of(nplus[i - 1])) return false;
    return true;
}

bool verify_certificate(const Graph& host, const EdgeSet& edges, const ChainCertificate& cert) {
    check_ordering(host, cert.ordering);
    if (cert.out_neighborhoods.size() != cert.ordering.size()) return false;
    auto pos = position_map(host, cert.ordering);
    auto nplus = out_neighborhood_bits(host, edges, cert.ordering, pos);
    for (std::size_t i = 0; i < nplus.size(); ++i) {
        std::vector<int> stored = cert.out_neighborhoods[i];
        std::sort(stored.begin(), stored.end());
        if (stored != nplus[i].to_vector()) return false;
        if (i > 0 && !nplus[i].is_subset_of(nplus[i - 1])) return false;
    }
    return true;
}

ChainCertificate make_chain_certificate(const Graph& host, const EdgeSet& edges,
                                        std::vector<int> ordering) {
    check_ordering(host, ordering);
    auto pos = position_map(host, ordering);
    auto nplus = out_neighborhood_bits(host, edges, ordering, pos);
    ChainCertificate cert;
    cert.ordering = std::move(ordering);
    cert.out_neighborhoods.reserve(nplus.size());
    for (const auto& b : nplus) cert.out_neighborhoods.push_back(b.to_vector());
    return cert;
}

GsigmaResult build_gsigma(const Graph& host, const std::vector<int>& ordering) {
    check_ordering(host, ordering);
    const int n = host.vertex_count();
    EdgeSet result(host);
    Bitset running = host.full_vertex_set();
    std::vector<int> processed;
    processed.reserve(ordering.size());
    for (int v : ordering) {
        running &= host.neighbors(v);
        processed.push_back(v);
        running.for_each([&](int w) { result.bits.set(host.edge_id(v, w)); });
        if (running.none()) break;
    }
    // Extend the certificate ordering so every endpoint of the result is
    // placed; appended vertices only gain edges pointing backwards.
    Bitset placed(n);
    for (int v : processed) placed.set(v);
    Bitset endpoints(n);
    result.bits.for_each([&](int id) {
        auto [x, y] = host.edge_endpoints(id);
        endpoints.set(x);
        endpoints.set(y);
    });
    endpoints.for_each([&](int v) {
        if (!placed.test(v)) processed.push_back(v);
    });
    GsigmaResult out{std::move(result), {}};
    out.cert = make_chain_certificate(host, out.edges, std::move(processed));
    return out;
}

std::vector<int> candidate_next(const Graph& host, const std::vector<int>& prefix) {
    if (prefix.empty()) throw InputError("candidate_next: empty prefix");
    check_ordering(host, prefix);
    Bitset placed(host.vertex_count());
    Bitset running = host.full_vertex_set();
    for (int v : prefix) {
        placed.set(v);
        running &= host.neighbors(v);
    }
    std::vector<int> out;
    for (int v = 0; v < host.vertex_count(); ++v)
        if (!placed.test(v) && running.is_subset_of(host.neighbors(v))) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Recognition: does some ordering realize all of E(g)?
//
// A vertex may be placed next only if all its unplaced neighbors lie in the
// running intersection; otherwise one of its edges can never enter E^sigma.
// Vertices whose full neighborhood contains the running intersection keep it
// intact and are safe to place immediately.

namespace {

struct RecognitionSearch {
    const Graph& g;
    WorkBudget* budget;
    int total_edges;
    std::vector<int> prefix;
    std::unordered_set<Bitset, Bitset::Hash> failed;

    bool valid_next(int w, const Bitset& placed, const Bitset& running) const {
        Bitset unplaced_nbrs = g.neighbors(w);
        unplaced_nbrs.subtract(placed);
        return unplaced_nbrs.is_subset_of(running);
    }

    bool dfs(Bitset placed, Bitset running, int covered) {
        if (covered == total_edges) return true;
        if (running.none()) return false;
        if (failed.count(placed)) return false;
        if (budget) budget->charge(1, "is_interval_order");

        Bitset forced(g.vertex_count());
        int forced_count = 0;
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (placed.test(w) || !valid_next(w, placed, running)) continue;
            if (running.is_subset_of(g.neighbors(w))) {
                forced.set(w);
                ++forced_count;
            }
        }
        if (forced_count > 0) {
            Bitset placed2 = placed;
            int covered2 = covered;
            forced.for_each([&](int w) {
                prefix.push_back(w);
                placed2.set(w);
                covered2 += running.count();
            });
            if (dfs(placed2, running, covered2)) return true;
            prefix.resize(prefix.size() - static_cast<std::size_t>(forced_count));
            failed.insert(placed);
            return false;
        }

        for (int w = 0; w < g.vertex_count(); ++w) {
            if (placed.test(w) || !valid_next(w, placed, running)) continue;
            Bitset next = running & g.neighbors(w);
            if (next.none()) continue;  // covered < total here, so a dead end
            Bitset placed2 = placed;
            placed2.set(w);
            prefix.push_back(w);
            if (dfs(placed2, next, covered + next.count())) return true;
            prefix.pop_back();
        }
        failed.insert(placed);
        return false;
    }
};

}  // namespace

std::optional<ChainCertificate> is_interval_order(const Graph& g, WorkBudget* budget) {
    const int n = g.vertex_count();
    EdgeSet all(g);
    all.bits.fill();
    if (g.edge_count() == 0) return make_chain_certificate(g, all, {});

    RecognitionSearch search{g, budget, g.edge_count(), {}, {}};
    Bitset placed(n);
    // Edgeless vertices never constrain the chain; leave them out.
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) placed.set(v);
    if (!search.dfs(placed, g.full_vertex_set(), 0)) return std::nullopt;

    std::vector<int> ordering = search.prefix;
    Bitset in_order(n);
    for (int v : ordering) in_order.set(v);
    for (int v = 0; v < n; ++v)
        if (!in_order.test(v) && g.degree(v) > 0) ordering.push_back(v);
    auto cert = make_chain_certificate(g, all, std::move(ordering));
    assert(verify_certificate(g, all, cert));
    return cert;
}

// ---------------------------------------------------------------------------
// Enumeration of maximal interval-order subgraphs.
//
// Depth-first over ordering prefixes. The state is (placed set, running
// intersection P, accumulated edges); three reductions keep the tree small
// without losing any maximal subgraph:
//   - every unplaced vertex whose neighborhood contains P is appended in one
//     block (P stays intact and the internal order does not matter);
//   - when |P| = 2 the only maximal continuations finish with the star of
//     one of the two members of P;
//   - a branch that cannot add an edge is skipped unless no branch can.

namespace {

using FoundMap = std::unordered_map<Bitset, std::vector<int>, Bitset::Hash>;

struct EnumWorker {
    const Graph& g;
    WorkBudget& budget;
    std::vector<int> prefix;
    FoundMap local;

    EnumWorker(const Graph& graph, WorkBudget& b) : g(graph), budget(b) {}

    void emit(const EdgeSet& edges, const std::vector<int>& tail = {}) {
        if (local.count(edges.bits)) return;
        std::vector<int> ordering = prefix;
        ordering.insert(ordering.end(), tail.begin(), tail.end());
        local.emplace(edges.bits, std::move(ordering));
    }

    void dfs(Bitset placed, Bitset running, EdgeSet acc) {
        const std::size_t entry_size = prefix.size();

        bool appended = true;
        while (appended) {
            if (running.none()) {
                emit(acc);
                prefix.resize(entry_size);
                return;
            }
            appended = false;
            for (int w = 0; w < g.vertex_count(); ++w) {
                if (placed.test(w) || !running.is_subset_of(g.neighbors(w))) continue;
                budget.charge(1, "enumerate_maximal_io");
                placed.set(w);
                prefix.push_back(w);
                running.for_each([&](int x) { acc.bits.set(g.edge_id(w, x)); });
                appended = true;
            }
        }

        int rc = running.count();
        if (rc == 1) {
            emit(acc);
        } else if (rc == 2) {
            int u = running.find_first();
            int v = running.find_next(u);
            for (int center : {u, v}) {
                EdgeSet ext = acc;
                std::vector<int> tail;
                Bitset star = g.neighbors(center);
                star.subtract(placed);
                star.for_each([&](int w) {
                    budget.charge(1, "enumerate_maximal_io");
                    tail.push_back(w);
                    ext.bits.set(g.edge_id(center, w));
                });
                emit(ext, tail);
            }
        } else {
            bool branched = false;
            for (int w = 0; w < g.vertex_count(); ++w) {
                if (placed.test(w)) continue;
                Bitset next = running & g.neighbors(w);
                if (next.none()) continue;
                branched = true;
                budget.charge(1, "enumerate_maximal_io");
                EdgeSet acc2 = acc;
                next.for_each([&](int x) { acc2.bits.set(g.edge_id(w, x)); });
                Bitset placed2 = placed;
                placed2.set(w);
                prefix.push_back(w);
                dfs(placed2, next, std::move(acc2));
                prefix.pop_back();
            }
            if (!branched) emit(acc);
        }
        prefix.resize(entry_size);
    }

    void run_root(int first) {
        prefix.assign(1, first);
        Bitset placed(g.vertex_count());
        placed.set(first);
        Bitset running = g.neighbors(first);
        budget.charge(1, "enumerate_maximal_io");
        EdgeSet acc(g);
        running.for_each([&](int x) { acc.bits.set(g.edge_id(first, x)); });
        dfs(std::move(placed), std::move(running), std::move(acc));
    }
};

}  // namespace

std::vector<IoSubgraph> enumerate_maximal_io(const Graph& g, const EnumerateOptions& opts) {
    const int n = g.vertex_count();
    WorkBudget budget(opts.budget);

    EdgeSet empty(g);
    if (g.edge_count() == 0) {
        return {IoSubgraph{empty, make_chain_certificate(g, empty, {})}};
    }

    std::vector<int> roots;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0) roots.push_back(v);

    FoundMap found;
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || roots.size() <= 1) {
        EnumWorker worker(g, budget);
        for (int r : roots) worker.run_root(r);
        found = std::move(worker.local);
    } else {
        std::mutex merge_mutex;
        std::atomic<std::size_t> next_root{0};
        std::vector<std::thread> threads;
        std::exception_ptr error;
        for (int t = 0; t < std::min<int>(jobs, static_cast<int>(roots.size())); ++t) {
            threads.emplace_back([&] {
                EnumWorker worker(g, budget);
                bool ok = true;
                try {
                    while (true) {
                        std::size_t i = next_root.fetch_add(1);
                        if (i >= roots.size()) break;
                        worker.run_root(roots[i]);
                    }
                } catch (...) {
                    ok = false;
                    std::scoped_lock lock(merge_mutex);
                    if (!error) error = std::current_exception();
                }
                if (ok) {
                    std::scoped_lock lock(merge_mutex);
                    for (auto& [bits, ord] : worker.local)
                        found.emplace(bits, std::move(ord));
                }
            });
        }
        for (auto& th : threads) th.join();
        if (error) std::rethrow_exception(error);
    }

    // Keep only inclusion-maximal edge sets; a set can only be contained in a
    // strictly larger one, so scan in decreasing size order.
    std::vector<std::pair<Bitset, const std::vector<int>*>> entries;
    entries.reserve(found.size());
    for (auto& [bits, ord] : found) entries.emplace_back(bits, &ord);
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        int ca = a.first.count(), cb = b.first.count();
        if (ca != cb) return ca > cb;
        return lex_less(a.first, b.first);
    });
    std::vector<IoSubgraph> result;
    std::vector<const Bitset*> kept;
    for (auto& [bits, ord] : entries) {
        bool dominated = false;
        for (const Bitset* big : kept) {
            if (bits.count() < big->count() && bits.is_subset_of(*big)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        kept.push_back(&bits);
        auto built = build_gsigma(g, *ord);
        if (!(built.edges.bits == bits))
            throw std::logic_error("enumerate_maximal_io: witness ordering does not rebuild the subgraph");
        result.push_back(IoSubgraph{std::move(built.edges), std::move(built.cert)});
    }
    std::sort(result.begin(), result.end(), [](const IoSubgraph& a, const IoSubgraph& b) {
        return lex_less(a.edges.bits, b.edges.bits);
    });
    return result;
}

}  // namespace boxi
