#include "boxi/lkn_catalog.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

#include "boxi/errors.hpp"

namespace boxi {

LknHost LknHost::make(int n) {
    if (n < 3) throw InputError("LknHost: n must be at least 3");
    LknHost host;
    host.n = n;
    host.line = line_graph(complete_graph(n));
    host.line_vertices.reserve(static_cast<std::size_t>(host.line.vertex_count()));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) host.line_vertices.emplace_back(u, v);
    return host;
}

int LknHost::lv_id(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw InputError("line vertex endpoints out of range");
    if (u > v) std::swap(u, v);
    // Lexicographic rank of (u, v) among the pairs of [0, n).
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

namespace {

void require_distinct(std::initializer_list<int> vs, int n) {
    std::vector<int> v(vs);
    for (int x : v)
        if (x < 0 || x >= n) throw InputError("catalog: base vertex out of range");
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw InputError("catalog: repeated base vertex");
}

}  // namespace

EdgeSet primitive_edge_set(const LknHost& host, const Primitive& p) {
    EdgeSet out(host.line);
    const int n = host.n;
    auto add = [&](int lv_a, int lv_b) {
        int id = host.edge_id(lv_a, lv_b);
        assert(id >= 0);
        out.bits.set(id);
    };
    if (const auto* q = std::get_if<PrimQ>(&p)) {
        require_distinct({q->v}, n);
        for (int x = 0; x < n; ++x) {
            if (x == q->v) continue;
            for (int y = x + 1; y < n; ++y)
                if (y != q->v) add(host.lv_id(q->v, x), host.lv_id(q->v, y));
        }
    } else if (const auto* d = std::get_if<PrimDelta>(&p)) {
        require_distinct({d->u, d->v}, n);
        int e = host.lv_id(d->u, d->v);
        for (int w = 0; w < n; ++w) {
            if (w == d->u || w == d->v) continue;
            add(e, host.lv_id(d->u, w));
            add(e, host.lv_id(d->v, w));
        }
    } else if (const auto* dm = std::get_if<PrimDeltaMinus>(&p)) {
        require_distinct({dm->u, dm->v}, n);
        int e = host.lv_id(dm->u, dm->v);
        for (int w = 0; w < n; ++w) {
            if (w == dm->u || w == dm->v) continue;
            add(e, host.lv_id(dm->u, w));
        }
    } else if (const auto* k = std::get_if<PrimClique>(&p)) {
        for (int x : k->vertices) require_distinct({x}, n);
        std::vector<int> u = k->vertices;
        std::sort(u.begin(), u.end());
        if (std::adjacent_find(u.begin(), u.end()) != u.end())
            throw InputError("catalog: repeated base vertex");
        std::vector<int> lvs;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = i + 1; j < u.size(); ++j) lvs.push_back(host.lv_id(u[i], u[j]));
        for (std::size_t i = 0; i < lvs.size(); ++i)
            for (std::size_t j = i + 1; j < lvs.size(); ++j)
                if (host.line.adjacent(lvs[i], lvs[j])) add(lvs[i], lvs[j]);
    } else if (const auto* km = std::get_if<PrimKTripleMinus>(&p)) {
        require_distinct({km->u, km->v, km->w}, n);
        add(host.lv_id(km->u, km->v), host.lv_id(km->u, km->w));
        add(host.lv_id(km->u, km->v), host.lv_id(km->v, km->w));
    }
    return out;
}

CatalogDescriptor type_a(int a, int b, int c, int d, int e) {
    return CatalogDescriptor{CatalogKind::TypeA, {a, b, c, d, e}};
}
CatalogDescriptor type_b(int a, int b, int c, int d) {
    return CatalogDescriptor{CatalogKind::TypeB, {a, b, c, d, 0}};
}
CatalogDescriptor type_cf(int a, int b, int c, int d) {
    return CatalogDescriptor{CatalogKind::TypeCF, {a, b, c, d, 0}};
}
CatalogDescriptor type_cf_prime(int a, int b, int c, int d) {
    return CatalogDescriptor{CatalogKind::TypeCFPrime, {a, b, c, d, 0}};
}

std::string to_string(const CatalogDescriptor& d) {
    std::string tag;
    switch (d.kind) {
        case CatalogKind::TypeA: tag = "A"; break;
        case CatalogKind::TypeB: tag = "B"; break;
        case CatalogKind::TypeCF: tag = "CF"; break;
        case CatalogKind::TypeCFPrime: tag = "CF'"; break;
    }
    for (int i = 0; i < d.arity(); ++i) tag += " " + std::to_string(d.v[i]);
    return tag;
}

CatalogDescriptor parse_descriptor(const std::string& line) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    CatalogDescriptor d{};
    if (tag == "A")
        d.kind = CatalogKind::TypeA;
    else if (tag == "B")
        d.kind = CatalogKind::TypeB;
    else if (tag == "CF")
        d.kind = CatalogKind::TypeCF;
    else if (tag == "CF'")
        d.kind = CatalogKind::TypeCFPrime;
    else
        throw InputError("unknown descriptor tag \"" + tag + "\"");
    for (int i = 0; i < d.arity(); ++i)
        if (!(in >> d.v[i])) throw InputError("descriptor \"" + line + "\": missing argument");
    int extra;
    if (in >> extra) throw InputError("descriptor \"" + line + "\": trailing argument");
    return d;
}

namespace {

void check_descriptor(const LknHost& host, const CatalogDescriptor& d) {
    if (host.n < 5) throw InputError("catalog: requires n >= 5");
    if (d.arity() == 5)
        require_distinct({d.v[0], d.v[1], d.v[2], d.v[3], d.v[4]}, host.n);
    else
        require_distinct({d.v[0], d.v[1], d.v[2], d.v[3]}, host.n);
}

}  // namespace

EdgeSet catalog_edge_set(const LknHost& host, const CatalogDescriptor& d) {
    check_descriptor(host, d);
    const int a = d.v[0], b = d.v[1], c = d.v[2];
    EdgeSet out(host.line);
    switch (d.kind) {
        case CatalogKind::TypeA: {
            const int dd = d.v[3], e = d.v[4];
            out.bits |= primitive_edge_set(host, PrimQ{a}).bits;
            out.bits |= primitive_edge_set(host, PrimDelta{a, b}).bits;
            out.bits |= primitive_edge_set(host, PrimDelta{a, dd}).bits;
            out.bits |= primitive_edge_set(host, PrimClique{{a, b, c}}).bits;
            out.bits |= primitive_edge_set(host, PrimClique{{a, dd, e}}).bits;
            break;
        }
        case CatalogKind::TypeB: {
            const int dd = d.v[3];
            out.bits |= primitive_edge_set(host, PrimDelta{a, b}).bits;
            out.bits |= primitive_edge_set(host, PrimDelta{a, dd}).bits;
            out.bits |= primitive_edge_set(host, PrimClique{{a, b, c, dd}}).bits;
            break;
        }
        case CatalogKind::TypeCF:
        case CatalogKind::TypeCFPrime: {
            const int dd = d.v[3];
            out.bits |= primitive_edge_set(host, PrimDelta{a, b}).bits;
            if (d.kind == CatalogKind::TypeCF)
                out.bits |= primitive_edge_set(host, PrimDelta{a, dd}).bits;
            else
                out.bits |= primitive_edge_set(host, PrimDelta{b, c}).bits;
            out.bits |= primitive_edge_set(host, PrimDeltaMinus{a, c}).bits;
            out.bits |= primitive_edge_set(host, PrimClique{{a, b, c}}).bits;
            out.bits |= primitive_edge_set(host, PrimClique{{a, b, dd}}).bits;
            out.bits |= primitive_edge_set(host, PrimKTripleMinus{a, dd, c}).bits;
            out.bits |= primitive_edge_set(host, PrimKTripleMinus{b, c, dd}).bits;
            break;
        }
    }
    return out;
}

EdgeSet catalog_edge_set(int n, const CatalogDescriptor& d) {
    return catalog_edge_set(LknHost::make(n), d);
}

std::vector<int> catalog_ordering(const LknHost& host, const CatalogDescriptor& d) {
    check_descriptor(host, d);
    const int n = host.n;
    const int a = d.v[0], b = d.v[1], c = d.v[2], dd = d.v[3];
    std::vector<int> order;
    auto push = [&](int u, int v) { order.push_back(host.lv_id(u, v)); };
    // Appends the still-unlisted line-graph neighbors of the line vertex
    // {u,v} in ascending id order.
    auto push_star = [&](int u, int v) {
        Bitset placed(host.line.vertex_count());
        for (int lv : order) placed.set(lv);
        host.line.neighbors(host.lv_id(u, v)).for_each([&](int w) {
            if (!placed.test(w)) order.push_back(w);
        });
    };
    switch (d.kind) {
        case CatalogKind::TypeA: {
            const int e = d.v[4];
            push(a, b);
            push(a, c);
            for (int w = 0; w < n; ++w)
                if (w != a && w != b && w != c && w != dd && w != e) push(a, w);
            push(dd, e);
            for (int w = 0; w < n; ++w)
                if (w != a && w != dd && w != e) push(dd, w);
            push(a, e);
            break;
        }
        case CatalogKind::TypeB:
            push(a, b);
            push(c, dd);
            push(a, c);
            push(b, dd);
            push_star(a, dd);
            break;
        case CatalogKind::TypeCF:
            push(a, b);
            push(a, c);
            push(b, dd);
            push(c, dd);
            push_star(a, dd);
            break;
        case CatalogKind::TypeCFPrime:
            push(a, b);
            push(a, c);
            push(b, dd);
            push(c, dd);
            push_star(b, c);
            break;
    }
    return order;
}

std::array<int, 3> core_triple(const CatalogDescriptor& d) {
    // delta_ab U delta_ad for types A, B, F; delta_ba U delta_bc for F'.
    if (d.kind == CatalogKind::TypeCFPrime) return {d.v[1], d.v[0], d.v[2]};
    return {d.v[0], d.v[1], d.v[3]};
}

std::vector<CatalogEntry> enumerate_catalog(int n) {
    return enumerate_catalog(LknHost::make(n));
}

std::vector<CatalogEntry> enumerate_catalog(const LknHost& host) {
    const int n = host.n;
    if (n < 5) throw InputError("enumerate_catalog: requires n >= 5");

    std::vector<CatalogDescriptor> descriptors;
    // TypeA: the unordered pairs (b,c) and (d,e) are exchangeable; keep the
    // lexicographically smaller arrangement.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e) {
                        if (a == b || a == c || a == d || a == e || b == c || b == d || b == e ||
                            c == d || c == e || d == e)
                            continue;
                        if (b > d) continue;  // (b,c) before (d,e)
                        descriptors.push_back(type_a(a, b, c, d, e));
                    }
    // TypeB: b and d are exchangeable; keep b < d.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = b + 1; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || c == d) continue;
                    descriptors.push_back(type_b(a, b, c, d));
                }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    descriptors.push_back(type_cf(a, b, c, d));
                    descriptors.push_back(type_cf_prime(a, b, c, d));
                }

    std::unordered_map<Bitset, CatalogDescriptor, Bitset::Hash> dedup;
    for (const auto& d : descriptors) {
        EdgeSet es = catalog_edge_set(host, d);
        dedup.emplace(std::move(es.bits), d);
    }

    // Maximality filter among the generated sets: a set can only be contained
    // in a strictly larger one.
    std::vector<std::pair<Bitset, CatalogDescriptor>> all(dedup.begin(), dedup.end());
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        int cx = x.first.count(), cy = y.first.count();
        if (cx != cy) return cx > cy;
        return lex_less(x.first, y.first);
    });
    std::vector<CatalogEntry> result;
    for (auto& [bits, desc] : all) {
        bool dominated = false;
        for (const auto& kept : result) {
            if (bits.count() < kept.edges.count() && bits.is_subset_of(kept.edges.bits)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) result.push_back(CatalogEntry{desc, EdgeSet(bits)});
    }
    std::sort(result.begin(), result.end(), [](const CatalogEntry& x, const CatalogEntry& y) {
        if (x.descriptor.kind != y.descriptor.kind) return x.descriptor.kind < y.descriptor.kind;
        return std::lexicographical_compare(x.descriptor.v.begin(),
                                            x.descriptor.v.begin() + x.descriptor.arity(),
                                            y.descriptor.v.begin(),
                                            y.descriptor.v.begin() + y.descriptor.arity());
    });
    return result;
}

}  // namespace boxi
