#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "boxi/graph.hpp"
#include "boxi/interval_order.hpp"

namespace boxi {

// The line graph of K_n with its line-vertex bookkeeping: line vertex ids are
// lexicographic over the pairs {u,v}, matching line_graph(complete_graph(n)).
struct LknHost {
    int n = 0;
    Graph line;
    std::vector<LineVertex> line_vertices;

    static LknHost make(int n);
    int lv_id(int u, int v) const;
    int edge_id(int lv_a, int lv_b) const { return line.edge_id(lv_a, lv_b); }
};

// Edge-set primitives over L(K_n), named after the base-graph objects they
// come from.
struct PrimQ {
    int v;  // clique formed by the base edges at v; (n-1)(n-2)/2 edges
};
struct PrimDelta {
    int u, v;  // star of the line vertex uv; 2(n-2) edges
};
struct PrimDeltaMinus {
    int u, v;  // half star: only neighbors through u; n-2 edges
};
struct PrimClique {
    std::vector<int> vertices;  // edge set of L(K_n[U])
};
struct PrimKTripleMinus {
    int u, v, w;  // exactly {(uv,uw), (uv,vw)}
};
using Primitive = std::variant<PrimQ, PrimDelta, PrimDeltaMinus, PrimClique, PrimKTripleMinus>;

EdgeSet primitive_edge_set(const LknHost& host, const Primitive& p);

enum class CatalogKind { TypeA, TypeB, TypeCF, TypeCFPrime };

// Symbolic name of a maximal interval-order subgraph of L(K_n). TypeA takes
// five base vertices (a,b,c,d,e), the others four (a,b,c,d).
struct CatalogDescriptor {
    CatalogKind kind;
    std::array<int, 5> v{};  // v[4] unused except for TypeA

    int arity() const { return kind == CatalogKind::TypeA ? 5 : 4; }
    friend bool operator==(const CatalogDescriptor& a, const CatalogDescriptor& b) {
        if (a.kind != b.kind) return false;
        for (int i = 0; i < a.arity(); ++i)
            if (a.v[i] != b.v[i]) return false;
        return true;
    }
};

CatalogDescriptor type_a(int a, int b, int c, int d, int e);
CatalogDescriptor type_b(int a, int b, int c, int d);
CatalogDescriptor type_cf(int a, int b, int c, int d);
CatalogDescriptor type_cf_prime(int a, int b, int c, int d);

std::string to_string(const CatalogDescriptor& d);
CatalogDescriptor parse_descriptor(const std::string& line);

// The exact edge set of the descriptor over L(K_n), n >= 5.
EdgeSet catalog_edge_set(const LknHost& host, const CatalogDescriptor& d);
EdgeSet catalog_edge_set(int n, const CatalogDescriptor& d);

// The construction ordering whose interval-order subgraph is exactly the
// descriptor's edge set; feed it to build_gsigma for a certificate.
std::vector<int> catalog_ordering(const LknHost& host, const CatalogDescriptor& d);

// The two base vertices x,y such that the member contains the double star
// delta_xy union delta_xz; (x,y,z) is the member's core triple.
std::array<int, 3> core_triple(const CatalogDescriptor& d);

struct CatalogEntry {
    CatalogDescriptor descriptor;
    EdgeSet edges;
};

// All maximal interval-order subgraphs of L(K_n): every canonical descriptor
// instantiated, deduplicated by edge set, then filtered to inclusion-maximal
// sets. Sorted by descriptor for reproducible output.
std::vector<CatalogEntry> enumerate_catalog(int n);
std::vector<CatalogEntry> enumerate_catalog(const LknHost& host);

}  // namespace boxi
