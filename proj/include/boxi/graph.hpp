#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boxi/bitset.hpp"

namespace boxi {

// An unordered pair {u, v} of base-graph vertices, i.e. a vertex of a line
// graph. Always normalized to u < v.
struct LineVertex {
    int u = 0;
    int v = 0;
    LineVertex() = default;
    LineVertex(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(LineVertex a, LineVertex b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(LineVertex a, LineVertex b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Simple undirected graph on vertices 0..n-1, immutable after construction.
// Adjacency is kept as one bit row per vertex so neighborhood intersections
// are cheap; the lexicographically sorted edge list and an edge-id lookup
// table are precomputed for edge-set indexing.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_pairs,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;

    // Edges sorted lexicographically as (u, v) with u < v. Edge ids used by
    // edge sets are indices into this list.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // -1 when uv is not an edge.
    int edge_id(int u, int v) const { return edge_id_[pack(u, v)]; }
    std::pair<int, int> edge_endpoints(int id) const { return edges_[id]; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_complete() const;

    // All-ones vertex set / edge set for this graph.
    Bitset full_vertex_set() const;
    Bitset full_edge_set() const;

private:
    std::size_t pack(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> edge_id_;
    std::vector<std::string> labels_;
};

Graph complete_graph(int n);
Graph complement(const Graph& g);

// One vertex per edge of g, in lexicographic edge order; two vertices are
// adjacent iff the underlying edges share exactly one endpoint. Vertices are
// labeled "u,v" by the base edge.
Graph line_graph(const Graph& g);

// Subgraph induced by the vertex set `keep` (duplicates and out-of-range ids
// rejected). Vertices are relabeled contiguously in ascending order of their
// original id; original labels are retained when present.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Kneser graph KG(n,2) = complement(line_graph(K_n)), n >= 5.
Graph kneser_2(int n);

// Edge-list text format: first line "n m", then m lines "u v"; '#' starts a
// comment line. Duplicate edges collapse, loops are rejected.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

}  // namespace boxi
