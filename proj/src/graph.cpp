#include "boxi/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "boxi/errors.hpp"

namespace boxi {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_pairs,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw InputError("negative vertex count");
    if (!labels_.empty()) {
        if (static_cast<int>(labels_.size()) != n)
            throw InputError("label count does not match vertex count");
        std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
        if (static_cast<int>(seen.size()) != n) throw InputError("duplicate vertex labels");
    }
    adj_.assign(n_, Bitset(n_));
    for (auto [u, v] : edge_pairs) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("loop edge rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) edges_.emplace_back(u, v);
        });
    edge_id_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        auto [u, v] = edges_[id];
        edge_id_[pack(u, v)] = id;
        edge_id_[pack(v, u)] = id;
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_complete() const {
    return 2 * edge_count() == n_ * (n_ - 1);
}

Bitset Graph::full_vertex_set() const {
    Bitset s(n_);
    s.fill();
    return s;
}

Bitset Graph::full_edge_set() const {
    Bitset s(edge_count());
    s.fill();
    return s;
}

Graph complete_graph(int n) {
    if (n < 0) throw InputError("complete_graph: negative n");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return Graph(n, es, g.labels());
}

Graph line_graph(const Graph& g) {
    const auto& base = g.edges();
    int m = static_cast<int>(base.size());
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = base[i];
            auto [c, d] = base[j];
            int shared = (a == c) + (a == d) + (b == c) + (b == d);
            if (shared == 1) es.emplace_back(i, j);
        }
    std::vector<std::string> labels;
    labels.reserve(base.size());
    for (auto [u, v] : base)
        labels.push_back(std::to_string(u) + "," + std::to_string(v));
    return Graph(m, es, std::move(labels));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
            throw InputError("induced_subgraph: vertex id out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw InputError("induced_subgraph: duplicate vertex id");
    }
    std::vector<int> new_id(g.vertex_count(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) new_id[sorted[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0) es.emplace_back(new_id[u], new_id[v]);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v : sorted) labels.push_back(g.labels()[v]);
    return Graph(static_cast<int>(sorted.size()), es, std::move(labels));
}

Graph kneser_2(int n) {
    if (n < 5) throw InputError("kneser_2: n must be at least 5");
    return complement(line_graph(complete_graph(n)));
}

namespace {

int parse_int(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected an integer, got \"" + std::string(tok) + "\"");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0, m = 0, edges_seen = 0;
    std::vector<std::pair<int, int>> es;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') continue;
        if (!have_header) {
            if (toks.size() != 2) throw ParseError(line_no, "header must be \"n m\"");
            n = parse_int(toks[0], line_no);
            m = parse_int(toks[1], line_no);
            if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
            have_header = true;
        } else {
            if (edges_seen >= m) throw ParseError(line_no, "more edge lines than declared");
            if (toks.size() != 2) throw ParseError(line_no, "edge line must be \"u v\"");
            int u = parse_int(toks[0], line_no);
            int v = parse_int(toks[1], line_no);
            if (u == v) throw ParseError(line_no, "loop edge " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
            es.emplace_back(std::min(u, v), std::max(u, v));
            ++edges_seen;
        }
    }
    if (!have_header) throw ParseError(line_no ? line_no : 1, "missing \"n m\" header");
    if (edges_seen < m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges_seen));
    return Graph(n, es);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace boxi
