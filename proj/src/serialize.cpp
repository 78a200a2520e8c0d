#include "boxi/serialize.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "boxi/errors.hpp"
#include "boxi/lkn_catalog.hpp"

namespace boxi {

namespace {

void write_certificate(std::ostream& out, const ChainCertificate& cert) {
    out << "ordering";
    for (int v : cert.ordering) out << ' ' << v;
    out << '\n';
    for (const auto& np : cert.out_neighborhoods) {
        out << "nplus";
        for (int v : np) out << ' ' << v;
        out << '\n';
    }
}

// Line-based reader that skips comments and blank lines and tracks numbers.
struct LineReader {
    std::istream& in;
    int line_no = 0;
    std::string current;

    bool next() {
        while (std::getline(in, current)) {
            ++line_no;
            std::istringstream probe(current);
            std::string tok;
            if (!(probe >> tok)) continue;
            if (tok[0] == '#') continue;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no, msg); }
};

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int to_int(const std::string& tok, const LineReader& reader) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(reader.line_no, "expected an integer, got \"" + tok + "\"");
    }
}

// n with C(n,2) equal to the host vertex count, required by descriptor
// members.
int base_n_of_host(const Graph& host, const LineReader& reader) {
    int m = host.vertex_count();
    int n = static_cast<int>((1 + std::sqrt(1.0 + 8.0 * m)) / 2);
    for (int cand = std::max(3, n - 1); cand <= n + 1; ++cand)
        if (cand * (cand - 1) / 2 == m) return cand;
    reader.fail("descriptor member requires a host with C(n,2) vertices");
}

}  // namespace

void write_cover(std::ostream& out, const Graph& host, const Cover& cover) {
    out << "target-edges " << cover.target.count() << '\n';
    for (const CoverMember& m : cover.members) {
        bool explicit_edges = true;
        if (m.descriptor) {
            out << to_string(*m.descriptor) << '\n';
            explicit_edges = false;
        } else if (m.perm_ranks) {
            out << "perm";
            for (int r : *m.perm_ranks) out << ' ' << r;
            out << '\n';
        } else {
            out << "explicit\n";
        }
        if (explicit_edges) {
            out << "edges " << m.edges.count() << '\n';
            for (auto [x, y] : edge_pairs(host, m.edges)) out << x << ' ' << y << '\n';
        }
        write_certificate(out, m.cert);
    }
    out << "complete " << (cover.complete ? "true" : "false") << '\n';
}

Cover read_cover(std::istream& in, const Graph& host) {
    LineReader reader{in, 0, {}};
    if (!reader.next()) reader.fail("missing target-edges header");
    auto header = tokens_of(reader.current);
    if (header.size() != 2 || header[0] != "target-edges")
        reader.fail("expected \"target-edges <count>\"");
    int target_count = to_int(header[1], reader);

    Cover cover;
    cover.target = EdgeSet(host);
    cover.target.bits.fill();
    if (cover.target.count() != target_count)
        reader.fail("target-edges " + std::to_string(target_count) +
                    " does not match the host's " + std::to_string(cover.target.count()));

    bool saw_complete = false;
    while (reader.next()) {
        auto toks = tokens_of(reader.current);
        if (toks[0] == "complete") {
            if (toks.size() != 2 || (toks[1] != "true" && toks[1] != "false"))
                reader.fail("expected \"complete true|false\"");
            cover.complete = toks[1] == "true";
            saw_complete = true;
            break;
        }
        CoverMember member;
        member.edges = EdgeSet(host);
        bool explicit_edges = true;
        if (toks[0] == "A" || toks[0] == "B" || toks[0] == "CF" || toks[0] == "CF'") {
            CatalogDescriptor desc = parse_descriptor(reader.current);
            int n = base_n_of_host(host, reader);
            LknHost lkn = LknHost::make(n);
            EdgeSet on_lkn = catalog_edge_set(lkn, desc);
            on_lkn.bits.for_each([&](int id) {
                auto [x, y] = lkn.line.edge_endpoints(id);
                int host_id = host.edge_id(x, y);
                if (host_id < 0)
                    reader.fail("descriptor edge " + std::to_string(x) + "-" + std::to_string(y) +
                                " is not an edge of the host");
                member.edges.bits.set(host_id);
            });
            member.descriptor = desc;
            explicit_edges = false;
        } else if (toks[0] == "perm") {
            std::vector<int> ranks;
            for (std::size_t i = 1; i < toks.size(); ++i) ranks.push_back(to_int(toks[i], reader));
            member.perm_ranks = std::move(ranks);
        } else if (toks[0] != "explicit") {
            reader.fail("unknown member tag \"" + toks[0] + "\"");
        }
        if (explicit_edges) {
            if (!reader.next()) reader.fail("missing edges section");
            auto etoks = tokens_of(reader.current);
            if (etoks.size() != 2 || etoks[0] != "edges") reader.fail("expected \"edges <k>\"");
            int k = to_int(etoks[1], reader);
            for (int i = 0; i < k; ++i) {
                if (!reader.next()) reader.fail("missing edge line");
                auto pair = tokens_of(reader.current);
                if (pair.size() != 2) reader.fail("edge line must be \"x y\"");
                int x = to_int(pair[0], reader), y = to_int(pair[1], reader);
                if (x < 0 || y < 0 || x >= host.vertex_count() || y >= host.vertex_count())
                    reader.fail("member edge endpoint out of range");
                int id = host.edge_id(x, y);
                if (id < 0) reader.fail("member edge is not an edge of the host");
                member.edges.bits.set(id);
            }
        }
        if (!reader.next()) reader.fail("missing ordering line");
        auto otoks = tokens_of(reader.current);
        if (otoks[0] != "ordering") reader.fail("expected \"ordering <ids>\"");
        for (std::size_t i = 1; i < otoks.size(); ++i)
            member.cert.ordering.push_back(to_int(otoks[i], reader));
        for (std::size_t i = 0; i < member.cert.ordering.size(); ++i) {
            if (!reader.next()) reader.fail("missing nplus line");
            auto ntoks = tokens_of(reader.current);
            if (ntoks[0] != "nplus") reader.fail("expected \"nplus <ids>\"");
            std::vector<int> np;
            for (std::size_t j = 1; j < ntoks.size(); ++j) np.push_back(to_int(ntoks[j], reader));
            member.cert.out_neighborhoods.push_back(std::move(np));
        }
        cover.members.push_back(std::move(member));
    }
    if (!saw_complete) reader.fail("missing trailing \"complete true|false\"");
    return cover;
}

void write_permutations(std::ostream& out, const std::vector<BasePermutation>& perms) {
    for (const auto& pi : perms) {
        for (int i = 0; i < pi.size(); ++i) out << (i ? " " : "") << pi.ranks[i];
        out << '\n';
    }
}

std::vector<BasePermutation> read_permutations(std::istream& in, int n) {
    LineReader reader{in, 0, {}};
    std::vector<BasePermutation> perms;
    while (reader.next()) {
        auto toks = tokens_of(reader.current);
        BasePermutation pi;
        for (const auto& t : toks) pi.ranks.push_back(to_int(t, reader));
        try {
            check_permutation(pi, n);
        } catch (const InputError& e) {
            reader.fail(e.what());
        }
        perms.push_back(std::move(pi));
    }
    return perms;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file \"" + path + "\"");
    out << content;
}

Graph read_graph_file(const std::string& path) {
    try {
        return parse_edge_list(read_text_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace boxi
