#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "boxi/cover.hpp"
#include "boxi/graph.hpp"
#include "boxi/line_box.hpp"

namespace boxi {

// Cover certificate file. Line 1 is "target-edges <count>". Each member
// block starts with its catalog descriptor ("A 0 1 2 3 4"), a permutation
// tag ("perm 1 2 3"), or the word "explicit"; perm and explicit blocks carry
// "edges <k>" followed by k lines "x y". Every block ends with its
// certificate: "ordering <ids>" and one "nplus <ids>" line per position.
// The file closes with "complete true|false". '#' starts a comment line.
//
// Descriptor members are expanded against L(K_n); the host's vertex ids must
// then enumerate the pairs of [n] lexicographically, which holds for every
// host this toolkit writes.
void write_cover(std::ostream& out, const Graph& host, const Cover& cover);
Cover read_cover(std::istream& in, const Graph& host);

// One permutation per line: n ranks, a bijection onto [1, n].
void write_permutations(std::ostream& out, const std::vector<BasePermutation>& perms);
std::vector<BasePermutation> read_permutations(std::istream& in, int n);

// File helpers used by the CLI.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Graph read_graph_file(const std::string& path);

}  // namespace boxi
