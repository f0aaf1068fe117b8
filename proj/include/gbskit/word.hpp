#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gbskit/numeric.hpp"

namespace gbskit {

// A generator of the spanning-tree presentation: one per vertex, plus one
// stable letter per non-tree edge.
struct Generator {
  enum Kind : std::uint8_t { vertex_gen, edge_letter };
  Kind kind = vertex_gen;
  int index = 0;  // vertex or edge index in the owning graph
  friend bool operator==(const Generator&, const Generator&) = default;
};

// Word over presentation generators. Normalized form: exponents nonzero,
// adjacent equal generators merged.
struct UserWord {
  std::vector<std::pair<Generator, Int>> terms;
  friend bool operator==(const UserWord&, const UserWord&) = default;
};

UserWord normalized(UserWord w);
UserWord concat(const UserWord& a, const UserWord& b);
UserWord inverse(const UserWord& w);

// One traversal of an edge; dir +1 goes origin -> terminus.
struct PathLetter {
  int edge = 0;
  int dir = 1;
  friend bool operator==(const PathLetter&, const PathLetter&) = default;
};

inline PathLetter reversed(PathLetter l) { return {l.edge, -l.dir}; }

// Edge path carrying a vertex-group exponent between consecutive letters:
//   a^{exps[0]} L1 a^{exps[1]} ... Ln a^{exps[n]}   starting at `start`.
// Closed paths at the base vertex represent group elements; open paths show
// up as conjugators and tree segments. Always exps.size() == letters.size()+1.
struct PathWord {
  int start = 0;
  std::vector<Int> exps{Int(0)};
  std::vector<PathLetter> letters;
  friend bool operator==(const PathWord&, const PathWord&) = default;
};

PathWord path_at(int vertex);
// Structural concatenation (merges the boundary exponents). The caller is
// responsible for end(a) == start(b); path_valid() checks.
PathWord concat(const PathWord& a, const PathWord& b);
PathWord concat(const PathWord& a, const PathWord& b, const PathWord& c);

}  // namespace gbskit
