#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gbskit/errors.hpp"
#include "gbskit/word.hpp"

namespace gbskit {

struct GbsEdge {
  std::string name;
  int origin = 0;
  int terminus = 0;
  Int label_origin;    // nonzero
  Int label_terminus;  // nonzero
  friend bool operator==(const GbsEdge&, const GbsEdge&) = default;
};

// Finite connected graph with Z vertex and edge groups. For an edge e: u -> v
// with labels (lo, lt), traversing e forward conjugates a_v^{lo*s} into
// a_u^{lt*s}; on a one-vertex graph the loop relation reads t a^lo t^-1 = a^lt.
struct GbsGraph {
  std::vector<std::string> vertices;
  std::vector<GbsEdge> edges;
  int base = 0;
  friend bool operator==(const GbsGraph&, const GbsGraph&) = default;

  int vertex_index(std::string_view name) const;  // -1 when absent
  int edge_index(std::string_view name) const;    // -1 when absent
};

struct ValidationReport {
  bool connected = false;
  int components = 0;
  int vertex_count = 0;
  int edge_count = 0;
  int betti = 0;  // edges outside a spanning forest
  std::string base;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Text format:  vertex NAME | edge NAME : FROM -> TO [INT, INT] | base NAME,
// one statement per line, '#' starts a comment. Throws GbsError with the
// offending 1-based line number.
GbsGraph parse_graph(const std::string& text);
std::string serialize_graph(const GbsGraph& g);
ValidationReport validate_graph(const GbsGraph& g);

// Base-rooted BFS tree; ties broken by edge declaration order.
struct SpanningTree {
  std::vector<int> tree_edges;   // ascending edge indices
  std::vector<int> parent_edge;  // per vertex; -1 at base
  std::vector<int> parent_dir;   // +1 when the tree edge enters the vertex forward
  std::vector<char> in_tree_flag;
  bool in_tree(int edge) const { return in_tree_flag[edge] != 0; }
};

SpanningTree spanning_tree(const GbsGraph& g);
std::vector<PathLetter> tree_path_from_base(const GbsGraph& g, const SpanningTree& t, int v);

// ---- path word geometry -------------------------------------------------

int end_vertex(const GbsGraph& g, const PathWord& w);
int vertex_at(const GbsGraph& g, const PathWord& w, std::size_t position);
bool path_valid(const GbsGraph& g, const PathWord& w);
PathWord inverse(const GbsGraph& g, const PathWord& w);
// Closed words only; repeats |k| times (inverted for k < 0), capped by
// lim.max_expansion letters.
PathWord power(const GbsGraph& g, const PathWord& w, const Int& k, const Limits& lim = {});
std::string serialize_path_word(const GbsGraph& g, const PathWord& w);

// ---- presentation ---------------------------------------------------------

// Spanning-tree presentation: generators are the vertex generators followed
// by the non-tree edge letters, in declaration order.
struct Presentation {
  std::vector<Generator> generators;
  std::vector<UserWord> relators;  // one per edge, declaration order
};

Presentation presentation(const GbsGraph& g);
int generator_slot(const GbsGraph& g, const SpanningTree& t, const Generator& gen);
std::string generator_name(const GbsGraph& g, const Generator& gen);

// Word syntax: whitespace-separated tokens NAME or NAME^INT over presentation
// generator names. Unknown names report the 1-based token position.
UserWord parse_user_word(const GbsGraph& g, const std::string& text);
std::string serialize_user_word(const GbsGraph& g, const UserWord& w);

// Vertex generators lift through the tree, stable letters close their loop
// through the tree; the result is a loop at base. Tree-edge letters in w are
// rejected (Errc::tree_edge_letter).
PathWord lift_user_word(const GbsGraph& g, const UserWord& w, const Limits& lim = {});
PathWord lift_user_word(const GbsGraph& g, const SpanningTree& t, const UserWord& w,
                        const Limits& lim = {});

// Inverse direction: drop tree letters. Composed with lift this is the
// identity on the group, which the tests exercise.
UserWord project_to_presentation(const GbsGraph& g, const SpanningTree& t, const PathWord& w);

}  // namespace gbskit
