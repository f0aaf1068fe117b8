#pragma once

#include "gbskit/modular.hpp"
#include "gbskit/word.hpp"

namespace gbskit {

// One elementary collapse: `edge` (non-loop, with a unit label) is removed
// from the stage graph, `dead` merges into `kept` with a_dead = a_kept^scale.
// With the forward relation e a_t^{lo*s} e^-1 = a_o^{lt*s}, a unit lo kills
// the terminus and a unit lt kills the origin; scale is lo*lt either way.
// Surviving labels scale on the side that faced the dead vertex.
struct CollapseStep {
  int edge = 0;
  int dead = 0;
  int kept = 0;
  Int scale;
};

struct GraphReduction {
  GbsGraph reduced;
  std::vector<CollapseStep> steps;
  std::vector<GbsGraph> stages;  // graph before each step
};

// Scans edges in declaration order, collapsing the first non-loop edge with a
// unit label, until none applies. Group-preserving; map_through_reduction
// realizes the isomorphism on words.
GraphReduction reduce_graph(const GbsGraph& g);
PathWord map_through_reduction(const GraphReduction& r, const PathWord& w);

enum class QiKind { trivial_z, virtually_z2, solvable_bs1n, virtually_fn_x_z, bs23_class };

const char* qi_kind_name(QiKind k);

struct QiClass {
  QiKind kind = QiKind::trivial_z;
  Int solvable_n;  // set for solvable_bs1n
  GbsGraph reduced;
  DeltaImage delta;     // of the reduced graph
  int theorem_case = 0;  // 1, 2, 3; 0 = elementary
  std::string note;
};

// Trichotomy on the reduced graph: no edges; a single unit-unit loop; a
// single loop with exactly one unit label; otherwise the modular image
// decides between the unimodular class and the remaining one.
QiClass qi_class(const GbsGraph& g);

}  // namespace gbskit
