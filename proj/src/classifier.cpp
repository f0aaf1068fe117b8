#include "gbskit/classifier.hpp"

#include <sstream>

namespace gbskit {

namespace {

int remap_vertex(int v, const CollapseStep& step) {
  if (v == step.dead) v = step.kept;
  return v > step.dead ? v - 1 : v;
}

// first non-loop edge with a unit label, in declaration order
int find_collapsible(const GbsGraph& g) {
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const GbsEdge& edge = g.edges[e];
    if (edge.origin == edge.terminus) continue;
    if (edge.label_origin == 1 || edge.label_origin == -1 || edge.label_terminus == 1 ||
        edge.label_terminus == -1)
      return static_cast<int>(e);
  }
  return -1;
}

GbsGraph collapse_once(const GbsGraph& g, const CollapseStep& step) {
  GbsGraph out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (static_cast<int>(v) != step.dead) out.vertices.push_back(g.vertices[v]);
  out.base = remap_vertex(g.base, step);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (static_cast<int>(e) == step.edge) continue;
    GbsEdge f = g.edges[e];
    // a_dead = a_kept^scale, so labels facing the dead vertex pick up the scale
    if (f.terminus == step.dead) f.label_origin *= step.scale;
    if (f.origin == step.dead) f.label_terminus *= step.scale;
    f.origin = remap_vertex(f.origin, step);
    f.terminus = remap_vertex(f.terminus, step);
    out.edges.push_back(std::move(f));
  }
  return out;
}

}  // namespace

GraphReduction reduce_graph(const GbsGraph& g) {
  GraphReduction r;
  r.reduced = g;
  while (true) {
    int e = find_collapsible(r.reduced);
    if (e < 0) break;
    const GbsEdge& edge = r.reduced.edges[static_cast<std::size_t>(e)];
    CollapseStep step;
    step.edge = e;
    // a unit origin label makes the terminus generator a power of the origin
    // generator; a unit terminus label works the other way around
    if (edge.label_origin == 1 || edge.label_origin == -1) {
      step.dead = edge.terminus;
      step.kept = edge.origin;
    } else {
      step.dead = edge.origin;
      step.kept = edge.terminus;
    }
    step.scale = edge.label_origin * edge.label_terminus;
    r.stages.push_back(r.reduced);
    r.reduced = collapse_once(r.reduced, step);
    r.steps.push_back(std::move(step));
  }
  return r;
}

PathWord map_through_reduction(const GraphReduction& r, const PathWord& w) {
  PathWord cur = w;
  for (std::size_t s = 0; s < r.steps.size(); ++s) {
    const CollapseStep& step = r.steps[s];
    const GbsGraph& stage = r.stages[s];
    if (!path_valid(stage, cur)) fail(Errc::precondition, "word is not a path in the stage graph");

    auto mapped_exp = [&](std::size_t position) {
      Int k = cur.exps[position];
      if (vertex_at(stage, cur, position) == step.dead) k *= step.scale;
      return k;
    };

    PathWord next;
    next.start = remap_vertex(cur.start, step);
    next.exps = {mapped_exp(0)};
    for (std::size_t i = 0; i < cur.letters.size(); ++i) {
      const PathLetter& l = cur.letters[i];
      if (l.edge == step.edge) {
        // the collapsed edge disappears; its endpoints merge
        next.exps.back() += mapped_exp(i + 1);
      } else {
        next.letters.push_back({l.edge > step.edge ? l.edge - 1 : l.edge, l.dir});
        next.exps.push_back(mapped_exp(i + 1));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

const char* qi_kind_name(QiKind k) {
  switch (k) {
    case QiKind::trivial_z: return "TrivialZ";
    case QiKind::virtually_z2: return "VirtuallyZ2";
    case QiKind::solvable_bs1n: return "SolvableBS1n";
    case QiKind::virtually_fn_x_z: return "VirtuallyFnxZ";
    case QiKind::bs23_class: return "BS23Class";
  }
  return "?";
}

QiClass qi_class(const GbsGraph& g) {
  GraphReduction r = reduce_graph(g);
  QiClass out;
  out.reduced = r.reduced;
  out.delta = delta_image_generators(out.reduced);

  auto is_unit = [](const Int& v) { return v == 1 || v == -1; };
  const auto& edges = out.reduced.edges;

  if (edges.empty()) {
    out.kind = QiKind::trivial_z;
    out.theorem_case = 0;
    out.note = "elementary: the reduced graph is a single vertex, the group is infinite cyclic";
    return out;
  }
  if (edges.size() == 1) {
    const GbsEdge& loop = edges[0];
    bool uo = is_unit(loop.label_origin);
    bool ut = is_unit(loop.label_terminus);
    if (uo && ut) {
      out.kind = QiKind::virtually_z2;
      out.theorem_case = 0;
      out.note = "elementary: a unit-unit loop gives a group containing Z^2 with finite index";
      return out;
    }
    if (uo != ut) {
      out.kind = QiKind::solvable_bs1n;
      const Int& unit = uo ? loop.label_origin : loop.label_terminus;
      const Int& other = uo ? loop.label_terminus : loop.label_origin;
      out.solvable_n = other * unit;
      out.theorem_case = 1;
      std::ostringstream note;
      note << "solvable: a single loop with exactly one unit label, absolute value "
           << abs(out.solvable_n);
      out.note = note.str();
      return out;
    }
  }
  if (out.delta.unimodular) {
    out.kind = QiKind::virtually_fn_x_z;
    out.theorem_case = 2;
    out.note = "unimodular: Δ-certificate unavailable; see projection_soundness tooling";
  } else {
    out.kind = QiKind::bs23_class;
    out.theorem_case = 3;
    out.note = "non-unimodular, non-solvable: the modular image escapes {1, -1}";
  }
  return out;
}

}  // namespace gbskit
