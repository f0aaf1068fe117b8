#include "gbskit/modular.hpp"

#include "gbskit/normal_form.hpp"

namespace gbskit {

Rational modulus(const GbsGraph& g, const PathWord& w) {
  if (!path_valid(g, w)) fail(Errc::precondition, "word is not a valid edge path");
  Rational out(1);
  for (const auto& l : w.letters) {
    const GbsEdge& e = g.edges[l.edge];
    if (l.dir > 0) out *= ratio(e.label_origin, e.label_terminus);
    else out *= ratio(e.label_terminus, e.label_origin);
  }
  return out;
}

DeltaImage delta_image_generators(const GbsGraph& g) {
  SpanningTree t = spanning_tree(g);
  DeltaImage out;
  out.unimodular = true;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (t.in_tree(static_cast<int>(e))) continue;
    UserWord letter;
    letter.terms.emplace_back(Generator{Generator::edge_letter, static_cast<int>(e)}, Int(1));
    Rational value = modulus(g, lift_user_word(g, t, letter));
    if (value != 1 && value != -1) out.unimodular = false;
    out.loop_edges.push_back(static_cast<int>(e));
    out.generators.push_back(std::move(value));
  }
  return out;
}

bool is_unimodular(const GbsGraph& g) { return delta_image_generators(g).unimodular; }

bool respects_delta(const GbsGraph& g, const std::vector<UserWord>& forward_images,
                    const Limits& lim) {
  SpanningTree t = spanning_tree(g);
  Presentation pres = presentation(g);
  if (forward_images.size() != pres.generators.size())
    fail(Errc::missing_image, "expected one image per presentation generator");
  for (std::size_t slot = 0; slot < pres.generators.size(); ++slot) {
    UserWord self;
    self.terms.emplace_back(pres.generators[slot], Int(1));
    Rational own = modulus(g, lift_user_word(g, t, self, lim));
    Rational mapped = modulus(g, lift_user_word(g, t, forward_images[slot], lim));
    if (own != mapped) return false;
  }
  return true;
}

}  // namespace gbskit
