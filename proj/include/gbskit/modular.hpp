#pragma once

#include "gbskit/graph.hpp"

namespace gbskit {

// Product of (label_origin/label_terminus)^dir over the edge letters of w.
// A homomorphism to the nonzero rationals; vertex exponents contribute 1.
Rational modulus(const GbsGraph& g, const PathWord& w);

// One value per non-tree edge (declaration order): the modulus of the stable
// letter's loop closed through the spanning tree. These generate the modular
// image of the whole group.
struct DeltaImage {
  std::vector<int> loop_edges;
  std::vector<Rational> generators;
  bool unimodular = false;  // all generators in {+1, -1}
};

DeltaImage delta_image_generators(const GbsGraph& g);
bool is_unimodular(const GbsGraph& g);

// True when every presentation generator's image has the generator's own
// modulus. Works on unvalidated candidates, so it doubles as a cheap
// automorphism sanity probe. Images are indexed by presentation slot.
bool respects_delta(const GbsGraph& g, const std::vector<UserWord>& forward_images,
                    const Limits& lim = {});

}  // namespace gbskit
