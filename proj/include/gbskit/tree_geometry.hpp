#pragma once

#include "gbskit/normal_form.hpp"

namespace gbskit {

enum class ElementKind { elliptic, hyperbolic };

struct ElementClassification {
  ElementKind kind = ElementKind::elliptic;
  std::uint64_t translation_length = 0;  // edge letters of the cyclic core
  CanonicalWord cyclic_core;
  PathWord conjugator;
};

ElementClassification classify_element(const GbsGraph& g, const PathWord& w,
                                       const Limits& lim = {});
std::uint64_t translation_length(const GbsGraph& g, const PathWord& w, const Limits& lim = {});

// Minimal positive p with  w a^p w^-1 = a^q  for the base vertex generator,
// found by the divisibility cascade across w's letters; the pair is verified
// with equal() before returning.
struct Commensuration {
  Int p;
  Int q;
  int vertex = 0;
};

Commensuration find_commensuration(const GbsGraph& g, const PathWord& w, const Limits& lim = {});

}  // namespace gbskit
