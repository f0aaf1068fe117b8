#pragma once

#include <cstdint>
#include <string>

#include "gbskit/graph.hpp"

namespace gbskit {

// Britton reduction: eliminates pinches  e a^{lo*s} e^-1 -> a^{lt*s}  and
// e^-1 a^{lt*s} e -> a^{lo*s}, leftmost-innermost, to a fixpoint. Divisible
// excess that is not part of a pinch stays where it is.
PathWord reduce(const GbsGraph& g, const PathWord& w, const Limits& lim = {});

// Residue-normalized Britton-reduced word: every exponent following a letter
// is the canonical residue (mod |lo| after a forward letter, mod |lt| after a
// backward one, in [0, |label|)); the excess accumulates in the leading
// exponent. Two words are equal in the group iff their canonical forms are
// byte-identical.
struct CanonicalWord {
  PathWord word;
  std::string key;  // stable serialization, used in reports
  std::uint64_t hash = 0;
  friend bool operator==(const CanonicalWord& a, const CanonicalWord& b) {
    return a.hash == b.hash && a.word == b.word;
  }
  friend bool operator!=(const CanonicalWord& a, const CanonicalWord& b) { return !(a == b); }
};

CanonicalWord canonical_form(const GbsGraph& g, const PathWord& w, const Limits& lim = {});

bool is_identity(const GbsGraph& g, const PathWord& w, const Limits& lim = {});
bool equal(const GbsGraph& g, const PathWord& a, const PathWord& b, const Limits& lim = {});

// w = conjugator * core * conjugator^-1 with a cyclically reduced core (no
// rotation enables a further pinch). The core of a hyperbolic element may be
// based at a vertex other than w's start.
struct CyclicReduction {
  PathWord core;
  PathWord conjugator;
};

CyclicReduction cyclic_reduce(const GbsGraph& g, const PathWord& w, const Limits& lim = {});

// Deterministic seeded loop at base with at most target_letters edge letters
// and exponent magnitudes <= 8. Same seed, same graph => same word.
PathWord random_word(const GbsGraph& g, std::uint64_t seed, int target_letters);

}  // namespace gbskit
