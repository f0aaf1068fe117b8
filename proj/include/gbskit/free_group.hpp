#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gbskit/numeric.hpp"

namespace gbskit {

// Freely reduced word in run-length form: (generator index, nonzero exponent),
// adjacent runs on distinct generators.
struct FreeWord {
  std::vector<std::pair<int, Int>> terms;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

FreeWord free_normalized(FreeWord w);
FreeWord free_concat(const FreeWord& a, const FreeWord& b);
FreeWord free_inverse(const FreeWord& w);
FreeWord free_power(const FreeWord& w, const Int& k, const Limits& lim = {});
// Substitutes images[i] for generator i.
FreeWord free_substitute(const FreeWord& w, const std::vector<FreeWord>& images,
                         const Limits& lim = {});

bool free_equal(const FreeWord& a, const FreeWord& b);
// Exact conjugacy: cyclically reduce both and compare cyclic run sequences
// under rotation.
bool free_conjugate(const FreeWord& a, const FreeWord& b);

std::string serialize_free_word(const std::vector<std::string>& names, const FreeWord& w);

}  // namespace gbskit
