#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbskit/free_group.hpp"
#include "gbskit/modular.hpp"
#include "gbskit/normal_form.hpp"

namespace gbskit {

// Generator-image maps indexed by presentation slot (vertices first, then
// non-tree letters). The groups here are generally non-Hopfian, so a
// surjection check is worthless: the inverse map is user-supplied and both
// maps are validated against the relators plus both composite checks.
struct Automorphism {
  std::vector<UserWord> forward;
  std::vector<UserWord> backward;
  bool validated = false;
  std::string id;  // stable display id: "identity" or "a->a^-1,t->t"
};

Automorphism identity_automorphism(const GbsGraph& g);
// Text format: lines "map NAME -> WORD" and "inv NAME -> WORD"; every
// presentation generator needs one of each. Does not validate.
Automorphism parse_automorphism(const GbsGraph& g, const std::string& text);
std::string automorphism_id(const GbsGraph& g, const std::vector<UserWord>& forward);
// Throws relator_not_preserved / inverse_check_failed / missing_image;
// on success sets phi.validated.
void validate_automorphism(const GbsGraph& g, Automorphism& phi, const Limits& lim = {});

bool respects_delta(const GbsGraph& g, const Automorphism& phi, const Limits& lim = {});

// Caches lifted generator images (with their cyclic reductions, so conjugated
// elliptic images take large powers cheaply). Apply is a homomorphism by
// construction.
class Applier {
 public:
  struct Image {
    PathWord lift;
    PathWord core;        // cyclic core of the lift
    PathWord conjugator;  // lift = conjugator * core * conjugator^-1
    bool elliptic_core = false;
  };

  Applier(const GbsGraph& g, const Automorphism& phi, const Limits& lim = {});
  PathWord operator()(const PathWord& w) const;
  PathWord user(const UserWord& w) const;

 private:
  const GbsGraph& g_;
  Limits lim_;
  SpanningTree tree_;
  std::vector<Image> images_;
  PathWord power_image(int slot, const Int& k) const;
};

PathWord apply(const GbsGraph& g, const Automorphism& phi, const PathWord& w,
               const Limits& lim = {});
// h * x * phi(h)^-1, reduced.
PathWord twisted_conjugate(const GbsGraph& g, const PathWord& h, const PathWord& x,
                           const Automorphism& phi, const Limits& lim = {});

// ---- orbit merging --------------------------------------------------------

struct MergeWitness {
  int from = 0;  // element indices into OrbitPartition::elements
  int to = 0;
  PathWord conjugator;
  std::string conjugator_key;
};

struct OrbitPartition {
  std::vector<CanonicalWord> elements;    // deduped, input order
  std::vector<std::vector<int>> classes;  // index sets, each ascending
  std::vector<MergeWitness> witnesses;
  unsigned radius = 0;
  std::uint64_t ball_size = 0;
};

// Enumerates every loop at base with <= radius edge letters and exponent
// magnitudes <= radius, ordered by letter count then by serialized word, and
// merges x_i with an earlier x_j whenever h x_i phi(h)^-1 = x_j. Witnesses are
// re-verified. Ball size above lim.max_ball raises radius_too_large.
OrbitPartition merge_classes_in_ball(const GbsGraph& g, const Automorphism& phi,
                                     const std::vector<PathWord>& elements, unsigned radius,
                                     const Limits& lim = {});

// ---- modulus separation ----------------------------------------------------

struct ModulusCount {
  std::uint64_t count = 0;
  std::vector<Rational> values;  // distinct, first-appearance order
  std::vector<int> first_index;  // element realizing each value
};

// Lower bound on twisted classes: distinct moduli cannot merge when phi
// respects the modulus (checked; delta_not_respected otherwise).
ModulusCount modulus_class_count(const GbsGraph& g, const Automorphism& phi,
                                 const std::vector<PathWord>& elements, const Limits& lim = {});

struct Certificate {
  enum Kind { non_unimodular_r_infinity, modulus_lower_bound };
  Kind kind = non_unimodular_r_infinity;
  std::string element;  // canonical key of the witness element
  Rational modulus;
  std::vector<std::pair<int, Rational>> family;  // (power, modulus), pairwise distinct
  std::string automorphism_id;
};

// A stable letter loop with |modulus| != 1 separates the powers w^k into
// pairwise distinct twisted classes for any modulus-respecting phi; the first
// ten powers are checked explicitly. Returns nullopt with a reason when the
// graph is unimodular or phi does not respect the modulus.
std::optional<Certificate> rinfty_certificate(const GbsGraph& g, const Automorphism& phi,
                                              std::string* reason = nullptr,
                                              const Limits& lim = {});

// ---- free quotient ---------------------------------------------------------

// Defined for one-vertex graphs whose loops are all labeled (1, 1): the
// vertex generator is central, and killing it leaves the free group on the
// stable letters.
struct FreeQuotient {
  std::vector<int> loop_edges;  // free generator i <-> loop_edges[i]
  std::vector<std::string> names;
  int kernel_vertex = 0;
};

FreeQuotient free_quotient(const GbsGraph& g);  // not_unimodular_product otherwise
FreeWord project_word(const GbsGraph& g, const FreeQuotient& q, const PathWord& w);

struct FreeAutomorphism {
  std::vector<FreeWord> forward;
  std::vector<FreeWord> backward;
};

// Requires phi to keep the kernel inside itself (kernel_not_preserved
// otherwise); the induced pair is verified to compose to the identity on the
// free generators.
FreeAutomorphism induced_automorphism(const GbsGraph& g, const FreeQuotient& q,
                                      const Automorphism& phi, const Limits& lim = {});

struct ProjectionReport {
  int samples = 0;
  int passes = 0;
  std::vector<std::string> failures;  // serialized counterexamples
  bool negative_control_ran = false;
  bool negative_control_distinct = false;
};

// Seeded check that projecting a twisted conjugation equals the twisted
// conjugation of the projections (exact free-word comparison), plus an exact
// negative control under the identity on the quotient: distinct free
// generators are not conjugate.
ProjectionReport projection_soundness(const GbsGraph& g, const FreeQuotient& q,
                                      const Automorphism& phi, int samples, std::uint64_t seed,
                                      int radius, const Limits& lim = {});

// ---- bounded-motion probe ---------------------------------------------------

struct GrowthReport {
  std::vector<std::uint64_t> sizes;  // distinct conjugates per radius step
  bool stabilized = false;           // unchanged over the last two steps
  Int max_word_length;               // letters + sum |exponents| over the set
};

// Conjugates h x h^-1 for h in the Cayley ball of the presentation
// generators; the virtual-center probe from the bounded-conjugates argument.
GrowthReport conjugates_in_ball(const GbsGraph& g, const PathWord& x, unsigned radius,
                                const Limits& lim = {});

}  // namespace gbskit
