#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbskit/modular.hpp"
#include "gbskit/normal_form.hpp"
#include "gbskit/tree_geometry.hpp"
#include "gbskit/twisted.hpp"
#include "support.hpp"

using namespace gbskit;
using testsupport::lift;
using testsupport::load_graph;

TEST_CASE("modulus of basic elements") {
  auto bs23 = load_graph("bs23.graph");
  CHECK(modulus(bs23, lift(bs23, "t")) == Rational(2, 3));
  CHECK(modulus(bs23, lift(bs23, "a^7")) == 1);
  CHECK(modulus(bs23, lift(bs23, "t^2")) == Rational(4, 9));
  CHECK(modulus(bs23, lift(bs23, "t^-1")) == Rational(3, 2));
  CHECK(modulus(bs23, lift(bs23, "t a t^-1 a^5")) == 1);

  auto klein = load_graph("klein.graph");
  CHECK(modulus(klein, lift(klein, "t")) == -1);
  CHECK(modulus(klein, lift(klein, "t^2")) == 1);
}

TEST_CASE("delta image generators per non-tree edge") {
  auto bs23 = load_graph("bs23.graph");
  auto d = delta_image_generators(bs23);
  REQUIRE(d.generators.size() == 1);
  CHECK(d.generators[0] == Rational(2, 3));
  CHECK_FALSE(d.unimodular);
  CHECK(bs23.edges[d.loop_edges[0]].name == "t");

  auto f2xz = load_graph("f2xz.graph");
  auto df = delta_image_generators(f2xz);
  REQUIRE(df.generators.size() == 2);
  CHECK(df.generators[0] == 1);
  CHECK(df.generators[1] == 1);
  CHECK(df.unimodular);

  auto theta = load_graph("theta.graph");
  auto dt = delta_image_generators(theta);
  REQUIRE(dt.generators.size() == 1);
  CHECK(dt.generators[0] == Rational(15, 14));
  CHECK_FALSE(dt.unimodular);

  auto z = delta_image_generators(load_graph("z.graph"));
  CHECK(z.generators.empty());
  CHECK(z.unimodular);
}

TEST_CASE("unimodularity of small one-loop graphs") {
  CHECK(is_unimodular(load_graph("bs22.graph")));
  CHECK(is_unimodular(load_graph("bs2m2.graph")));
  CHECK(is_unimodular(load_graph("klein.graph")));
  CHECK(is_unimodular(load_graph("f2xz.graph")));
  CHECK_FALSE(is_unimodular(load_graph("bs23.graph")));
  CHECK_FALSE(is_unimodular(load_graph("bs12.graph")));
  CHECK_FALSE(is_unimodular(load_graph("theta.graph")));
}

TEST_CASE("delta is a homomorphism and a conjugacy invariant") {
  for (const char* name : {"bs23.graph", "theta.graph", "klein.graph", "f2xz.graph"}) {
    auto g = load_graph(name);
    int bad = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      PathWord u = random_word(g, 51000 + seed, 6);
      PathWord v = random_word(g, 52000 + seed, 6);
      if (modulus(g, concat(u, v)) != modulus(g, u) * modulus(g, v)) ++bad;
      if (seed < 200 && modulus(g, concat(u, v, inverse(g, u))) != modulus(g, v)) ++bad;
    }
    CAPTURE(name);
    CHECK(bad == 0);
  }
}

TEST_CASE("delta only depends on the group element") {
  for (const char* name : {"bs23.graph", "theta.graph"}) {
    auto g = load_graph(name);
    auto pres = presentation(g);
    int bad = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      PathWord w = random_word(g, 53000 + seed, 6);
      // pad with a conjugated relator: same element, different word
      PathWord r = lift_user_word(g, pres.relators[seed % pres.relators.size()]);
      PathWord u = random_word(g, 54000 + seed, 3);
      PathWord padded = concat(w, concat(u, r, inverse(g, u)));
      if (!equal(g, w, padded) || modulus(g, w) != modulus(g, padded)) ++bad;
      if (modulus(g, reduce(g, padded)) != modulus(g, w)) ++bad;
    }
    CAPTURE(name);
    CHECK(bad == 0);
  }
}

TEST_CASE("delta matches commensuration: delta(w) = p/q") {
  for (const char* name : {"bs23.graph", "bs12.graph", "klein.graph", "theta.graph"}) {
    auto g = load_graph(name);
    int bad = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      PathWord w = random_word(g, 55000 + seed, 5);
      auto c = find_commensuration(g, w);
      if (modulus(g, w) != ratio(c.p, c.q)) ++bad;
    }
    CAPTURE(name);
    CHECK(bad == 0);
  }
}

TEST_CASE("respects_delta flags the orientation flip") {
  auto g = load_graph("bs23.graph");

  auto ident = identity_automorphism(g);
  CHECK(respects_delta(g, ident));

  auto invert = parse_automorphism(g, testsupport::slurp(testsupport::data_path("bs23_invert.auto")));
  CHECK(respects_delta(g, invert));

  // candidate a -> a, t -> t^-1 is not an automorphism; delta catches it
  auto flip = parse_automorphism(g, testsupport::slurp(testsupport::data_path("bs23_flip.auto")));
  CHECK_FALSE(respects_delta(g, flip));
}
