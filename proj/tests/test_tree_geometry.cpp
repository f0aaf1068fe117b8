#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbskit/normal_form.hpp"
#include "gbskit/tree_geometry.hpp"
#include "support.hpp"

using namespace gbskit;
using testsupport::lift;
using testsupport::load_graph;

namespace {

PathWord vertex_power(int vertex, Int k) {
  PathWord w = path_at(vertex);
  w.exps[0] = std::move(k);
  return w;
}

// Independent oracle: search for the least p >= 1 such that w a^p w^-1 is a
// vertex power again, using nothing but the reducer. Slow and honest.
std::optional<std::pair<Int, Int>> brute_commensuration(const GbsGraph& g, const PathWord& w,
                                                        int bound) {
  for (int p = 1; p <= bound; ++p) {
    PathWord z = reduce(g, concat(w, vertex_power(w.start, p), inverse(g, w)));
    if (z.letters.empty()) return std::make_pair(Int(p), z.exps[0]);
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("elliptic and hyperbolic classification on the (2,3) group") {
  auto g = load_graph("bs23.graph");

  auto a = classify_element(g, lift(g, "a^5"));
  CHECK(a.kind == ElementKind::elliptic);
  CHECK(a.translation_length == 0);

  auto t = classify_element(g, lift(g, "t"));
  CHECK(t.kind == ElementKind::hyperbolic);
  CHECK(t.translation_length == 1);

  auto ta = classify_element(g, lift(g, "t a"));
  CHECK(ta.kind == ElementKind::hyperbolic);
  CHECK(ta.translation_length == 1);

  // conjugate of a vertex element is elliptic even when written with letters
  auto conj = classify_element(g, lift(g, "t^-1 a t"));
  CHECK(conj.kind == ElementKind::elliptic);
  CHECK(conj.translation_length == 0);

  auto trivial = classify_element(g, lift(g, "t t^-1"));
  CHECK(trivial.kind == ElementKind::elliptic);
  CHECK(trivial.translation_length == 0);

  CHECK(translation_length(g, lift(g, "t a t a^2")) == 2);
  CHECK(translation_length(g, lift(g, "t^4")) == 4);
}

TEST_CASE("classification sees through the spanning tree on theta") {
  auto g = load_graph("theta.graph");
  auto tree = spanning_tree(g);

  // the loop crossing both edges translates by 2
  PathWord loop = lift_user_word(g, tree, parse_user_word(g, "e2"));
  auto c = classify_element(g, loop);
  CHECK(c.kind == ElementKind::hyperbolic);
  CHECK(c.translation_length == 2);

  // the far vertex generator is elliptic; its cyclic core lives at that vertex
  PathWord v = lift_user_word(g, tree, parse_user_word(g, "v"));
  auto cv = classify_element(g, v);
  CHECK(cv.kind == ElementKind::elliptic);
  CHECK(cv.cyclic_core.word.start == g.vertex_index("v"));
}

TEST_CASE("translation length is a conjugacy invariant") {
  for (const char* name : {"bs23.graph", "theta.graph", "f2xz.graph"}) {
    auto g = load_graph(name);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      PathWord w = random_word(g, 21000 + seed, 6);
      PathWord u = random_word(g, 22000 + seed, 6);
      auto base = classify_element(g, w);
      auto conj = classify_element(g, concat(u, w, inverse(g, u)));
      CAPTURE(name);
      CAPTURE(seed);
      CHECK(base.kind == conj.kind);
      CHECK(base.translation_length == conj.translation_length);
    }
  }
}

TEST_CASE("translation length of powers scales linearly") {
  auto g = load_graph("bs23.graph");
  Limits lim;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    PathWord w = random_word(g, 25000 + seed, 5);
    auto c = classify_element(g, w);
    if (c.kind != ElementKind::hyperbolic) continue;
    for (int k : {2, 3}) {
      PathWord wk = power(g, w, Int(k), lim);
      CHECK(translation_length(g, wk) == c.translation_length * static_cast<std::uint64_t>(k));
    }
  }
}

TEST_CASE("commensuration of the stable letter in the (2,3) group") {
  auto g = load_graph("bs23.graph");

  auto c = find_commensuration(g, lift(g, "t"));
  CHECK(c.p == 2);
  CHECK(c.q == 3);
  CHECK(c.vertex == g.base);
  CHECK(equal(g, concat(lift(g, "t"), vertex_power(g.base, c.p), lift(g, "t^-1")),
              vertex_power(g.base, c.q)));

  auto c2 = find_commensuration(g, lift(g, "t^2"));
  CHECK(c2.p == 4);
  CHECK(c2.q == 9);

  auto cinv = find_commensuration(g, lift(g, "t^-1"));
  CHECK(cinv.p == 3);
  CHECK(cinv.q == 2);

  // elliptic loops commensurate on the nose
  auto ce = find_commensuration(g, lift(g, "t a^2 t^-1"));
  CHECK(ce.p == 1);
  CHECK(ce.q == 1);
}

TEST_CASE("commensuration matches the brute-force oracle") {
  struct Case {
    const char* graph;
    const char* word;
  };
  const Case cases[] = {
      {"bs23.graph", "t"},        {"bs23.graph", "t^2"},   {"bs23.graph", "t^-1"},
      {"bs23.graph", "t a t"},    {"bs12.graph", "t"},     {"bs12.graph", "t^-2"},
      {"klein.graph", "t"},       {"bs2m2.graph", "t"},    {"bs22.graph", "t"},
  };
  for (const auto& tc : cases) {
    auto g = load_graph(tc.graph);
    PathWord w = lift(g, tc.word);
    auto got = find_commensuration(g, w);
    auto expect = brute_commensuration(g, w, 64);
    CAPTURE(tc.graph);
    CAPTURE(tc.word);
    REQUIRE(expect.has_value());
    CHECK(got.p == expect->first);
    CHECK(got.q == expect->second);
  }
}

TEST_CASE("commensuration across a multi-vertex loop") {
  auto g = load_graph("theta.graph");
  auto tree = spanning_tree(g);
  PathWord loop = lift_user_word(g, tree, parse_user_word(g, "e2"));
  REQUIRE(loop.start == g.base);

  auto got = find_commensuration(g, loop);
  auto expect = brute_commensuration(g, loop, 64);
  REQUIRE(expect.has_value());
  CHECK(got.p == expect->first);
  CHECK(got.q == expect->second);
  CHECK(got.p == 15);
  CHECK(got.q == 14);
}

TEST_CASE("klein bottle flips orientation") {
  auto g = load_graph("klein.graph");
  auto c = find_commensuration(g, lift(g, "t"));
  CHECK(c.p == 1);
  CHECK(c.q == -1);

  auto c2 = find_commensuration(g, lift(g, "t^2"));
  CHECK(c2.p == 1);
  CHECK(c2.q == 1);
}

TEST_CASE("commensuration requires a loop") {
  auto g = load_graph("theta.graph");
  PathWord notloop = path_at(g.vertex_index("u"));
  notloop.letters.push_back({0, +1});
  notloop.exps.push_back(Int(0));
  REQUIRE(end_vertex(g, notloop) != notloop.start);
  CHECK_THROWS_AS((void)find_commensuration(g, notloop), GbsError);
  try {
    (void)find_commensuration(g, notloop);
  } catch (const GbsError& e) {
    CHECK(e.code() == Errc::precondition);
  }
}

TEST_CASE("commensuration is stable under random conjugation of powers") {
  auto g = load_graph("bs23.graph");
  // q/p only depends on the element through its modulus, so conjugates of the
  // same loop commensurate with the same ratio even if (p, q) rescale.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PathWord u = random_word(g, 31000 + seed, 4);
    PathWord w = concat(u, lift(g, "t"), inverse(g, u));
    auto c = find_commensuration(g, w);
    CHECK(Rational(c.q, c.p) == Rational(3, 2));
  }
}
