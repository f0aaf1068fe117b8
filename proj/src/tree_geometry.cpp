#include "gbskit/tree_geometry.hpp"

namespace gbskit {

ElementClassification classify_element(const GbsGraph& g, const PathWord& w, const Limits& lim) {
  CyclicReduction cr = cyclic_reduce(g, w, lim);
  ElementClassification out;
  out.kind = cr.core.letters.empty() ? ElementKind::elliptic : ElementKind::hyperbolic;
  out.translation_length = cr.core.letters.size();
  out.cyclic_core = canonical_form(g, cr.core, lim);
  out.conjugator = std::move(cr.conjugator);
  return out;
}

std::uint64_t translation_length(const GbsGraph& g, const PathWord& w, const Limits& lim) {
  return classify_element(g, w, lim).translation_length;
}

Commensuration find_commensuration(const GbsGraph& g, const PathWord& w, const Limits& lim) {
  if (w.start != end_vertex(g, w))
    fail(Errc::precondition, "commensuration needs a closed word");
  PathWord r = reduce(g, w, lim);

  // Push a^p from the right end of r toward the left. Crossing letter L turns
  // the running exponent p*c into p*c*mul/div and requires div | p*c; with
  // c = A/B in lowest terms that is the congruence p ≡ 0 mod |d|B/gcd(A, dB).
  Int p(1);
  Rational c(1);
  for (std::size_t i = r.letters.size(); i-- > 0;) {
    const GbsEdge& e = g.edges[r.letters[i].edge];
    const Int& d = r.letters[i].dir > 0 ? e.label_origin : e.label_terminus;
    const Int& m = r.letters[i].dir > 0 ? e.label_terminus : e.label_origin;
    Int A = numerator(c);
    Int B = denominator(c);
    Int db = abs(d) * B;
    Int step = db / gcd(abs(A), db);
    p = lcm(p, step);
    c *= ratio(m, d);
  }
  Rational q_exact = c * p;
  Int q = numerator(q_exact);
  if (denominator(q_exact) != 1) fail(Errc::precondition, "commensuration cascade left a fraction");
  require_digits(p, lim);
  require_digits(q, lim);

  PathWord ap = path_at(w.start);
  ap.exps[0] = p;
  PathWord aq = path_at(w.start);
  aq.exps[0] = q;
  if (!equal(g, concat(r, ap, inverse(g, r)), aq, lim))
    fail(Errc::precondition, "commensuration verification failed");
  return {std::move(p), std::move(q), w.start};
}

}  // namespace gbskit
