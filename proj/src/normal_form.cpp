#include "gbskit/normal_form.hpp"

#include <algorithm>

namespace gbskit {

namespace {

// Push-left divisor/multiplier of a letter: crossing e forward turns a^{lo*s}
// into a^{lt*s} on the far side; backward swaps the roles. The pinch
// L a^k L^-1 uses the same divisor as pushing a^k left across L.
const Int& push_div(const GbsGraph& g, PathLetter l) {
  const GbsEdge& e = g.edges[l.edge];
  return l.dir > 0 ? e.label_origin : e.label_terminus;
}
const Int& push_mul(const GbsGraph& g, PathLetter l) {
  const GbsEdge& e = g.edges[l.edge];
  return l.dir > 0 ? e.label_terminus : e.label_origin;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

PathWord reduce(const GbsGraph& g, const PathWord& w, const Limits& lim) {
  if (!path_valid(g, w)) fail(Errc::precondition, "word is not a valid edge path");
  PathWord out;
  out.start = w.start;
  out.exps.clear();
  out.exps.push_back(w.exps[0]);
  out.letters.reserve(w.letters.size());

  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    out.letters.push_back(w.letters[i]);
    out.exps.push_back(w.exps[i + 1]);
    while (out.letters.size() >= 2) {
      std::size_t m = out.letters.size();
      PathLetter prev = out.letters[m - 2];
      if (out.letters[m - 1] != reversed(prev)) break;
      const Int& div = push_div(g, prev);
      if (out.exps[m - 1] % div != 0) break;
      Int converted = out.exps[m - 1] / div * push_mul(g, prev);
      out.exps[m - 2] += converted + out.exps[m];
      require_digits(out.exps[m - 2], lim);
      out.exps.pop_back();
      out.exps.pop_back();
      out.letters.pop_back();
      out.letters.pop_back();
    }
  }
  return out;
}

CanonicalWord canonical_form(const GbsGraph& g, const PathWord& w, const Limits& lim) {
  PathWord r = reduce(g, w, lim);
  // right-to-left residue pass; never reintroduces a pinch because the middle
  // exponent of an inverse-shaped pair only moves by multiples of its divisor
  for (std::size_t i = r.letters.size(); i-- > 0;) {
    const Int& d = push_div(g, r.letters[i]);
    Int ad = abs(d);
    Int rem = r.exps[i + 1] % ad;
    if (rem < 0) rem += ad;
    if (rem == r.exps[i + 1]) continue;
    Int s = (r.exps[i + 1] - rem) / d;
    r.exps[i] += push_mul(g, r.letters[i]) * s;
    require_digits(r.exps[i], lim);
    r.exps[i + 1] = rem;
  }
  CanonicalWord c;
  c.word = std::move(r);
  c.key = serialize_path_word(g, c.word);
  c.hash = fnv1a(c.key) ^ (static_cast<std::uint64_t>(c.word.start) * 0x9e3779b97f4a7c15ull);
  return c;
}

bool is_identity(const GbsGraph& g, const PathWord& w, const Limits& lim) {
  PathWord r = reduce(g, w, lim);
  return r.letters.empty() && r.exps[0] == 0;
}

bool equal(const GbsGraph& g, const PathWord& a, const PathWord& b, const Limits& lim) {
  return canonical_form(g, a, lim) == canonical_form(g, b, lim);
}

CyclicReduction cyclic_reduce(const GbsGraph& g, const PathWord& w, const Limits& lim) {
  if (w.start != end_vertex(g, w))
    fail(Errc::precondition, "cyclic reduction needs a closed word");
  CyclicReduction out;
  out.conjugator = path_at(w.start);
  PathWord r = reduce(g, w, lim);

  while (!r.letters.empty()) {
    PathLetter first = r.letters.front();
    PathLetter last = r.letters.back();
    if (first != reversed(last)) break;
    Int seam = r.exps.back() + r.exps.front();
    if (seam % push_div(g, last) != 0) break;

    // rotate past the first letter: w = c * w' * c^-1 with c = a^{k0} L1
    PathWord c = path_at(r.start);
    c.exps[0] = r.exps[0];
    c.letters.push_back(first);
    c.exps.push_back(Int(0));

    PathWord rot;
    rot.start = end_vertex(g, c);
    rot.exps.assign(r.exps.begin() + 1, r.exps.end());
    rot.exps.back() += r.exps.front();
    rot.exps.push_back(Int(0));
    rot.letters.assign(r.letters.begin() + 1, r.letters.end());
    rot.letters.push_back(first);

    out.conjugator = concat(out.conjugator, c);
    r = reduce(g, rot, lim);
  }
  out.core = std::move(r);
  return out;
}

PathWord random_word(const GbsGraph& g, std::uint64_t seed, int target_letters) {
  std::uint64_t x = seed * 0x9e3779b97f4a7c15ull + 0xda442d24691348aaull;
  auto next = [&x]() {
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    return x * 0x2545f4914f6cdd1dull;
  };
  auto small_exp = [&]() { return Int(static_cast<long>(next() % 17) - 8); };

  SpanningTree tree = spanning_tree(g);
  int budget = target_letters <= 0 ? 0 : static_cast<int>(next() % (target_letters + 1));

  PathWord w = path_at(g.base);
  w.exps[0] = small_exp();
  int current = g.base;
  while (true) {
    int home = static_cast<int>(tree_path_from_base(g, tree, current).size());
    if (home + 1 >= budget) break;  // leave room to walk home within budget
    std::vector<PathLetter> options;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].origin == current) options.push_back({static_cast<int>(e), 1});
      if (g.edges[e].terminus == current) options.push_back({static_cast<int>(e), -1});
    }
    if (options.empty()) break;
    PathLetter l = options[next() % options.size()];
    w.letters.push_back(l);
    w.exps.push_back(small_exp());
    current = l.dir > 0 ? g.edges[l.edge].terminus : g.edges[l.edge].origin;
    --budget;
  }
  // walk home through the tree
  std::vector<PathLetter> down = tree_path_from_base(g, tree, current);
  std::reverse(down.begin(), down.end());
  for (PathLetter l : down) {
    w.letters.push_back(reversed(l));
    w.exps.push_back(small_exp());
  }
  return w;
}

}  // namespace gbskit
