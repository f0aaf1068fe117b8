#include "gbskit/twisted.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace gbskit {

namespace {

// Deterministic fork/join: contiguous chunks, results written to caller-owned
// slots, first exception rethrown on the calling thread.
template <typename Fn>
void run_chunked(std::size_t n, unsigned threads, const Fn& fn) {
  if (n == 0) return;
  std::size_t workers = std::max(1u, threads);
  workers = std::min<std::size_t>(workers, n);
  if (workers == 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

UserWord single_term(Generator gen, Int exp = Int(1)) {
  UserWord w;
  w.terms.emplace_back(gen, std::move(exp));
  return w;
}

}  // namespace

// ---- automorphism plumbing ---------------------------------------------------

std::string automorphism_id(const GbsGraph& g, const std::vector<UserWord>& forward) {
  Presentation pres = presentation(g);
  bool is_ident = forward.size() == pres.generators.size();
  std::ostringstream out;
  for (std::size_t slot = 0; slot < forward.size(); ++slot) {
    if (slot) out << ',';
    std::string name = slot < pres.generators.size()
                           ? generator_name(g, pres.generators[slot])
                           : "?" + std::to_string(slot);
    out << name << "->" << serialize_user_word(g, forward[slot]);
    if (is_ident && !(forward[slot] == single_term(pres.generators[slot]))) is_ident = false;
  }
  return is_ident ? "identity" : out.str();
}

Automorphism identity_automorphism(const GbsGraph& g) {
  Presentation pres = presentation(g);
  Automorphism phi;
  for (const Generator& gen : pres.generators) {
    phi.forward.push_back(single_term(gen));
    phi.backward.push_back(single_term(gen));
  }
  phi.validated = true;
  phi.id = "identity";
  return phi;
}

Automorphism parse_automorphism(const GbsGraph& g, const std::string& text) {
  Presentation pres = presentation(g);
  std::vector<std::optional<UserWord>> fwd(pres.generators.size());
  std::vector<std::optional<UserWord>> bwd(pres.generators.size());

  SpanningTree tree = spanning_tree(g);
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string kind;
    if (!(line >> kind)) continue;
    if (kind != "map" && kind != "inv")
      fail(Errc::syntax_error, "expected 'map' or 'inv', got '" + kind + "'", line_no);
    std::string name, arrow;
    if (!(line >> name >> arrow) || arrow != "->")
      fail(Errc::syntax_error, "expected '<generator> -> <word>'", line_no);
    std::string word_text;
    std::getline(line, word_text);

    Generator gen;
    if (int v = g.vertex_index(name); v >= 0) {
      gen = {Generator::vertex_gen, v};
    } else if (int e = g.edge_index(name); e >= 0) {
      if (tree.in_tree(e))
        fail(Errc::unknown_generator, "'" + name + "' is a spanning-tree edge", line_no);
      gen = {Generator::edge_letter, e};
    } else {
      fail(Errc::unknown_generator, "unknown generator '" + name + "'", line_no);
    }
    int slot = generator_slot(g, tree, gen);
    UserWord image;
    try {
      image = parse_user_word(g, word_text);
    } catch (const GbsError& e) {
      fail(e.code(), "bad image word for '" + name + "'", line_no);
    }
    auto& store = kind == "map" ? fwd : bwd;
    if (store[slot].has_value())
      fail(Errc::syntax_error, "duplicate " + kind + " for '" + name + "'", line_no);
    store[slot] = std::move(image);
  }

  Automorphism phi;
  for (std::size_t slot = 0; slot < pres.generators.size(); ++slot) {
    std::string name = generator_name(g, pres.generators[slot]);
    if (!fwd[slot]) fail(Errc::missing_image, "no map line for generator '" + name + "'");
    if (!bwd[slot]) fail(Errc::missing_image, "no inv line for generator '" + name + "'");
    phi.forward.push_back(std::move(*fwd[slot]));
    phi.backward.push_back(std::move(*bwd[slot]));
  }
  phi.id = automorphism_id(g, phi.forward);
  return phi;
}

bool respects_delta(const GbsGraph& g, const Automorphism& phi, const Limits& lim) {
  return respects_delta(g, phi.forward, lim);
}

// ---- applier ------------------------------------------------------------------

Applier::Applier(const GbsGraph& g, const Automorphism& phi, const Limits& lim)
    : g_(g), lim_(lim), tree_(spanning_tree(g)) {
  Presentation pres = presentation(g);
  if (phi.forward.size() != pres.generators.size())
    fail(Errc::missing_image, "expected one forward image per presentation generator");
  images_.reserve(phi.forward.size());
  for (const UserWord& image : phi.forward) {
    Image img;
    img.lift = reduce(g_, lift_user_word(g_, tree_, image, lim_), lim_);
    CyclicReduction cr = cyclic_reduce(g_, img.lift, lim_);
    img.core = std::move(cr.core);
    img.conjugator = std::move(cr.conjugator);
    img.elliptic_core = img.core.letters.empty();
    images_.push_back(std::move(img));
  }
}

PathWord Applier::power_image(int slot, const Int& k) const {
  const Image& img = images_[static_cast<std::size_t>(slot)];
  if (k == 0) return path_at(g_.base);
  if (k == 1) return img.lift;
  if (img.elliptic_core) {
    PathWord core = path_at(img.core.start);
    core.exps[0] = img.core.exps[0] * k;
    require_digits(core.exps[0], lim_);
    return concat(img.conjugator, core, inverse(g_, img.conjugator));
  }
  return power(g_, img.lift, k, lim_);
}

PathWord Applier::user(const UserWord& w) const {
  PathWord out = path_at(g_.base);
  for (const auto& [gen, exp] : w.terms) {
    int slot = generator_slot(g_, tree_, gen);
    if (slot < 0)
      fail(Errc::tree_edge_letter,
           "'" + generator_name(g_, gen) + "' is a spanning-tree edge");
    out = reduce(g_, concat(out, power_image(slot, exp)), lim_);
  }
  return out;
}

PathWord Applier::operator()(const PathWord& w) const {
  return user(project_to_presentation(g_, tree_, w));
}

PathWord apply(const GbsGraph& g, const Automorphism& phi, const PathWord& w, const Limits& lim) {
  if (!phi.validated) fail(Errc::precondition, "automorphism is not validated");
  return Applier(g, phi, lim)(w);
}

PathWord twisted_conjugate(const GbsGraph& g, const PathWord& h, const PathWord& x,
                           const Automorphism& phi, const Limits& lim) {
  if (!phi.validated) fail(Errc::precondition, "automorphism is not validated");
  Applier ap(g, phi, lim);
  return reduce(g, concat(h, x, inverse(g, ap(h))), lim);
}

// ---- validation -----------------------------------------------------------------

void validate_automorphism(const GbsGraph& g, Automorphism& phi, const Limits& lim) {
  Presentation pres = presentation(g);
  if (phi.forward.size() != pres.generators.size() ||
      phi.backward.size() != pres.generators.size())
    fail(Errc::missing_image, "expected one forward and one backward image per generator");

  Applier fwd(g, phi, lim);
  Automorphism swapped;
  swapped.forward = phi.backward;
  swapped.backward = phi.forward;
  Applier bwd(g, swapped, lim);

  for (const UserWord& rel : pres.relators) {
    if (!is_identity(g, fwd.user(rel), lim))
      fail(Errc::relator_not_preserved,
           "forward image of relator '" + serialize_user_word(g, rel) + "' is nontrivial");
    if (!is_identity(g, bwd.user(rel), lim))
      fail(Errc::relator_not_preserved,
           "backward image of relator '" + serialize_user_word(g, rel) + "' is nontrivial");
  }
  for (std::size_t slot = 0; slot < pres.generators.size(); ++slot) {
    UserWord self = single_term(pres.generators[slot]);
    PathWord x = lift_user_word(g, spanning_tree(g), self, lim);
    if (!equal(g, bwd(fwd.user(self)), x, lim) || !equal(g, fwd(bwd.user(self)), x, lim))
      fail(Errc::inverse_check_failed,
           "maps do not invert each other on generator '" +
               generator_name(g, pres.generators[slot]) + "'");
  }
  phi.validated = true;
  if (phi.id.empty()) phi.id = automorphism_id(g, phi.forward);
}

// ---- conjugator ball -------------------------------------------------------------

namespace {

// all loops at base with <= radius edge letters and |exponents| <= radius,
// ordered by letter count then by serialized word
std::vector<PathWord> conjugator_ball(const GbsGraph& g, unsigned radius, const Limits& lim,
                                      std::uint64_t* size_out) {
  std::vector<std::vector<PathLetter>> closed;  // letter sequences, by DFS
  std::vector<PathLetter> current;
  auto dfs = [&](auto&& self, int vertex, unsigned remaining) -> void {
    if (vertex == g.base) closed.push_back(current);
    if (remaining == 0) return;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      for (int dir : {1, -1}) {
        int from = dir > 0 ? g.edges[e].origin : g.edges[e].terminus;
        int to = dir > 0 ? g.edges[e].terminus : g.edges[e].origin;
        if (from != vertex) continue;
        current.push_back({static_cast<int>(e), dir});
        self(self, to, remaining - 1);
        current.pop_back();
      }
    }
  };
  dfs(dfs, g.base, radius);

  std::uint64_t count = 0;
  // bucket per letter count; sorted per bucket so ball order is
  // (letter count, serialized word) and independent of DFS order
  std::vector<std::vector<std::pair<std::string, PathWord>>> keyed(radius + 1);
  Int span = 2 * static_cast<long>(radius) + 1;
  for (const auto& letters : closed) {
    std::size_t slots = letters.size() + 1;
    // odometer over exponent tuples in [-radius, radius]^slots
    std::vector<Int> digits(slots, Int(0));
    while (true) {
      PathWord w;
      w.start = g.base;
      w.letters = letters;
      w.exps.resize(slots);
      for (std::size_t i = 0; i < slots; ++i)
        w.exps[i] = digits[i] - static_cast<long>(radius);
      if (++count > lim.max_ball)
        fail(Errc::radius_too_large, "conjugator ball exceeds the enumeration cap");
      keyed[letters.size()].emplace_back(serialize_path_word(g, w), std::move(w));
      std::size_t carry = 0;
      while (carry < slots) {
        if (++digits[carry] < span) break;
        digits[carry] = 0;
        ++carry;
      }
      if (carry == slots) break;
    }
  }

  std::vector<PathWord> ball;
  ball.reserve(count);
  for (auto& bucket : keyed) {
    std::sort(bucket.begin(), bucket.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, w] : bucket) ball.push_back(std::move(w));
  }
  if (size_out) *size_out = count;
  return ball;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);  // keep the smallest index as root
    parent[b] = a;
    return true;
  }
};

}  // namespace

OrbitPartition merge_classes_in_ball(const GbsGraph& g, const Automorphism& phi,
                                     const std::vector<PathWord>& elements, unsigned radius,
                                     const Limits& lim) {
  if (!phi.validated) fail(Errc::precondition, "automorphism is not validated");
  Applier ap(g, phi, lim);

  OrbitPartition out;
  out.radius = radius;
  std::map<std::string, int> index_of;
  for (const PathWord& x : elements) {
    CanonicalWord c = canonical_form(g, x, lim);
    if (index_of.count(c.key)) continue;
    index_of[c.key] = static_cast<int>(out.elements.size());
    out.elements.push_back(std::move(c));
  }

  std::vector<PathWord> ball = conjugator_ball(g, radius, lim, &out.ball_size);

  // candidate merges per conjugator, computed in parallel slots and applied
  // serially in ball order so witnesses never depend on the thread count
  struct Candidate {
    int from, to;
    PathWord conjugator;
  };
  std::vector<std::vector<Candidate>> found(ball.size());
  run_chunked(ball.size(), lim.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; ++b) {
      const PathWord& h = ball[b];
      PathWord image_inv = inverse(g, ap(h));
      for (std::size_t i = 0; i < out.elements.size(); ++i) {
        PathWord z = reduce(g, concat(h, out.elements[i].word, image_inv), lim);
        auto hit = index_of.find(canonical_form(g, z, lim).key);
        if (hit == index_of.end()) continue;
        int j = hit->second;
        if (j == static_cast<int>(i)) continue;
        if (j < static_cast<int>(i)) {
          found[b].push_back({static_cast<int>(i), j, h});
        } else {
          found[b].push_back({j, static_cast<int>(i), reduce(g, inverse(g, h), lim)});
        }
      }
    }
  });

  UnionFind uf(out.elements.size());
  for (std::size_t b = 0; b < ball.size(); ++b) {
    for (const Candidate& c : found[b]) {
      if (!uf.unite(c.from, c.to)) continue;
      // re-verify the witness before recording it
      PathWord check = twisted_conjugate(g, c.conjugator, out.elements[c.from].word, phi, lim);
      if (!equal(g, check, out.elements[c.to].word, lim))
        fail(Errc::precondition, "merge witness failed re-verification");
      MergeWitness w;
      w.from = c.from;
      w.to = c.to;
      w.conjugator = c.conjugator;
      w.conjugator_key = serialize_path_word(g, c.conjugator);
      out.witnesses.push_back(std::move(w));
    }
  }

  std::map<int, std::vector<int>> by_root;
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    by_root[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
  for (auto& [root, members] : by_root) out.classes.push_back(std::move(members));
  return out;
}

// ---- modulus separation ------------------------------------------------------------

ModulusCount modulus_class_count(const GbsGraph& g, const Automorphism& phi,
                                 const std::vector<PathWord>& elements, const Limits& lim) {
  if (!phi.validated) fail(Errc::precondition, "automorphism is not validated");
  if (!respects_delta(g, phi, lim))
    fail(Errc::delta_not_respected,
         "automorphism changes the modulus; the lower bound would be unsound");
  ModulusCount out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Rational value = modulus(g, elements[i]);
    if (std::find(out.values.begin(), out.values.end(), value) != out.values.end()) continue;
    out.values.push_back(std::move(value));
    out.first_index.push_back(static_cast<int>(i));
  }
  out.count = out.values.size();
  return out;
}

std::optional<Certificate> rinfty_certificate(const GbsGraph& g, const Automorphism& phi,
                                              std::string* reason, const Limits& lim) {
  if (!phi.validated) fail(Errc::precondition, "automorphism is not validated");
  DeltaImage image = delta_image_generators(g);
  int witness = -1;
  for (std::size_t i = 0; i < image.generators.size(); ++i) {
    if (image.generators[i] != 1 && image.generators[i] != -1) {
      witness = static_cast<int>(i);
      break;
    }
  }
  if (witness < 0) {
    if (reason) *reason = "modular image lies in {1, -1}";
    return std::nullopt;
  }
  if (!respects_delta(g, phi, lim)) {
    if (reason) *reason = "automorphism does not respect the modulus";
    return std::nullopt;
  }

  SpanningTree tree = spanning_tree(g);
  UserWord letter = single_term({Generator::edge_letter, image.loop_edges[witness]});
  PathWord loop = lift_user_word(g, tree, letter, lim);

  Certificate cert;
  cert.kind = Certificate::non_unimodular_r_infinity;
  cert.element = canonical_form(g, loop, lim).key;
  cert.modulus = image.generators[witness];
  Rational power(1);
  for (int k = 1; k <= 10; ++k) {
    power *= cert.modulus;
    for (const auto& [_, seen] : cert.family)
      if (seen == power) fail(Errc::precondition, "certificate family is not separating");
    cert.family.emplace_back(k, power);
  }
  cert.automorphism_id = phi.id;
  return cert;
}

// ---- free quotient --------------------------------------------------------------------

FreeQuotient free_quotient(const GbsGraph& g) {
  if (g.vertices.size() != 1)
    fail(Errc::not_unimodular_product,
         "free quotient needs a single vertex with central generator");
  FreeQuotient q;
  q.kernel_vertex = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].label_origin != 1 || g.edges[e].label_terminus != 1)
      fail(Errc::not_unimodular_product,
           "loop '" + g.edges[e].name + "' is not labeled [1, 1]; the vertex generator is not central");
    q.loop_edges.push_back(static_cast<int>(e));
    q.names.push_back(g.edges[e].name);
  }
  return q;
}

FreeWord project_word(const GbsGraph& g, const FreeQuotient& q, const PathWord& w) {
  if (!path_valid(g, w)) fail(Errc::precondition, "word is not a valid edge path");
  FreeWord out;
  for (const PathLetter& l : w.letters) {
    auto slot = std::find(q.loop_edges.begin(), q.loop_edges.end(), l.edge);
    if (slot == q.loop_edges.end()) fail(Errc::precondition, "letter outside the quotient map");
    out.terms.emplace_back(static_cast<int>(slot - q.loop_edges.begin()), Int(l.dir));
  }
  return free_normalized(std::move(out));
}

namespace {

FreeWord user_to_free(const GbsGraph&, const FreeQuotient& q, const UserWord& w) {
  FreeWord out;
  for (const auto& [gen, exp] : w.terms) {
    if (gen.kind == Generator::vertex_gen) continue;  // kernel
    auto slot = std::find(q.loop_edges.begin(), q.loop_edges.end(), gen.index);
    if (slot == q.loop_edges.end()) fail(Errc::precondition, "letter outside the quotient map");
    out.terms.emplace_back(static_cast<int>(slot - q.loop_edges.begin()), exp);
  }
  return free_normalized(std::move(out));
}

}  // namespace

FreeAutomorphism induced_automorphism(const GbsGraph& g, const FreeQuotient& q,
                                      const Automorphism& phi, const Limits& lim) {
  if (!phi.validated) fail(Errc::precondition, "automorphism is not validated");
  // the kernel generator must stay inside the kernel under both maps
  for (const std::vector<UserWord>* side : {&phi.forward, &phi.backward}) {
    const UserWord& image = (*side)[static_cast<std::size_t>(q.kernel_vertex)];
    if (!user_to_free(g, q, image).terms.empty())
      fail(Errc::kernel_not_preserved, "image of the central generator leaves the kernel");
  }

  FreeAutomorphism out;
  std::size_t vertex_slots = g.vertices.size();
  for (std::size_t i = 0; i < q.loop_edges.size(); ++i) {
    out.forward.push_back(user_to_free(g, q, phi.forward[vertex_slots + i]));
    out.backward.push_back(user_to_free(g, q, phi.backward[vertex_slots + i]));
  }
  for (std::size_t i = 0; i < out.forward.size(); ++i) {
    FreeWord self{{{static_cast<int>(i), Int(1)}}};
    if (!free_equal(free_substitute(out.forward[i], out.backward, lim), self) ||
        !free_equal(free_substitute(out.backward[i], out.forward, lim), self))
      fail(Errc::inverse_check_failed,
           "induced free maps do not invert each other on generator '" + q.names[i] + "'");
  }
  return out;
}

ProjectionReport projection_soundness(const GbsGraph& g, const FreeQuotient& q,
                                      const Automorphism& phi, int samples, std::uint64_t seed,
                                      int radius, const Limits& lim) {
  FreeAutomorphism bar = induced_automorphism(g, q, phi, lim);
  Applier ap(g, phi, lim);

  ProjectionReport report;
  report.samples = samples;
  std::vector<std::string> slots(static_cast<std::size_t>(std::max(samples, 0)));
  std::vector<char> ok(slots.size(), 0);
  run_chunked(slots.size(), lim.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      PathWord h = random_word(g, seed + 2 * s, radius);
      PathWord x = random_word(g, seed + 2 * s + 1, radius);
      PathWord twisted = reduce(g, concat(h, x, inverse(g, ap(h))), lim);
      FreeWord expected = free_concat(
          project_word(g, q, h),
          free_concat(project_word(g, q, x),
                      free_inverse(free_substitute(project_word(g, q, h), bar.forward, lim))));
      if (free_equal(project_word(g, q, twisted), expected)) {
        ok[s] = 1;
      } else {
        slots[s] = "h=" + serialize_path_word(g, h) + "; x=" + serialize_path_word(g, x);
      }
    }
  });
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (ok[s]) ++report.passes;
    else report.failures.push_back(slots[s]);
  }

  if (q.loop_edges.size() >= 2) {
    report.negative_control_ran = true;
    FreeWord x1{{{0, Int(1)}}};
    FreeWord x2{{{1, Int(1)}}};
    report.negative_control_distinct = !free_conjugate(x1, x2);
  }
  return report;
}

// ---- bounded-motion probe -----------------------------------------------------------------

GrowthReport conjugates_in_ball(const GbsGraph& g, const PathWord& x, unsigned radius,
                                const Limits& lim) {
  if (x.start != end_vertex(g, x)) fail(Errc::precondition, "probe element must be a closed word");
  SpanningTree tree = spanning_tree(g);
  Presentation pres = presentation(g);

  // single-letter alphabet out of the presentation generators
  std::vector<PathWord> alphabet;
  for (const Generator& gen : pres.generators) {
    for (int dir : {1, -1}) {
      UserWord w = single_term(gen, Int(dir));
      alphabet.push_back(reduce(g, lift_user_word(g, tree, w, lim), lim));
    }
  }

  GrowthReport report;
  std::set<std::string> seen;
  Int max_len(0);
  std::uint64_t enumerated = 0;

  std::vector<PathWord> level{path_at(g.base)};
  for (unsigned step = 0; step <= radius; ++step) {
    enumerated += level.size();
    if (enumerated > lim.max_ball)
      fail(Errc::radius_too_large, "conjugator ball exceeds the enumeration cap");

    std::vector<std::pair<std::string, Int>> results(level.size());
    run_chunked(level.size(), lim.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        CanonicalWord z = canonical_form(g, concat(level[i], x, inverse(g, level[i])), lim);
        Int length(static_cast<long>(z.word.letters.size()));
        for (const Int& k : z.word.exps) length += abs(k);
        results[i] = {std::move(z.key), std::move(length)};
      }
    });
    for (auto& [key, length] : results) {
      if (seen.insert(std::move(key)).second && length > max_len) max_len = length;
    }
    report.sizes.push_back(seen.size());

    if (step == radius) break;
    std::vector<PathWord> next;
    next.reserve(level.size() * alphabet.size());
    for (const PathWord& h : level)
      for (const PathWord& a : alphabet) next.push_back(reduce(g, concat(h, a), lim));
    level = std::move(next);
  }

  std::size_t n = report.sizes.size();
  report.stabilized = n >= 3 && report.sizes[n - 1] == report.sizes[n - 2] &&
                      report.sizes[n - 2] == report.sizes[n - 3];
  report.max_word_length = max_len;
  return report;
}

}  // namespace gbskit
