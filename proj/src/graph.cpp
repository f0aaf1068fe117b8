#include "gbskit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace gbskit {

// ---- errors ----------------------------------------------------------------

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::syntax_error: return "SyntaxError";
    case Errc::label_zero: return "LabelZero";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::duplicate_name: return "DuplicateName";
    case Errc::disconnected: return "Disconnected";
    case Errc::unknown_generator: return "UnknownGenerator";
    case Errc::tree_edge_letter: return "TreeEdgeLetterUsed";
    case Errc::invalid_word: return "InvalidWord";
    case Errc::missing_image: return "MissingImage";
    case Errc::relator_not_preserved: return "RelatorNotPreserved";
    case Errc::inverse_check_failed: return "InverseCheckFailed";
    case Errc::kernel_not_preserved: return "KernelNotPreserved";
    case Errc::not_unimodular_product: return "NotUnimodularProduct";
    case Errc::delta_not_respected: return "DeltaNotRespected";
    case Errc::precondition: return "Precondition";
    case Errc::radius_too_large: return "RadiusTooLarge";
    case Errc::exponent_overflow: return "ExponentOverflow";
  }
  return "Unknown";
}

namespace {
std::string compose_message(Errc code, const std::string& message, int line) {
  std::string out = errc_name(code);
  out += ": ";
  out += message;
  if (line >= 0) {
    out += " (line ";
    out += std::to_string(line);
    out += ")";
  }
  return out;
}
}  // namespace

GbsError::GbsError(Errc code, const std::string& message, int line)
    : std::runtime_error(compose_message(code, message, line)), code_(code), line_(line) {}

void fail(Errc code, const std::string& message, int line) {
  throw GbsError(code, message, line);
}

// ---- numeric ---------------------------------------------------------------

bool digits_within(const Int& v, std::uint64_t max_digits) {
  if (v == 0) return max_digits >= 1;
  Int a = abs(v);
  // bits * log10(2), bracketed so str() is only needed near the boundary
  std::uint64_t bits = boost::multiprecision::msb(a) + 1;
  // digits - 1 <= bits * 0.30103 <= digits
  unsigned __int128 scaled = static_cast<unsigned __int128>(bits) * 30103u;
  unsigned __int128 lo_bound = static_cast<unsigned __int128>(max_digits) * 100000u;
  if (scaled + 100000u <= lo_bound) return true;                  // certainly few digits
  if (scaled > lo_bound + 100000u) return false;                  // certainly too many
  return a.str().size() <= max_digits;
}

void require_digits(const Int& v, const Limits& lim) {
  if (!digits_within(v, lim.max_exponent_digits))
    fail(Errc::exponent_overflow,
         "exponent exceeds " + std::to_string(lim.max_exponent_digits) + " decimal digits");
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Rational ratio(const Int& num, const Int& den) { return Rational(num) / Rational(den); }

// ---- user words: structural ops ---------------------------------------------

UserWord normalized(UserWord w) {
  std::vector<std::pair<Generator, Int>> out;
  for (auto& term : w.terms) {
    if (term.second == 0) continue;
    if (!out.empty() && out.back().first == term.first) {
      out.back().second += term.second;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.push_back(std::move(term));
    }
  }
  // merging can create new adjacencies; loop to a fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<Generator, Int>> next;
    for (auto& term : out) {
      if (!next.empty() && next.back().first == term.first) {
        next.back().second += term.second;
        if (next.back().second == 0) next.pop_back();
        changed = true;
      } else {
        next.push_back(std::move(term));
      }
    }
    out = std::move(next);
  }
  return UserWord{std::move(out)};
}

UserWord concat(const UserWord& a, const UserWord& b) {
  UserWord w = a;
  w.terms.insert(w.terms.end(), b.terms.begin(), b.terms.end());
  return normalized(std::move(w));
}

UserWord inverse(const UserWord& w) {
  UserWord out;
  out.terms.reserve(w.terms.size());
  for (auto it = w.terms.rbegin(); it != w.terms.rend(); ++it)
    out.terms.emplace_back(it->first, -it->second);
  return out;
}

// ---- path words: structural ops ---------------------------------------------

PathWord path_at(int vertex) {
  PathWord w;
  w.start = vertex;
  return w;
}

PathWord concat(const PathWord& a, const PathWord& b) {
  PathWord w;
  w.start = a.start;
  w.exps = a.exps;
  w.letters = a.letters;
  w.exps.back() += b.exps.front();
  w.exps.insert(w.exps.end(), b.exps.begin() + 1, b.exps.end());
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

PathWord concat(const PathWord& a, const PathWord& b, const PathWord& c) {
  return concat(concat(a, b), c);
}

// ---- graph lookups ----------------------------------------------------------

int GbsGraph::vertex_index(std::string_view name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int GbsGraph::edge_index(std::string_view name) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].name == name) return static_cast<int>(i);
  return -1;
}

// ---- parsing ----------------------------------------------------------------

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  int line;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  std::string name(const char* what) {
    skip_ws();
    std::size_t j = i;
    while (j < s.size() && name_char(s[j])) ++j;
    if (j == i) fail(Errc::syntax_error, std::string("expected ") + what, line);
    std::string out = s.substr(i, j - i);
    i = j;
    return out;
  }
  void expect(const std::string& tok) {
    skip_ws();
    if (s.compare(i, tok.size(), tok) != 0)
      fail(Errc::syntax_error, "expected '" + tok + "'", line);
    i += tok.size();
  }
  Int integer() {
    skip_ws();
    std::size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    std::size_t digits = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == digits) fail(Errc::syntax_error, "expected an integer", line);
    Int v(s.substr(i, j - i));
    i = j;
    return v;
  }
};

struct PendingEdge {
  std::string name, from, to;
  Int lo, lt;
  int line;
};

}  // namespace

GbsGraph parse_graph(const std::string& text) {
  GbsGraph g;
  std::vector<PendingEdge> pending;
  std::set<std::string> names;
  std::string base_name;
  int base_line = -1;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Cursor cur{raw, 0, line_no};
    if (cur.done()) continue;
    std::string keyword = cur.name("a statement");
    if (keyword == "vertex") {
      std::string name = cur.name("a vertex name");
      if (!cur.done()) fail(Errc::syntax_error, "trailing input after vertex statement", line_no);
      if (!names.insert(name).second) fail(Errc::duplicate_name, "name '" + name + "' reused", line_no);
      g.vertices.push_back(std::move(name));
    } else if (keyword == "edge") {
      PendingEdge e;
      e.name = cur.name("an edge name");
      cur.expect(":");
      e.from = cur.name("an origin vertex");
      cur.expect("->");
      e.to = cur.name("a terminus vertex");
      cur.expect("[");
      e.lo = cur.integer();
      cur.expect(",");
      e.lt = cur.integer();
      cur.expect("]");
      if (!cur.done()) fail(Errc::syntax_error, "trailing input after edge statement", line_no);
      if (!names.insert(e.name).second)
        fail(Errc::duplicate_name, "name '" + e.name + "' reused", line_no);
      if (e.lo == 0 || e.lt == 0)
        fail(Errc::label_zero, "edge '" + e.name + "' has a zero label", line_no);
      e.line = line_no;
      pending.push_back(std::move(e));
    } else if (keyword == "base") {
      if (base_line >= 0) fail(Errc::syntax_error, "base declared twice", line_no);
      base_name = cur.name("a vertex name");
      if (!cur.done()) fail(Errc::syntax_error, "trailing input after base statement", line_no);
      base_line = line_no;
    } else {
      fail(Errc::syntax_error, "unknown statement '" + keyword + "'", line_no);
    }
  }

  if (g.vertices.empty()) fail(Errc::syntax_error, "no vertices declared");

  for (auto& e : pending) {
    int from = g.vertex_index(e.from);
    int to = g.vertex_index(e.to);
    if (from < 0) fail(Errc::unknown_vertex, "unknown vertex '" + e.from + "'", e.line);
    if (to < 0) fail(Errc::unknown_vertex, "unknown vertex '" + e.to + "'", e.line);
    g.edges.push_back({std::move(e.name), from, to, std::move(e.lo), std::move(e.lt)});
  }

  if (base_line >= 0) {
    int b = g.vertex_index(base_name);
    if (b < 0) fail(Errc::unknown_vertex, "unknown vertex '" + base_name + "'", base_line);
    g.base = b;
  }

  auto report = validate_graph(g);
  if (!report.connected)
    fail(Errc::disconnected,
         "graph has " + std::to_string(report.components) + " connected components");
  if (!report.ok()) fail(Errc::syntax_error, report.failures.front());
  return g;
}

std::string serialize_graph(const GbsGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices) out << "vertex " << v << "\n";
  for (const auto& e : g.edges)
    out << "edge " << e.name << " : " << g.vertices[e.origin] << " -> " << g.vertices[e.terminus]
        << " [" << e.label_origin << ", " << e.label_terminus << "]\n";
  if (g.base != 0) out << "base " << g.vertices[g.base] << "\n";
  return out.str();
}

ValidationReport validate_graph(const GbsGraph& g) {
  ValidationReport r;
  r.vertex_count = static_cast<int>(g.vertices.size());
  r.edge_count = static_cast<int>(g.edges.size());
  if (g.vertices.empty()) {
    r.failures.push_back("graph has no vertices");
    return r;
  }
  if (g.base < 0 || g.base >= r.vertex_count) {
    r.failures.push_back("base vertex out of range");
  } else {
    r.base = g.vertices[g.base];
  }

  std::set<std::string> names;
  for (const auto& v : g.vertices)
    if (!names.insert(v).second) r.failures.push_back("duplicate name '" + v + "'");
  for (const auto& e : g.edges) {
    if (!names.insert(e.name).second) r.failures.push_back("duplicate name '" + e.name + "'");
    if (e.origin < 0 || e.origin >= r.vertex_count || e.terminus < 0 ||
        e.terminus >= r.vertex_count) {
      r.failures.push_back("edge '" + e.name + "' endpoint out of range");
      continue;
    }
    if (e.label_origin == 0 || e.label_terminus == 0)
      r.failures.push_back("edge '" + e.name + "' has a zero label");
  }

  // connectivity by breadth-first sweep from each unvisited vertex
  std::vector<char> seen(g.vertices.size(), 0);
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    if (seen[s]) continue;
    ++r.components;
    std::deque<int> queue{static_cast<int>(s)};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const auto& e : g.edges) {
        if (e.origin < 0 || e.origin >= r.vertex_count || e.terminus < 0 ||
            e.terminus >= r.vertex_count)
          continue;
        int other = -1;
        if (e.origin == u) other = e.terminus;
        else if (e.terminus == u) other = e.origin;
        if (other >= 0 && !seen[other]) {
          seen[other] = 1;
          queue.push_back(other);
        }
      }
    }
  }
  r.connected = r.components == 1;
  if (!r.connected)
    r.failures.push_back("graph has " + std::to_string(r.components) + " connected components");
  r.betti = r.edge_count - r.vertex_count + r.components;
  return r;
}

// ---- spanning tree ------------------------------------------------------------

SpanningTree spanning_tree(const GbsGraph& g) {
  auto report = validate_graph(g);
  if (!report.connected)
    fail(Errc::disconnected,
         "graph has " + std::to_string(report.components) + " connected components");

  SpanningTree t;
  t.parent_edge.assign(g.vertices.size(), -1);
  t.parent_dir.assign(g.vertices.size(), 0);
  t.in_tree_flag.assign(g.edges.size(), 0);

  std::vector<char> seen(g.vertices.size(), 0);
  std::deque<int> queue{g.base};
  seen[g.base] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const GbsEdge& e = g.edges[i];
      if (e.origin == u && !seen[e.terminus]) {
        seen[e.terminus] = 1;
        t.parent_edge[e.terminus] = static_cast<int>(i);
        t.parent_dir[e.terminus] = 1;
        t.in_tree_flag[i] = 1;
        queue.push_back(e.terminus);
      } else if (e.terminus == u && !seen[e.origin]) {
        seen[e.origin] = 1;
        t.parent_edge[e.origin] = static_cast<int>(i);
        t.parent_dir[e.origin] = -1;
        t.in_tree_flag[i] = 1;
        queue.push_back(e.origin);
      }
    }
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (t.in_tree_flag[i]) t.tree_edges.push_back(static_cast<int>(i));
  return t;
}

std::vector<PathLetter> tree_path_from_base(const GbsGraph& g, const SpanningTree& t, int v) {
  std::vector<PathLetter> up;
  int cur = v;
  while (cur != g.base) {
    int e = t.parent_edge[cur];
    if (e < 0) fail(Errc::disconnected, "vertex '" + g.vertices[cur] + "' not reached by the tree");
    up.push_back({e, t.parent_dir[cur]});
    cur = t.parent_dir[cur] > 0 ? g.edges[e].origin : g.edges[e].terminus;
  }
  std::reverse(up.begin(), up.end());
  return up;
}

// ---- path word geometry ---------------------------------------------------------

int end_vertex(const GbsGraph& g, const PathWord& w) {
  int v = w.start;
  for (const auto& l : w.letters) v = l.dir > 0 ? g.edges[l.edge].terminus : g.edges[l.edge].origin;
  return v;
}

int vertex_at(const GbsGraph& g, const PathWord& w, std::size_t position) {
  int v = w.start;
  for (std::size_t i = 0; i < position && i < w.letters.size(); ++i) {
    const auto& l = w.letters[i];
    v = l.dir > 0 ? g.edges[l.edge].terminus : g.edges[l.edge].origin;
  }
  return v;
}

bool path_valid(const GbsGraph& g, const PathWord& w) {
  if (w.exps.size() != w.letters.size() + 1) return false;
  if (w.start < 0 || w.start >= static_cast<int>(g.vertices.size())) return false;
  int v = w.start;
  for (const auto& l : w.letters) {
    if (l.edge < 0 || l.edge >= static_cast<int>(g.edges.size())) return false;
    if (l.dir != 1 && l.dir != -1) return false;
    const GbsEdge& e = g.edges[l.edge];
    int from = l.dir > 0 ? e.origin : e.terminus;
    int to = l.dir > 0 ? e.terminus : e.origin;
    if (from != v) return false;
    v = to;
  }
  return true;
}

PathWord inverse(const GbsGraph& g, const PathWord& w) {
  PathWord out;
  out.start = end_vertex(g, w);
  out.exps.clear();
  out.exps.reserve(w.exps.size());
  for (auto it = w.exps.rbegin(); it != w.exps.rend(); ++it) out.exps.push_back(-*it);
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(reversed(*it));
  return out;
}

PathWord power(const GbsGraph& g, const PathWord& w, const Int& k, const Limits& lim) {
  if (w.start != end_vertex(g, w)) fail(Errc::precondition, "powering an open path");
  if (k == 0) return path_at(w.start);
  Int reps = abs(k);
  Int projected = reps * static_cast<long>(w.letters.size());
  if (projected > lim.max_expansion)
    fail(Errc::exponent_overflow, "power expands past the expansion cap");
  PathWord unit = k > 0 ? w : inverse(g, w);
  PathWord out = path_at(w.start);
  for (Int i = 0; i < reps; ++i) out = concat(out, unit);
  return out;
}

std::string serialize_path_word(const GbsGraph& g, const PathWord& w) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& tok) {
    if (!first) out << ' ';
    out << tok;
    first = false;
  };
  int v = w.start;
  for (std::size_t i = 0; i <= w.letters.size(); ++i) {
    if (w.exps[i] != 0) {
      if (w.exps[i] == 1) emit(g.vertices[v]);
      else emit(g.vertices[v] + "^" + w.exps[i].str());
    }
    if (i < w.letters.size()) {
      const auto& l = w.letters[i];
      emit(l.dir > 0 ? g.edges[l.edge].name : g.edges[l.edge].name + "^-1");
      v = l.dir > 0 ? g.edges[l.edge].terminus : g.edges[l.edge].origin;
    }
  }
  return out.str();
}

// ---- presentation -----------------------------------------------------------------

Presentation presentation(const GbsGraph& g) {
  SpanningTree t = spanning_tree(g);
  Presentation p;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    p.generators.push_back({Generator::vertex_gen, static_cast<int>(v)});
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (!t.in_tree(static_cast<int>(e)))
      p.generators.push_back({Generator::edge_letter, static_cast<int>(e)});

  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const GbsEdge& e = g.edges[i];
    Generator at{Generator::vertex_gen, e.terminus};
    Generator ao{Generator::vertex_gen, e.origin};
    UserWord rel;
    if (t.in_tree(static_cast<int>(i))) {
      rel.terms.emplace_back(at, e.label_origin);
      rel.terms.emplace_back(ao, -e.label_terminus);
    } else {
      Generator te{Generator::edge_letter, static_cast<int>(i)};
      rel.terms.emplace_back(te, Int(1));
      rel.terms.emplace_back(at, e.label_origin);
      rel.terms.emplace_back(te, Int(-1));
      rel.terms.emplace_back(ao, -e.label_terminus);
    }
    p.relators.push_back(normalized(std::move(rel)));
  }
  return p;
}

int generator_slot(const GbsGraph& g, const SpanningTree& t, const Generator& gen) {
  if (gen.kind == Generator::vertex_gen) return gen.index;
  if (t.in_tree(gen.index)) return -1;
  int slot = static_cast<int>(g.vertices.size());
  for (int e = 0; e < gen.index; ++e)
    if (!t.in_tree(e)) ++slot;
  return slot;
}

std::string generator_name(const GbsGraph& g, const Generator& gen) {
  return gen.kind == Generator::vertex_gen ? g.vertices[gen.index] : g.edges[gen.index].name;
}

// ---- word parsing -------------------------------------------------------------------

UserWord parse_user_word(const GbsGraph& g, const std::string& text) {
  SpanningTree t = spanning_tree(g);
  UserWord w;
  std::istringstream in(text);
  std::string token;
  int pos = 0;
  while (in >> token) {
    ++pos;
    std::string name = token;
    Int exp(1);
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string digits = token.substr(caret + 1);
      if (name.empty() || digits.empty())
        fail(Errc::invalid_word, "malformed token '" + token + "'", pos);
      std::size_t j = digits[0] == '-' || digits[0] == '+' ? 1 : 0;
      if (j == digits.size())
        fail(Errc::invalid_word, "malformed token '" + token + "'", pos);
      for (; j < digits.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(digits[j])))
          fail(Errc::invalid_word, "malformed token '" + token + "'", pos);
      exp = Int(digits);
    }
    for (char c : name)
      if (!name_char(c)) fail(Errc::invalid_word, "malformed token '" + token + "'", pos);

    if (int v = g.vertex_index(name); v >= 0) {
      w.terms.emplace_back(Generator{Generator::vertex_gen, v}, std::move(exp));
    } else if (int e = g.edge_index(name); e >= 0) {
      if (t.in_tree(e))
        fail(Errc::tree_edge_letter, "'" + name + "' is a spanning-tree edge", pos);
      w.terms.emplace_back(Generator{Generator::edge_letter, e}, std::move(exp));
    } else {
      fail(Errc::unknown_generator, "unknown generator '" + name + "'", pos);
    }
  }
  return normalized(std::move(w));
}

std::string serialize_user_word(const GbsGraph& g, const UserWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [gen, exp] : w.terms) {
    if (!first) out << ' ';
    first = false;
    out << generator_name(g, gen);
    if (exp != 1) out << '^' << exp.str();
  }
  return out.str();
}

// ---- lifting ----------------------------------------------------------------------------

namespace {

PathWord letters_only(const GbsGraph& g, int start, const std::vector<PathLetter>& letters) {
  PathWord w;
  w.start = start;
  w.letters = letters;
  w.exps.assign(letters.size() + 1, Int(0));
  (void)g;
  return w;
}

}  // namespace

PathWord lift_user_word(const GbsGraph& g, const SpanningTree& t, const UserWord& w,
                        const Limits& lim) {
  PathWord out = path_at(g.base);
  for (const auto& [gen, exp] : w.terms) {
    require_digits(exp, lim);
    if (gen.kind == Generator::vertex_gen) {
      std::vector<PathLetter> path = tree_path_from_base(g, t, gen.index);
      PathWord down = letters_only(g, g.base, path);
      PathWord core = path_at(gen.index);
      core.exps[0] = exp;
      out = concat(out, concat(down, core, inverse(g, down)));
    } else {
      if (gen.index < 0 || gen.index >= static_cast<int>(g.edges.size()))
        fail(Errc::unknown_generator, "edge letter out of range");
      if (t.in_tree(gen.index))
        fail(Errc::tree_edge_letter, "'" + g.edges[gen.index].name + "' is a spanning-tree edge");
      const GbsEdge& e = g.edges[gen.index];
      std::vector<PathLetter> loop = tree_path_from_base(g, t, e.origin);
      loop.push_back({gen.index, 1});
      std::vector<PathLetter> back = tree_path_from_base(g, t, e.terminus);
      std::reverse(back.begin(), back.end());
      for (auto& l : back) l = reversed(l);
      loop.insert(loop.end(), back.begin(), back.end());

      PathWord unit = letters_only(g, g.base, loop);
      Int reps = abs(exp);
      Int projected = reps * static_cast<long>(loop.size());
      if (projected > lim.max_expansion)
        fail(Errc::exponent_overflow, "stable-letter power expands past the expansion cap");
      PathWord piece = path_at(g.base);
      PathWord step = exp > 0 ? unit : inverse(g, unit);
      for (Int i = 0; i < reps; ++i) piece = concat(piece, step);
      out = concat(out, piece);
    }
  }
  return out;
}

PathWord lift_user_word(const GbsGraph& g, const UserWord& w, const Limits& lim) {
  return lift_user_word(g, spanning_tree(g), w, lim);
}

UserWord project_to_presentation(const GbsGraph& g, const SpanningTree& t, const PathWord& w) {
  UserWord out;
  int v = w.start;
  for (std::size_t i = 0; i <= w.letters.size(); ++i) {
    if (w.exps[i] != 0)
      out.terms.emplace_back(Generator{Generator::vertex_gen, v}, w.exps[i]);
    if (i < w.letters.size()) {
      const auto& l = w.letters[i];
      if (!t.in_tree(l.edge))
        out.terms.emplace_back(Generator{Generator::edge_letter, l.edge}, Int(l.dir));
      v = l.dir > 0 ? g.edges[l.edge].terminus : g.edges[l.edge].origin;
    }
  }
  return normalized(std::move(out));
}

}  // namespace gbskit
