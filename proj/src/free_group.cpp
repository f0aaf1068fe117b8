#include "gbskit/free_group.hpp"

#include <sstream>

#include "gbskit/errors.hpp"

namespace gbskit {

FreeWord free_normalized(FreeWord w) {
  std::vector<std::pair<int, Int>> out;
  for (auto& term : w.terms) {
    if (term.second == 0) continue;
    if (!out.empty() && out.back().first == term.first) {
      out.back().second += term.second;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.push_back(std::move(term));
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, Int>> next;
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
  return FreeWord{std::move(out)};
}

FreeWord free_concat(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  w.terms.insert(w.terms.end(), b.terms.begin(), b.terms.end());
  return free_normalized(std::move(w));
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out;
  out.terms.reserve(w.terms.size());
  for (auto it = w.terms.rbegin(); it != w.terms.rend(); ++it)
    out.terms.emplace_back(it->first, -it->second);
  return out;
}

FreeWord free_power(const FreeWord& w, const Int& k, const Limits& lim) {
  if (k == 0) return {};
  Int reps = abs(k);
  if (reps * static_cast<long>(w.terms.size()) > lim.max_expansion)
    fail(Errc::exponent_overflow, "free power expands past the expansion cap");
  FreeWord unit = k > 0 ? w : free_inverse(w);
  FreeWord out;
  for (Int i = 0; i < reps; ++i) out = free_concat(out, unit);
  return out;
}

FreeWord free_substitute(const FreeWord& w, const std::vector<FreeWord>& images,
                         const Limits& lim) {
  FreeWord out;
  for (const auto& [gen, exp] : w.terms) {
    if (gen < 0 || gen >= static_cast<int>(images.size()))
      fail(Errc::unknown_generator, "free generator out of range");
    out = free_concat(out, free_power(images[gen], exp, lim));
  }
  return out;
}

bool free_equal(const FreeWord& a, const FreeWord& b) {
  return free_normalized(a).terms == free_normalized(b).terms;
}

namespace {

// cyclic RLE: fold matching first/last runs together until the ends differ
std::vector<std::pair<int, Int>> cyclic_runs(const FreeWord& w) {
  std::vector<std::pair<int, Int>> runs = free_normalized(w).terms;
  while (runs.size() >= 2 && runs.front().first == runs.back().first) {
    Int merged = runs.front().second + runs.back().second;
    runs.pop_back();
    if (merged == 0) runs.erase(runs.begin());
    else runs.front().second = merged;
  }
  return runs;
}

}  // namespace

bool free_conjugate(const FreeWord& a, const FreeWord& b) {
  auto ra = cyclic_runs(a);
  auto rb = cyclic_runs(b);
  if (ra.size() != rb.size()) return false;
  if (ra.empty()) return true;
  for (std::size_t shift = 0; shift < ra.size(); ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < ra.size(); ++i) {
      if (ra[(shift + i) % ra.size()] != rb[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

std::string serialize_free_word(const std::vector<std::string>& names, const FreeWord& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [gen, exp] : w.terms) {
    if (!first) out << ' ';
    first = false;
    out << names.at(static_cast<std::size_t>(gen));
    if (exp != 1) out << '^' << exp.str();
  }
  return out.str();
}

}  // namespace gbskit
