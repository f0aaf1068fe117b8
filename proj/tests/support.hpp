#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "gbskit/graph.hpp"
#include "gbskit/normal_form.hpp"

namespace testsupport {

inline std::string data_path(const std::string& name) {
  return std::string(GBSKIT_TEST_DATA) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline gbskit::GbsGraph load_graph(const std::string& name) {
  return gbskit::parse_graph(slurp(data_path(name)));
}

// Parse a user word and lift it; shorthand for tests on one-vertex graphs.
inline gbskit::PathWord lift(const gbskit::GbsGraph& g, const std::string& word) {
  return gbskit::lift_user_word(g, gbskit::parse_user_word(g, word));
}

inline std::string canon_key(const gbskit::GbsGraph& g, const std::string& word) {
  return gbskit::canonical_form(g, lift(g, word)).key;
}

}  // namespace testsupport
