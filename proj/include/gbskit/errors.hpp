#pragma once

#include <stdexcept>
#include <string>

namespace gbskit {

enum class Errc {
  // input / parsing
  syntax_error,
  label_zero,
  unknown_vertex,
  duplicate_name,
  disconnected,
  unknown_generator,
  tree_edge_letter,
  invalid_word,
  // automorphism validation
  missing_image,
  relator_not_preserved,
  inverse_check_failed,
  // unmet preconditions
  kernel_not_preserved,
  not_unimodular_product,
  delta_not_respected,
  precondition,
  // caps
  radius_too_large,
  exponent_overflow,
};

const char* errc_name(Errc c);

class GbsError : public std::runtime_error {
 public:
  GbsError(Errc code, const std::string& message, int line = -1);
  Errc code() const { return code_; }
  int line() const { return line_; }  // 1-based input line, -1 when n/a

 private:
  Errc code_;
  int line_;
};

[[noreturn]] void fail(Errc code, const std::string& message, int line = -1);

}  // namespace gbskit
