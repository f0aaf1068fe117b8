#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace gbskit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Caps for operations that can blow up. Defaults match the CLI defaults;
// every enumerating or exponent-growing entry point takes one of these.
struct Limits {
  std::uint64_t max_exponent_digits = 1ull << 20;  // decimal digits per exponent
  std::uint64_t max_ball = 1'000'000;              // enumerated conjugator words
  std::uint64_t max_expansion = 1'000'000;         // letters produced by powering
  unsigned threads = 1;
};

bool digits_within(const Int& v, std::uint64_t max_digits);
// Throws Errc::exponent_overflow when v has more decimal digits than the cap.
void require_digits(const Int& v, const Limits& lim);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// num/den as a normalized rational. The cpp_rational two-argument
// constructor rejects negative denominators; this always normalizes.
Rational ratio(const Int& num, const Int& den);

}  // namespace gbskit
