#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubeslice {

// Exact arbitrary-precision rational. mpq_class keeps the invariants we need
// (positive denominator, gcd-reduced, 0 represented as 0/1) as long as values
// are canonicalized after raw construction; all arithmetic results are
// canonical already.
using Rational = mpq_class;
using BigInt = mpz_class;
using RatVector = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" (q > 0 after reduction). Returns nullopt on malformed
/// input, including zero denominators.
std::optional<Rational> parse_rational(std::string_view text);

/// Renders as "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace cubeslice
