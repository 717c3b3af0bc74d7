#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubeslice/cube.hpp"

namespace cubeslice {

inline constexpr int kMaxPatternDim = 6;  // single-pattern queries
inline constexpr int kMaxTableDim = 5;    // exhaustive table jobs

/// Candidate intersection trace: subset of H^k as a bitset over all 2^k
/// points, bit index = integer value of the point read as binary
/// (coordinate 1 = least significant). Must contain the origin (bit 0).
struct Pattern {
  int k = 0;
  std::uint64_t mask = 0;

  bool contains(std::uint64_t point) const { return mask >> point & 1; }
  int size() const;
  bool has_origin() const { return mask & 1; }

  std::string to_hex() const;
  static Pattern from_hex(int k, const std::string& hex);

  bool operator==(const Pattern&) const = default;
};

/// Trace of a linear map over H^k, k <= kMaxPatternDim.
Pattern trace_pattern(const RatMatrix& l);

std::vector<std::vector<int>> all_permutations(int k);

/// Image of a pattern under a domain-coordinate permutation (coordinate i of
/// the source becomes coordinate perm[i] of the image).
std::uint64_t apply_permutation(std::uint64_t mask, int k, const std::vector<int>& perm);

/// Lexicographically minimal bitset over all k! coordinate permutations.
Pattern canonical_pattern(const Pattern& t);

struct NotRealizableCert {
  std::uint64_t forced_point;  // point of span(B) \ T no admissible column excludes
  int basis_rank;
  int admissible_count;
};

struct RealizabilityResult {
  enum class Status { Realizable, NotRealizable, Unknown };
  Status status = Status::Unknown;
  std::optional<RatMatrix> witness;              // trace re-verified equal to T
  std::optional<NotRealizableCert> certificate;  // full decision ran to completion
};

/// Exact decision: is T the trace H^k of some linear map? Column-pattern
/// method over a maximal independent basis B of T; realizable witnesses are
/// reconstructed and re-verified bit-for-bit. Throws ConstraintError when the
/// origin is missing, CapacityError when k > kMaxPatternDim.
RealizabilityResult realizable(const Pattern& t);

}  // namespace cubeslice
