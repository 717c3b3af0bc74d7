#pragma once

#include <cstdint>

#include "cubeslice/errors.hpp"
#include "cubeslice/rational.hpp"

namespace cubeslice {

inline constexpr int kMaxKnapsackLen = 40;

struct KnapsackInstance {
  std::vector<Rational> weights;
  Rational target;

  bool has_negative_weight() const;
};

/// Exact number of 0/1 selections with sum(p_i v_i) = q, via split-half
/// enumeration and a sorted-merge join. Throws CapacityError for more than
/// 40 weights.
std::uint64_t count_knapsack(const KnapsackInstance& inst);

}  // namespace cubeslice
