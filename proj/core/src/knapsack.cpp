#include "cubeslice/knapsack.hpp"

#include <algorithm>

namespace cubeslice {

bool KnapsackInstance::has_negative_weight() const {
  return std::any_of(weights.begin(), weights.end(),
                     [](const Rational& w) { return w < 0; });
}

namespace {

std::vector<Rational> subset_sums(const std::vector<Rational>& weights, int lo, int hi) {
  std::vector<Rational> sums;
  sums.reserve(std::size_t{1} << (hi - lo));
  sums.push_back(0);
  for (int i = lo; i < hi; ++i) {
    std::size_t n = sums.size();
    for (std::size_t s = 0; s < n; ++s) sums.push_back(sums[s] + weights[i]);
  }
  return sums;
}

}  // namespace

std::uint64_t count_knapsack(const KnapsackInstance& inst) {
  const int len = static_cast<int>(inst.weights.size());
  if (len > kMaxKnapsackLen)
    throw CapacityError("knapsack length " + std::to_string(len) + " exceeds " +
                        std::to_string(kMaxKnapsackLen));
  if (len == 0) return inst.target == 0 ? 1 : 0;

  const int half = len / 2;
  std::vector<Rational> left = subset_sums(inst.weights, 0, half);
  std::vector<Rational> right = subset_sums(inst.weights, half, len);
  std::sort(right.begin(), right.end());

  std::uint64_t count = 0;
  for (const auto& s : left) {
    Rational need = inst.target - s;
    auto [lo, hi] = std::equal_range(right.begin(), right.end(), need);
    count += static_cast<std::uint64_t>(hi - lo);
  }
  return count;
}

}  // namespace cubeslice
