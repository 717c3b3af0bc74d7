#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubeslice/linalg.hpp"
#include "cubeslice/matrix.hpp"

namespace cubeslice {

// 2^k enumeration is the hard wall; one machine word per point.
inline constexpr int kMaxEnumerationDim = 62;

/// One vertex of {0,1}^k, bit i = coordinate i+1.
struct CubePoint {
  std::uint64_t bits = 0;
  int dim = 0;

  bool operator==(const CubePoint&) const = default;
  auto operator<=>(const CubePoint&) const = default;
};

/// v -> Lv + c; the linear case is offset = 0.
struct AffineMap {
  RatMatrix L;
  RatVector offset;  // dim = rows of L

  static AffineMap linear(RatMatrix l) {
    RatVector zero(l.rows(), Rational(0));
    return AffineMap{std::move(l), std::move(zero)};
  }

  int domain_dim() const { return L.cols(); }
  int image_dim() const { return L.rows(); }
  bool is_linear() const;
};

enum class GapClass { Full, AtMostThreeQuarters, AtMostHalf, Small };

struct IntersectionReport {
  int k = 0;
  int m = 0;
  std::uint64_t count = 0;
  std::optional<std::vector<CubePoint>> witnesses;  // sorted by bits
  bool map_is_isometry = false;
  bool map_is_contraction = false;
  GapClass gap_class = GapClass::Small;
};

enum class CountStrategy {
  Auto,      // cleared-denominator integer path (machine words when safe)
  Rational,  // pure mpq path
  Integer,   // force the cleared-denominator path
};

/// Exact |{v in H^k : Lv + c in H^m}| by Gray-code enumeration of all 2^k
/// points (one column add/subtract per step). Throws CapacityError when
/// k > 62. threads = 0 picks CUBESLICE_THREADS or hardware concurrency;
/// the report is identical for any worker count.
IntersectionReport count_intersection(const AffineMap& map,
                                      bool collect_witnesses = false,
                                      int threads = 0,
                                      CountStrategy strategy = CountStrategy::Auto);

/// Affine -> linear reduction: translate by an intersection point and reflect
/// cube coordinates so the origin is fixed; preserves the count. Throws
/// EmptyIntersectionError when no cube point meets the target cube.
AffineMap linearize(const AffineMap& map);

/// Membership in the extended hypercube {0,1,-1}^m.
bool in_extended_cube(const RatVector& w);

/// Gap classification for a count t under the map's class flags.
GapClass classify_gap(int k, std::uint64_t count, bool contraction);

/// Worker count resolution: explicit > CUBESLICE_THREADS env > hardware.
int resolve_threads(int requested);

}  // namespace cubeslice
