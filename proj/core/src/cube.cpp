#include "cubeslice/cube.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <thread>

namespace cubeslice {

bool AffineMap::is_linear() const {
  for (const auto& x : offset)
    if (x != 0) return false;
  return true;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CUBESLICE_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 16u));
}

namespace {

struct SparseColumn {
  std::vector<int> rows;
};

// Generic Gray-code walk over indices [lo, hi); Scalar is the image
// coordinate type. State: image vector, per-row membership flag, count of
// rows currently outside the target {0, hi_value}.
template <typename Scalar>
struct GrayWalker {
  int k, m;
  const std::vector<std::vector<Scalar>>* cols;  // [k][m], dense column entries
  const std::vector<SparseColumn>* supports;
  const std::vector<Scalar>* start;  // offset
  Scalar target;                     // membership means value in {0, target}

  std::uint64_t run(std::uint64_t lo, std::uint64_t hi, bool collect,
                    std::vector<CubePoint>* witnesses) const {
    std::vector<Scalar> image = *start;
    std::uint64_t g = lo ^ (lo >> 1);
    for (int i = 0; i < k; ++i)
      if (g >> i & 1)
        for (int r : (*supports)[i].rows) image[r] += (*cols)[i][r];
    int bad = 0;
    for (int r = 0; r < m; ++r)
      if (!(image[r] == 0 || image[r] == target)) ++bad;

    std::uint64_t count = 0;
    for (std::uint64_t idx = lo;; ++idx) {
      if (bad == 0) {
        ++count;
        if (collect) witnesses->push_back(CubePoint{g, k});
      }
      if (idx + 1 >= hi) break;
      int bit = std::countr_zero(idx + 1);
      bool setting = !(g >> bit & 1);
      g ^= std::uint64_t{1} << bit;
      for (int r : (*supports)[bit].rows) {
        bool was_ok = image[r] == 0 || image[r] == target;
        if (setting)
          image[r] += (*cols)[bit][r];
        else
          image[r] -= (*cols)[bit][r];
        bool now_ok = image[r] == 0 || image[r] == target;
        bad += static_cast<int>(was_ok) - static_cast<int>(now_ok);
      }
    }
    return count;
  }
};

template <typename Scalar>
std::uint64_t enumerate(const GrayWalker<Scalar>& walker, std::uint64_t total,
                        int threads, bool collect, std::vector<CubePoint>* witnesses) {
  if (threads <= 1 || total < (1u << 12)) return walker.run(0, total, collect, witnesses);
  int n = static_cast<int>(std::min<std::uint64_t>(threads, total >> 10));
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<std::vector<CubePoint>> wit(n);
  std::vector<std::thread> pool;
  for (int w = 0; w < n; ++w) {
    std::uint64_t lo = total / n * w;
    std::uint64_t hi = (w + 1 == n) ? total : total / n * (w + 1);
    pool.emplace_back([&, w, lo, hi] {
      counts[w] = walker.run(lo, hi, collect, collect ? &wit[w] : nullptr);
    });
  }
  for (auto& t : pool) t.join();
  std::uint64_t count = 0;
  for (int w = 0; w < n; ++w) {
    count += counts[w];
    if (collect) witnesses->insert(witnesses->end(), wit[w].begin(), wit[w].end());
  }
  return count;
}

}  // namespace

GapClass classify_gap(int k, std::uint64_t count, bool contraction) {
  std::uint64_t full = std::uint64_t{1} << k;
  if (count == full) return GapClass::Full;
  if (contraction && count <= full / 2) return GapClass::AtMostHalf;
  std::uint64_t general_bound = k >= 2 ? 3 * (full / 4) : 1;
  if (count <= general_bound) return GapClass::AtMostThreeQuarters;
  return GapClass::Small;
}

IntersectionReport count_intersection(const AffineMap& map, bool collect_witnesses,
                                      int threads, CountStrategy strategy) {
  const int k = map.domain_dim();
  const int m = map.image_dim();
  if (static_cast<int>(map.offset.size()) != m)
    throw DimensionError("offset dimension must match image dimension");
  if (k > kMaxEnumerationDim)
    throw CapacityError("k = " + std::to_string(k) + " exceeds the enumeration bound " +
                        std::to_string(kMaxEnumerationDim));

  IntersectionReport report;
  report.k = k;
  report.m = m;
  report.map_is_isometry = is_isometry(map.L);
  report.map_is_contraction = report.map_is_isometry || is_contraction(map.L);

  std::vector<SparseColumn> supports(k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < m; ++r)
      if (map.L.at(r, c) != 0) supports[c].rows.push_back(r);

  const std::uint64_t total = std::uint64_t{1} << k;
  const int nthreads = resolve_threads(threads);
  std::vector<CubePoint> witnesses;
  std::vector<CubePoint>* wit = collect_witnesses ? &witnesses : nullptr;

  if (strategy == CountStrategy::Rational) {
    std::vector<std::vector<Rational>> cols(k, std::vector<Rational>(m, Rational(0)));
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < m; ++r) cols[c][r] = map.L.at(r, c);
    GrayWalker<Rational> walker{k, m, &cols, &supports, &map.offset, Rational(1)};
    report.count = enumerate(walker, total, nthreads, collect_witnesses, wit);
  } else {
    // Clear all denominators: test (D L) v + D c against {0, D}.
    BigInt scale = 1;
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < k; ++c)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                map.L.at(r, c).get_den().get_mpz_t());
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), map.offset[r].get_den().get_mpz_t());
    }
    std::vector<std::vector<BigInt>> cols(k, std::vector<BigInt>(m, BigInt(0)));
    std::vector<BigInt> start(m);
    BigInt worst = 0;
    for (int r = 0; r < m; ++r) {
      BigInt row_sum = 0;
      for (int c = 0; c < k; ++c) {
        Rational scaled = map.L.at(r, c) * Rational(scale);
        cols[c][r] = scaled.get_num();
        row_sum += abs(cols[c][r]);
      }
      Rational off = map.offset[r] * Rational(scale);
      start[r] = off.get_num();
      row_sum += abs(start[r]);
      worst = std::max(worst, row_sum);
    }

    if (worst.fits_slong_p() && worst.get_si() < (std::int64_t{1} << 60) &&
        scale.fits_slong_p()) {
      std::vector<std::vector<std::int64_t>> icols(k, std::vector<std::int64_t>(m, 0));
      std::vector<std::int64_t> istart(m);
      for (int c = 0; c < k; ++c)
        for (int r = 0; r < m; ++r) icols[c][r] = cols[c][r].get_si();
      for (int r = 0; r < m; ++r) istart[r] = start[r].get_si();
      GrayWalker<std::int64_t> walker{k, m, &icols, &supports, &istart, scale.get_si()};
      report.count = enumerate(walker, total, nthreads, collect_witnesses, wit);
    } else {
      GrayWalker<BigInt> walker{k, m, &cols, &supports, &start, scale};
      report.count = enumerate(walker, total, nthreads, collect_witnesses, wit);
    }
  }

  if (collect_witnesses) {
    std::sort(witnesses.begin(), witnesses.end());
    report.witnesses = std::move(witnesses);
  }
  report.gap_class = classify_gap(k, report.count, report.map_is_contraction);
  return report;
}

bool in_extended_cube(const RatVector& w) {
  for (const auto& x : w)
    if (x != 0 && x != 1 && x != -1) return false;
  return true;
}

AffineMap linearize(const AffineMap& map) {
  if (map.is_linear()) return map;
  auto report = count_intersection(map, /*collect_witnesses=*/true);
  if (report.count == 0)
    throw EmptyIntersectionError("affine map has empty intersection; reduction undefined");
  const std::uint64_t base = report.witnesses->front().bits;

  const int k = map.domain_dim();
  const int m = map.image_dim();
  // Image of the chosen base point; its 0/1 coordinates drive the image
  // reflection.
  RatVector v_star(k, Rational(0));
  for (int i = 0; i < k; ++i)
    if (base >> i & 1) v_star[i] = 1;
  RatVector w0 = map.L * v_star;
  for (int r = 0; r < m; ++r) w0[r] += map.offset[r];

  RatMatrix out(m, k);
  for (int r = 0; r < m; ++r) {
    int row_sign = (w0[r] == 1) ? -1 : 1;
    for (int c = 0; c < k; ++c) {
      int col_sign = (base >> c & 1) ? -1 : 1;
      out.at(r, c) = map.L.at(r, c) * (row_sign * col_sign);
    }
  }
  return AffineMap::linear(std::move(out));
}

}  // namespace cubeslice
