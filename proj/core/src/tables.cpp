#include "cubeslice/tables.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

namespace cubeslice {

std::uint64_t second_largest_bound(int k, MapClass map_class) {
  if (k < 1) throw ConstraintError("second_largest_bound needs k >= 1");
  if (map_class == MapClass::General) {
    if (k == 1) return 1;
    return 3 * (std::uint64_t{1} << (k - 2));
  }
  return std::uint64_t{1} << (k - 1);
}

namespace {

Rational draw_entry(std::mt19937_64& rng, EntryDistribution dist) {
  if (dist == EntryDistribution::Default) {
    switch (rng() % 7) {
      case 0: return rat(-2);
      case 1: return rat(-1);
      case 2: return rat(-1, 2);
      case 3: return rat(0);
      case 4: return rat(1, 2);
      case 5: return rat(1);
      default: return rat(2);
    }
  }
  // Near-boolean: mostly {0, 1}, some -1, a sprinkle of halves.
  switch (rng() % 10) {
    case 0:
    case 1:
    case 2: return rat(0);
    case 3:
    case 4:
    case 5:
    case 6: return rat(1);
    case 7:
    case 8: return rat(-1);
    default: return rat(1, 2);
  }
}

// Smallest positive integer s with s^2 >= bound.
long contraction_scale(const Rational& bound) {
  long s = 1;
  while (Rational(s) * s < bound) ++s;
  return s;
}

}  // namespace

GapCheckReport check_gap_property(int k, MapClass map_class, int samples,
                                  std::uint64_t seed, EntryDistribution dist,
                                  int threads) {
  (void)threads;  // per-sample maps are tiny; counting stays single-threaded
  GapCheckReport report;
  report.k = k;
  report.map_class = map_class;
  report.samples = samples;
  report.seed = seed;
  report.vacuous = (map_class == MapClass::General && k < 3);

  const std::uint64_t full = std::uint64_t{1} << k;
  const std::uint64_t bound = second_largest_bound(k, map_class);
  std::mt19937_64 rng(seed);

  for (int s = 0; s < samples; ++s) {
    int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k + 2));
    RatMatrix l(m, k);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < k; ++c) l.at(r, c) = draw_entry(rng, dist);
    if (map_class != MapClass::General) {
      // Rescale into a contraction: trace(G) bounds the top eigenvalue.
      RatMatrix g = gram(l);
      Rational tr = 0;
      for (int i = 0; i < k; ++i) tr += g.at(i, i);
      if (tr > 1) {
        long scale = contraction_scale(tr);
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < k; ++c) l.at(r, c) /= scale;
      }
    }
    auto count = count_intersection(AffineMap::linear(l), false, 1).count;
    if (count != full && count > bound) report.violations.push_back({l, count});
  }
  return report;
}

std::vector<std::uint64_t> AchievabilityTable::with_status(EntryStatus s) const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].status == s) out.push_back(i + 1);
  return out;
}

namespace {

struct Candidate {
  std::uint64_t t;
  RatMatrix matrix;  // linear map, domain dim <= k
  std::string name;
  int dim;
};

void add_candidate(std::map<std::uint64_t, Candidate>& best, std::uint64_t t,
                   RatMatrix matrix, std::string name, int dim) {
  if (!best.contains(t)) best.emplace(t, Candidate{t, std::move(matrix), std::move(name), dim});
}

std::map<std::uint64_t, Candidate> construction_gallery(int k, MapClass cls) {
  std::map<std::uint64_t, Candidate> best;
  auto add_spec = [&](const ConstructionSpec& spec) {
    Construction c = build(spec);
    add_candidate(best, c.claim.t, c.map.L, c.name, c.claim.k);
  };

  // Ascending dimension keeps the lowest-dimensional witness per t, which is
  // what the direct-sum closure needs.
  for (int k2 = 1; k2 <= k; ++k2)
    for (int j = 0; j <= k2; ++j) add_spec(DiagonalIsometry{k2, j});
  if (k >= 3) add_spec(Isometry3Example{});
  for (int k2 = 3; k2 <= k; ++k2) add_spec(NearIsometry{k2});

  if (cls == MapClass::Contraction)
    for (int k2 = 1; k2 <= k; ++k2)
      for (int j = 0; j <= k2; ++j) add_spec(EpsilonContraction{k2, j});

  if (cls == MapClass::General) {
    for (int k2 = 1; k2 <= k; ++k2) {
      add_spec(AllOnes{k2});
      add_spec(TwoRow{k2});
      if (k2 >= 2) add_spec(HalfPlusOne{k2});
    }
    for (int l = 1; l <= k; ++l)
      for (int r = 1; r <= l; ++r) add_spec(BinomialPlusOne{k, l, r});
    for (int t = 1; t < k; ++t)
      for (int r = 0; r < t; ++r) {
        add_spec(TwoPowers{k, t, r, false});
        if (t <= k - 2) add_spec(TwoPowers{k, t, r, true});
      }
    // All strictly increasing exponent lists with k - (len-1) >= max.
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << (k + 1)); ++subset) {
      std::vector<int> t_list;
      for (int i = 0; i <= k; ++i)
        if (subset >> i & 1) t_list.push_back(i);
      int j = static_cast<int>(t_list.size()) - 1;
      if (k - j >= t_list.back()) add_spec(SumOfPowers{k, t_list});
    }
  }
  return best;
}

void close_under_combinators(std::map<std::uint64_t, Candidate>& best, int k,
                             MapClass cls) {
  const std::uint64_t full = std::uint64_t{1} << k;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Candidate> items;
    items.reserve(best.size());
    for (const auto& [t, c] : best) items.push_back(c);
    for (const auto& a : items)
      for (const auto& b : items) {
        if (a.dim + b.dim > k) continue;
        std::uint64_t t = a.t * b.t;
        if (t > full || best.contains(t)) continue;
        add_candidate(best, t, direct_sum(a.matrix, b.matrix),
                      "direct-sum(" + a.name + "," + b.name + ")", a.dim + b.dim);
        changed = true;
      }
    if (cls == MapClass::General)
      for (const auto& a : items) {
        if (a.dim + 1 > k || best.contains(a.t + 1)) continue;
        if (!has_positivity_property(a.matrix)) continue;
        add_candidate(best, a.t + 1, plus_one(a.matrix), "plus-one(" + a.name + ")",
                      a.dim + 1);
        changed = true;
      }
  }
}

// Next subset of the same popcount (Gosper's hack); x must be nonzero.
std::uint64_t next_combination(std::uint64_t x) {
  std::uint64_t u = x & (~x + 1);
  std::uint64_t v = x + u;
  return v | (((x ^ v) / u) >> 2);
}

// Point-level permutation tables: point_maps[p][point] = image point.
std::vector<std::vector<std::uint8_t>> point_maps(int k) {
  auto perms = all_permutations(k);
  std::vector<std::vector<std::uint8_t>> maps(perms.size());
  for (std::size_t p = 0; p < perms.size(); ++p) {
    maps[p].resize(std::size_t{1} << k);
    for (std::uint64_t point = 0; point < (std::uint64_t{1} << k); ++point) {
      std::uint64_t image = 0;
      for (int i = 0; i < k; ++i)
        if (point >> i & 1) image |= std::uint64_t{1} << perms[p][i];
      maps[p][point] = static_cast<std::uint8_t>(image);
    }
  }
  return maps;
}

bool is_canonical(std::uint64_t mask, const std::vector<std::vector<std::uint8_t>>& maps) {
  for (std::size_t p = 1; p < maps.size(); ++p) {
    std::uint64_t image = 0;
    for (std::uint64_t rest = mask; rest;) {
      image |= std::uint64_t{1} << maps[p][std::countr_zero(rest)];
      rest &= rest - 1;
    }
    if (image < mask) return false;
  }
  return true;
}

}  // namespace

AchievabilityTable achievable_table(int k, MapClass map_class, SearchBudget budget,
                                    WitnessStore* store, int threads) {
  (void)threads;  // sequential search keeps the table byte-identical for any setting
  if (k < 1) throw ConstraintError("achievable_table needs k >= 1");
  if (map_class == MapClass::General && k > kMaxTableDim)
    throw CapacityError("exhaustive general-class tables are capped at k = " +
                        std::to_string(kMaxTableDim));
  if (k > 10) throw CapacityError("tables are capped at k = 10");

  const std::uint64_t full = std::uint64_t{1} << k;
  AchievabilityTable table;
  table.k = k;
  table.map_class = map_class;
  table.entries.assign(full, TableEntry{EntryStatus::Unknown, "undecided", std::nullopt});

  // Theorem exclusions.
  const std::uint64_t bound = second_largest_bound(k, map_class);
  for (std::uint64_t t = bound + 1; t < full; ++t)
    table.entry(t) = {EntryStatus::Excluded, "gap-theorem", std::nullopt};

  // Construction gallery + combinator closure, each witness re-verified.
  auto candidates = construction_gallery(k, map_class);
  close_under_combinators(candidates, k, map_class);
  for (auto& [t, cand] : candidates) {
    if (table.entry(t).status != EntryStatus::Unknown) continue;
    RatMatrix witness = cand.dim == k
                            ? std::move(cand.matrix)
                            : (map_class == MapClass::General
                                   ? embed(cand.matrix, k - cand.dim, 0)
                                   : embed_isometric(cand.matrix, k - cand.dim));
    auto report = count_intersection(AffineMap::linear(witness));
    if (report.count != t)
      throw std::logic_error("construction '" + cand.name + "' recounts to " +
                             std::to_string(report.count) + ", claimed " +
                             std::to_string(t));
    if (map_class == MapClass::Isometry && !report.map_is_isometry)
      throw std::logic_error("construction '" + cand.name + "' is not an isometry");
    if (map_class == MapClass::Contraction && !report.map_is_contraction)
      throw std::logic_error("construction '" + cand.name + "' is not a contraction");
    table.entry(t) = {EntryStatus::Realizable, cand.name, std::move(witness)};
  }

  // Cached witnesses (already re-verified on load).
  if (store)
    for (std::uint64_t t = 1; t <= full; ++t)
      if (table.entry(t).status == EntryStatus::Unknown)
        if (const StoreEntry* e = store->find(k, map_class, t))
          table.entry(t) = {EntryStatus::Realizable, e->provenance, e->matrix()};

  // Exhaustive canonical-pattern search closes every remaining general entry.
  if (map_class == MapClass::General) {
    auto maps = point_maps(k);
    std::uint64_t decisions = 0;
    bool exhausted = false;
    for (std::uint64_t t = 1; t <= full; ++t) {
      if (table.entry(t).status != EntryStatus::Unknown) continue;
      if (exhausted) {
        table.entry(t) = {EntryStatus::Unknown, "budget", std::nullopt};
        continue;
      }
      bool found = false;
      if (t == 1) {
        // Only the origin pattern; always realizable.
        auto res = realizable(Pattern{k, 1});
        ++decisions;
        if (res.status == RealizabilityResult::Status::Realizable) {
          table.entry(t) = {EntryStatus::Realizable, "search", std::move(*res.witness)};
          found = true;
        }
      } else {
        const std::uint64_t limit = std::uint64_t{1} << (full - 1);
        for (std::uint64_t x = (std::uint64_t{1} << (t - 1)) - 1; x < limit;
             x = next_combination(x)) {
          std::uint64_t mask = (x << 1) | 1;
          if (!is_canonical(mask, maps)) continue;
          if (decisions >= budget.max_decisions) {
            exhausted = true;
            break;
          }
          auto res = realizable(Pattern{k, mask});
          ++decisions;
          if (res.status == RealizabilityResult::Status::Realizable) {
            table.entry(t) = {EntryStatus::Realizable, "search", std::move(*res.witness)};
            found = true;
            break;
          }
        }
      }
      if (found) continue;
      if (exhausted)
        table.entry(t) = {EntryStatus::Unknown, "budget", std::nullopt};
      else
        table.entry(t) = {EntryStatus::Excluded, "exhaustive-search", std::nullopt};
    }
  }

  if (store)
    for (std::uint64_t t = 1; t <= full; ++t) {
      const TableEntry& e = table.entry(t);
      if (e.status == EntryStatus::Realizable && !store->find(k, map_class, t))
        store->insert({k, map_class, t, format_matrix(*e.witness), e.detail, 0});
    }
  return table;
}

LargeScanReport scan_conjecture_large(int k, SearchBudget budget, WitnessStore* store,
                                      int threads) {
  LargeScanReport report;
  report.k = k;
  const std::uint64_t half = std::uint64_t{1} << (k - 1);
  for (int i = 0; i < k; ++i) report.conjecture_set.push_back(half + (std::uint64_t{1} << i));
  if (k >= 6) report.amended_extra = 35 * (std::uint64_t{1} << (k - 6));

  auto table = achievable_table(k, MapClass::General, budget, store, threads);
  report.complete = true;
  for (std::uint64_t t = half + 1; t <= (std::uint64_t{1} << k); ++t) {
    if (table.entry(t).status == EntryStatus::Realizable) report.realized.push_back(t);
    if (table.entry(t).status == EntryStatus::Unknown) report.complete = false;
  }

  std::vector<std::uint64_t> target = report.conjecture_set;
  if (report.amended_extra) target.push_back(*report.amended_extra);
  std::sort(target.begin(), target.end());
  report.consistent = std::includes(target.begin(), target.end(), report.realized.begin(),
                                    report.realized.end());
  report.exact = report.complete && report.realized == target;
  return report;
}

SmallScanReport scan_conjecture_small(int k, SearchBudget budget, WitnessStore* store,
                                      int threads) {
  SmallScanReport report;
  report.k = k;
  const std::uint64_t full = std::uint64_t{1} << k;
  std::uint64_t hi = (std::uint64_t{1} << (k - 1)) + 2;
  report.clipped = hi > full;
  report.interval_hi = std::min(hi, full);

  auto table = achievable_table(k, MapClass::General, budget, store, threads);
  for (std::uint64_t t = 1; t <= report.interval_hi; ++t) {
    switch (table.entry(t).status) {
      case EntryStatus::Realizable: break;
      case EntryStatus::Excluded: report.missing.push_back(t); break;
      case EntryStatus::Unknown: report.unknown.push_back(t); break;
    }
  }
  return report;
}

}  // namespace cubeslice
