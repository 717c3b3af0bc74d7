#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubeslice/constructions.hpp"
#include "cubeslice/pattern.hpp"
#include "cubeslice/store.hpp"

namespace cubeslice {

/// Second largest achievable count: 3*2^{k-2} for the general class (k >= 2,
/// with the k = 1 value being 1), 2^{k-1} for contractions and isometries.
std::uint64_t second_largest_bound(int k, MapClass cls);

enum class EntryDistribution {
  Default,      // entries uniform over {-2, -1, -1/2, 0, 1/2, 1, 2}
  NearBoolean,  // biased toward {0, 1, -1} to hit high counts
};

struct GapViolation {
  RatMatrix matrix;
  std::uint64_t count;
};

struct GapCheckReport {
  int k = 0;
  MapClass map_class = MapClass::General;
  int samples = 0;
  std::uint64_t seed = 0;
  bool vacuous = false;  // general class below k = 3: the bound excludes nothing
  std::vector<GapViolation> violations;
};

/// Draws seeded random maps (rescaled into contractions for that class),
/// counts each, and reports every map with count outside
/// {2^k} union [0, second_largest_bound]. Deterministic given the seed.
GapCheckReport check_gap_property(int k, MapClass map_class, int samples,
                                  std::uint64_t seed,
                                  EntryDistribution dist = EntryDistribution::Default,
                                  int threads = 0);

enum class EntryStatus { Realizable, Excluded, Unknown };

struct TableEntry {
  EntryStatus status = EntryStatus::Unknown;
  // Realizable: construction name or "search"; Excluded: "gap-theorem" or
  // "exhaustive-search"; Unknown: "budget" or "out-of-scope".
  std::string detail = "out-of-scope";
  std::optional<RatMatrix> witness;  // present and re-verified for Realizable
};

struct AchievabilityTable {
  int k = 0;
  MapClass map_class = MapClass::General;
  std::vector<TableEntry> entries;  // index t-1, t in [1, 2^k]

  TableEntry& entry(std::uint64_t t) { return entries[t - 1]; }
  const TableEntry& entry(std::uint64_t t) const { return entries[t - 1]; }
  std::vector<std::uint64_t> with_status(EntryStatus s) const;
};

struct SearchBudget {
  std::uint64_t max_decisions = ~std::uint64_t{0};  // realizability calls allowed
};

/// Merges construction-gallery witnesses (and their combinator closure),
/// theorem exclusions, and - for the general class, k <= 5 - an exhaustive
/// canonical-pattern search, so that every t is decided. Budget exhaustion
/// downgrades pending entries to Unknown, never Excluded. A non-null store
/// pre-seeds Realizable entries and receives newly found witnesses.
AchievabilityTable achievable_table(int k, MapClass map_class, SearchBudget budget = {},
                                    WitnessStore* store = nullptr, int threads = 0);

struct LargeScanReport {
  int k = 0;
  std::vector<std::uint64_t> realized;        // realizable t > 2^{k-1}
  std::vector<std::uint64_t> conjecture_set;  // {2^{k-1} + 2^i : 0 <= i < k}
  std::optional<std::uint64_t> amended_extra;  // 35 * 2^{k-6} for k >= 6
  bool complete = false;  // every large t decided (no Unknown)
  bool consistent = false;  // realized is a subset of the (amended) target set
  bool exact = false;       // complete and realized equals the target set
};

/// Lists all realizable t > 2^{k-1} and compares against the conjectured set
/// (plus the amended extra element when k >= 6).
LargeScanReport scan_conjecture_large(int k, SearchBudget budget = {},
                                      WitnessStore* store = nullptr, int threads = 0);

struct SmallScanReport {
  int k = 0;
  std::uint64_t interval_hi = 0;  // min(2^{k-1} + 2, 2^k)
  bool clipped = false;           // the interval formula exceeded 2^k (k = 1)
  std::vector<std::uint64_t> missing;  // decided non-realizable within the interval
  std::vector<std::uint64_t> unknown;
};

/// Reports which t in the (clipped) interval [1, 2^{k-1} + 2] are realizable.
SmallScanReport scan_conjecture_small(int k, SearchBudget budget = {},
                                      WitnessStore* store = nullptr, int threads = 0);

}  // namespace cubeslice
