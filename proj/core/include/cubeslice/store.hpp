#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubeslice/constructions.hpp"

namespace cubeslice {

inline constexpr int kStoreFormatVersion = 1;

struct StoreEntry {
  int k = 0;
  MapClass map_class = MapClass::General;
  std::uint64_t t = 0;
  std::string matrix_text;  // shared matrix text format, embedded
  std::string provenance;   // construction name or "search"
  std::uint64_t verified_at = 0;

  RatMatrix matrix() const;
};

/// Persistent witness cache: a single JSON file, atomically replaced on write,
/// with an advisory lock against concurrent writers. Every entry is recounted
/// and class-certified on load; stale or corrupt entries fail the load with a
/// diagnostic instead of being dropped.
class WitnessStore {
 public:
  WitnessStore() = default;

  static WitnessStore load(const std::string& path);
  void save(const std::string& path) const;

  const StoreEntry* find(int k, MapClass map_class, std::uint64_t t) const;

  /// Verifies (recount + class certificate) and inserts; keeps at most one
  /// entry per (k, class, t). Returns false when the key already exists or
  /// verification fails.
  bool insert(StoreEntry entry);

  const std::vector<StoreEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<StoreEntry> entries_;
  std::uint64_t counter_ = 0;
};

/// Recount + class certification of a store entry. Returns an empty string on
/// success, a diagnostic otherwise.
std::string verify_store_entry(const StoreEntry& entry);

}  // namespace cubeslice
