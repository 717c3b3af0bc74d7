#include "cubeslice/store.hpp"

#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cubeslice {

RatMatrix StoreEntry::matrix() const { return parse_matrix_string(matrix_text); }

std::string verify_store_entry(const StoreEntry& entry) {
  RatMatrix m;
  try {
    m = entry.matrix();
  } catch (const ParseError& e) {
    return std::string("embedded matrix malformed: ") + e.what();
  }
  if (m.cols() != entry.k) return "matrix domain dimension does not match k";
  IntersectionReport report;
  try {
    report = count_intersection(AffineMap::linear(m));
  } catch (const CapacityError& e) {
    return std::string("recount impossible: ") + e.what();
  }
  if (report.count != entry.t)
    return "recount " + std::to_string(report.count) + " != stored t " +
           std::to_string(entry.t);
  if (entry.map_class == MapClass::Isometry && !report.map_is_isometry)
    return "stored as isometry but gram(L) != I";
  if (entry.map_class == MapClass::Contraction && !report.map_is_contraction)
    return "stored as contraction but I - gram(L) is not PSD";
  return {};
}

WitnessStore WitnessStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StoreError("cannot open store '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw StoreError("store '" + path + "' is not valid JSON: " + e.what());
  }

  WitnessStore store;
  std::vector<std::string> rejected;
  try {
    if (j.at("version").get<int>() != kStoreFormatVersion)
      throw StoreError("store '" + path + "' has unsupported version");
    store.counter_ = j.value("counter", std::uint64_t{0});
    for (const auto& je : j.at("entries")) {
      StoreEntry e;
      e.k = je.at("k").get<int>();
      e.map_class = map_class_from_string(je.at("class").get<std::string>());
      e.t = je.at("t").get<std::uint64_t>();
      e.matrix_text = je.at("matrix").get<std::string>();
      e.provenance = je.at("provenance").get<std::string>();
      e.verified_at = je.at("verified_at").get<std::uint64_t>();
      std::string err = verify_store_entry(e);
      if (!err.empty()) {
        rejected.push_back("(k=" + std::to_string(e.k) + ", " + to_string(e.map_class) +
                           ", t=" + std::to_string(e.t) + "): " + err);
        continue;
      }
      if (store.find(e.k, e.map_class, e.t))
        rejected.push_back("duplicate entry for (k=" + std::to_string(e.k) + ", " +
                           to_string(e.map_class) + ", t=" + std::to_string(e.t) + ")");
      else
        store.entries_.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw StoreError("store '" + path + "' has malformed schema: " + e.what());
  }
  if (!rejected.empty()) {
    std::string msg = "store '" + path + "' has invalid entries:";
    for (const auto& r : rejected) msg += "\n  " + r;
    throw StoreError(msg);
  }
  return store;
}

void WitnessStore::save(const std::string& path) const {
  nlohmann::ordered_json j;
  j["version"] = kStoreFormatVersion;
  j["counter"] = counter_;
  auto sorted = entries_;
  std::sort(sorted.begin(), sorted.end(), [](const StoreEntry& a, const StoreEntry& b) {
    return std::tie(a.k, a.map_class, a.t) < std::tie(b.k, b.map_class, b.t);
  });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : sorted) {
    nlohmann::ordered_json je;
    je["k"] = e.k;
    je["class"] = to_string(e.map_class);
    je["t"] = e.t;
    je["matrix"] = e.matrix_text;
    je["provenance"] = e.provenance;
    je["verified_at"] = e.verified_at;
    arr.push_back(std::move(je));
  }
  j["entries"] = std::move(arr);

  // One writer at a time; replace-on-write keeps readers consistent.
  std::string lock_path = path + ".lock";
  std::FILE* lock = std::fopen(lock_path.c_str(), "w");
  if (!lock) throw StoreError("cannot open lock file '" + lock_path + "'");
  flock(fileno(lock), LOCK_EX);

  std::string tmp_path = path + ".tmp";
  {
    std::ofstream out(tmp_path);
    if (!out) {
      flock(fileno(lock), LOCK_UN);
      std::fclose(lock);
      throw StoreError("cannot write '" + tmp_path + "'");
    }
    out << j.dump(2) << "\n";
  }
  int rc = std::rename(tmp_path.c_str(), path.c_str());
  flock(fileno(lock), LOCK_UN);
  std::fclose(lock);
  if (rc != 0) throw StoreError("atomic replace of '" + path + "' failed");
}

const StoreEntry* WitnessStore::find(int k, MapClass map_class, std::uint64_t t) const {
  for (const auto& e : entries_)
    if (e.k == k && e.map_class == map_class && e.t == t) return &e;
  return nullptr;
}

bool WitnessStore::insert(StoreEntry entry) {
  if (find(entry.k, entry.map_class, entry.t)) return false;
  if (!verify_store_entry(entry).empty()) return false;
  entry.verified_at = ++counter_;
  entries_.push_back(std::move(entry));
  return true;
}

}  // namespace cubeslice
