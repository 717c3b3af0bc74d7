// cubeslice - exact toolkit for hypercube/subspace intersection cardinalities.
//
// Subcommands: count, table, check-theorem, construct, realizable, scan,
// knapsack. Exit codes: 0 success, 1 violated claim or failed verification,
// 2 malformed input.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubeslice/constructions.hpp"
#include "cubeslice/cube.hpp"
#include "cubeslice/knapsack.hpp"
#include "cubeslice/pattern.hpp"
#include "cubeslice/store.hpp"
#include "cubeslice/tables.hpp"

namespace cs = cubeslice;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;

enum class Format { Json, Csv, Human };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "human") return Format::Human;
  throw CLI::ValidationError("--format must be json, csv or human");
}

std::string gap_class_name(cs::GapClass g) {
  switch (g) {
    case cs::GapClass::Full: return "full";
    case cs::GapClass::AtMostThreeQuarters: return "at-most-three-quarters";
    case cs::GapClass::AtMostHalf: return "at-most-half";
    case cs::GapClass::Small: return "small";
  }
  return "small";
}

std::string status_name(cs::EntryStatus s) {
  switch (s) {
    case cs::EntryStatus::Realizable: return "realizable";
    case cs::EntryStatus::Excluded: return "excluded";
    case cs::EntryStatus::Unknown: return "unknown";
  }
  return "unknown";
}

void print_report(const cs::IntersectionReport& r, Format fmt, bool with_witnesses) {
  if (fmt == Format::Json) {
    ordered_json j;
    j["version"] = 1;
    j["k"] = r.k;
    j["m"] = r.m;
    j["count"] = r.count;
    j["is_isometry"] = r.map_is_isometry;
    j["is_contraction"] = r.map_is_contraction;
    j["gap_class"] = gap_class_name(r.gap_class);
    if (with_witnesses && r.witnesses) {
      ordered_json w = ordered_json::array();
      for (const auto& p : *r.witnesses) w.push_back(p.bits);
      j["witnesses"] = std::move(w);
    }
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "k,m,count,is_isometry,is_contraction,gap_class\n"
              << r.k << "," << r.m << "," << r.count << "," << r.map_is_isometry << ","
              << r.map_is_contraction << "," << gap_class_name(r.gap_class) << "\n";
  } else {
    std::cout << "t = " << r.count << "  (k=" << r.k << ", m=" << r.m << ")\n"
              << "isometry: " << (r.map_is_isometry ? "yes" : "no")
              << "  contraction: " << (r.map_is_contraction ? "yes" : "no")
              << "  gap class: " << gap_class_name(r.gap_class) << "\n";
    if (with_witnesses && r.witnesses) {
      std::cout << "witnesses:";
      for (const auto& p : *r.witnesses) std::cout << " " << p.bits;
      std::cout << "\n";
    }
  }
}

void print_table(const cs::AchievabilityTable& t, Format fmt, bool with_witnesses) {
  if (fmt == Format::Json) {
    ordered_json j;
    j["version"] = 1;
    j["k"] = t.k;
    j["class"] = cs::to_string(t.map_class);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      const auto& e = t.entries[i];
      ordered_json row;
      row["t"] = i + 1;
      row["status"] = status_name(e.status);
      row["detail"] = e.detail;
      if (with_witnesses && e.witness) row["witness"] = cs::format_matrix(*e.witness);
      rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "t,status,detail\n";
    for (std::size_t i = 0; i < t.entries.size(); ++i)
      std::cout << i + 1 << "," << status_name(t.entries[i].status) << ","
                << t.entries[i].detail << "\n";
  } else {
    std::cout << "achievability, k=" << t.k << ", class=" << cs::to_string(t.map_class)
              << "\n";
    for (std::size_t i = 0; i < t.entries.size(); ++i)
      std::cout << "  t=" << i + 1 << ": " << status_name(t.entries[i].status) << " ("
                << t.entries[i].detail << ")\n";
  }
}

cs::AffineMap load_map(const std::string& matrix_file, const std::string& offset_file) {
  cs::RatMatrix l = cs::parse_matrix_file(matrix_file);
  if (offset_file.empty()) return cs::AffineMap::linear(std::move(l));
  cs::RatVector c = cs::parse_vector_file(offset_file);
  if (static_cast<int>(c.size()) != l.rows())
    throw cs::ParseError(1, 1, "offset has " + std::to_string(c.size()) +
                                   " entries, matrix has " + std::to_string(l.rows()) +
                                   " rows");
  return cs::AffineMap{std::move(l), std::move(c)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection cardinalities of subspaces with the hypercube"};
  app.require_subcommand(1);

  std::string format_str = "human";
  int threads = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = ~std::uint64_t{0};
  app.add_option("--format", format_str, "output format: json|csv|human")
      ->capture_default_str();
  app.add_option("--threads", threads, "worker count (0 = CUBESLICE_THREADS or auto)");
  app.add_option("--seed", seed, "seed for randomized commands");
  app.add_option("--budget", budget, "search budget (pattern decisions)");

  // count
  auto* cmd_count = app.add_subcommand("count", "count |H^k ∩ L^{-1}H^m| for a map file");
  std::string matrix_file, offset_file;
  bool witnesses = false;
  cmd_count->add_option("matrix", matrix_file, "matrix file")->required();
  cmd_count->add_option("--offset", offset_file, "offset vector file (affine maps)");
  cmd_count->add_flag("--witnesses", witnesses, "collect the intersecting points");

  // table
  auto* cmd_table = app.add_subcommand("table", "achievability table for fixed k and class");
  int table_k = 0;
  std::string class_str = "general";
  std::string store_path;
  cmd_table->add_option("--k", table_k, "domain dimension")->required();
  cmd_table->add_option("--class", class_str, "general|contraction|isometry")
      ->capture_default_str();
  cmd_table->add_option("--store", store_path, "witness store JSON file");

  // check-theorem
  auto* cmd_check = app.add_subcommand("check-theorem", "randomized gap-theorem property check");
  std::string which;
  int check_k = 3;
  int samples = 1000;
  bool near_boolean = false;
  cmd_check->add_option("kind", which, "gap | contraction-gap")->required();
  cmd_check->add_option("--k", check_k, "domain dimension")->capture_default_str();
  cmd_check->add_option("--samples", samples, "number of random maps")
      ->capture_default_str();
  cmd_check->add_flag("--near-boolean", near_boolean, "bias entries toward {0,1,-1}");

  // construct
  auto* cmd_construct = app.add_subcommand("construct", "build and verify a gallery construction");
  std::string spec_json, spec_file, out_file, claim_file;
  cmd_construct->add_option("--json", spec_json, "construction spec as inline JSON");
  cmd_construct->add_option("--spec", spec_file, "construction spec JSON file");
  cmd_construct->add_option("--out", out_file, "write the matrix file here");
  cmd_construct->add_option("--claim", claim_file, "write the claim sidecar JSON here");

  // realizable
  auto* cmd_realizable = app.add_subcommand("realizable", "decide a single trace pattern");
  int pat_k = 0;
  std::string pattern_hex;
  cmd_realizable->add_option("--k", pat_k, "domain dimension (<= 6)")->required();
  cmd_realizable->add_option("--pattern", pattern_hex, "membership bits as hex")->required();

  // scan
  auto* cmd_scan = app.add_subcommand("scan", "conjecture scanners");
  std::string scan_which;
  int scan_k = 3;
  cmd_scan->add_option("kind", scan_which, "large | small")->required();
  cmd_scan->add_option("--k", scan_k, "domain dimension")->capture_default_str();
  cmd_scan->add_option("--store", store_path, "witness store JSON file");

  // knapsack
  auto* cmd_knapsack = app.add_subcommand("knapsack", "count 0/1 knapsack solutions");
  std::string weights_str, target_str = "0";
  cmd_knapsack->add_option("--weights", weights_str, "comma-separated rational weights")
      ->required();
  cmd_knapsack->add_option("--target", target_str, "target sum")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    Format fmt = parse_format(format_str);

    if (*cmd_count) {
      auto map = load_map(matrix_file, offset_file);
      auto report = cs::count_intersection(map, witnesses, threads);
      print_report(report, fmt, witnesses);
      return kExitOk;
    }

    if (*cmd_table) {
      cs::MapClass cls = cs::map_class_from_string(class_str);
      cs::WitnessStore store;
      bool have_store = !store_path.empty();
      if (have_store && std::filesystem::exists(store_path))
        store = cs::WitnessStore::load(store_path);
      auto table = cs::achievable_table(table_k, cls, {budget},
                                        have_store ? &store : nullptr, threads);
      if (have_store) store.save(store_path);
      print_table(table, fmt, fmt == Format::Json);
      return kExitOk;
    }

    if (*cmd_check) {
      cs::MapClass cls;
      if (which == "gap")
        cls = cs::MapClass::General;
      else if (which == "contraction-gap")
        cls = cs::MapClass::Contraction;
      else
        throw cs::ConstraintError("check-theorem kind must be 'gap' or 'contraction-gap'");
      auto dist = near_boolean ? cs::EntryDistribution::NearBoolean
                               : cs::EntryDistribution::Default;
      auto report = cs::check_gap_property(check_k, cls, samples, seed, dist, threads);
      std::cout << "k=" << report.k << " class=" << cs::to_string(cls)
                << " samples=" << report.samples << " seed=" << report.seed
                << " violations=" << report.violations.size();
      if (report.vacuous) std::cout << " (vacuous for k=" << report.k << ")";
      std::cout << "\n";
      for (const auto& v : report.violations) {
        std::cout << "violating map with count " << v.count << ":\n";
        cs::format_matrix(std::cout, v.matrix);
      }
      return report.violations.empty() ? kExitOk : kExitViolation;
    }

    if (*cmd_construct) {
      ordered_json j;
      if (!spec_json.empty())
        j = nlohmann::json::parse(spec_json);
      else if (!spec_file.empty()) {
        std::ifstream in(spec_file);
        if (!in) throw cs::ParseError(0, 0, "cannot open '" + spec_file + "'");
        in >> j;
      } else
        throw cs::ConstraintError("construct needs --json or --spec");
      auto spec = cs::spec_from_json(j);
      auto c = cs::build(spec);
      bool ok = cs::verify(spec);
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        cs::format_matrix(out, c.map.L);
      } else if (fmt != Format::Json) {
        cs::format_matrix(std::cout, c.map.L);
      }
      ordered_json claim = cs::claim_to_json(c);
      claim["verified"] = ok;
      if (!claim_file.empty()) {
        std::ofstream out(claim_file);
        out << claim.dump(2) << "\n";
      }
      if (fmt == Format::Json)
        std::cout << claim.dump(2) << "\n";
      else
        std::cout << "claim: t=" << c.claim.t << " in " << cs::to_string(c.claim.map_class)
                  << " H(" << c.claim.n << "," << c.claim.k << ")  verified: "
                  << (ok ? "yes" : "NO") << "\n";
      return ok ? kExitOk : kExitViolation;
    }

    if (*cmd_realizable) {
      auto pat = cs::Pattern::from_hex(pat_k, pattern_hex);
      auto res = cs::realizable(pat);
      ordered_json j;
      j["version"] = 1;
      j["k"] = pat.k;
      j["pattern"] = pat.to_hex();
      j["size"] = pat.size();
      if (res.status == cs::RealizabilityResult::Status::Realizable) {
        j["status"] = "realizable";
        j["witness"] = cs::format_matrix(*res.witness);
      } else if (res.status == cs::RealizabilityResult::Status::NotRealizable) {
        j["status"] = "not-realizable";
        j["forced_point"] = res.certificate->forced_point;
        j["basis_rank"] = res.certificate->basis_rank;
        j["admissible_columns"] = res.certificate->admissible_count;
      } else {
        j["status"] = "unknown";
      }
      if (fmt == Format::Json)
        std::cout << j.dump(2) << "\n";
      else
        std::cout << "pattern " << pat.to_hex() << " (|T|=" << pat.size()
                  << "): " << j["status"].get<std::string>() << "\n";
      return kExitOk;
    }

    if (*cmd_scan) {
      cs::WitnessStore store;
      bool have_store = !store_path.empty();
      if (have_store && std::filesystem::exists(store_path))
        store = cs::WitnessStore::load(store_path);
      cs::WitnessStore* sp = have_store ? &store : nullptr;
      ordered_json j;
      j["version"] = 1;
      j["k"] = scan_k;
      if (scan_which == "large") {
        auto r = cs::scan_conjecture_large(scan_k, {budget}, sp, threads);
        j["kind"] = "large";
        j["realized"] = r.realized;
        j["conjecture_set"] = r.conjecture_set;
        if (r.amended_extra) j["amended_extra"] = *r.amended_extra;
        j["complete"] = r.complete;
        j["consistent"] = r.consistent;
        j["exact"] = r.exact;
      } else if (scan_which == "small") {
        auto r = cs::scan_conjecture_small(scan_k, {budget}, sp, threads);
        j["kind"] = "small";
        j["interval_hi"] = r.interval_hi;
        j["clipped"] = r.clipped;
        j["missing"] = r.missing;
        j["unknown"] = r.unknown;
      } else {
        throw cs::ConstraintError("scan kind must be 'large' or 'small'");
      }
      if (have_store) store.save(store_path);
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (*cmd_knapsack) {
      cs::KnapsackInstance inst;
      std::stringstream ss(weights_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto q = cs::parse_rational(tok);
        if (!q) throw cs::ParseError(1, 1, "malformed weight '" + tok + "'");
        inst.weights.push_back(*q);
      }
      auto q = cs::parse_rational(target_str);
      if (!q) throw cs::ParseError(1, 1, "malformed target '" + target_str + "'");
      inst.target = *q;
      auto count = cs::count_knapsack(inst);
      ordered_json j;
      j["version"] = 1;
      j["count"] = count;
      j["l"] = inst.weights.size();
      j["q"] = cs::to_string(inst.target);
      if (inst.has_negative_weight()) j["warning"] = "negative weights present";
      if (fmt == Format::Json)
        std::cout << j.dump(2) << "\n";
      else
        std::cout << "solutions: " << count << "\n";
      return kExitOk;
    }
  } catch (const cs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const cs::ConstraintError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const cs::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const cs::DimensionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const cs::StoreError& e) {
    std::cerr << "store: " << e.what() << "\n";
    return kExitViolation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}
