#include "cubeslice/constructions.hpp"

#include <algorithm>

#include "cubeslice/knapsack.hpp"

namespace cubeslice {

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::General: return "general";
    case MapClass::Contraction: return "contraction";
    case MapClass::Isometry: return "isometry";
  }
  return "general";
}

MapClass map_class_from_string(const std::string& s) {
  if (s == "general") return MapClass::General;
  if (s == "contraction") return MapClass::Contraction;
  if (s == "isometry") return MapClass::Isometry;
  throw ConstraintError("unknown map class '" + s + "'");
}

namespace {

void require(bool ok, const std::string& inequality) {
  if (!ok) throw ConstraintError("parameter constraint violated: " + inequality);
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

struct Builder {
  Construction operator()(const DiagonalIsometry& s) const {
    require(s.k >= 1, "k >= 1");
    require(0 <= s.j && s.j <= s.k, "0 <= j <= k");
    RatMatrix l(s.k, s.k);
    for (int i = 0; i < s.k; ++i) l.at(i, i) = (i < s.j) ? 1 : -1;
    return {"diagonal-isometry", AffineMap::linear(std::move(l)),
            {std::uint64_t{1} << s.j, s.k, 2 * s.k, MapClass::Isometry}};
  }

  Construction operator()(const EpsilonContraction& s) const {
    require(s.k >= 1, "k >= 1");
    require(0 <= s.j && s.j <= s.k, "0 <= j <= k");
    Rational eps = s.eps == 0 ? rat(1, s.k + 1) : s.eps;
    require(eps > 0 && eps < rat(1, s.k), "0 < eps < 1/k");
    RatMatrix l(1, s.k);
    for (int i = s.j; i < s.k; ++i) l.at(0, i) = -eps;
    return {"epsilon-contraction", AffineMap::linear(std::move(l)),
            {std::uint64_t{1} << s.j, s.k, s.k + 1, MapClass::Contraction}};
  }

  Construction operator()(const AllOnes& s) const {
    require(s.k >= 1, "k >= 1");
    RatMatrix l(1, s.k);
    for (int i = 0; i < s.k; ++i) l.at(0, i) = 1;
    return {"all-ones", AffineMap::linear(std::move(l)),
            {static_cast<std::uint64_t>(s.k) + 1, s.k, s.k + 1, MapClass::General}};
  }

  Construction operator()(const TwoRow& s) const {
    require(s.k >= 1, "k >= 1");
    RatMatrix l(2, s.k);
    for (int i = 0; i + 1 < s.k; ++i) {
      l.at(0, i) = 1;
      l.at(1, i) = 1;
    }
    l.at(1, s.k - 1) = -1;
    return {"two-row", AffineMap::linear(std::move(l)),
            {static_cast<std::uint64_t>(2 * s.k - 1), s.k, s.k + 2, MapClass::General}};
  }

  Construction operator()(const HalfPlusOne& s) const {
    require(s.k >= 2, "k >= 2");
    RatMatrix l(s.k - 1, s.k);
    for (int i = 0; i + 1 < s.k; ++i) {
      l.at(i, i) = 1;
      l.at(i, s.k - 1) = 1;
    }
    return {"half-plus-one", AffineMap::linear(std::move(l)),
            {(std::uint64_t{1} << (s.k - 1)) + 1, s.k, 2 * s.k - 1, MapClass::General}};
  }

  Construction operator()(const BinomialPlusOne& s) const {
    require(s.k >= 1, "k >= 1");
    require(1 <= s.r, "1 <= r");
    require(s.r <= s.l, "r <= l");
    require(s.l <= s.k, "l <= k");
    RatMatrix l(1, s.k);
    for (int i = 0; i < s.k; ++i) l.at(0, i) = (i < s.l) ? rat(1, s.r) : rat(2);
    return {"binomial-plus-one", AffineMap::linear(std::move(l)),
            {binomial(s.l, s.r) + 1, s.k, s.k + 1, MapClass::General}};
  }

  Construction operator()(const TwoPowers& s) const {
    require(0 <= s.r, "0 <= r");
    require(s.r < s.t, "r < t");
    require(s.t < s.k, "t < k");
    if (s.plus_one) require(s.t <= s.k - 2, "t <= k-2 when plus_one");
    const int len = s.t - s.r;
    RatMatrix l(s.k, s.k);
    for (int i = 0; i < s.t; ++i) l.at(i, i) = 1;
    for (int nu = 0; nu < len; ++nu) l.at(nu, s.t) = 1;  // column t+1
    for (int i = s.t + 1; i < s.k; ++i) l.at(i, i) = -1;
    std::uint64_t t = (std::uint64_t{1} << s.t) + (std::uint64_t{1} << s.r);
    if (s.plus_one) {
      for (int r = 0; r < s.k; ++r) l.at(r, s.t + 1) = (r <= s.t + 1) ? 1 : 0;
      ++t;
    }
    return {"two-powers", AffineMap::linear(std::move(l)),
            {t, s.k, 2 * s.k, MapClass::General}};
  }

  Construction operator()(const SumOfPowers& s) const {
    require(!s.t_list.empty(), "t_list nonempty");
    const int j = static_cast<int>(s.t_list.size()) - 1;
    require(s.t_list.front() >= 0, "t_0 >= 0");
    for (int i = 0; i < j; ++i)
      require(s.t_list[i] < s.t_list[i + 1], "t_list strictly increasing");
    require(s.k - j >= s.t_list.back(), "k - j >= t_j");
    const int tj = s.t_list.back();
    RatMatrix l(s.k, s.k);
    for (int i = 0; i < tj; ++i) l.at(i, i) = 1;
    for (int i = tj; i < s.k - j; ++i) l.at(i, i) = -1;
    for (int delta = 0; delta < j; ++delta) {
      int col = s.k - delta - 1;  // domain index k - delta
      for (int nu = s.t_list[delta]; nu < tj; ++nu) l.at(nu, col) = 1;
    }
    std::uint64_t t = 0;
    for (int ti : s.t_list) t += std::uint64_t{1} << ti;
    return {"sum-of-powers", AffineMap::linear(std::move(l)),
            {t, s.k, 2 * s.k, MapClass::General}};
  }

  Construction operator()(const Isometry3Example&) const {
    RatMatrix l(3, 3);
    const int entries[3][3] = {{1, 2, 2}, {2, 1, -2}, {2, -2, 1}};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) l.at(r, c) = rat(entries[r][c], 3);
    return {"isometry3-example", AffineMap::linear(std::move(l)),
            {3, 3, 6, MapClass::Isometry}};
  }

  Construction operator()(const NearIsometry& s) const {
    require(s.k >= 3, "k >= 3");
    const int m = 2 * s.k - 2;
    Rational inv = rat(1, s.k - 1);
    RatMatrix l(m, s.k);
    for (int c = 0; c < s.k; ++c) {
      for (int r = 0; r < s.k; ++r) l.at(r, c) = (r == c) ? inv - 1 : inv;
      for (int r = s.k; r < m; ++r) l.at(r, c) = inv;
    }
    return {"near-isometry", AffineMap::linear(std::move(l)),
            {static_cast<std::uint64_t>(s.k) + 1, s.k, 3 * s.k - 2, MapClass::Isometry}};
  }

  Construction operator()(const KnapsackHyperplane& s) const {
    const int len = static_cast<int>(s.weights.size());
    require(len >= 1, "at least one weight");
    // Clear denominators so 2(sum - target) can never land on 1.
    BigInt den = s.target.get_den();
    for (const auto& w : s.weights) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                            w.get_den().get_mpz_t());
    Rational scale(2 * den);
    RatMatrix l(1, len);
    for (int i = 0; i < len; ++i) l.at(0, i) = scale * s.weights[i];
    RatVector offset{-scale * s.target};
    std::uint64_t t = count_knapsack({s.weights, s.target});
    return {"knapsack-hyperplane", AffineMap{std::move(l), std::move(offset)},
            {t, len, len + 1, MapClass::General}};
  }
};

}  // namespace

Construction build(const ConstructionSpec& spec) { return std::visit(Builder{}, spec); }

bool verify(const ConstructionSpec& spec) {
  Construction c = build(spec);
  auto report = count_intersection(c.map);
  if (report.count != c.claim.t) return false;
  if (c.claim.map_class == MapClass::Isometry && !report.map_is_isometry) return false;
  if (c.claim.map_class == MapClass::Contraction && !report.map_is_contraction) return false;
  return true;
}

RatMatrix embed(const RatMatrix& l, int dk, int dm) {
  if (dk < 0 || dm < 0) throw ConstraintError("embed deltas must be nonnegative");
  Rational b = 2;
  for (int c = 0; c < l.cols(); ++c) b += abs(l.at(0, c));
  RatMatrix out(l.rows() + dm, l.cols() + dk);
  for (int r = 0; r < l.rows(); ++r)
    for (int c = 0; c < l.cols(); ++c) out.at(r, c) = l.at(r, c);
  for (int c = 0; c < dk; ++c) out.at(0, l.cols() + c) = b;
  return out;
}

RatMatrix embed_isometric(const RatMatrix& l, int dk) {
  if (dk < 0) throw ConstraintError("embed deltas must be nonnegative");
  RatMatrix out(l.rows() + 2 * dk, l.cols() + dk);
  for (int r = 0; r < l.rows(); ++r)
    for (int c = 0; c < l.cols(); ++c) out.at(r, c) = l.at(r, c);
  for (int s = 0; s < dk; ++s) {
    out.at(l.rows() + 2 * s, l.cols() + s) = rat(3, 5);
    out.at(l.rows() + 2 * s + 1, l.cols() + s) = rat(4, 5);
  }
  return out;
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return out;
}

namespace {

// Returns ~0 when the property holds, otherwise a witness point.
std::uint64_t positivity_witness(const RatMatrix& l) {
  const int k = l.cols();
  if (k > kMaxEnumerationDim) throw CapacityError("positivity check: k too large");
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << k); ++v) {
    bool positive = false;
    for (int r = 0; r < l.rows() && !positive; ++r) {
      Rational acc = 0;
      for (int c = 0; c < k; ++c)
        if (v >> c & 1) acc += l.at(r, c);
      if (acc > 0) positive = true;
    }
    if (!positive) return v;
  }
  return ~std::uint64_t{0};
}

}  // namespace

bool has_positivity_property(const RatMatrix& l) {
  return positivity_witness(l) == ~std::uint64_t{0};
}

RatMatrix plus_one(const RatMatrix& l) {
  std::uint64_t w = positivity_witness(l);
  if (w != ~std::uint64_t{0})
    throw PositivityError(
        "positivity hypothesis fails: point with bits " + std::to_string(w) +
            " has no strictly positive image coordinate",
        w);
  RatMatrix out(l.rows(), l.cols() + 1);
  for (int r = 0; r < l.rows(); ++r) {
    for (int c = 0; c < l.cols(); ++c) out.at(r, c) = l.at(r, c);
    out.at(r, l.cols()) = 1;
  }
  return out;
}

// --- JSON ------------------------------------------------------------------

namespace {

struct NameVisitor {
  std::string operator()(const DiagonalIsometry&) const { return "diagonal-isometry"; }
  std::string operator()(const EpsilonContraction&) const { return "epsilon-contraction"; }
  std::string operator()(const AllOnes&) const { return "all-ones"; }
  std::string operator()(const TwoRow&) const { return "two-row"; }
  std::string operator()(const HalfPlusOne&) const { return "half-plus-one"; }
  std::string operator()(const BinomialPlusOne&) const { return "binomial-plus-one"; }
  std::string operator()(const TwoPowers&) const { return "two-powers"; }
  std::string operator()(const SumOfPowers&) const { return "sum-of-powers"; }
  std::string operator()(const Isometry3Example&) const { return "isometry3-example"; }
  std::string operator()(const NearIsometry&) const { return "near-isometry"; }
  std::string operator()(const KnapsackHyperplane&) const { return "knapsack-hyperplane"; }
};

}  // namespace

std::string variant_name(const ConstructionSpec& spec) {
  return std::visit(NameVisitor{}, spec);
}

nlohmann::ordered_json spec_to_json(const ConstructionSpec& spec) {
  nlohmann::ordered_json j;
  j["variant"] = variant_name(spec);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DiagonalIsometry>) {
          j["k"] = s.k;
          j["j"] = s.j;
        } else if constexpr (std::is_same_v<T, EpsilonContraction>) {
          j["k"] = s.k;
          j["j"] = s.j;
          if (s.eps != 0) j["eps"] = to_string(s.eps);
        } else if constexpr (std::is_same_v<T, AllOnes> || std::is_same_v<T, TwoRow> ||
                             std::is_same_v<T, HalfPlusOne> ||
                             std::is_same_v<T, NearIsometry>) {
          j["k"] = s.k;
        } else if constexpr (std::is_same_v<T, BinomialPlusOne>) {
          j["k"] = s.k;
          j["l"] = s.l;
          j["r"] = s.r;
        } else if constexpr (std::is_same_v<T, TwoPowers>) {
          j["k"] = s.k;
          j["t"] = s.t;
          j["r"] = s.r;
          j["plus_one"] = s.plus_one;
        } else if constexpr (std::is_same_v<T, SumOfPowers>) {
          j["k"] = s.k;
          j["t_list"] = s.t_list;
        } else if constexpr (std::is_same_v<T, KnapsackHyperplane>) {
          nlohmann::ordered_json w = nlohmann::ordered_json::array();
          for (const auto& p : s.weights) w.push_back(to_string(p));
          j["weights"] = w;
          j["target"] = to_string(s.target);
        }
      },
      spec);
  return j;
}

namespace {

Rational json_rational(const nlohmann::json& j, const std::string& field) {
  if (j.is_number_integer()) return rat(j.get<long>());
  auto q = parse_rational(j.get<std::string>());
  if (!q) throw ConstraintError("malformed rational in field '" + field + "'");
  return *q;
}

}  // namespace

ConstructionSpec spec_from_json(const nlohmann::json& j) {
  const std::string name = j.at("variant").get<std::string>();
  if (name == "diagonal-isometry") return DiagonalIsometry{j.at("k"), j.at("j")};
  if (name == "epsilon-contraction") {
    EpsilonContraction s{j.at("k"), j.at("j")};
    if (j.contains("eps")) s.eps = json_rational(j.at("eps"), "eps");
    return s;
  }
  if (name == "all-ones") return AllOnes{j.at("k")};
  if (name == "two-row") return TwoRow{j.at("k")};
  if (name == "half-plus-one") return HalfPlusOne{j.at("k")};
  if (name == "binomial-plus-one")
    return BinomialPlusOne{j.at("k"), j.at("l"), j.at("r")};
  if (name == "two-powers")
    return TwoPowers{j.at("k"), j.at("t"), j.at("r"), j.value("plus_one", false)};
  if (name == "sum-of-powers")
    return SumOfPowers{j.at("k"), j.at("t_list").get<std::vector<int>>()};
  if (name == "isometry3-example") return Isometry3Example{};
  if (name == "near-isometry") return NearIsometry{j.at("k")};
  if (name == "knapsack-hyperplane") {
    KnapsackHyperplane s;
    for (const auto& w : j.at("weights")) s.weights.push_back(json_rational(w, "weights"));
    s.target = json_rational(j.at("target"), "target");
    return s;
  }
  throw ConstraintError("unknown construction variant '" + name + "'");
}

nlohmann::ordered_json claim_to_json(const Construction& c) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["construction"] = c.name;
  j["t"] = c.claim.t;
  j["k"] = c.claim.k;
  j["n"] = c.claim.n;
  j["class"] = to_string(c.claim.map_class);
  return j;
}

}  // namespace cubeslice
