#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cubeslice/cube.hpp"

namespace cubeslice {

enum class MapClass { General, Contraction, Isometry };

std::string to_string(MapClass c);
MapClass map_class_from_string(const std::string& s);

// --- construction variants -------------------------------------------------

/// Le_i = e_i for i <= j, -e_i otherwise; realizes 2^j isometrically.
struct DiagonalIsometry {
  int k, j;
};

/// One-row map: 0 on the first j coordinates, -eps on the rest; realizes 2^j
/// contractively. eps = 0 means "use the default 1/(k+1)".
struct EpsilonContraction {
  int k, j;
  Rational eps = 0;
};

/// All-ones row; realizes k+1.
struct AllOnes {
  int k;
};

/// Le_i = e1+e2 (i < k), Le_k = -e2; realizes 2k-1.
struct TwoRow {
  int k;
};

/// Le_i = e_i (i < k), Le_k = all-ones; realizes 2^{k-1}+1.
struct HalfPlusOne {
  int k;
};

/// One-row map 1/r on the first l coordinates, 2 on the rest; realizes
/// C(l, r) + 1. Needs 1 <= r <= l <= k.
struct BinomialPlusOne {
  int k, l, r;
};

/// Realizes 2^t + 2^r, or 2^t + 2^r + 1 when plus_one (needs t <= k-2).
struct TwoPowers {
  int k, t, r;
  bool plus_one = false;
};

/// Realizes sum of 2^{t_i} over a strictly increasing list with
/// k - (len-1) >= t_back.
struct SumOfPowers {
  int k;
  std::vector<int> t_list;
};

/// The 3x3 orthogonal map with entries in thirds; realizes 3 isometrically.
struct Isometry3Example {};

/// Isometry R^k -> R^{2k-2} realizing k+1; needs k >= 3.
struct NearIsometry {
  int k;
};

/// Affine hyperplane sum p_i v_i = q, encoded as the 1-row affine map
/// L = 2p, c = -2q; realizes the knapsack solution count.
struct KnapsackHyperplane {
  std::vector<Rational> weights;
  Rational target;
};

using ConstructionSpec =
    std::variant<DiagonalIsometry, EpsilonContraction, AllOnes, TwoRow, HalfPlusOne,
                 BinomialPlusOne, TwoPowers, SumOfPowers, Isometry3Example,
                 NearIsometry, KnapsackHyperplane>;

struct ClaimedResult {
  std::uint64_t t;
  int k;
  int n;
  MapClass map_class;
};

struct Construction {
  std::string name;
  AffineMap map;
  ClaimedResult claim;
};

/// Builds the explicit map and its membership claim. Throws ConstraintError
/// naming the violated inequality.
Construction build(const ConstructionSpec& spec);

/// Recounts the built map and certifies the claimed class flags.
bool verify(const ConstructionSpec& spec);

// --- combinators -----------------------------------------------------------

/// Adds dk domain columns (b, 0, ..., 0) with b past any reachable first
/// coordinate, then dm all-zero image rows; count preserved.
RatMatrix embed(const RatMatrix& l, int dk, int dm);

/// Class-preserving domain extension: each new column lands on two fresh
/// image coordinates as (3/5, 4/5), a unit vector off the cube. Preserves
/// count, isometry and contraction status.
RatMatrix embed_isometric(const RatMatrix& l, int dk);

/// Block diagonal; multiplies counts.
RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

/// Every nonzero cube point has a strictly positive image coordinate.
bool has_positivity_property(const RatMatrix& l);

/// Appends a domain column equal to the all-ones image vector; count + 1.
/// Throws PositivityError (with a witness point) if the hypothesis fails.
RatMatrix plus_one(const RatMatrix& l);

// --- JSON surface ----------------------------------------------------------

std::string variant_name(const ConstructionSpec& spec);
nlohmann::ordered_json spec_to_json(const ConstructionSpec& spec);
ConstructionSpec spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json claim_to_json(const Construction& c);

}  // namespace cubeslice
