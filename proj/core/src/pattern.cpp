#include "cubeslice/pattern.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace cubeslice {

int Pattern::size() const { return std::popcount(mask); }

std::string Pattern::to_hex() const {
  std::ostringstream out;
  out << std::hex << mask;
  return out.str();
}

Pattern Pattern::from_hex(int k, const std::string& hex) {
  if (k < 1 || k > kMaxPatternDim)
    throw CapacityError("pattern dimension must be in [1, " +
                        std::to_string(kMaxPatternDim) + "]");
  std::uint64_t mask = 0;
  std::size_t pos = 0;
  try {
    mask = std::stoull(hex, &pos, 16);
  } catch (const std::exception&) {
    throw ConstraintError("malformed pattern hex '" + hex + "'");
  }
  if (pos != hex.size()) throw ConstraintError("malformed pattern hex '" + hex + "'");
  if (k < 6 && (mask >> (std::uint64_t{1} << k)) != 0)
    throw ConstraintError("pattern mask has bits beyond 2^k points");
  return Pattern{k, mask};
}

Pattern trace_pattern(const RatMatrix& l) {
  if (l.cols() > kMaxPatternDim) throw CapacityError("trace_pattern: k too large");
  auto report = count_intersection(AffineMap::linear(l), /*collect_witnesses=*/true);
  std::uint64_t mask = 0;
  for (const auto& w : *report.witnesses) mask |= std::uint64_t{1} << w.bits;
  return Pattern{l.cols(), mask};
}

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t apply_permutation(std::uint64_t mask, int k, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest;) {
    int point = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint64_t image = 0;
    for (int i = 0; i < k; ++i)
      if (point >> i & 1) image |= std::uint64_t{1} << perm[i];
    out |= std::uint64_t{1} << image;
  }
  return out;
}

Pattern canonical_pattern(const Pattern& t) {
  if (!t.has_origin()) throw ConstraintError("pattern must contain the origin");
  std::uint64_t best = t.mask;
  for (const auto& perm : all_permutations(t.k))
    best = std::min(best, apply_permutation(t.mask, t.k, perm));
  return Pattern{t.k, best};
}

namespace {

RatVector point_vector(std::uint64_t bits, int k) {
  RatVector v(k, Rational(0));
  for (int i = 0; i < k; ++i)
    if (bits >> i & 1) v[i] = 1;
  return v;
}

Rational column_value(const RatVector& coeff, std::uint64_t column) {
  Rational acc = 0;
  for (std::size_t b = 0; b < coeff.size(); ++b)
    if (column >> b & 1) acc += coeff[b];
  return acc;
}

}  // namespace

RealizabilityResult realizable(const Pattern& t) {
  if (!t.has_origin()) throw ConstraintError("pattern must contain the origin");
  if (t.k > kMaxPatternDim)
    throw CapacityError("realizability queries are capped at k = " +
                        std::to_string(kMaxPatternDim));
  const int k = t.k;
  const std::uint64_t npoints = std::uint64_t{1} << k;

  // Maximal linearly independent basis B inside T, in increasing point order.
  std::vector<RatVector> basis;
  std::vector<std::uint64_t> basis_points;
  for (std::uint64_t p = 1; p < npoints; ++p) {
    if (!t.contains(p)) continue;
    RatVector v = point_vector(p, k);
    if (!coords_in_basis(basis, v)) {
      basis.push_back(std::move(v));
      basis_points.push_back(p);
    }
  }
  const int d = static_cast<int>(basis.size());

  // Rational coordinates for every cube point inside span(B).
  std::vector<std::optional<RatVector>> coords(npoints);
  for (std::uint64_t p = 0; p < npoints; ++p)
    coords[p] = coords_in_basis(basis, point_vector(p, k));

  // Admissible column patterns: 0/1 values on B keeping all of T in {0,1}.
  std::vector<std::uint64_t> admissible;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << d); ++c) {
    bool ok = true;
    for (std::uint64_t p = 0; p < npoints && ok; ++p) {
      if (!t.contains(p)) continue;
      Rational val = column_value(*coords[p], c);
      ok = (val == 0 || val == 1);
    }
    if (ok) admissible.push_back(c);
  }

  // Every in-span point outside T must be pushed out by some admissible column.
  for (std::uint64_t p = 0; p < npoints; ++p) {
    if (t.contains(p) || !coords[p]) continue;
    bool excluded = false;
    for (std::uint64_t c : admissible) {
      Rational val = column_value(*coords[p], c);
      if (val != 0 && val != 1) {
        excluded = true;
        break;
      }
    }
    if (!excluded) {
      RealizabilityResult res;
      res.status = RealizabilityResult::Status::NotRealizable;
      res.certificate = NotRealizableCert{p, d, static_cast<int>(admissible.size())};
      return res;
    }
  }

  // Witness reconstruction: one image coordinate per admissible column, plus
  // one big-M coordinate per complement basis vector; verify-and-retry with
  // doubled, pairwise-distinct factors.
  std::vector<RatVector> full = basis;
  std::vector<int> complement;
  for (int i = 0; i < k && static_cast<int>(full.size()) < k; ++i) {
    RatVector e(k, Rational(0));
    e[i] = 1;
    if (!coords_in_basis(full, e)) {
      full.push_back(std::move(e));
      complement.push_back(i);
    }
  }
  RatMatrix p_mat(k, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r) p_mat.at(r, c) = full[c][r];
  auto p_inv = inverse(p_mat);  // full is a basis of R^k

  const int m = static_cast<int>(admissible.size()) + static_cast<int>(complement.size());
  for (Rational m0 = 3;; m0 *= 2) {
    RatMatrix witness(m, k);
    int row = 0;
    for (std::uint64_t c : admissible) {
      // Functional with values c on B, 0 on the complement: row = vals * P^-1.
      for (int col = 0; col < k; ++col) {
        Rational acc = 0;
        for (int b = 0; b < d; ++b)
          if (c >> b & 1) acc += p_inv->at(b, col);
        witness.at(row, col) = acc;
      }
      ++row;
    }
    for (std::size_t s = 0; s < complement.size(); ++s) {
      Rational factor = m0 * Rational(static_cast<long>(s) + 1);
      for (int col = 0; col < k; ++col)
        witness.at(row, col) = factor * p_inv->at(d + static_cast<int>(s), col);
      ++row;
    }
    if (trace_pattern(witness).mask == t.mask) {
      RealizabilityResult res;
      res.status = RealizabilityResult::Status::Realizable;
      res.witness = std::move(witness);
      return res;
    }
    if (m0 > (std::uint64_t{1} << 40))
      throw std::logic_error("witness reconstruction did not converge");
  }
}

}  // namespace cubeslice
