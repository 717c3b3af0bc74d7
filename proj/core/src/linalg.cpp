#include "cubeslice/linalg.hpp"

namespace cubeslice {

int rank(const RatMatrix& m) {
  // Scale rows to integers, then Bareiss. Pivots stay exact divisions.
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (int r = 0; r < rows; ++r) {
    BigInt lcm = 1;
    for (int c = 0; c < cols; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                           m.at(r, c).get_den().get_mpz_t());
    for (int c = 0; c < cols; ++c) {
      Rational scaled = m.at(r, c) * Rational(lcm);
      a[r][c] = scaled.get_num();
    }
  }

  int rk = 0;
  BigInt prev = 1;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rk], a[pivot]);
    for (int r = rk + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        BigInt t = a[rk][col] * a[r][c] - a[r][col] * a[rk][c];
        mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

std::optional<RatVector> coords_in_basis(std::span<const RatVector> basis,
                                         const RatVector& v) {
  const int d = static_cast<int>(basis.size());
  const int dim = static_cast<int>(v.size());
  for (const auto& b : basis)
    if (static_cast<int>(b.size()) != dim)
      throw DimensionError("coords_in_basis: mixed dimensions");
  if (d == 0) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return RatVector{};
  }

  // Gaussian elimination on the augmented [B | v] system, exact rationals.
  std::vector<RatVector> aug(dim, RatVector(d + 1, Rational(0)));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < d; ++c) aug[r][c] = basis[c][r];
    aug[r][d] = v[r];
  }

  std::vector<int> pivot_row(d, -1);
  int row = 0;
  for (int col = 0; col < d && row < dim; ++col) {
    int p = -1;
    for (int r = row; r < dim; ++r)
      if (aug[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(aug[row], aug[p]);
    Rational inv = aug[row][col];
    for (int c = col; c <= d; ++c) aug[row][c] /= inv;
    for (int r = 0; r < dim; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (int c = col; c <= d; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int col = 0; col < d; ++col)
    if (pivot_row[col] < 0) throw DimensionError("coords_in_basis: basis not independent");
  // Inconsistent rows mean v is outside the span.
  for (int r = row; r < dim; ++r)
    if (aug[r][d] != 0) return std::nullopt;
  RatVector coeff(d);
  for (int col = 0; col < d; ++col) coeff[col] = aug[pivot_row[col]][d];
  return coeff;
}

RatMatrix gram(const RatMatrix& l) {
  const int k = l.cols();
  RatMatrix g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Rational acc = 0;
      for (int r = 0; r < l.rows(); ++r) acc += l.at(r, i) * l.at(r, j);
      g.at(i, j) = acc;
      g.at(j, i) = acc;
    }
  return g;
}

bool is_isometry(const RatMatrix& l) { return gram(l) == RatMatrix::identity(l.cols()); }

std::vector<Rational> characteristic_polynomial(const RatMatrix& a) {
  if (a.rows() != a.cols())
    throw DimensionError("characteristic_polynomial: matrix must be square");
  const int n = a.rows();
  // Faddeev-LeVerrier: M_1 = A, c_1 = -tr M_1; M_{i+1} = A (M_i + c_i I).
  std::vector<Rational> coeff(n);
  RatMatrix m = a;
  for (int i = 1; i <= n; ++i) {
    Rational tr = 0;
    for (int r = 0; r < n; ++r) tr += m.at(r, r);
    coeff[i - 1] = -tr / i;
    if (i == n) break;
    for (int r = 0; r < n; ++r) m.at(r, r) += coeff[i - 1];
    m = a * m;
  }
  return coeff;
}

bool is_contraction(const RatMatrix& l) {
  const int k = l.cols();
  RatMatrix diff = RatMatrix::identity(k);
  RatMatrix g = gram(l);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) diff.at(r, c) -= g.at(r, c);
  // diff symmetric; PSD iff every elementary-symmetric sum of eigenvalues is
  // >= 0, i.e. (-1)^r c_r >= 0 for each char-poly coefficient.
  auto coeff = characteristic_polynomial(diff);
  int sign = -1;  // (-1)^r for r = 1, 2, ...
  for (const auto& c : coeff) {
    if (sign * c < 0) return false;
    sign = -sign;
  }
  return true;
}

Rational norm_squared(const RatVector& v) {
  Rational acc = 0;
  for (const auto& x : v) acc += x * x;
  return acc;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix must be square");
  const int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt;
    for (int c = 0; c < n; ++c) {
      std::swap(a.at(col, c), a.at(p, c));
      std::swap(inv.at(col, c), inv.at(p, c));
    }
    Rational piv = a.at(col, col);
    for (int c = 0; c < n; ++c) {
      a.at(col, c) /= piv;
      inv.at(col, c) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      Rational f = a.at(r, col);
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

}  // namespace cubeslice
