#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cubeslice/matrix.hpp"

namespace cubeslice {

/// Exact rank over Q, fraction-free (Bareiss) elimination.
int rank(const RatMatrix& m);

/// Coefficients of v in the linearly independent family B, or nullopt when
/// v lies outside span(B). Throws DimensionError on mixed dimensions.
std::optional<RatVector> coords_in_basis(std::span<const RatVector> basis,
                                         const RatVector& v);

/// Exact Gram matrix L^T L (k x k, symmetric).
RatMatrix gram(const RatMatrix& l);

/// True iff gram(l) is the identity.
bool is_isometry(const RatMatrix& l);

/// True iff I - L^T L is positive semidefinite, decided exactly via the
/// signs of the characteristic-polynomial coefficients (sums of principal
/// minors of each order).
bool is_contraction(const RatMatrix& l);

/// Coefficients c_1..c_n of det(x I - A) = x^n + c_1 x^{n-1} + ... + c_n
/// (Faddeev-LeVerrier). A must be square.
std::vector<Rational> characteristic_polynomial(const RatMatrix& a);

/// Squared Euclidean norm.
Rational norm_squared(const RatVector& v);

/// Exact inverse of a square matrix; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace cubeslice
