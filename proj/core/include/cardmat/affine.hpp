#pragma once

#include "cardmat/rational.hpp"

#include <cstddef>
#include <vector>

namespace cardmat {

/// Rank of a rational matrix by exact Gaussian elimination (rows consumed).
std::size_t linear_rank(std::vector<std::vector<Rational>> rows);

/// Number of affinely independent points among pts (rank of the affine hull
/// plus one): exact elimination on differences against the first point.
/// Throws "empty-input" / "dimension-mismatch".
std::size_t affine_rank(const std::vector<Point>& pts);

/// Indices of a maximal affinely independent subfamily, greedily from the
/// front; size equals affine_rank(pts).
std::vector<std::size_t> affine_basis_indices(const std::vector<Point>& pts);

} // namespace cardmat
