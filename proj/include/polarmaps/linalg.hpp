#pragma once

#include <vector>

#include "polarmaps/poly.hpp"

namespace polarmaps {

using RatMatrix = std::vector<std::vector<BigRat>>;

// Exact Gauss-Jordan over Q.

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m);
std::size_t rank(RatMatrix m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<BigRat>> kernel_basis(RatMatrix m, std::size_t num_cols);
BigRat determinant(RatMatrix m);
std::vector<BigRat> multiply(const RatMatrix& m, const std::vector<BigRat>& v);
/// Inverse of a square matrix; PreconditionError when singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace polarmaps
