#pragma once

#include <cstdint>
#include <vector>

#include "polarmaps/grobner.hpp"
#include "polarmaps/linalg.hpp"
#include "polarmaps/poly.hpp"

namespace polarmaps {

/// 3x3 symmetric matrix of second partials of a plane curve.
PolyMatrix hessian_matrix(const Poly& f);

/// det of the Hessian of a plane curve (3 variables, degree >= 2).
/// Homogeneous of degree 3(d-2), or zero for degenerate F.
Poly hessian_det(const Poly& f);

/// Determinant of the symmetric matrix of a ternary quadratic form
/// (off-diagonal entries halved). Zero iff V(q) is singular.
BigRat quadric_discriminant(const Poly& q);

/// The same determinant for the generic quadric sum c_alpha x^alpha, as a
/// cubic form in the six Chow coordinates c0..c5 (Chow index order).
Poly generic_quadric_discriminant();

/// Sylvester resultant of f and g with respect to x_var, a polynomial in
/// the same ring not involving x_var. DegenerateError when either input has
/// degree 0 in x_var.
Poly sylvester_resultant(const Poly& f, const Poly& g, std::size_t var);

struct FlexReport {
  unsigned d;
  unsigned resultant_degree;
  BigInt count_with_multiplicity;
  unsigned squarefree_degree;
  std::vector<ProjPoint> rational_flexes;
  /// Unimodular A with x = A y; the resultant is computed for F(A y).
  RatMatrix coordinate_change;
  unsigned attempts;
};

/// Flexes of a smooth plane curve of degree d >= 3 as the intersection of
/// V(F) and V(hessian_det F), counted by the Sylvester resultant in x2 after
/// a seeded random unimodular coordinate change.
FlexReport flexes(const Poly& f, std::uint64_t seed, const GroebnerLimits& limits = {});

}  // namespace polarmaps
