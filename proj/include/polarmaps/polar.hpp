#pragma once

#include <vector>

#include "polarmaps/poly.hpp"

namespace polarmaps {

/// Canonical integer representative of a degree-k form in the monomial basis
/// of P^n. Entries follow monomials_of_degree(n + 1, k); gcd 1, first nonzero
/// entry positive.
struct ChowVector {
  std::size_t ambient_dim = 0;
  unsigned degree = 0;
  std::vector<BigInt> coords;

  friend bool operator==(const ChowVector&, const ChowVector&) = default;
};

/// Value of the degree-k polar map at a point: the cycle V(form).
struct PolarCycle {
  ProjPoint base_point;
  unsigned degree;
  Poly form;  // primitive-normalized
  ChowVector chow;
};

/// Coefficients of a homogeneous form in Chow index order, unscaled.
std::vector<BigRat> form_coordinates(const Poly& g);
/// Throws PreconditionError for zero or inhomogeneous input.
ChowVector chow_coordinates(const Poly& g);
/// The form sum_alpha coords[alpha] x^alpha, inverse of form_coordinates.
Poly form_from_coordinates(std::size_t num_vars, unsigned k, const std::vector<BigRat>& coords);

/// (p . grad)^s F expanded as sum_{|alpha|=s} s!/alpha! p^alpha d^alpha F.
Poly polar_polynomial(const Poly& f, const ProjPoint& p, unsigned s);

/// The coordinate functions of the degree-k polar map: k!/alpha! d^alpha F
/// for |alpha| = k, in Chow index order. Each is homogeneous of degree d - k.
std::vector<Poly> scaled_partials(const Poly& f, unsigned k);

/// Unnormalized Chow vector of the degree-k polar cycle at xi: the values of
/// scaled_partials(f, k) at xi.
std::vector<BigRat> polar_cycle_coordinates(const Poly& f, unsigned k, const ProjPoint& xi);

/// g^k(xi) = V(sum_{|alpha|=k} k!/alpha! d^alpha F(xi) x^alpha), 1 <= k <= d-1.
/// Throws UndefinedMapError when every k-th partial vanishes at xi.
PolarCycle polar_cycle(const Poly& f, unsigned k, const ProjPoint& xi);

struct EulerCheck {
  bool holds;
  Poly lhs;  // d(d-1)...(d-s+1) F
  Poly rhs;  // sum_{|alpha|=s} s!/alpha! d^alpha F x^alpha
};

EulerCheck euler_identity_check(const Poly& f, unsigned s);

/// Both sides of (d-s)! D_xi^s F(x) = s! D_x^{d-s} F(xi) as polynomials in
/// 2(n+1) variables: x0..xn first, then xi0..xin.
struct ReciprocitySides {
  Poly lhs;
  Poly rhs;
};

ReciprocitySides reciprocity_sides(const Poly& f, unsigned s);
bool reciprocity_check(const Poly& f, unsigned s);

struct CascadeResult {
  /// Every partial of order s vanishes at xi.
  bool all_s_vanish;
  /// F(xi) = 0 and every partial of order <= s vanishes at xi. By Euler this
  /// follows from all_s_vanish.
  bool implied;
};

CascadeResult vanishing_cascade(const Poly& f, const ProjPoint& xi, unsigned s);

}  // namespace polarmaps
