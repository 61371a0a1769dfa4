#pragma once

#include <cstdint>
#include <vector>

#include "polarmaps/grobner.hpp"
#include "polarmaps/linalg.hpp"
#include "polarmaps/poly.hpp"
#include "polarmaps/rng.hpp"

namespace polarmaps {

struct RegularityReport {
  unsigned p;
  bool regular;
  /// The nonzero p-th partials of F.
  IdealBasis base_locus_ideal;
  EmptinessResult certificate;
};

/// g^p is regular on X = V(F) iff the p-th partials have no common zero in
/// P^n; any common zero lies on X automatically. 1 <= p <= d-1.
RegularityReport polar_regularity(const Poly& f, unsigned p, const GroebnerLimits& limits = {});

/// Reports for p = 1..d-1. Throws std::logic_error if the result is not
/// monotone, since regularity propagates to every higher degree.
std::vector<RegularityReport> regularity_profile(const Poly& f, const GroebnerLimits& limits = {});

/// Matrix L of g^{d-1} in Chow coordinates: row alpha (|alpha| = d-1, Chow
/// index order) holds the coefficients of the linear form
/// (d-1)!/alpha! d^alpha F, so polar_cycle_coordinates(F, d-1, xi) = L xi.
RatMatrix polar_linear_matrix(const Poly& f);

struct ConeReport {
  bool is_cone;
  /// Basis of ker L as projective points; every one is a point of
  /// multiplicity d on X.
  std::vector<ProjPoint> vertex_space;
};

ConeReport is_cone(const Poly& f);

/// d (d-p)^(n-1), the degree of the p-th polar image of a hypersurface with a
/// regular degree-p polar map.
BigInt image_degree_formula(unsigned d, unsigned p, unsigned n);

struct ImageDegreeCheck {
  BigInt bezout_count;
  BigInt formula;
  bool agree;
  unsigned attempts;
  /// Pulled-back hyperplanes used for the counted slice, degree d-p each.
  std::vector<Poly> slice;
};

/// Intersects X with n-1 pullbacks of random hyperplanes of the Chow space
/// (random combinations of the scaled p-th partials, integer coefficients in
/// [-10, 10]) and counts the points with multiplicity. This is the pushforward
/// degree: it is not divided by the degree of g^p onto its image.
ImageDegreeCheck verify_image_degree(const Poly& f, unsigned p, std::uint64_t seed,
                                     const GroebnerLimits& limits = {});

struct ImageDimension {
  int dimension;
  unsigned generic_rank;  // rank of [Jacobian of g^p ; grad F] on X
  bool regular;
};

/// dim g^p(X), from the largest minor of the Jacobian of the scaled p-th
/// partials stacked with grad F that is not divisible by F. Assumes F is
/// irreducible (not checked). With require_regular, a non-regular polar map
/// is a PreconditionError; otherwise the rational map is measured.
ImageDimension polar_image_dimension(const Poly& f, unsigned p, bool require_regular = true,
                                     const GroebnerLimits& limits = {});

struct PolarClassReport {
  unsigned p;
  BigInt class_coeff;     // d - p, coefficient of c1(O_X(1))
  BigRat ratio_to_gauss;  // (d - p)/(d - 1)
};

PolarClassReport polar_class(const Poly& f, unsigned p);
PolarClassReport polar_class(unsigned d, unsigned p);

/// Ideal of the closure of g^p(X) in the Chow space P^{N-1}, N = C(n+p, p),
/// obtained by eliminating xi from the graph ideal
/// (y_alpha - p!/alpha! d^alpha F(xi), F(xi)).
IdealBasis polar_image_ideal(const Poly& f, unsigned p, const GroebnerLimits& limits = {});

}  // namespace polarmaps
