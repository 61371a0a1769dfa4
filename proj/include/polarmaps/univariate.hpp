#pragma once

#include <vector>

#include "polarmaps/poly.hpp"

namespace polarmaps::univariate {

/// Dense univariate polynomial over Q, coefficient of t^i at index i.
/// Normalized: no trailing zeros, the zero polynomial is empty.
using UPoly = std::vector<BigRat>;

UPoly trim(UPoly p);
int degree(const UPoly& p);  // -1 for zero
BigRat evaluate(const UPoly& p, const BigRat& t);
UPoly derivative(const UPoly& p);

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};
DivMod divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);

/// Distinct rational roots in increasing order, found by Sturm-sequence
/// isolation of the real roots of the square-free part.
std::vector<BigRat> rational_roots(const UPoly& p);

}  // namespace polarmaps::univariate
