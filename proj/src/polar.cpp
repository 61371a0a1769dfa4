#include "polarmaps/polar.hpp"

#include <algorithm>

#include "polarmaps/errors.hpp"

namespace polarmaps {

namespace {

unsigned homogeneous_degree(const Poly& f) {
  auto info = f.degree_check();
  if (!info.homogeneous) throw PreconditionError("polynomial is not homogeneous");
  return info.degree;
}

void check_point(const Poly& f, const ProjPoint& p) {
  if (p.size() != f.num_vars())
    throw DimensionError("point has " + std::to_string(p.size()) + " coordinates, ring has " +
                         std::to_string(f.num_vars()) + " variables");
}

BigRat monomial_value(const MultiIndex& alpha, const ProjPoint& p) {
  BigRat v = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    BigRat base = p[i];
    for (std::uint32_t e = 0; e < alpha[i]; ++e) v *= base;
  }
  return v;
}

}  // namespace

std::vector<BigRat> form_coordinates(const Poly& g) {
  unsigned k = homogeneous_degree(g);
  auto basis = monomials_of_degree(g.num_vars(), k);
  std::vector<BigRat> coords;
  coords.reserve(basis.size());
  for (const auto& alpha : basis) coords.push_back(g.coefficient(alpha));
  return coords;
}

ChowVector chow_coordinates(const Poly& g) {
  unsigned k = homogeneous_degree(g);
  auto raw = form_coordinates(g);
  BigInt den_lcm = 1;
  for (const auto& c : raw) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  BigInt content = 0;
  for (const auto& c : raw) {
    ints.push_back(c.get_num() * (den_lcm / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  auto first = std::find_if(ints.begin(), ints.end(), [](const BigInt& v) { return v != 0; });
  if (*first < 0) content = -content;
  for (auto& v : ints) v /= content;
  return {g.num_vars() - 1, k, std::move(ints)};
}

Poly form_from_coordinates(std::size_t num_vars, unsigned k, const std::vector<BigRat>& coords) {
  auto basis = monomials_of_degree(num_vars, k);
  if (coords.size() != basis.size()) throw DimensionError("Chow vector has wrong length");
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) terms.push_back({basis[i], coords[i]});
  return Poly::from_terms(num_vars, std::move(terms));
}

Poly polar_polynomial(const Poly& f, const ProjPoint& p, unsigned s) {
  check_point(f, p);
  unsigned d = f.degree_check().degree;
  if (s < 1 || s > d)
    throw RangeError("polar polynomial order s=" + std::to_string(s) + " outside 1.." +
                     std::to_string(d));
  Poly result(f.num_vars());
  for (const auto& alpha : monomials_of_degree(f.num_vars(), s)) {
    BigRat w = monomial_value(alpha, p);
    if (w == 0) continue;
    w *= alpha.multinomial();
    result += f.partial(alpha) * w;
  }
  return result;
}

std::vector<Poly> scaled_partials(const Poly& f, unsigned k) {
  std::vector<Poly> out;
  for (const auto& alpha : monomials_of_degree(f.num_vars(), k))
    out.push_back(f.partial(alpha) * BigRat(alpha.multinomial()));
  return out;
}

std::vector<BigRat> polar_cycle_coordinates(const Poly& f, unsigned k, const ProjPoint& xi) {
  check_point(f, xi);
  std::vector<BigRat> coords;
  for (const auto& g : scaled_partials(f, k)) coords.push_back(g.evaluate(xi));
  return coords;
}

PolarCycle polar_cycle(const Poly& f, unsigned k, const ProjPoint& xi) {
  check_point(f, xi);
  unsigned d = homogeneous_degree(f);
  if (k < 1 || k + 1 > d)
    throw RangeError("polar map degree k=" + std::to_string(k) + " outside 1.." +
                     std::to_string(d == 0 ? 0 : d - 1));
  auto coords = polar_cycle_coordinates(f, k, xi);
  Poly form = form_from_coordinates(f.num_vars(), k, coords);
  if (form.is_zero()) {
    throw UndefinedMapError("polar map of degree " + std::to_string(k) + " undefined at " +
                            to_string(xi) + ": all order-" + std::to_string(k) +
                            " partials vanish");
  }
  form = normalize_primitive(form);
  ChowVector chow = chow_coordinates(form);
  return {xi, k, std::move(form), std::move(chow)};
}

EulerCheck euler_identity_check(const Poly& f, unsigned s) {
  unsigned d = homogeneous_degree(f);
  if (s < 1 || s > d)
    throw RangeError("Euler order s=" + std::to_string(s) + " outside 1.." + std::to_string(d));
  BigInt falling = 1;
  for (unsigned j = 0; j < s; ++j) falling *= (d - j);
  Poly lhs = f * BigRat(falling);
  Poly rhs(f.num_vars());
  for (const auto& alpha : monomials_of_degree(f.num_vars(), s))
    rhs += f.partial(alpha).shifted(alpha, BigRat(alpha.multinomial()));
  bool holds = lhs == rhs;
  return {holds, std::move(lhs), std::move(rhs)};
}

ReciprocitySides reciprocity_sides(const Poly& f, unsigned s) {
  unsigned d = homogeneous_degree(f);
  if (s < 1 || s + 1 > d)
    throw RangeError("reciprocity order s=" + std::to_string(s) + " outside 1.." +
                     std::to_string(d == 0 ? 0 : d - 1));
  const std::size_t n1 = f.num_vars();
  const std::size_t m = 2 * n1;
  auto lift = [&](const MultiIndex& alpha, std::size_t offset) {
    MultiIndex e(m);
    for (std::size_t i = 0; i < n1; ++i) e[offset + i] = alpha[i];
    return e;
  };
  // lhs: (d-s)! sum_{|a|=s} s!/a! xi^a (d^a F)(x)
  Poly lhs(m);
  for (const auto& alpha : monomials_of_degree(n1, s)) {
    lhs += f.partial(alpha).embed(m, 0).shifted(lift(alpha, n1), BigRat(alpha.multinomial()));
  }
  lhs *= BigRat(factorial(d - s));
  // rhs: s! sum_{|b|=d-s} (d-s)!/b! x^b (d^b F)(xi)
  Poly rhs(m);
  for (const auto& beta : monomials_of_degree(n1, d - s)) {
    rhs += f.partial(beta).embed(m, n1).shifted(lift(beta, 0), BigRat(beta.multinomial()));
  }
  rhs *= BigRat(factorial(s));
  return {std::move(lhs), std::move(rhs)};
}

bool reciprocity_check(const Poly& f, unsigned s) {
  auto sides = reciprocity_sides(f, s);
  return sides.lhs == sides.rhs;
}

CascadeResult vanishing_cascade(const Poly& f, const ProjPoint& xi, unsigned s) {
  check_point(f, xi);
  unsigned d = f.degree_check().degree;
  if (s < 1 || s > d)
    throw RangeError("cascade order s=" + std::to_string(s) + " outside 1.." + std::to_string(d));
  auto all_vanish = [&](unsigned order) {
    for (const auto& alpha : monomials_of_degree(f.num_vars(), order))
      if (f.partial(alpha).evaluate(xi) != 0) return false;
    return true;
  };
  CascadeResult r{all_vanish(s), true};
  for (unsigned order = 0; order <= s && r.implied; ++order) r.implied = all_vanish(order);
  return r;
}

}  // namespace polarmaps
