#pragma once

// Test-side generators and brute-force oracles. Nothing here calls into the
// library routine it is used to check.

#include <random>
#include <vector>

#include "polarmaps/linalg.hpp"
#include "polarmaps/parse.hpp"
#include "polarmaps/poly.hpp"

namespace testing {

using namespace polarmaps;

inline Poly P(const char* text, std::size_t vars) { return parse_poly(text, vars); }

// All exponent vectors of degree k in `vars` variables, by recursion.
inline void all_monomials(std::size_t vars, unsigned k, std::vector<std::uint32_t>& cur,
                          std::vector<MultiIndex>& out) {
  if (cur.size() + 1 == vars) {
    cur.push_back(k);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned e = 0; e <= k; ++e) {
    cur.push_back(e);
    all_monomials(vars, k - e, cur, out);
    cur.pop_back();
  }
}

inline std::vector<MultiIndex> all_monomials(std::size_t vars, unsigned k) {
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> cur;
  all_monomials(vars, k, cur, out);
  return out;
}

inline BigRat random_rational(std::mt19937_64& rng, int lo = -5, int hi = 5, bool fractions = false) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 4);
  BigRat q(num(rng), fractions ? den(rng) : 1);
  q.canonicalize();
  return q;
}

/// Random nonzero homogeneous form; `density` is the probability of keeping
/// each monomial.
inline Poly random_form(std::mt19937_64& rng, std::size_t vars, unsigned d, double density = 0.6,
                        bool fractions = false) {
  std::bernoulli_distribution keep(density);
  for (;;) {
    std::vector<Poly::Term> terms;
    for (auto& m : all_monomials(vars, d))
      if (keep(rng)) terms.push_back({m, random_rational(rng, -5, 5, fractions)});
    Poly f = Poly::from_terms(vars, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

/// Random non-homogeneous polynomial of degree <= d.
inline Poly random_poly(std::mt19937_64& rng, std::size_t vars, unsigned d) {
  Poly f(vars);
  for (unsigned k = 0; k <= d; ++k) f += random_form(rng, vars, k, 0.3, true);
  return f;
}

inline ProjPoint random_point(std::mt19937_64& rng, std::size_t vars, int range = 6) {
  for (;;) {
    std::vector<BigRat> c;
    bool nonzero = false;
    for (std::size_t i = 0; i < vars; ++i) {
      c.push_back(random_rational(rng, -range, range));
      nonzero = nonzero || c.back() != 0;
    }
    if (nonzero) return ProjPoint(std::move(c));
  }
}

/// Oracle for the directional-derivative power: expand F(x + t*xi) in an
/// extra variable t by plain multiplication and read off s! [t^s].
inline Poly taylor_polar(const Poly& f, const ProjPoint& xi, unsigned s) {
  const std::size_t n = f.num_vars();
  std::vector<Poly> lin;
  for (std::size_t i = 0; i < n; ++i) {
    Poly li = Poly::variable(n + 1, i);
    li += Poly::variable(n + 1, n) * xi[i];
    lin.push_back(li);
  }
  Poly sub(n + 1);
  for (const auto& t : f.terms()) {
    Poly m = Poly::constant(n + 1, t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t e = 0; e < t.exponent[i]; ++e) m = m * lin[i];
    sub += m;
  }
  std::vector<Poly::Term> out;
  for (const auto& t : sub.terms()) {
    if (t.exponent[n] != s) continue;
    std::vector<std::uint32_t> e(t.exponent.exponents().begin(), t.exponent.exponents().end() - 1);
    out.push_back({MultiIndex(e), t.coeff});
  }
  BigRat fact = 1;
  for (unsigned i = 2; i <= s; ++i) fact *= i;
  return Poly::from_terms(n, std::move(out)) * fact;
}

/// Oracle for the Hilbert function of a homogeneous ideal: C(n+t, t) minus
/// the rank of the Macaulay matrix of all multiples m*g of degree t.
inline BigInt macaulay_hilbert(const std::vector<Poly>& gens, std::size_t vars, unsigned t) {
  auto cols = all_monomials(vars, t);
  RatMatrix m;
  for (const auto& g : gens) {
    unsigned dg = g.total_degree();
    if (dg > t) continue;
    for (const auto& mult : all_monomials(vars, t - dg)) {
      Poly h = g.shifted(mult);
      std::vector<BigRat> row(cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) row[c] = h.coefficient(cols[c]);
      m.push_back(std::move(row));
    }
  }
  return BigInt(static_cast<unsigned long>(cols.size() - (m.empty() ? 0 : rank(m))));
}

inline long lrand(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace testing
