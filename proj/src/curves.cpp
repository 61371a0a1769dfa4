#include "polarmaps/curves.hpp"

#include <algorithm>

#include "polarmaps/errors.hpp"
#include "polarmaps/geometry.hpp"
#include "polarmaps/rng.hpp"
#include "polarmaps/univariate.hpp"

namespace polarmaps {

namespace {

void require_plane(const Poly& f) {
  if (f.num_vars() != 3)
    throw DimensionError("plane curve expected (3 variables), got " +
                         std::to_string(f.num_vars()));
}

// F restricted to the line {(a, b, z)} as a polynomial in z.
univariate::UPoly restrict_to_fiber(const Poly& f, const BigRat& a, const BigRat& b) {
  univariate::UPoly u(f.degree_in(2) + 1, 0);
  for (const auto& t : f.terms()) {
    BigRat v = t.coeff;
    for (std::uint32_t i = 0; i < t.exponent[0]; ++i) v *= a;
    for (std::uint32_t i = 0; i < t.exponent[1]; ++i) v *= b;
    u[t.exponent[2]] += v;
  }
  return univariate::trim(std::move(u));
}

RatMatrix random_unimodular(SeededRng& rng) {
  for (;;) {
    RatMatrix a(3, std::vector<BigRat>(3));
    for (auto& row : a)
      for (auto& v : row) v = rng.uniform(-5, 5);
    BigRat det = determinant(a);
    if (det == 1 || det == -1) return a;
  }
}

}  // namespace

PolyMatrix hessian_matrix(const Poly& f) {
  require_plane(f);
  PolyMatrix h(3, std::vector<Poly>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      h[i][j] = f.derivative(i).derivative(j);
      h[j][i] = h[i][j];
    }
  return h;
}

Poly hessian_det(const Poly& f) {
  require_plane(f);
  if (f.degree_check().degree < 2) throw RangeError("Hessian needs degree >= 2");
  return determinant(hessian_matrix(f), 3);
}

BigRat quadric_discriminant(const Poly& q) {
  require_plane(q);
  auto info = q.degree_check();
  if (!info.homogeneous || info.degree != 2)
    throw PreconditionError("quadric discriminant needs a ternary quadratic form");
  RatMatrix m(3, std::vector<BigRat>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      MultiIndex e(3);
      e[i] += 1;
      e[j] += 1;
      m[i][j] = q.coefficient(e);
      if (i != j) m[i][j] /= 2;
    }
  return determinant(m);
}

Poly generic_quadric_discriminant() {
  auto basis = monomials_of_degree(3, 2);
  PolyMatrix m(3, std::vector<Poly>(3, Poly(6)));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < 3; ++v)
      for (std::uint32_t e = 0; e < basis[c][v]; ++e) idx.push_back(v);
    std::size_t i = idx[0], j = idx[1];
    BigRat w = i == j ? BigRat(1) : BigRat(1, 2);
    m[i][j] += Poly::variable(6, c) * w;
    if (i != j) m[j][i] += Poly::variable(6, c) * w;
  }
  return determinant(std::move(m), 6);
}

Poly sylvester_resultant(const Poly& f, const Poly& g, std::size_t var) {
  if (f.num_vars() != g.num_vars()) throw DimensionError("resultant across different rings");
  if (var >= f.num_vars()) throw DimensionError("elimination variable out of range");
  const unsigned m = f.degree_in(var), n = g.degree_in(var);
  if (m == 0 || n == 0)
    throw DegenerateError("resultant needs positive degree in x" + std::to_string(var) +
                          "; change coordinates");
  const std::size_t nv = f.num_vars();
  const std::size_t size = m + n;
  PolyMatrix s(size, std::vector<Poly>(size, Poly(nv)));
  for (std::size_t row = 0; row < n; ++row)
    for (unsigned k = 0; k <= m; ++k) s[row][row + k] = f.coefficient_in(var, m - k);
  for (std::size_t row = 0; row < m; ++row)
    for (unsigned k = 0; k <= n; ++k) s[n + row][row + k] = g.coefficient_in(var, n - k);
  return determinant(std::move(s), nv);
}

FlexReport flexes(const Poly& f, std::uint64_t seed, const GroebnerLimits& limits) {
  require_plane(f);
  auto info = f.degree_check();
  if (!info.homogeneous) throw PreconditionError("plane curve equation must be homogeneous");
  const unsigned d = info.degree;
  if (d < 3) throw RangeError("flex count needs degree >= 3");
  if (!polar_regularity(f, 1, limits).regular)
    throw PreconditionError("curve is singular; flex count applies to smooth curves");

  const Poly hess = hessian_det(f);
  const unsigned h_deg = 3 * (d - 2);
  constexpr unsigned kAttempts = 5;
  for (unsigned attempt = 0; attempt < kAttempts; ++attempt) {
    SeededRng rng(SeededRng::derive(seed, attempt));
    RatMatrix a = random_unimodular(rng);
    Poly fy = f.substitute_linear(a);
    // Hess(F(Ay)) = det(A)^2 Hess(F)(Ay) = Hess(F)(Ay) for unimodular A.
    Poly hy = hess.substitute_linear(a);
    if (fy.coefficient(MultiIndex{0, 0, d}) == 0 || hy.is_zero() ||
        hy.coefficient(MultiIndex{0, 0, h_deg}) == 0)
      continue;
    Poly res = sylvester_resultant(fy, hy, 2);
    if (res.is_zero()) continue;

    FlexReport report;
    report.d = d;
    report.resultant_degree = res.total_degree();
    report.count_with_multiplicity = report.resultant_degree;
    report.coordinate_change = a;
    report.attempts = attempt + 1;

    // Binary form in (y0, y1): dehomogenize at y1 = 1; the point [1:0] is a
    // root iff the degree drops.
    univariate::UPoly u(report.resultant_degree + 1, 0);
    for (const auto& t : res.terms()) u[t.exponent[0]] += t.coeff;
    u = univariate::trim(std::move(u));
    const bool root_at_infinity = univariate::degree(u) < static_cast<int>(report.resultant_degree);
    report.squarefree_degree =
        static_cast<unsigned>(univariate::degree(univariate::squarefree_part(u))) +
        (root_at_infinity ? 1u : 0u);

    std::vector<std::pair<BigRat, BigRat>> fibers;
    for (const auto& r : univariate::rational_roots(u)) fibers.push_back({r, 1});
    if (root_at_infinity) fibers.push_back({1, 0});
    for (const auto& [y0, y1] : fibers) {
      auto common = univariate::gcd(restrict_to_fiber(fy, y0, y1), restrict_to_fiber(hy, y0, y1));
      for (const auto& z : univariate::rational_roots(common)) {
        std::vector<BigRat> x = multiply(a, {y0, y1, z});
        ProjPoint pt = ProjPoint(std::move(x)).primitive();
        if (f.evaluate(pt) != 0 || hess.evaluate(pt) != 0)
          throw std::logic_error("lifted flex is not on the curve and its Hessian");
        if (std::find(report.rational_flexes.begin(), report.rational_flexes.end(), pt) ==
            report.rational_flexes.end())
          report.rational_flexes.push_back(std::move(pt));
      }
    }
    std::sort(report.rational_flexes.begin(), report.rational_flexes.end(),
              [](const ProjPoint& p, const ProjPoint& q) {
                return std::lexicographical_compare(p.coords().begin(), p.coords().end(),
                                                    q.coords().begin(), q.coords().end());
              });
    return report;
  }
  throw DegenerateError("no generic coordinate change found after " + std::to_string(kAttempts) +
                        " draws");
}

}  // namespace polarmaps
