#include "polarmaps/geometry.hpp"

#include <functional>
#include <stdexcept>

#include "polarmaps/errors.hpp"
#include "polarmaps/polar.hpp"

namespace polarmaps {

namespace {

unsigned hypersurface_degree(const Poly& f) {
  auto info = f.degree_check();
  if (!info.homogeneous) throw PreconditionError("hypersurface equation must be homogeneous");
  return info.degree;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

RegularityReport polar_regularity(const Poly& f, unsigned p, const GroebnerLimits& limits) {
  unsigned d = hypersurface_degree(f);
  if (p < 1 || p + 1 > d)
    throw RangeError("polar degree p=" + std::to_string(p) + " outside 1.." +
                     std::to_string(d == 0 ? 0 : d - 1));
  std::vector<Poly> partials;
  for (const auto& alpha : monomials_of_degree(f.num_vars(), p)) {
    Poly g = f.partial(alpha);
    if (!g.is_zero()) partials.push_back(std::move(g));
  }
  IdealBasis ideal(std::move(partials), MonomialOrder::grevlex(f.num_vars()));
  EmptinessResult cert = is_projectively_empty(ideal, limits);
  return {p, cert.empty, std::move(ideal), std::move(cert)};
}

std::vector<RegularityReport> regularity_profile(const Poly& f, const GroebnerLimits& limits) {
  unsigned d = hypersurface_degree(f);
  if (d < 2) throw RangeError("regularity profile needs degree >= 2");
  std::vector<RegularityReport> out;
  for (unsigned p = 1; p < d; ++p) {
    out.push_back(polar_regularity(f, p, limits));
    if (p > 1 && out[p - 2].regular && !out[p - 1].regular)
      throw std::logic_error("regularity cascade violated at p=" + std::to_string(p));
  }
  return out;
}

RatMatrix polar_linear_matrix(const Poly& f) {
  unsigned d = hypersurface_degree(f);
  if (d < 2) throw RangeError("polar linear matrix needs degree >= 2");
  const std::size_t n1 = f.num_vars();
  RatMatrix m;
  for (const auto& g : scaled_partials(f, d - 1)) {
    std::vector<BigRat> row(n1, 0);
    for (std::size_t j = 0; j < n1; ++j) row[j] = g.coefficient(MultiIndex::unit(n1, j));
    m.push_back(std::move(row));
  }
  return m;
}

ConeReport is_cone(const Poly& f) {
  const std::size_t n1 = f.num_vars();
  auto kernel = kernel_basis(polar_linear_matrix(f), n1);
  ConeReport r{!kernel.empty(), {}};
  for (auto& v : kernel) r.vertex_space.push_back(ProjPoint(std::move(v)).primitive());
  return r;
}

BigInt image_degree_formula(unsigned d, unsigned p, unsigned n) {
  if (p < 1 || p >= d) throw RangeError("image degree needs 1 <= p < d");
  if (n < 2) throw RangeError("image degree needs n >= 2");
  BigInt e = d - p;
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), e.get_mpz_t(), n - 1);
  return r * d;
}

ImageDegreeCheck verify_image_degree(const Poly& f, unsigned p, std::uint64_t seed,
                                     const GroebnerLimits& limits) {
  unsigned d = hypersurface_degree(f);
  const std::size_t n1 = f.num_vars();
  if (n1 < 3) throw RangeError("image degree needs n >= 2");
  const unsigned n = static_cast<unsigned>(n1 - 1);
  BigInt formula = image_degree_formula(d, p, n);
  if (!polar_regularity(f, p, limits).regular)
    throw PreconditionError("polar map of degree " + std::to_string(p) + " is not regular");

  auto coords = scaled_partials(f, p);
  constexpr unsigned kAttempts = 6;  // first draw plus 5 re-draws
  for (unsigned attempt = 0; attempt < kAttempts; ++attempt) {
    SeededRng rng(SeededRng::derive(seed, attempt));
    std::vector<Poly> slice;
    for (unsigned h = 0; h + 1 < n; ++h) {
      Poly form(n1);
      for (const auto& g : coords) form += g * BigRat(rng.uniform(-10, 10));
      slice.push_back(std::move(form));
    }
    if (std::any_of(slice.begin(), slice.end(), [](const Poly& g) { return g.is_zero(); }))
      continue;
    std::vector<Poly> gens = slice;
    gens.push_back(f);
    GroebnerBasis gb = buchberger(IdealBasis(gens, MonomialOrder::grevlex(n1)), limits);
    if (projective_dimension(gb) != 0) continue;
    unsigned bound = 1;
    for (const auto& g : gens) bound += g.total_degree() - 1;
    BigInt count = zero_dim_degree(gb, bound);
    bool agree = count == formula;
    return {std::move(count), std::move(formula), agree, attempt + 1, std::move(slice)};
  }
  throw DegenerateError("no zero-dimensional hyperplane slice after " +
                        std::to_string(kAttempts) + " draws");
}

ImageDimension polar_image_dimension(const Poly& f, unsigned p, bool require_regular,
                                     const GroebnerLimits& limits) {
  hypersurface_degree(f);
  bool regular = polar_regularity(f, p, limits).regular;
  if (require_regular && !regular)
    throw PreconditionError("polar map of degree " + std::to_string(p) + " is not regular");

  const std::size_t n1 = f.num_vars();
  PolyMatrix jac;
  for (const auto& g : scaled_partials(f, p)) {
    std::vector<Poly> row;
    for (std::size_t j = 0; j < n1; ++j) row.push_back(g.derivative(j));
    jac.push_back(std::move(row));
  }
  std::vector<Poly> grad;
  for (std::size_t j = 0; j < n1; ++j) grad.push_back(f.derivative(j));
  jac.push_back(std::move(grad));

  // On the smooth locus of the cone over X, rank [J; grad F] = rank(J restricted
  // to the tangent space) + 1, and the image cone has dimension rank(J|T).
  const std::size_t rows = jac.size();
  for (std::size_t r = std::min(rows, n1); r >= 1; --r) {
    bool found = false;
    for_each_subset(rows, r, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(n1, r, [&](const std::vector<std::size_t>& cs) {
        PolyMatrix minor;
        for (auto i : rs) {
          std::vector<Poly> row;
          for (auto j : cs) row.push_back(jac[i][j]);
          minor.push_back(std::move(row));
        }
        Poly det = determinant(std::move(minor), n1);
        if (!det.is_zero() && !divides(f, det)) found = true;
        return !found;
      });
      return !found;
    });
    if (found) return {static_cast<int>(r) - 2, static_cast<unsigned>(r), regular};
  }
  return {-1, 0, regular};
}

PolarClassReport polar_class(unsigned d, unsigned p) {
  if (d < 2 || p < 1 || p >= d) throw RangeError("polar class needs 1 <= p < d");
  BigRat ratio(d - p, d - 1);
  ratio.canonicalize();
  return {p, BigInt(d - p), ratio};
}

PolarClassReport polar_class(const Poly& f, unsigned p) {
  return polar_class(hypersurface_degree(f), p);
}

IdealBasis polar_image_ideal(const Poly& f, unsigned p, const GroebnerLimits& limits) {
  unsigned d = hypersurface_degree(f);
  if (p < 1 || p >= d) throw RangeError("polar image needs 1 <= p < d");
  const std::size_t n1 = f.num_vars();
  auto coords = scaled_partials(f, p);
  const std::size_t total = n1 + coords.size();
  std::vector<Poly> gens;
  for (std::size_t a = 0; a < coords.size(); ++a) {
    gens.push_back(Poly::variable(total, n1 + a) - coords[a].embed(total, 0));
  }
  gens.push_back(f.embed(total, 0));
  IdealBasis graph(std::move(gens), MonomialOrder::block(total, n1));
  return eliminate(graph, coords.size(), limits);
}

}  // namespace polarmaps
