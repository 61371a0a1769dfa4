#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polarmaps {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const BigRat& value);
BigRat parse_rational(const std::string& text);

BigInt factorial(unsigned n);

/// Exponent vector (alpha_0, ..., alpha_n). Also used to index iterated
/// partial derivatives.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit MultiIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  MultiIndex(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  static MultiIndex unit(std::size_t num_vars, std::size_t i);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  unsigned degree() const noexcept;
  bool divides(const MultiIndex& other) const;
  bool coprime(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; requires `other.divides(*this)`.
  MultiIndex operator-(const MultiIndex& other) const;
  MultiIndex lcm(const MultiIndex& other) const;

  /// alpha! = prod alpha_i!
  BigInt factorial() const;
  /// |alpha|! / alpha!, the number of ordered index tuples with content alpha.
  BigInt multinomial() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
};

/// Three-way comparisons returning <0, 0, >0. Both orders rank x0 > x1 > ... > xn.
int grevlex_compare(const MultiIndex& a, const MultiIndex& b);
int lex_compare(const MultiIndex& a, const MultiIndex& b);

/// All exponent vectors of total degree k in num_vars variables, in
/// descending lex order: x0^k first, xn^k last. This is the index order of
/// Chow coordinates and of polar-map coordinate lists.
std::vector<MultiIndex> monomials_of_degree(std::size_t num_vars, unsigned k);

std::string monomial_string(const MultiIndex& alpha);

/// A point of projective space, stored by one affine representative.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<BigRat> coords);
  ProjPoint(std::initializer_list<long> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  const BigRat& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const BigRat> coords() const noexcept { return coords_; }

  ProjPoint scaled(const BigRat& lambda) const;
  /// Representative with coprime integer coordinates, first nonzero positive.
  ProjPoint primitive() const;

  /// Equality as points of projective space (up to a nonzero scalar).
  friend bool operator==(const ProjPoint& a, const ProjPoint& b);

 private:
  std::vector<BigRat> coords_;
};

std::string to_string(const ProjPoint& p);

struct DegreeInfo {
  unsigned degree;
  bool homogeneous;
};

/// Sparse polynomial over Q in x0..x_{n}. Terms are kept sorted by descending
/// grevlex order with no zero coefficients, so equal polynomials have equal
/// representations.
class Poly {
 public:
  struct Term {
    MultiIndex exponent;
    BigRat coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  explicit Poly(std::size_t num_vars) : num_vars_(num_vars) {}

  static Poly constant(std::size_t num_vars, const BigRat& c);
  static Poly variable(std::size_t num_vars, std::size_t i);
  static Poly monomial(const MultiIndex& alpha, const BigRat& c = 1);
  /// Combines repeated exponents and drops zeros.
  static Poly from_terms(std::size_t num_vars, std::vector<Term> terms);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  /// Grevlex leading term; requires a nonzero polynomial.
  const Term& leading() const;
  BigRat coefficient(const MultiIndex& alpha) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const BigRat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRat& c) { return a *= c; }
  friend Poly operator*(const BigRat& c, Poly a) { return a *= c; }
  Poly operator-() const;

  Poly pow(unsigned e) const;
  /// Multiply by the monomial c * x^alpha.
  Poly shifted(const MultiIndex& alpha, const BigRat& c = 1) const;

  Poly derivative(std::size_t var) const;
  /// Iterated partial derivative d^{|alpha|} / dx^alpha.
  Poly partial(const MultiIndex& alpha) const;

  BigRat evaluate(std::span<const BigRat> point) const;
  BigRat evaluate(const ProjPoint& point) const { return evaluate(point.coords()); }

  /// Throws PreconditionError on the zero polynomial.
  DegreeInfo degree_check() const;
  /// Maximum total degree; 0 for the zero polynomial.
  unsigned total_degree() const;
  bool is_homogeneous() const;
  unsigned degree_in(std::size_t var) const;
  /// Coefficient of var^k, as a polynomial not involving var.
  Poly coefficient_in(std::size_t var, unsigned k) const;

  /// Same polynomial in a ring with new_num_vars variables, x_i -> x_{i+offset}.
  Poly embed(std::size_t new_num_vars, std::size_t offset = 0) const;
  /// x_i -> sum_j matrix[i][j] * y_j; matrix has num_vars() rows.
  Poly substitute_linear(const std::vector<std::vector<BigRat>>& matrix) const;
  /// x_i -> images[i]; all images share a ring.
  Poly compose(std::span<const Poly> images) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

std::string to_string(const Poly& f);
std::ostream& operator<<(std::ostream& os, const Poly& f);

/// Scale to coprime integer coefficients with a positive grevlex-leading
/// coefficient. Throws PreconditionError on zero.
Poly normalize_primitive(const Poly& f);

/// True when f and g differ by a nonzero rational factor.
bool proportional(const Poly& f, const Poly& g);

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

/// Multivariate division of f by a single divisor g under grevlex.
DivisionResult divide(const Poly& f, const Poly& g);
/// f / g, requiring g to divide f exactly (logic_error otherwise).
Poly exact_divide(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination. All entries share num_vars.
Poly determinant(PolyMatrix m, std::size_t num_vars);

}  // namespace polarmaps
