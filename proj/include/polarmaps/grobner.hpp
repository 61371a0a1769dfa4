#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polarmaps/poly.hpp"

namespace polarmaps {

enum class OrderKind { grevlex, lex, block };

/// Monomial order on num_vars variables, x0 > x1 > ... For `block`, the first
/// block_size variables form the elimination block: monomials are compared by
/// grevlex on that block, ties broken by grevlex on the rest.
class MonomialOrder {
 public:
  static MonomialOrder grevlex(std::size_t num_vars) { return {OrderKind::grevlex, num_vars, 0}; }
  static MonomialOrder lex(std::size_t num_vars) { return {OrderKind::lex, num_vars, 0}; }
  static MonomialOrder block(std::size_t num_vars, std::size_t block_size);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  std::size_t block_size() const noexcept { return block_size_; }

  int compare(const MultiIndex& a, const MultiIndex& b) const;
  bool greater(const MultiIndex& a, const MultiIndex& b) const { return compare(a, b) > 0; }
  /// Leading term of a nonzero polynomial under this order.
  const Poly::Term& leading(const Poly& f) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::size_t n, std::size_t block)
      : kind_(kind), num_vars_(n), block_size_(block) {}

  OrderKind kind_;
  std::size_t num_vars_;
  std::size_t block_size_;
};

/// Explicit resource limits for Buchberger. Exceeding either raises
/// ResourceError.
struct GroebnerLimits {
  std::size_t max_steps = 200000;  // S-pair reductions
  std::size_t max_basis = 20000;   // polynomials generated

  /// Defaults overridden by POLARMAPS_MAX_STEPS / POLARMAPS_MAX_BASIS.
  static GroebnerLimits from_env();
};

/// Generators of a polynomial ideal, stored primitive-normalized.
class IdealBasis {
 public:
  IdealBasis(std::vector<Poly> generators, MonomialOrder order);

  const std::vector<Poly>& generators() const noexcept { return generators_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t num_vars() const noexcept { return order_.num_vars(); }
  bool homogeneous() const;

 private:
  std::vector<Poly> generators_;
  MonomialOrder order_;
};

/// Reduced Groebner basis: monic elements, sorted by ascending leading term.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Poly> basis, MonomialOrder order, bool reduced)
      : basis_(std::move(basis)), order_(order), reduced_(reduced) {}

  const std::vector<Poly>& basis() const noexcept { return basis_; }
  const MonomialOrder& order() const noexcept { return order_; }
  bool reduced() const noexcept { return reduced_; }
  std::size_t num_vars() const noexcept { return order_.num_vars(); }
  std::vector<MultiIndex> leading_monomials() const;
  bool is_unit() const;

 private:
  std::vector<Poly> basis_;
  MonomialOrder order_;
  bool reduced_;
};

/// Remainder of f on division by B; no remainder term is divisible by a
/// leading monomial of B.
Poly normal_form(const Poly& f, const GroebnerBasis& b);

/// Buchberger's algorithm with Gebauer-Moller pair pruning and normal
/// (least-lcm) pair selection. The result is reduced and depends only on the
/// input generators and order.
GroebnerBasis buchberger(const IdealBasis& ideal, const GroebnerLimits& limits = {});

/// Dimension of V(I) in projective space computed from the leading-monomial
/// ideal of a GB of a homogeneous ideal; -1 means empty.
int projective_dimension(const GroebnerBasis& gb);

/// Number of standard monomials of degree t (Hilbert function of R/I for a
/// homogeneous ideal).
BigInt hilbert_function(const GroebnerBasis& gb, unsigned t);

struct EmptinessResult {
  bool empty;
  /// Leading monomials x_i^{m_i}, one per variable, when empty.
  std::vector<MultiIndex> pure_powers;
  int projective_dimension;
  std::string certificate;
};

/// V(I) = {} in P^n iff every variable has a pure power among the leading
/// monomials of a GB. Generators must be homogeneous.
EmptinessResult is_projectively_empty(const IdealBasis& ideal, const GroebnerLimits& limits = {});

/// Degree of a zero-dimensional projective scheme, counted with multiplicity,
/// as the stabilized Hilbert function. Returns 0 for an empty scheme and
/// raises DimensionError for positive-dimensional input.
BigInt zero_dim_degree(const IdealBasis& ideal, const GroebnerLimits& limits = {});
BigInt zero_dim_degree(const GroebnerBasis& gb, unsigned degree_bound = 0);

/// I intersected with the subring of the trailing keep_last variables.
/// Uses a block elimination order (lex and a correctly sized block order on
/// the input are kept). The result lives in a ring of keep_last variables
/// with grevlex order.
IdealBasis eliminate(const IdealBasis& ideal, std::size_t keep_last,
                     const GroebnerLimits& limits = {});

}  // namespace polarmaps
