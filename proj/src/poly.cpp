#include "polarmaps/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "polarmaps/errors.hpp"

namespace polarmaps {

std::string to_string(const BigRat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigRat parse_rational(const std::string& text) {
  BigRat r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw PreconditionError("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// ---------------------------------------------------------------- MultiIndex

MultiIndex MultiIndex::unit(std::size_t num_vars, std::size_t i) {
  MultiIndex m(num_vars);
  m.exps_.at(i) = 1;
  return m;
}

unsigned MultiIndex::degree() const noexcept {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool MultiIndex::coprime(const MultiIndex& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  MultiIndex r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  MultiIndex r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw std::logic_error("MultiIndex underflow");
    r.exps_[i] -= other.exps_[i];
  }
  return r;
}

MultiIndex MultiIndex::lcm(const MultiIndex& other) const {
  MultiIndex r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

BigInt MultiIndex::factorial() const {
  BigInt r = 1;
  for (auto e : exps_) r *= polarmaps::factorial(e);
  return r;
}

BigInt MultiIndex::multinomial() const {
  return polarmaps::factorial(degree()) / factorial();
}

int grevlex_compare(const MultiIndex& a, const MultiIndex& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_compare(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

namespace {

void enumerate_monomials(std::size_t var, unsigned remaining, MultiIndex& cur,
                         std::vector<MultiIndex>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    enumerate_monomials(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t num_vars, unsigned k) {
  std::vector<MultiIndex> out;
  if (num_vars == 0) {
    if (k == 0) out.emplace_back(0);
    return out;
  }
  MultiIndex cur(num_vars);
  enumerate_monomials(0, k, cur, out);
  return out;
}

std::string monomial_string(const MultiIndex& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (alpha[i] > 1) s += "^" + std::to_string(alpha[i]);
  }
  return s.empty() ? "1" : s;
}

// ----------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(std::vector<BigRat> coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const BigRat& c) { return c == 0; }))
    throw PreconditionError("projective point must have a nonzero coordinate");
}

ProjPoint::ProjPoint(std::initializer_list<long> coords)
    : ProjPoint(std::vector<BigRat>(coords.begin(), coords.end())) {}

ProjPoint ProjPoint::scaled(const BigRat& lambda) const {
  if (lambda == 0) throw PreconditionError("projective rescaling by zero");
  std::vector<BigRat> c = coords_;
  for (auto& v : c) v *= lambda;
  return ProjPoint(std::move(c));
}

ProjPoint ProjPoint::primitive() const {
  BigInt den_lcm = 1;
  for (const auto& c : coords_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt g = 0;
  for (const auto& c : coords_) {
    BigInt v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  BigRat factor(den_lcm, g);
  factor.canonicalize();
  auto first = std::find_if(coords_.begin(), coords_.end(), [](const BigRat& c) { return c != 0; });
  if (*first < 0) factor = -factor;
  return scaled(factor);
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size()) return false;
  // a ~ b iff a_i b_j == a_j b_i for all i, j; compare through a pivot.
  std::size_t pivot = 0;
  while (a.coords_[pivot] == 0) ++pivot;
  if (b.coords_[pivot] == 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coords_[i] * b.coords_[pivot] != b.coords_[i] * a.coords_[pivot]) return false;
  }
  return true;
}

std::string to_string(const ProjPoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ":";
    s += to_string(p[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------- Poly

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) {
  return grevlex_compare(a.exponent, b.exponent) > 0;
}

void check_same_ring(const Poly& a, const Poly& b) {
  if (a.num_vars() != b.num_vars())
    throw DimensionError("polynomials in different rings (" + std::to_string(a.num_vars()) +
                         " vs " + std::to_string(b.num_vars()) + " variables)");
}

// Merge b*sign into a; both sorted descending.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, bool negate) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = grevlex_compare(a[i].exponent, b[j].exponent);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (negate) out.back().coeff = -out.back().coeff;
    } else {
      BigRat s = negate ? BigRat(a[i].coeff - b[j].coeff) : BigRat(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].exponent, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly Poly::constant(std::size_t num_vars, const BigRat& c) {
  Poly p(num_vars);
  if (c != 0) p.terms_.push_back({MultiIndex(num_vars), c});
  return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw DimensionError("variable index out of range");
  return monomial(MultiIndex::unit(num_vars, i));
}

Poly Poly::monomial(const MultiIndex& alpha, const BigRat& c) {
  Poly p(alpha.size());
  if (c != 0) p.terms_.push_back({alpha, c});
  return p;
}

Poly Poly::from_terms(std::size_t num_vars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exponent.size() != num_vars) throw DimensionError("term length mismatch");
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p(num_vars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.degree() == 0);
}

const Poly::Term& Poly::leading() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

BigRat Poly::coefficient(const MultiIndex& alpha) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), alpha, [](const Term& t, const MultiIndex& a) {
    return grevlex_compare(t.exponent, a) > 0;
  });
  if (it != terms_.end() && it->exponent == alpha) return it->coeff;
  return 0;
}

Poly& Poly::operator+=(const Poly& other) {
  check_same_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.num_vars());
  std::vector<Poly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.exponent + t.exponent, s.coeff * t.coeff});
  return Poly::from_terms(a.num_vars(), std::move(prod));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(num_vars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::shifted(const MultiIndex& alpha, const BigRat& c) const {
  if (alpha.size() != num_vars_) throw DimensionError("monomial length mismatch");
  Poly r(num_vars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.exponent + alpha, t.coeff * c});
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= num_vars_) throw DimensionError("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponent[var] == 0) continue;
    Term d{t.exponent, t.coeff * t.exponent[var]};
    d.exponent[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(num_vars_, std::move(out));
}

Poly Poly::partial(const MultiIndex& alpha) const {
  if (alpha.size() != num_vars_) throw DimensionError("multi-index length mismatch");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (!alpha.divides(t.exponent)) continue;
    // d^a/dx^a x^e = e!/(e-a)! x^(e-a), per variable.
    BigInt falling = 1;
    for (std::size_t i = 0; i < num_vars_; ++i)
      for (std::uint32_t j = 0; j < alpha[i]; ++j) falling *= (t.exponent[i] - j);
    out.push_back({t.exponent - alpha, t.coeff * falling});
  }
  return from_terms(num_vars_, std::move(out));
}

BigRat Poly::evaluate(std::span<const BigRat> point) const {
  if (point.size() != num_vars_) throw DimensionError("evaluation point has wrong dimension");
  BigRat sum = 0;
  std::vector<std::vector<BigRat>> powers(num_vars_);
  for (const auto& t : terms_) {
    BigRat v = t.coeff;
    for (std::size_t i = 0; i < num_vars_ && v != 0; ++i) {
      std::uint32_t e = t.exponent[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      v *= pw[e];
    }
    sum += v;
  }
  return sum;
}

DegreeInfo Poly::degree_check() const {
  if (is_zero()) throw PreconditionError("degree of the zero polynomial is undefined");
  return {total_degree(), is_homogeneous()};
}

unsigned Poly::total_degree() const {
  // Grevlex sorts by total degree first.
  return terms_.empty() ? 0 : terms_.front().exponent.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().exponent.degree();
  return terms_.back().exponent.degree() == d;
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponent[var]);
  return d;
}

Poly Poly::coefficient_in(std::size_t var, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponent[var] != k) continue;
    Term c = t;
    c.exponent[var] = 0;
    out.push_back(std::move(c));
  }
  return from_terms(num_vars_, std::move(out));
}

Poly Poly::embed(std::size_t new_num_vars, std::size_t offset) const {
  if (offset + num_vars_ > new_num_vars) throw DimensionError("embedding does not fit");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    MultiIndex e(new_num_vars);
    for (std::size_t i = 0; i < num_vars_; ++i) e[offset + i] = t.exponent[i];
    out.push_back({std::move(e), t.coeff});
  }
  return from_terms(new_num_vars, std::move(out));
}

Poly Poly::substitute_linear(const std::vector<std::vector<BigRat>>& matrix) const {
  if (matrix.size() != num_vars_) throw DimensionError("substitution matrix has wrong row count");
  std::size_t m = matrix.empty() ? 0 : matrix[0].size();
  std::vector<Poly> images;
  for (const auto& row : matrix) {
    if (row.size() != m) throw DimensionError("ragged substitution matrix");
    Poly img(m);
    for (std::size_t j = 0; j < m; ++j) img += Poly::monomial(MultiIndex::unit(m, j), row[j]);
    images.push_back(std::move(img));
  }
  return compose(images);
}

Poly Poly::compose(std::span<const Poly> images) const {
  if (images.size() != num_vars_) throw DimensionError("composition needs one image per variable");
  std::size_t m = images.empty() ? 0 : images[0].num_vars();
  std::vector<std::vector<Poly>> powers(num_vars_);
  Poly result(m);
  for (const auto& t : terms_) {
    Poly v = Poly::constant(m, t.coeff);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      std::uint32_t e = t.exponent[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly::constant(m, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      v *= pw[e];
    }
    result += v;
  }
  return result;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    BigRat c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    bool is_const = t.exponent.degree() == 0;
    if (is_const) {
      s += to_string(c);
    } else {
      if (c != 1) s += to_string(c) + "*";
      s += monomial_string(t.exponent);
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << to_string(f); }

Poly normalize_primitive(const Poly& f) {
  if (f.is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
  BigInt den_lcm = 1;
  for (const auto& t : f.terms())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  BigInt g = 0;
  for (const auto& t : f.terms()) {
    BigInt v = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  BigRat factor(den_lcm, g);
  factor.canonicalize();
  if (f.leading().coeff < 0) factor = -factor;
  return f * factor;
}

bool proportional(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return normalize_primitive(f) == normalize_primitive(g);
}

DivisionResult divide(const Poly& f, const Poly& g) {
  check_same_ring(f, g);
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& lead = g.leading();
  std::vector<Poly::Term> quotient;
  std::vector<Poly::Term> remainder;
  Poly rest = f;
  while (!rest.is_zero()) {
    const auto& t = rest.leading();
    if (lead.exponent.divides(t.exponent)) {
      Poly::Term q{t.exponent - lead.exponent, t.coeff / lead.coeff};
      rest -= g.shifted(q.exponent, q.coeff);
      quotient.push_back(std::move(q));
    } else {
      remainder.push_back(t);
      rest -= Poly::monomial(t.exponent, t.coeff);
    }
  }
  return {Poly::from_terms(f.num_vars(), std::move(quotient)),
          Poly::from_terms(f.num_vars(), std::move(remainder))};
}

Poly exact_divide(const Poly& f, const Poly& g) {
  auto r = divide(f, g);
  if (!r.remainder.is_zero()) throw std::logic_error("exact_divide: nonzero remainder");
  return std::move(r.quotient);
}

bool divides(const Poly& g, const Poly& f) { return divide(f, g).remainder.is_zero(); }

Poly determinant(PolyMatrix m, std::size_t num_vars) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
  if (n == 0) return Poly::constant(num_vars, 1);
  Poly prev = Poly::constant(num_vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Poly(num_vars);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, prev);
      }
      m[i][k] = Poly(num_vars);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace polarmaps
