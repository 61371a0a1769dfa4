#include "polarmaps/grobner.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "polarmaps/errors.hpp"

namespace polarmaps {

// ------------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::block(std::size_t num_vars, std::size_t block_size) {
  if (block_size > num_vars) throw RangeError("elimination block larger than the ring");
  return {OrderKind::block, num_vars, block_size};
}

namespace {

int grevlex_range(const MultiIndex& a, const MultiIndex& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const MultiIndex& a, const MultiIndex& b) const {
  switch (kind_) {
    case OrderKind::grevlex:
      return grevlex_compare(a, b);
    case OrderKind::lex:
      return lex_compare(a, b);
    case OrderKind::block: {
      int c = grevlex_range(a, b, 0, block_size_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_size_, num_vars_);
    }
  }
  return 0;
}

const Poly::Term& MonomialOrder::leading(const Poly& f) const {
  if (f.is_zero()) throw PreconditionError("zero polynomial has no leading term");
  if (kind_ == OrderKind::grevlex) return f.leading();
  const Poly::Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (compare(t.exponent, best->exponent) > 0) best = &t;
  return *best;
}

GroebnerLimits GroebnerLimits::from_env() {
  GroebnerLimits l;
  if (const char* s = std::getenv("POLARMAPS_MAX_STEPS")) l.max_steps = std::strtoull(s, nullptr, 10);
  if (const char* s = std::getenv("POLARMAPS_MAX_BASIS")) l.max_basis = std::strtoull(s, nullptr, 10);
  return l;
}

// --------------------------------------------------------------- IdealBasis

IdealBasis::IdealBasis(std::vector<Poly> generators, MonomialOrder order) : order_(order) {
  if (generators.empty()) throw PreconditionError("ideal needs at least one generator");
  for (auto& g : generators) {
    if (g.num_vars() != order.num_vars())
      throw DimensionError("generator ring does not match the monomial order");
    if (g.is_zero()) throw PreconditionError("zero generator in ideal basis");
    generators_.push_back(normalize_primitive(g));
  }
}

bool IdealBasis::homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Poly& g) { return g.is_homogeneous(); });
}

std::vector<MultiIndex> GroebnerBasis::leading_monomials() const {
  std::vector<MultiIndex> out;
  for (const auto& g : basis_) out.push_back(order_.leading(g).exponent);
  return out;
}

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

// ------------------------------------------------------- integer workspace

namespace {

// Polynomial with integer coefficients, terms sorted descending under the
// working order. Only used inside the GB engine.
struct ITerm {
  MultiIndex e;
  BigInt c;
};

struct IPoly {
  std::vector<ITerm> terms;
  std::uint64_t lead_mask = 0;  // variables present in the leading monomial

  bool zero() const { return terms.empty(); }
  const MultiIndex& lm() const { return terms.front().e; }
  const BigInt& lc() const { return terms.front().c; }
};

std::uint64_t support_mask(const MultiIndex& e) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size() && i < 64; ++i)
    if (e[i]) m |= (std::uint64_t{1} << i);
  return m;
}

class Engine {
 public:
  explicit Engine(const MonomialOrder& order) : order_(order) {}

  IPoly from_poly(const Poly& f) const {
    Poly p = normalize_primitive(f);
    IPoly r;
    r.terms.reserve(p.size());
    for (const auto& t : p.terms()) r.terms.push_back({t.exponent, t.coeff.get_num()});
    sort_terms(r);
    return r;
  }

  Poly to_monic_poly(const IPoly& f, std::size_t num_vars) const {
    std::vector<Poly::Term> terms;
    for (const auto& t : f.terms) terms.push_back({t.e, BigRat(t.c, f.lc())});
    for (auto& t : terms) t.coeff.canonicalize();
    return Poly::from_terms(num_vars, std::move(terms));
  }

  void sort_terms(IPoly& f) const {
    std::sort(f.terms.begin(), f.terms.end(),
              [&](const ITerm& a, const ITerm& b) { return order_.compare(a.e, b.e) > 0; });
    refresh(f);
  }

  static void refresh(IPoly& f) { f.lead_mask = f.zero() ? 0 : support_mask(f.lm()); }

  // a*f - b*(m*g), everything sorted descending.
  IPoly combine(const IPoly& f, const BigInt& a, const IPoly& g, const MultiIndex& m,
                const BigInt& b) const {
    IPoly out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    MultiIndex shifted;
    while (i < f.terms.size() || j < g.terms.size()) {
      int c;
      if (j < g.terms.size()) shifted = g.terms[j].e + m;
      if (i == f.terms.size()) c = -1;
      else if (j == g.terms.size()) c = 1;
      else c = order_.compare(f.terms[i].e, shifted);
      if (c > 0) {
        out.terms.push_back({f.terms[i].e, a * f.terms[i].c});
        ++i;
      } else if (c < 0) {
        out.terms.push_back({shifted, -b * g.terms[j].c});
        ++j;
      } else {
        BigInt v = a * f.terms[i].c - b * g.terms[j].c;
        if (v != 0) out.terms.push_back({shifted, std::move(v)});
        ++i;
        ++j;
      }
    }
    refresh(out);
    return out;
  }

  static BigInt content(const IPoly& f) {
    BigInt g = 0;
    for (const auto& t : f.terms) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  // Divides by the content and fixes the sign of the leading coefficient.
  // Returns the factor f was divided by.
  static BigInt make_primitive(IPoly& f) {
    if (f.zero()) return 1;
    BigInt g = content(f);
    if (f.lc() < 0) g = -g;
    if (g != 1)
      for (auto& t : f.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    return g;
  }

  // Full reduction of f against reducers. `scale` accumulates the rational
  // factor s with result = s * f - (ideal combination).
  IPoly reduce(IPoly f, const std::vector<const IPoly*>& reducers, BigRat* scale = nullptr) const {
    std::size_t pos = 0;
    unsigned since_content = 0;
    while (pos < f.terms.size()) {
      const MultiIndex& e = f.terms[pos].e;
      std::uint64_t emask = support_mask(e);
      const IPoly* red = nullptr;
      for (const IPoly* g : reducers) {
        if ((g->lead_mask & ~emask) != 0) continue;
        if (g->lm().divides(e)) {
          red = g;
          break;
        }
      }
      if (!red) {
        ++pos;
        continue;
      }
      BigInt gcd;
      mpz_gcd(gcd.get_mpz_t(), red->lc().get_mpz_t(), f.terms[pos].c.get_mpz_t());
      BigInt a = red->lc() / gcd;
      BigInt b = f.terms[pos].c / gcd;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      MultiIndex m = e - red->lm();
      f = combine(f, a, *red, m, b);
      if (scale) *scale *= a;
      if (++since_content >= 8) {
        since_content = 0;
        BigInt g = content(f);
        if (g > 1) {
          for (auto& t : f.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
          if (scale) *scale /= g;
        }
      }
    }
    if (!f.zero()) {
      BigInt g = make_primitive(f);
      if (scale) *scale /= g;
    }
    refresh(f);
    return f;
  }

  IPoly spoly(const IPoly& f, const IPoly& g) const {
    MultiIndex l = f.lm().lcm(g.lm());
    BigInt gcd;
    mpz_gcd(gcd.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
    BigInt a = g.lc() / gcd;
    BigInt b = f.lc() / gcd;
    IPoly fs = combine(IPoly{}, 0, f, l - f.lm(), -a);
    IPoly s = combine(fs, 1, g, l - g.lm(), b);
    return s;
  }

  const MonomialOrder& order() const { return order_; }

 private:
  MonomialOrder order_;
};

struct Pair {
  std::size_t i, j;
  MultiIndex lcm;
};

}  // namespace

// ---------------------------------------------------------------- algorithms

Poly normal_form(const Poly& f, const GroebnerBasis& b) {
  if (f.num_vars() != b.num_vars()) throw DimensionError("normal form across different rings");
  if (f.is_zero()) return f;
  Engine eng(b.order());
  std::vector<IPoly> store;
  store.reserve(b.basis().size());
  for (const auto& g : b.basis()) store.push_back(eng.from_poly(g));
  std::vector<const IPoly*> reducers;
  for (const auto& g : store) reducers.push_back(&g);

  // f = c * primitive(f); track the scale through the reduction.
  Poly prim = normalize_primitive(f);
  BigRat c = f.leading().coeff / prim.leading().coeff;
  BigRat scale = 1;
  IPoly r = eng.reduce(eng.from_poly(prim), reducers, &scale);
  std::vector<Poly::Term> terms;
  for (const auto& t : r.terms) terms.push_back({t.e, BigRat(t.c) * c / scale});
  return Poly::from_terms(f.num_vars(), std::move(terms));
}

GroebnerBasis buchberger(const IdealBasis& ideal, const GroebnerLimits& limits) {
  const MonomialOrder& order = ideal.order();
  const std::size_t n = ideal.num_vars();
  Engine eng(order);

  std::vector<IPoly> polys;
  std::vector<bool> active;
  std::vector<std::size_t> g_set;
  std::vector<Pair> pairs;
  std::size_t steps = 0;

  auto reducers = [&]() {
    std::vector<const IPoly*> r;
    for (auto idx : g_set) r.push_back(&polys[idx]);
    return r;
  };

  auto diagnostics = [&](const std::string& what) {
    std::ostringstream os;
    os << what << " (steps=" << steps << ", generated=" << polys.size()
       << ", basis=" << g_set.size() << ", pending pairs=" << pairs.size() << ")";
    return os.str();
  };

  // Gebauer-Moller update with the new polynomial h = polys[hi].
  auto update = [&](std::size_t hi) {
    const MultiIndex& lh = polys[hi].lm();
    std::vector<Pair> c_set, d_set;
    for (auto g : g_set) c_set.push_back({hi, g, lh.lcm(polys[g].lm())});
    while (!c_set.empty()) {
      Pair p = c_set.front();
      c_set.erase(c_set.begin());
      bool keep = lh.coprime(polys[p.j].lm());
      if (!keep) {
        keep = true;
        for (const auto& q : c_set)
          if (q.lcm.divides(p.lcm)) { keep = false; break; }
        if (keep)
          for (const auto& q : d_set)
            if (q.lcm.divides(p.lcm)) { keep = false; break; }
      }
      if (keep) d_set.push_back(std::move(p));
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && lh.lcm(polys[p.i].lm()) != p.lcm &&
                  lh.lcm(polys[p.j].lm()) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : d_set)
      if (!lh.coprime(polys[p.j].lm())) next.push_back(std::move(p));
    pairs = std::move(next);
    std::vector<std::size_t> g_next;
    for (auto g : g_set)
      if (!lh.divides(polys[g].lm())) g_next.push_back(g);
    g_next.push_back(hi);
    g_set = std::move(g_next);
  };

  auto add = [&](IPoly h) {
    if (polys.size() >= limits.max_basis)
      throw ResourceError(diagnostics("Groebner basis size limit exceeded"));
    polys.push_back(std::move(h));
    active.push_back(true);
    update(polys.size() - 1);
  };

  // Feed generators in ascending leading-term order for determinism.
  std::vector<IPoly> inputs;
  for (const auto& g : ideal.generators()) inputs.push_back(eng.from_poly(g));
  std::stable_sort(inputs.begin(), inputs.end(), [&](const IPoly& a, const IPoly& b) {
    return order.compare(a.lm(), b.lm()) < 0;
  });
  for (auto& f : inputs) {
    IPoly h = eng.reduce(std::move(f), reducers());
    if (!h.zero()) add(std::move(h));
  }

  while (!pairs.empty()) {
    if (++steps > limits.max_steps)
      throw ResourceError(diagnostics("Groebner step limit exceeded"));
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = order.compare(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && std::tie(pairs[k].i, pairs[k].j) < std::tie(pairs[best].i, pairs[best].j)))
        best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    IPoly h = eng.reduce(eng.spoly(polys[p.i], polys[p.j]), reducers());
    if (h.zero()) continue;
    if (h.lm().degree() == 0) {
      // Unit ideal.
      IPoly one;
      one.terms.push_back({MultiIndex(n), 1});
      Engine::refresh(one);
      return GroebnerBasis({eng.to_monic_poly(one, n)}, order, true);
    }
    add(std::move(h));
  }

  // g_set is minimal; interreduce tails.
  std::vector<IPoly> reduced;
  for (auto idx : g_set) {
    std::vector<const IPoly*> others;
    for (auto other : g_set)
      if (other != idx) others.push_back(&polys[other]);
    reduced.push_back(eng.reduce(polys[idx], others));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const IPoly& a, const IPoly& b) { return order.compare(a.lm(), b.lm()) < 0; });
  std::vector<Poly> out;
  for (const auto& r : reduced) out.push_back(eng.to_monic_poly(r, n));
  return GroebnerBasis(std::move(out), order, true);
}

int projective_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const std::size_t n = gb.num_vars();
  if (n > 24) throw ResourceError("dimension computation limited to 24 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& m : gb.leading_monomials()) supports.push_back(support_mask(m));
  // Krull dimension of R / LT(I): largest set S of variables such that no
  // leading monomial is supported inside S.
  int best = 0;
  const std::uint64_t full = (std::uint64_t{1} << n);
  for (std::uint64_t s = 0; s < full; ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (auto sup : supports)
      if ((sup & ~s) == 0) { independent = false; break; }
    if (independent) best = size;
  }
  return best - 1;
}

BigInt hilbert_function(const GroebnerBasis& gb, unsigned t) {
  if (gb.is_unit()) return 0;
  auto lms = gb.leading_monomials();
  BigInt count = 0;
  for (const auto& m : monomials_of_degree(gb.num_vars(), t)) {
    bool standard = std::none_of(lms.begin(), lms.end(),
                                 [&](const MultiIndex& l) { return l.divides(m); });
    if (standard) ++count;
  }
  return count;
}

EmptinessResult is_projectively_empty(const IdealBasis& ideal, const GroebnerLimits& limits) {
  if (!ideal.homogeneous()) throw PreconditionError("emptiness test needs homogeneous generators");
  GroebnerBasis gb = buchberger(ideal, limits);
  EmptinessResult r{false, {}, projective_dimension(gb), {}};
  if (gb.is_unit()) {
    r.empty = true;
    r.certificate = "unit ideal";
    return r;
  }
  auto lms = gb.leading_monomials();
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < ideal.num_vars(); ++i) {
    std::optional<MultiIndex> power;
    for (const auto& m : lms) {
      if (m[i] > 0 && m.degree() == m[i] && (!power || m[i] < (*power)[i])) power = m;
    }
    if (power) r.pure_powers.push_back(*power);
    else missing.push_back(i);
  }
  r.empty = missing.empty();
  std::ostringstream os;
  if (r.empty) {
    os << "leading monomials include";
    for (const auto& m : r.pure_powers) os << " " << monomial_string(m);
  } else {
    os << "no pure power of";
    for (auto i : missing) os << " x" << i;
    os << " among leading monomials; V(I) has projective dimension " << r.projective_dimension;
    r.pure_powers.clear();
  }
  r.certificate = os.str();
  return r;
}

BigInt zero_dim_degree(const GroebnerBasis& gb, unsigned degree_bound) {
  for (const auto& g : gb.basis())
    if (!g.is_homogeneous()) throw PreconditionError("degree computation needs a homogeneous ideal");
  int dim = projective_dimension(gb);
  if (dim > 0)
    throw DimensionError("ideal is positive dimensional (projective dimension " +
                         std::to_string(dim) + ")");
  if (dim < 0) return 0;
  unsigned start = degree_bound;
  for (const auto& m : gb.leading_monomials()) start = std::max(start, m.degree());
  BigInt prev = hilbert_function(gb, start);
  for (unsigned t = start + 1; t <= start + 64; ++t) {
    BigInt cur = hilbert_function(gb, t);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw ResourceError("Hilbert function did not stabilize");
}

BigInt zero_dim_degree(const IdealBasis& ideal, const GroebnerLimits& limits) {
  if (!ideal.homogeneous()) throw PreconditionError("degree computation needs homogeneous generators");
  IdealBasis grev(ideal.generators(), MonomialOrder::grevlex(ideal.num_vars()));
  unsigned bound = 1;
  for (const auto& g : ideal.generators()) bound += g.total_degree() - 1;
  return zero_dim_degree(buchberger(grev, limits), bound);
}

IdealBasis eliminate(const IdealBasis& ideal, std::size_t keep_last, const GroebnerLimits& limits) {
  const std::size_t n = ideal.num_vars();
  if (keep_last == 0 || keep_last > n) throw RangeError("keep_last must be in 1..num_vars");
  const std::size_t drop = n - keep_last;
  MonomialOrder order = ideal.order();
  bool usable = order.kind() == OrderKind::lex ||
                (order.kind() == OrderKind::block && order.block_size() == drop) ||
                (drop == 0);
  if (!usable) order = MonomialOrder::block(n, drop);
  GroebnerBasis gb = buchberger(IdealBasis(ideal.generators(), order), limits);
  std::vector<Poly> kept;
  for (const auto& g : gb.basis()) {
    bool inside = std::all_of(g.terms().begin(), g.terms().end(), [&](const Poly::Term& t) {
      for (std::size_t i = 0; i < drop; ++i)
        if (t.exponent[i]) return false;
      return true;
    });
    if (!inside) continue;
    std::vector<Poly::Term> terms;
    for (const auto& t : g.terms()) {
      std::vector<std::uint32_t> e(t.exponent.exponents().begin() + static_cast<std::ptrdiff_t>(drop),
                                   t.exponent.exponents().end());
      terms.push_back({MultiIndex(std::move(e)), t.coeff});
    }
    kept.push_back(Poly::from_terms(keep_last, std::move(terms)));
  }
  if (kept.empty()) throw PreconditionError("elimination ideal is zero");
  return IdealBasis(std::move(kept), MonomialOrder::grevlex(keep_last));
}

}  // namespace polarmaps
