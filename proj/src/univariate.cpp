#include "polarmaps/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace polarmaps::univariate {

UPoly trim(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const UPoly& p) { return static_cast<int>(trim(p).size()) - 1; }

BigRat evaluate(const UPoly& p, const BigRat& t) {
  BigRat v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * BigRat(static_cast<unsigned long>(i)));
  return trim(std::move(d));
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  UPoly r = trim(a);
  UPoly d = trim(b);
  if (d.empty()) throw std::domain_error("univariate division by zero");
  if (r.size() < d.size()) return {{}, r};
  UPoly q(r.size() - d.size() + 1, 0);
  const BigRat& lead = d.back();
  while (!r.empty() && r.size() >= d.size()) {
    std::size_t shift = r.size() - d.size();
    BigRat c = r.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    r = trim(std::move(r));
  }
  return {trim(std::move(q)), std::move(r)};
}

UPoly gcd(UPoly a, UPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    UPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    BigRat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

UPoly squarefree_part(const UPoly& p) {
  UPoly q = trim(p);
  if (q.size() <= 1) return q;
  UPoly g = gcd(q, derivative(q));
  return divmod(q, g).quotient;
}

namespace {

// Coprime integer coefficients; same roots.
UPoly primitive(UPoly p) {
  BigInt den = 1, content = 0;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (auto& c : p) {
    c *= den;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
  }
  for (auto& c : p) c /= content;
  return p;
}

int sign(const BigRat& v) { return sgn(v); }

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(primitive(std::move(r)));
  }
  return seq;
}

int sign_changes(const std::vector<UPoly>& seq, const BigRat& t) {
  int changes = 0, last = 0;
  for (const auto& s : seq) {
    int v = sign(evaluate(s, t));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace

std::vector<BigRat> rational_roots(const UPoly& input) {
  std::vector<BigRat> roots;
  UPoly p = primitive(squarefree_part(input));
  while (degree(p) >= 1) {
    if (p[0] == 0) {
      roots.push_back(0);
      p = primitive(divmod(p, UPoly{0, 1}).quotient);
      continue;
    }
    // Every rational root of an integer polynomial has the form k / |lc|.
    BigRat lc_abs = abs(p.back());
    BigRat bound = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, BigRat(abs(p[i]) / lc_abs));
    bound += 1;
    auto seq = sturm_sequence(p);

    bool deflated = false;
    std::vector<std::pair<BigRat, BigRat>> stack{{-bound, bound}};
    while (!stack.empty() && !deflated) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      int count = sign_changes(seq, lo) - sign_changes(seq, hi);
      if (count == 0) continue;
      if (count == 1 && (hi - lo) * lc_abs < 1) {
        BigRat scaled = hi * lc_abs;
        BigInt k;
        mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        BigRat cand(k, lc_abs.get_num());
        cand.canonicalize();
        if (cand > lo && evaluate(p, cand) == 0) roots.push_back(cand);
        continue;
      }
      BigRat mid = (lo + hi) / 2;
      if (evaluate(p, mid) == 0) {
        roots.push_back(mid);
        p = primitive(divmod(p, UPoly{-mid, 1}).quotient);
        deflated = true;
        break;
      }
      stack.push_back({mid, hi});
      stack.push_back({lo, mid});
    }
    if (!deflated) break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace polarmaps::univariate
