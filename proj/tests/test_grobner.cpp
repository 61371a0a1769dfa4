#include "doctest.h"
#include "polarmaps/errors.hpp"
#include "polarmaps/grobner.hpp"
#include "support.hpp"

using namespace polarmaps;
using testing::P;

namespace {

IdealBasis ideal(std::vector<const char*> gens, std::size_t vars,
                 MonomialOrder order = MonomialOrder::grevlex(0)) {
  std::vector<Poly> ps;
  for (auto g : gens) ps.push_back(P(g, vars));
  if (order.num_vars() == 0) order = MonomialOrder::grevlex(vars);
  return IdealBasis(std::move(ps), order);
}

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const auto& lf = ord.leading(f);
  const auto& lg = ord.leading(g);
  MultiIndex l = lf.exponent.lcm(lg.exponent);
  return f.shifted(l - lf.exponent, 1 / lf.coeff) - g.shifted(l - lg.exponent, 1 / lg.coeff);
}

void check_groebner_properties(const IdealBasis& in, const GroebnerBasis& gb) {
  for (const auto& g : in.generators()) CHECK(normal_form(g, gb).is_zero());
  const auto& b = gb.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(gb.order().leading(b[i]).coeff == 1);
    for (std::size_t j = i + 1; j < b.size(); ++j)
      CHECK(normal_form(spoly(b[i], b[j], gb.order()), gb).is_zero());
    // Reduced: no term of b[i] is divisible by another leading monomial.
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      const auto& lj = gb.order().leading(b[j]).exponent;
      for (const auto& t : b[i].terms()) CHECK_FALSE(lj.divides(t.exponent));
    }
  }
  GroebnerBasis again = buchberger(IdealBasis(gb.basis(), gb.order()));
  CHECK(again.basis() == gb.basis());
}

}  // namespace

TEST_CASE("monomial orders are multiplicative with 1 minimal") {
  std::mt19937_64 rng(2);
  const std::vector<MonomialOrder> orders{MonomialOrder::grevlex(4), MonomialOrder::lex(4),
                                          MonomialOrder::block(4, 2)};
  for (const auto& ord : orders) {
    for (int i = 0; i < 200; ++i) {
      MultiIndex a(4), b(4), c(4);
      for (std::size_t v = 0; v < 4; ++v) {
        a[v] = testing::lrand(rng, 0, 3);
        b[v] = testing::lrand(rng, 0, 3);
        c[v] = testing::lrand(rng, 0, 3);
      }
      CHECK(ord.compare(a, b) == -ord.compare(b, a));
      CHECK(ord.compare(a + c, b + c) == ord.compare(a, b));
      if (a != MultiIndex(4)) CHECK(ord.greater(a, MultiIndex(4)));
    }
  }
  // Block order eliminates the first block.
  auto blk = MonomialOrder::block(3, 1);
  CHECK(blk.greater(MultiIndex{1, 0, 0}, MultiIndex{0, 5, 5}));
}

TEST_CASE("normal_form examples") {
  auto x0 = buchberger(ideal({"x0"}, 2));
  CHECK(normal_form(P("x0^2", 2), x0).is_zero());
  CHECK(normal_form(P("x1", 2), x0) == P("x1", 2));
  auto lin = buchberger(ideal({"x0 - x1"}, 2));
  CHECK(normal_form(P("x0*x1 + x1^2", 2), lin) == P("2*x1^2", 2));
}

TEST_CASE("buchberger examples") {
  CHECK(buchberger(ideal({"x0", "x1"}, 2)).basis() == std::vector<Poly>{P("x1", 2), P("x0", 2)});
  auto gb = buchberger(ideal({"x0^2 + x1^2", "x0*x1"}, 2));
  CHECK(gb.basis() == std::vector<Poly>{P("x0*x1", 2), P("x0^2 + x1^2", 2), P("x1^3", 2)});
  auto lin = buchberger(ideal({"x0 - x1", "x1 - x2"}, 3));
  CHECK(lin.basis() == std::vector<Poly>{P("x1 - x2", 3), P("x0 - x2", 3)});
  CHECK(buchberger(ideal({"x0 + 1", "x0"}, 1)).is_unit());
  CHECK_THROWS_AS(IdealBasis({}, MonomialOrder::grevlex(2)), PreconditionError);
  CHECK_THROWS_AS(IdealBasis({Poly(2)}, MonomialOrder::grevlex(2)), PreconditionError);
}

TEST_CASE("buchberger properties on random ideals") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t vars = 2 + trial % 3;
    std::vector<Poly> gens;
    for (int g = 0; g < 2 + trial % 2; ++g) gens.push_back(testing::random_form(rng, vars, 1 + (trial + g) % 3, 0.5));
    MonomialOrder ord = trial % 3 == 0   ? MonomialOrder::lex(vars)
                        : trial % 3 == 1 ? MonomialOrder::grevlex(vars)
                                         : MonomialOrder::block(vars, 1);
    IdealBasis in(gens, ord);
    auto gb = buchberger(in);
    check_groebner_properties(in, gb);
    // Determinism: same input, same output.
    CHECK(buchberger(in).basis() == gb.basis());
  }
}

TEST_CASE("resource limits") {
  GroebnerLimits tight{1, 20000};
  auto in = ideal({"x0^3 - x1*x2^2", "x1^3 - x0*x2^2", "x0*x1*x2 - x2^3"}, 3);
  CHECK_THROWS_AS(buchberger(in, tight), ResourceError);
  try {
    buchberger(in, tight);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("step") != std::string::npos);
  }
}

TEST_CASE("projective emptiness") {
  auto irr = is_projectively_empty(ideal({"x0", "x1", "x2"}, 3));
  CHECK(irr.empty);
  CHECK(irr.pure_powers.size() == 3);
  CHECK_FALSE(is_projectively_empty(ideal({"x0^2 - x1*x2"}, 3)).empty);
  auto pp = is_projectively_empty(ideal({"x0^2 + x1^2", "x0*x1"}, 2));
  CHECK(pp.empty);
  CHECK(pp.pure_powers == std::vector<MultiIndex>{MultiIndex{2, 0}, MultiIndex{0, 3}});
  CHECK_THROWS_AS(is_projectively_empty(ideal({"x0^2 + x1"}, 2)), PreconditionError);
}

TEST_CASE("zero_dim_degree examples") {
  CHECK(zero_dim_degree(ideal({"x0", "x1^2"}, 3)) == 2);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i) {
    BigRat a = testing::random_rational(rng, -9, 9), b = testing::random_rational(rng, -9, 9),
           c = testing::random_rational(rng, -9, 9);
    if (a == 0 && b == 0 && c == 0) continue;
    Poly line = P("x1", 3) * a + P("x0", 3) * b + P("x2", 3) * (-2 * c);
    CHECK(zero_dim_degree(IdealBasis({P("x0*x1 - x2^2", 3), line}, MonomialOrder::grevlex(3))) == 2);
  }
  // Projectively empty: the stabilized Hilbert function is 0.
  CHECK(zero_dim_degree(ideal({"x0^2 - x1^2", "x0^2 + x1^2"}, 2)) == 0);
  CHECK_THROWS_AS(zero_dim_degree(ideal({"x0*x1 - x2^2"}, 3)), DimensionError);
}

TEST_CASE("Hilbert function matches the Macaulay-matrix oracle") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t vars = 3 + trial % 2;
    std::vector<Poly> gens;
    for (std::size_t g = 0; g + 1 < vars; ++g) gens.push_back(testing::random_form(rng, vars, 1 + (trial + g) % 3));
    auto gb = buchberger(IdealBasis(gens, MonomialOrder::grevlex(vars)));
    for (unsigned t = 0; t <= 6; ++t) CHECK(hilbert_function(gb, t) == testing::macaulay_hilbert(gens, vars, t));
  }
}

TEST_CASE("Bezout: a curve cut by a generic line") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    unsigned d = 1 + trial % 5;
    Poly curve = testing::random_form(rng, 3, d, 0.8);
    Poly line = testing::random_form(rng, 3, 1, 1.0);
    IdealBasis in({curve, line}, MonomialOrder::grevlex(3));
    auto gb = buchberger(in);
    if (projective_dimension(gb) != 0) continue;
    BigInt deg = zero_dim_degree(in);
    CHECK(deg == d);
    CHECK(deg == testing::macaulay_hilbert(in.generators(), 3, 3 * d + 2));
  }
}

TEST_CASE("projective dimension") {
  CHECK(projective_dimension(buchberger(ideal({"x0"}, 4))) == 2);
  CHECK(projective_dimension(buchberger(ideal({"x0", "x1"}, 4))) == 1);
  CHECK(projective_dimension(buchberger(ideal({"x0", "x1", "x2", "x3"}, 4))) == -1);
}

TEST_CASE("elimination") {
  // Variables t, y1, y2.
  auto par = eliminate(ideal({"x1 - x0^2", "x2 - x0"}, 3), 2);
  REQUIRE(par.generators().size() == 1);
  CHECK(proportional(par.generators()[0], P("x0 - x1^2", 2)));

  // xi0, xi1, xi2, y0, y1, y2.
  auto dual = eliminate(ideal({"x3 - x1", "x4 - x0", "x5 + 2*x2", "x0*x1 - x2^2"}, 6), 3);
  REQUIRE(dual.generators().size() == 1);
  CHECK(proportional(dual.generators()[0], P("4*x0*x1 - x2^2", 3)));

  auto in = ideal({"x0^2 + x1^2", "x0*x1"}, 2);
  auto all = eliminate(in, 2);
  CHECK(all.generators() == buchberger(in).basis());
  CHECK_THROWS_AS(eliminate(in, 0), RangeError);
  CHECK_THROWS_AS(eliminate(in, 3), RangeError);
}

TEST_CASE("limits from the environment") {
  setenv("POLARMAPS_MAX_STEPS", "123", 1);
  setenv("POLARMAPS_MAX_BASIS", "45", 1);
  auto l = GroebnerLimits::from_env();
  CHECK(l.max_steps == 123);
  CHECK(l.max_basis == 45);
  unsetenv("POLARMAPS_MAX_STEPS");
  unsetenv("POLARMAPS_MAX_BASIS");
  CHECK(GroebnerLimits::from_env().max_steps == GroebnerLimits{}.max_steps);
}
