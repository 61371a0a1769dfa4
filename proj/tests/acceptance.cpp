// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "polarmaps/curves.hpp"
#include "polarmaps/errors.hpp"
#include "polarmaps/geometry.hpp"
#include "polarmaps/polar.hpp"
#include "polarmaps/report.hpp"
#include "support.hpp"

using namespace polarmaps;
using testing::P;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Check {
  Outcome& out;
  void operator()(bool cond, const std::string& what) {
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = what;
    }
  }
};

const char* kNodal = "x2*x1^2 - x0^3 - x0^2*x2";
const char* kQuartic = "x1^2*x2^2 - 4*x0*x2^3 - 4*x1^3*x3 - 27*x0^2*x3^2 + 18*x0*x1*x2*x3";

// 200 forms with 2..5 variables and degree 1..6, fixed seed.
std::vector<Poly> identity_corpus() {
  std::mt19937_64 rng(20100401);
  std::vector<Poly> out;
  for (int i = 0; i < 200; ++i) {
    std::size_t vars = 2 + i % 4;
    unsigned d = 1 + (i / 4) % 6;
    out.push_back(testing::random_form(rng, vars, d, 0.8, i % 3 == 0));
  }
  return out;
}

struct CorpusEntry {
  const char* text;
  std::size_t vars;
  bool smooth;
};

// Plane curves and surfaces of degree <= 5.
const std::vector<CorpusEntry> kCorpus = {
    {"x0^2 + x1^2 + x2^2", 3, true},
    {"x0*x1 - x2^2", 3, true},
    {"x0^3 + x1^3 + x2^3", 3, true},
    {"x0^3 + x1^3 + x2^3 + 2*x0*x1*x2", 3, true},
    {"x0^4 + x1^4 + x2^4", 3, true},
    {"x0^3*x1 + x1^3*x2 + x2^3*x0", 3, true},
    {"x0^5 + x1^5 + x2^5", 3, true},
    {"x1^2*x2 - x0^3 - x0*x2^2 - x2^3", 3, true},
    {"x2*x1^2 - x0^3 - x0^2*x2", 3, false},
    {"x0*x1*x2 + x0^3 + x1^3", 3, false},
    {"x2*x1^2 - x0^3", 3, false},
    {"x1^2*x2^2 - x0^4 - x0^3*x2", 3, false},
    {"x0^2*x2^2 + x1^2*x2^2 - x0^4", 3, false},
    {"x0*x1*x2", 3, false},
    {"x0^3", 3, false},
    {"(x0*x1 - x2^2)^2", 3, false},
    {"x0^2 + x1^2", 3, false},
    {"x0^3 + x1^3", 3, false},
    {"x0^2 + x1^2 + x2^2 + x3^2", 4, true},
    {"x0*x1 - x2*x3", 4, true},
    {"x0^3 + x1^3 + x2^3 + x3^3", 4, true},
    {"x0^4 + x1^4 + x2^4 + x3^4", 4, true},
    {"x0^3 + x1^3 + x2^3 + x3^3 - 2*x0*x1*x2", 4, true},
    {"x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3", 4, false},
    {kQuartic, 4, false},
    {"x0^3 + x1^3 + x2^3", 4, false},
    {"x0^2 + x1^2 + x2^2", 4, false},
    {"x3*x1^2 - x0^3 - x0^2*x3 + x2^3", 4, false},
    {"x0^4 + x1^4 + x0*x1*x2^2", 4, false},
    {"x0^5 + x1^5 + x2^5 + x3^5", 4, true},
};

Outcome euler_suite() {
  Outcome o;
  Check check{o};
  std::size_t identities = 0;
  for (const auto& f : identity_corpus()) {
    unsigned d = f.total_degree();
    for (unsigned s = 1; s <= d; ++s) {
      check(euler_identity_check(f, s).holds, "identity fails for " + to_string(f));
      ++identities;
    }
  }
  o.detail = o.ok ? std::to_string(identities) + " identities" : o.detail;
  return o;
}

Outcome reciprocity_suite() {
  Outcome o;
  Check check{o};
  std::mt19937_64 rng(7);
  auto corpus = identity_corpus();
  // Brute-force cross-check of the identity itself for d <= 4.
  std::size_t brute = 0;
  for (const auto& f : corpus) {
    unsigned d = f.total_degree();
    if (d > 4 || d < 2) continue;
    for (unsigned s = 1; s < d; ++s) {
      ProjPoint x = testing::random_point(rng, f.num_vars()), xi = testing::random_point(rng, f.num_vars());
      BigRat lhs = factorial(d - s) * testing::taylor_polar(f, xi, s).evaluate(x);
      BigRat rhs = factorial(s) * testing::taylor_polar(f, x, d - s).evaluate(xi);
      check(lhs == rhs, "brute-force expansion disagrees for " + to_string(f));
      ++brute;
    }
  }
  std::size_t identities = 0;
  for (const auto& f : corpus) {
    unsigned d = f.total_degree();
    for (unsigned s = 1; s < d; ++s) {
      check(reciprocity_check(f, s), "reciprocity fails for " + to_string(f));
      ++identities;
    }
  }
  if (o.ok) o.detail = std::to_string(identities) + " symbolic identities, " + std::to_string(brute) + " brute-force";
  return o;
}

Outcome nodal_cubic() {
  Outcome o;
  Check check{o};
  Poly f = P(kNodal, 3);
  std::mt19937_64 rng(3);
  int tested = 0;
  while (tested < 20) {
    ProjPoint xi = testing::random_point(rng, 3);
    Poly printed = P("x0^2", 3) * (-(3 * xi[0] + xi[2])) + P("x0*x2", 3) * (-2 * xi[0]) +
                   P("x1^2", 3) * xi[2] + P("x1*x2", 3) * (2 * xi[1]);
    if (printed.is_zero()) continue;
    check(proportional(polar_cycle(f, 2, xi).form, printed), "conic mismatch at " + to_string(xi));
    ++tested;
  }
  check(proportional(polar_cycle(f, 2, ProjPoint{0, 0, 1}).form, P("(x1 - x0)*(x1 + x0)", 3)),
        "node conic is not the tangent pair");
  auto profile = regularity_profile(f);
  check(profile.size() == 2 && !profile[0].regular && profile[1].regular, "profile is not [irregular, regular]");
  if (o.ok) o.detail = "20 random points, node, profile [irregular, regular]";
  return o;
}

Outcome cascade() {
  Outcome o;
  Check check{o};
  std::size_t maps = 0;
  for (const auto& e : kCorpus) {
    Poly f = P(e.text, e.vars);
    std::vector<RegularityReport> reports;
    try {
      reports = regularity_profile(f);
    } catch (const std::logic_error& err) {
      check(false, err.what());
      continue;
    }
    bool seen = false;
    for (const auto& r : reports) {
      check(!seen || r.regular, std::string("cascade broken for ") + e.text);
      seen = seen || r.regular;
      ++maps;
    }
    check(reports[0].regular == e.smooth, std::string("smoothness mismatch for ") + e.text);
  }
  if (o.ok) o.detail = std::to_string(kCorpus.size()) + " hypersurfaces, " + std::to_string(maps) + " polar maps";
  return o;
}

Outcome cones() {
  Outcome o;
  Check check{o};
  std::mt19937_64 rng(11);
  std::size_t cones_checked = 0, points = 0;

  auto linearity = [&](const Poly& f) {
    RatMatrix m = polar_linear_matrix(f);
    unsigned d = f.total_degree();
    for (int i = 0; i < 50; ++i) {
      ProjPoint xi = testing::random_point(rng, f.num_vars());
      std::vector<BigRat> v(xi.coords().begin(), xi.coords().end());
      check(multiply(m, v) == polar_cycle_coordinates(f, d - 1, xi), "M xi mismatch for " + to_string(f));
      ++points;
    }
  };

  for (int trial = 0; trial < 12; ++trial) {
    std::size_t total = 3 + trial % 3;          // 3..5 variables
    std::size_t used = 2 + trial % (total - 1);  // 2..total-1 used
    if (used >= total) used = total - 1;
    unsigned d = 2 + trial % 3;
    Poly base;
    do {
      base = testing::random_form(rng, used, d, 1.0);
    } while (is_cone(base).is_cone);
    Poly f = base.embed(total);
    const int expected = static_cast<int>(total - used) - 1;
    auto check_cone = [&](const Poly& g, const char* kind) {
      auto c = is_cone(g);
      check(c.is_cone, std::string(kind) + " cone not detected: " + to_string(g));
      check(static_cast<int>(c.vertex_space.size()) - 1 == expected,
            std::string(kind) + " vertex dimension wrong: " + to_string(g));
      for (const auto& v : c.vertex_space) check(g.evaluate(v) == 0, "vertex off the cone");
      ++cones_checked;
    };
    check_cone(f, "constructed");
    auto c = is_cone(f);
    for (std::size_t missing = used; missing < total; ++missing) {
      // Every missing coordinate direction lies in the vertex space.
      RatMatrix span;
      for (const auto& v : c.vertex_space) span.emplace_back(v.coords().begin(), v.coords().end());
      std::size_t r = rank(span);
      std::vector<BigRat> e(total, 0);
      e[missing] = 1;
      span.push_back(e);
      check(rank(span) == r, "missing direction not in vertex space");
    }
    RatMatrix a;
    do {
      a.assign(total, std::vector<BigRat>(total));
      for (auto& row : a)
        for (auto& x : row) x = testing::lrand(rng, -3, 3);
    } while (determinant(a) == 0);
    Poly disguised = f.substitute_linear(a);
    check_cone(disguised, "disguised");
    linearity(disguised);
  }
  std::size_t smooth = 0;
  for (const auto& e : kCorpus) {
    if (!e.smooth) continue;
    Poly f = P(e.text, e.vars);
    check(!is_cone(f).is_cone, std::string("smooth member reported as cone: ") + e.text);
    linearity(f);
    ++smooth;
  }
  if (o.ok)
    o.detail = std::to_string(cones_checked) + " cones, " + std::to_string(smooth) + " smooth rejected, " +
               std::to_string(points) + " linearity points";
  return o;
}

Outcome image_degrees() {
  Outcome o;
  Check check{o};
  struct Case {
    const char* text;
    std::size_t vars;
    unsigned p;
    long expected;
  };
  std::ostringstream got;
  for (const Case& c : {Case{"x0*x1 - x2^2", 3, 1, 2}, Case{"x0^3 + x1^3 + x2^3", 3, 1, 6},
                        Case{"x0^3 + x1^3 + x2^3", 3, 2, 3}, Case{kQuartic, 4, 2, 16}}) {
    Poly f = P(c.text, c.vars);
    auto r = verify_image_degree(f, c.p, kDefaultSeed);
    unsigned d = f.total_degree();
    check(r.bezout_count == c.expected, std::string("wrong count for ") + c.text);
    check(image_degree_formula(d, c.p, c.vars - 1) == c.expected, "formula disagrees");
    check(r.agree, "agree flag false");
    got << r.bezout_count.get_str() << ' ';
  }
  if (o.ok) o.detail = "counts " + got.str() + "match d(d-p)^(n-1)";
  return o;
}

Outcome dual_conic() {
  Outcome o;
  Check check{o};
  auto ideal = polar_image_ideal(P("x0*x1 - x2^2", 3), 1);
  check(ideal.generators().size() == 1, "elimination ideal is not principal");
  if (o.ok) {
    const Poly& g = ideal.generators()[0];
    check(g.total_degree() == 2, "image is not a conic");
    check(proportional(g, P("4*x0*x1 - x2^2", 3)), "conic is " + to_string(g));
    if (o.ok) o.detail = to_string(g);
  }
  return o;
}

Outcome flex_counts() {
  Outcome o;
  Check check{o};
  Poly cubic = P("x0^3 + x1^3 + x2^3", 3);
  auto r3 = flexes(cubic, kDefaultSeed);
  check(r3.count_with_multiplicity == 9, "Fermat cubic count " + r3.count_with_multiplicity.get_str());
  Poly axes = P("x0*x1*x2", 3), hess = hessian_det(cubic);
  check(!r3.rational_flexes.empty(), "no rational flexes found");
  for (const auto& p : r3.rational_flexes) {
    check(axes.evaluate(p) == 0, "rational flex off x0x1x2 = 0: " + to_string(p));
    check(cubic.evaluate(p) == 0 && hess.evaluate(p) == 0, "reported flex is not a flex");
  }
  auto r4 = flexes(P("x0^4 + x1^4 + x2^4", 3), kDefaultSeed);
  check(r4.count_with_multiplicity == 24, "Fermat quartic count " + r4.count_with_multiplicity.get_str());
  check(r3.count_with_multiplicity == 3 * 3 * 1 && r4.count_with_multiplicity == 3 * 4 * 2, "not 3d(d-2)");
  if (o.ok) o.detail = "9 and 24; " + std::to_string(r3.rational_flexes.size()) + " rational flexes on x0x1x2=0";
  return o;
}

Outcome quartic_dimension() {
  Outcome o;
  Check check{o};
  auto r = polar_image_dimension(P(kQuartic, 4), 2);
  check(r.dimension == 2, "dimension " + std::to_string(r.dimension));
  if (o.ok) o.detail = "dimension 2 (rank " + std::to_string(r.generic_rank) + ")";
  return o;
}

Outcome determinism() {
  Outcome o;
  Check check{o};
  std::vector<std::string> lines = {
      R"({"command":"image-degree","polynomial":"x0^3 + x1^3 + x2^3","p":1})",
      R"({"command":"image-degree","polynomial":"x0^3 + x1^3 + x2^3","p":2,"seed":5})",
      R"({"command":"image-degree","polynomial":"x0*x1 - x2^2","p":1,"seed":17})",
      std::string(R"({"command":"image-degree","p":2,"polynomial":")") + kQuartic + "\"}",
      R"({"command":"flexes","polynomial":"x0^3 + x1^3 + x2^3"})",
      R"({"command":"flexes","polynomial":"x0^4 + x1^4 + x2^4","seed":3})",
      R"({"command":"flexes","polynomial":"x0^3 + x1^3 + x2^3 + x0*x1*x2","seed":123456789})",
  };
  std::string batch;
  for (const auto& l : lines) batch += l + "\n";
  std::string first;
  for (int rep = 0; rep < 3; ++rep) {
    for (unsigned threads : {1u, 4u}) {
      std::istringstream in(batch);
      std::ostringstream out;
      run_batch(in, out, threads);
      if (first.empty()) first = out.str();
      check(out.str() == first, "batch output differs between runs");
    }
  }
  for (const auto& l : lines) {
    JobSpec j = job_from_json(nlohmann::json::parse(l));
    check(run(j).to_json().dump() == run(j).to_json().dump(), "repeat differs: " + l);
  }
  check(first.find("\"error\"") == std::string::npos, "a seeded job failed");
  if (o.ok) o.detail = std::to_string(lines.size()) + " seeded jobs, 6 batch runs byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "generalized Euler identities", 60, euler_suite},
      {2, "reciprocity identities", 120, reciprocity_suite},
      {3, "nodal cubic conics and profile", 5, nodal_cubic},
      {4, "regularity cascade corpus", 300, cascade},
      {5, "cone detection and linearity", 30, cones},
      {6, "image degrees", 300, image_degrees},
      {7, "dual conic implicitization", 5, dual_conic},
      {8, "flex counts", 60, flex_counts},
      {9, "discriminant surface dimension", 120, quartic_dimension},
      {10, "determinism of seeded commands", 10, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_s) {
      o.ok = false;
      o.detail += " (over budget)";
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d %s: %s [%.2f s / %.0f s]\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
