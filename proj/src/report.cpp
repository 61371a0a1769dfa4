#include "polarmaps/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "polarmaps/curves.hpp"
#include "polarmaps/errors.hpp"
#include "polarmaps/geometry.hpp"
#include "polarmaps/parse.hpp"
#include "polarmaps/polar.hpp"

namespace polarmaps {

using nlohmann::json;

namespace {

const std::pair<Command, const char*> kCommandNames[] = {
    {Command::polar, "polar"},
    {Command::euler, "euler"},
    {Command::reciprocity, "reciprocity"},
    {Command::regularity, "regularity"},
    {Command::cone, "cone"},
    {Command::image_degree, "image-degree"},
    {Command::image_dim, "image-dim"},
    {Command::polar_class, "class"},
    {Command::flexes, "flexes"},
    {Command::implicitize, "implicitize"},
    {Command::plot, "plot"},
};

const std::pair<OutputFormat, const char*> kFormatNames[] = {
    {OutputFormat::json, "json"},
    {OutputFormat::text, "text"},
    {OutputFormat::csv, "csv"},
    {OutputFormat::svg, "svg"},
};

std::string format_name(OutputFormat f) {
  for (const auto& [v, name] : kFormatNames)
    if (v == f) return name;
  return "json";
}

std::string str(const BigRat& q) { return to_string(q); }
std::string str(const BigInt& z) { return z.get_str(); }

json point_json(const ProjPoint& p) { return to_string(p); }

json chow_json(const ChowVector& c) {
  json coords = json::array();
  for (const auto& v : c.coords) coords.push_back(str(v));
  json basis = json::array();
  for (const auto& m : monomials_of_degree(c.ambient_dim + 1, c.degree))
    basis.push_back(monomial_string(m));
  return {{"ambient_dim", c.ambient_dim}, {"degree", c.degree}, {"coords", coords},
          {"basis", basis}};
}

json polys_json(const std::vector<Poly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

json emptiness_json(const EmptinessResult& e) {
  json powers = json::array();
  for (const auto& m : e.pure_powers) powers.push_back(monomial_string(m));
  return {{"empty", e.empty},
          {"projective_dimension", e.projective_dimension},
          {"pure_powers", powers},
          {"certificate", e.certificate}};
}

json regularity_json(const RegularityReport& r) {
  return {{"p", r.p},
          {"regular", r.regular},
          {"base_locus_generators", polys_json(r.base_locus_ideal.generators())},
          {"base_locus", emptiness_json(r.certificate)}};
}

struct Context {
  const JobSpec& job;
  std::vector<std::string>& warnings;

  std::size_t vars() const {
    return job.vars ? *job.vars : infer_num_vars(job.polynomial);
  }

  Poly poly() const {
    if (job.polynomial.empty()) throw PreconditionError("command needs a polynomial");
    Poly f = parse_poly(job.polynomial, vars());
    if (!f.degree_check().homogeneous) throw PreconditionError("polynomial is not homogeneous");
    return f;
  }

  unsigned need(const std::optional<unsigned>& v, const char* name) const {
    if (!v) throw PreconditionError(std::string("command needs --") + name);
    return *v;
  }

  std::vector<ProjPoint> points(std::size_t n) const {
    std::vector<ProjPoint> out;
    for (const auto& text : job.points) {
      ProjPoint p = parse_point(text);
      if (p.size() != n)
        throw DimensionError("point " + text + " has " + std::to_string(p.size()) +
                             " coordinates, ring has " + std::to_string(n));
      out.push_back(std::move(p));
    }
    return out;
  }
};

json run_polar(Context& c) {
  Poly f = c.poly();
  unsigned k = c.need(c.job.k, "k");
  auto pts = c.points(f.num_vars());
  if (pts.empty()) throw PreconditionError("polar needs --point");
  json cycles = json::array();
  for (const auto& xi : pts) {
    if (f.evaluate(xi) != 0)
      c.warnings.push_back("point " + to_string(xi) + " is not on the hypersurface");
    PolarCycle cyc = polar_cycle(f, k, xi);
    cycles.push_back({{"point", point_json(xi)},
                      {"form", to_string(cyc.form)},
                      {"chow", chow_json(cyc.chow)}});
  }
  return {{"k", k}, {"cycles", cycles}};
}

json run_euler(Context& c) {
  Poly f = c.poly();
  const unsigned d = f.degree_check().degree;
  std::vector<unsigned> orders;
  if (c.job.s) {
    orders.push_back(*c.job.s);
  } else {
    for (unsigned s = 1; s <= d; ++s) orders.push_back(s);
  }
  json checks = json::array();
  bool all = true;
  for (unsigned s : orders) {
    auto e = euler_identity_check(f, s);
    all = all && e.holds;
    checks.push_back({{"s", s}, {"holds", e.holds}, {"lhs", to_string(e.lhs)},
                      {"rhs", to_string(e.rhs)}});
  }
  return {{"holds", all}, {"checks", checks}};
}

json run_reciprocity(Context& c) {
  Poly f = c.poly();
  const unsigned d = f.degree_check().degree;
  std::vector<unsigned> orders;
  if (c.job.s) {
    orders.push_back(*c.job.s);
  } else {
    for (unsigned s = 1; s + 1 <= d; ++s) orders.push_back(s);
  }
  if (orders.empty()) throw RangeError("reciprocity needs degree >= 2");
  json checks = json::array();
  bool all = true;
  for (unsigned s : orders) {
    auto sides = reciprocity_sides(f, s);
    bool holds = sides.lhs == sides.rhs;
    all = all && holds;
    checks.push_back({{"s", s}, {"holds", holds}, {"terms", sides.lhs.size()}});
  }
  return {{"holds", all},
          {"variables", "x0..x" + std::to_string(f.num_vars() - 1) + " then xi0..xi" +
                            std::to_string(f.num_vars() - 1)},
          {"checks", checks}};
}

json run_regularity(Context& c) {
  Poly f = c.poly();
  json out;
  if (c.job.k) {
    out["reports"] = json::array({regularity_json(polar_regularity(f, *c.job.k, c.job.limits))});
  } else {
    json reports = json::array();
    std::optional<unsigned> first;
    for (const auto& r : regularity_profile(f, c.job.limits)) {
      if (r.regular && !first) first = r.p;
      reports.push_back(regularity_json(r));
    }
    out["reports"] = reports;
    out["first_regular_p"] = first ? json(*first) : json(nullptr);
  }
  return out;
}

json run_cone(Context& c) {
  Poly f = c.poly();
  auto r = is_cone(f);
  json vs = json::array();
  for (const auto& p : r.vertex_space) vs.push_back(point_json(p));
  return {{"is_cone", r.is_cone},
          {"vertex_dimension", static_cast<int>(r.vertex_space.size()) - 1},
          {"vertex_space", vs}};
}

json run_image_degree(Context& c) {
  if (c.job.polynomial.empty()) {
    unsigned d = c.need(c.job.d, "d"), p = c.need(c.job.k, "p"), n = c.need(c.job.n, "n");
    return {{"route", "formula"}, {"d", d}, {"p", p}, {"n", n},
            {"degree", str(image_degree_formula(d, p, n))}};
  }
  Poly f = c.poly();
  unsigned p = c.need(c.job.k, "p");
  auto r = verify_image_degree(f, p, c.job.seed, c.job.limits);
  if (!r.agree) c.warnings.push_back("intersection count differs from d(d-p)^(n-1)");
  return {{"route", "intersection"},
          {"p", p},
          {"degree", str(r.bezout_count)},
          {"formula", str(r.formula)},
          {"agree", r.agree},
          {"attempts", r.attempts},
          {"slice", polys_json(r.slice)}};
}

json run_image_dim(Context& c) {
  Poly f = c.poly();
  unsigned p = c.need(c.job.k, "p");
  auto r = polar_image_dimension(f, p, !c.job.allow_irregular, c.job.limits);
  c.warnings.push_back("irreducibility of F is assumed, not checked");
  if (!r.regular) c.warnings.push_back("polar map is not regular; rational map measured");
  const int dim_x = static_cast<int>(f.num_vars()) - 2;
  return {{"p", p},
          {"dimension", r.dimension},
          {"generic_rank", r.generic_rank},
          {"regular", r.regular},
          {"defective", r.dimension < dim_x}};
}

json run_class(Context& c) {
  PolarClassReport r;
  if (c.job.polynomial.empty()) {
    r = polar_class(c.need(c.job.d, "d"), c.need(c.job.k, "p"));
  } else {
    r = polar_class(c.poly(), c.need(c.job.k, "p"));
  }
  return {{"p", r.p}, {"class_coeff", str(r.class_coeff)},
          {"ratio_to_gauss", str(r.ratio_to_gauss)}};
}

json run_flexes(Context& c) {
  Poly f = c.poly();
  auto r = flexes(f, c.job.seed, c.job.limits);
  json pts = json::array();
  for (const auto& p : r.rational_flexes) pts.push_back(point_json(p));
  json a = json::array();
  for (const auto& row : r.coordinate_change) {
    json jr = json::array();
    for (const auto& v : row) jr.push_back(str(v));
    a.push_back(jr);
  }
  return {{"d", r.d},
          {"count", str(r.count_with_multiplicity)},
          {"formula", std::to_string(3 * r.d * (r.d - 2))},
          {"distinct_fibers", r.squarefree_degree},
          {"rational_flexes", pts},
          {"coordinate_change", a},
          {"attempts", r.attempts}};
}

json run_implicitize(Context& c) {
  Poly f = c.poly();
  unsigned p = c.need(c.job.k, "p");
  IdealBasis ideal = polar_image_ideal(f, p, c.job.limits);
  json degrees = json::array();
  for (const auto& g : ideal.generators()) degrees.push_back(g.total_degree());
  json basis = json::array();
  for (const auto& m : monomials_of_degree(f.num_vars(), p)) basis.push_back(monomial_string(m));
  return {{"p", p},
          {"chow_variables", ideal.num_vars()},
          {"chow_basis", basis},
          {"generators", polys_json(ideal.generators())},
          {"degrees", degrees}};
}

PlotWindow parse_window(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw ParseError("bad window value '" + part + "'", 0);
    }
  }
  if (v.size() != 4 || !(v[0] < v[1]) || !(v[2] < v[3]))
    throw PreconditionError("window must be xmin,xmax,ymin,ymax with xmin<xmax, ymin<ymax");
  return {v[0], v[1], v[2], v[3]};
}

json run_plot(Context& c, std::optional<std::string>& artifact) {
  Poly f = c.poly();
  auto pts = c.points(f.num_vars());
  std::optional<PlotWindow> window;
  if (c.job.window) window = parse_window(*c.job.window);
  PlotData plot = emit_plot(f, pts, c.job.resolution, c.job.chart, window);
  if (c.job.output == OutputFormat::csv) artifact = to_csv(plot);
  if (c.job.output == OutputFormat::svg) artifact = to_svg(plot);
  json objects = json::array();
  for (const auto& o : plot.objects)
    objects.push_back({{"object_id", o.object_id}, {"label", o.label},
                       {"segments", o.segments.size()}});
  c.warnings.push_back("contour coordinates are grid approximations");
  return {{"chart", "x" + std::to_string(plot.chart) + "=1"},
          {"resolution", plot.resolution},
          {"objects", objects}};
}

json dispatch(Context& c, std::optional<std::string>& artifact) {
  switch (c.job.command) {
    case Command::polar: return run_polar(c);
    case Command::euler: return run_euler(c);
    case Command::reciprocity: return run_reciprocity(c);
    case Command::regularity: return run_regularity(c);
    case Command::cone: return run_cone(c);
    case Command::image_degree: return run_image_degree(c);
    case Command::image_dim: return run_image_dim(c);
    case Command::polar_class: return run_class(c);
    case Command::flexes: return run_flexes(c);
    case Command::implicitize: return run_implicitize(c);
    case Command::plot: return run_plot(c, artifact);
  }
  throw std::logic_error("unhandled command");
}

template <class T>
std::optional<T> opt(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

}  // namespace

std::string command_name(Command c) {
  for (const auto& [v, name] : kCommandNames)
    if (v == c) return name;
  throw std::logic_error("unnamed command");
}

Command parse_command(const std::string& name) {
  for (const auto& [v, n] : kCommandNames)
    if (name == n) return v;
  throw PreconditionError("unknown command '" + name + "'");
}

OutputFormat parse_output_format(const std::string& name) {
  for (const auto& [v, n] : kFormatNames)
    if (name == n) return v;
  throw PreconditionError("unknown output format '" + name + "'");
}

JobSpec job_from_json(const json& j) {
  if (!j.is_object()) throw PreconditionError("job must be a JSON object");
  JobSpec job;
  try {
    job.command = parse_command(j.at("command").get<std::string>());
    job.polynomial = j.value("polynomial", std::string());
    job.vars = opt<std::size_t>(j, "vars");
    job.k = opt<unsigned>(j, "k");
    if (!job.k) job.k = opt<unsigned>(j, "p");
    job.s = opt<unsigned>(j, "s");
    job.d = opt<unsigned>(j, "d");
    job.n = opt<unsigned>(j, "n");
    if (auto it = j.find("points"); it != j.end()) job.points = it->get<std::vector<std::string>>();
    if (auto it = j.find("point"); it != j.end()) job.points.push_back(it->get<std::string>());
    job.seed = j.value("seed", kDefaultSeed);
    job.resolution = j.value("resolution", job.resolution);
    job.chart = j.value("chart", job.chart);
    job.window = opt<std::string>(j, "window");
    job.allow_irregular = j.value("allow_irregular", false);
    job.timing = j.value("timing", false);
    job.output = parse_output_format(j.value("output", std::string("json")));
    if (auto it = j.find("limits"); it != j.end()) {
      job.limits.max_steps = it->value("max_steps", job.limits.max_steps);
      job.limits.max_basis = it->value("max_basis", job.limits.max_basis);
    }
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("invalid job: ") + e.what());
  }
  return job;
}

json to_json(const JobSpec& job) {
  json j;
  j["command"] = command_name(job.command);
  if (!job.polynomial.empty()) j["polynomial"] = job.polynomial;
  if (job.vars) j["vars"] = *job.vars;
  if (job.k) j["k"] = *job.k;
  if (job.s) j["s"] = *job.s;
  if (job.d) j["d"] = *job.d;
  if (job.n) j["n"] = *job.n;
  if (!job.points.empty()) j["points"] = job.points;
  j["seed"] = job.seed;
  if (job.command == Command::plot) {
    j["resolution"] = job.resolution;
    j["chart"] = job.chart;
    if (job.window) j["window"] = *job.window;
  }
  if (job.allow_irregular) j["allow_irregular"] = true;
  if (job.timing) j["timing"] = true;
  j["output"] = format_name(job.output);
  j["limits"] = {{"max_steps", job.limits.max_steps}, {"max_basis", job.limits.max_basis}};
  return j;
}

json Report::to_json() const {
  json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["result"] = result;
  j["warnings"] = warnings;
  if (timing_us) j["timing_us"] = *timing_us;
  return j;
}

Report Report::from_json(const json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.command = j.at("command");
  r.result = j.at("result");
  r.warnings = j.value("warnings", std::vector<std::string>{});
  r.timing_us = opt<std::int64_t>(j, "timing_us");
  return r;
}

Report run(const JobSpec& job) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.command = to_json(job);
  Context ctx{job, report.warnings};
  report.result = dispatch(ctx, report.artifact);
  if (job.timing) {
    report.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  }
  return report;
}

int exit_status(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const RangeError*>(&e) ||
      dynamic_cast<const DimensionError*>(&e))
    return 3;
  if (dynamic_cast<const ResourceError*>(&e)) return 4;
  if (dynamic_cast<const DegenerateError*>(&e)) return 5;
  return 6;
}

std::string error_class(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const UndefinedMapError*>(&e)) return "undefined_map";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const RangeError*>(&e)) return "range";
  if (dynamic_cast<const DimensionError*>(&e)) return "dimension";
  if (dynamic_cast<const ResourceError*>(&e)) return "resource";
  if (dynamic_cast<const DegenerateError*>(&e)) return "degenerate";
  return "internal";
}

json error_json(const json& command, const std::exception& e) {
  json err = {{"class", error_class(e)}, {"message", e.what()}, {"exit_status", exit_status(e)}};
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) err["offset"] = pe->offset();
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"error", err}};
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "command: " << report.command.value("command", std::string()) << '\n';
  for (const auto& [key, value] : report.result.items())
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  for (const auto& w : report.warnings) os << "warning: " << w << '\n';
  if (report.timing_us) os << "timing_us: " << *report.timing_us << '\n';
  return os.str();
}

int run_batch(std::istream& in, std::ostream& out, unsigned threads) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);

  std::vector<std::string> outputs(lines.size());
  std::vector<int> status(lines.size(), 0);
  auto work = [&](std::size_t i) {
    json command = nullptr;
    try {
      json parsed;
      try {
        parsed = json::parse(lines[i]);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON job: ") + e.what(), e.byte);
      }
      command = parsed;
      outputs[i] = run(job_from_json(parsed)).to_json().dump();
    } catch (const std::exception& e) {
      outputs[i] = error_json(command, e).dump();
      status[i] = exit_status(e);
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(lines.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < lines.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < lines.size();) work(i);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& o : outputs) out << o << '\n';
  return status.empty() ? 0 : *std::max_element(status.begin(), status.end());
}

}  // namespace polarmaps
