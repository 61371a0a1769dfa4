// polarmaps: command-line front end.
//
//   polarmaps polar --poly "x2*x1^2 - x0^3 - x0^2*x2" --k 2 --point 0,0,1
//   polarmaps image-degree --d 4 --p 2 --n 3
//   polarmaps --jobs corpus.jsonl --threads 4
//
// Exit status: 0 success, 1 usage, 2 parse, 3 precondition (range,
// dimension and undefined polar map included), 4 resource limit,
// 5 degenerate random draw, 6 internal error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "polarmaps/errors.hpp"
#include "polarmaps/report.hpp"

namespace {

constexpr const char* kCommands =
    "polar, euler, reciprocity, regularity, cone, image-degree, image-dim, class, flexes, "
    "implicitize, plot";

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace polarmaps;

  CLI::App app{"Polar maps of projective hypersurfaces"};
  app.set_version_flag("--version", "polarmaps 1.0 (report schema " + std::string(kSchemaVersion) +
                                        ")");

  std::string command, output = "json", out_path, jobs_path;
  std::optional<std::size_t> vars;
  std::optional<unsigned> k, p, s, d, n;
  std::optional<std::string> window;
  std::optional<std::size_t> max_steps, max_basis;
  unsigned threads = 1;
  JobSpec job;

  app.add_option("command", command, std::string("Analysis to run: ") + kCommands);
  app.add_option("--poly", job.polynomial, "Homogeneous polynomial, e.g. \"x0^2 - x1*x2\"");
  app.add_option("--vars", vars, "Number of variables n+1 (default: highest index seen + 1)");
  app.add_option("--k", k, "Polar map degree");
  app.add_option("--p", p, "Polar map degree (alias of --k)");
  app.add_option("--s", s, "Order for euler / reciprocity (default: every admissible s)");
  app.add_option("--d", d, "Degree, for formula-only image-degree and class");
  app.add_option("--n", n, "Projective dimension, for formula-only image-degree");
  app.add_option("--point", job.points, "Point as comma-separated rationals; repeatable")
      ->allow_extra_args(false);
  app.add_option("--seed", job.seed, "Seed for random slices and coordinate changes")
      ->capture_default_str();
  app.add_option("--resolution", job.resolution, "Plot grid cells per side")
      ->capture_default_str();
  app.add_option("--chart", job.chart, "Affine chart x_chart = 1 for plots")->capture_default_str();
  app.add_option("--window", window, "Plot window xmin,xmax,ymin,ymax (default: auto-fit)");
  app.add_flag("--allow-irregular", job.allow_irregular,
               "image-dim: measure a non-regular polar map instead of failing");
  app.add_flag("--timing", job.timing, "Include wall time in the report");
  app.add_option("--output", output, "json, text, csv or svg (csv/svg: plot only)")
      ->check(CLI::IsMember({"json", "text", "csv", "svg"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write the report or plot artifact to this file");
  app.add_option("--max-steps", max_steps, "Groebner S-pair reduction limit");
  app.add_option("--max-basis", max_basis, "Groebner basis size limit");
  app.add_option("--jobs", jobs_path, "Batch mode: one JSON job per line");
  app.add_option("--threads", threads, "Batch mode worker count")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!jobs_path.empty()) {
      if (!command.empty()) throw CLI::ValidationError("--jobs", "takes no command");
      std::ifstream in(jobs_path);
      if (!in) {
        std::cerr << "cannot open " << jobs_path << '\n';
        return 1;
      }
      if (out_path.empty()) return run_batch(in, std::cout, threads);
      std::ofstream out(out_path);
      return run_batch(in, out, threads);
    }
    if (command.empty()) {
      std::cerr << app.help();
      return 1;
    }
    if (k && p && *k != *p) throw CLI::ValidationError("--k/--p", "conflicting values");
    job.command = parse_command(command);
    job.vars = vars;
    job.k = k ? k : p;
    job.s = s;
    job.d = d;
    job.n = n;
    job.window = window;
    job.output = parse_output_format(output);
    if (max_steps) job.limits.max_steps = *max_steps;
    if (max_basis) job.limits.max_basis = *max_basis;
    if ((job.output == OutputFormat::csv || job.output == OutputFormat::svg) &&
        job.command != Command::plot)
      throw CLI::ValidationError("--output", "csv and svg are for the plot command");
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  }

  nlohmann::json echo = to_json(job);
  try {
    Report report = run(job);
    std::string text;
    if (report.artifact) {
      text = *report.artifact;
    } else if (job.output == OutputFormat::text) {
      text = render_text(report);
    } else {
      text = report.to_json().dump(2) + "\n";
    }
    for (const auto& w : report.warnings)
      if (report.artifact) std::cerr << "warning: " << w << '\n';
    if (out_path.empty()) {
      std::cout << text;
    } else if (!write_file(out_path, text)) {
      std::cerr << "cannot write " << out_path << '\n';
      return 6;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (job.output == OutputFormat::json) std::cout << error_json(echo, e).dump(2) << '\n';
    return exit_status(e);
  }
}
