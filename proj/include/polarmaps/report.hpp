#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polarmaps/grobner.hpp"
#include "polarmaps/plot.hpp"
#include "polarmaps/rng.hpp"

namespace polarmaps {

enum class Command {
  polar,
  euler,
  reciprocity,
  regularity,
  cone,
  image_degree,
  image_dim,
  polar_class,
  flexes,
  implicitize,
  plot,
};

enum class OutputFormat { json, text, csv, svg };

std::string command_name(Command c);
/// Throws PreconditionError for unknown names.
Command parse_command(const std::string& name);
OutputFormat parse_output_format(const std::string& name);

/// One analysis request, as given on the command line or as one line of a
/// batch file.
struct JobSpec {
  Command command = Command::polar;
  std::string polynomial;
  std::optional<std::size_t> vars;  // n + 1; inferred from the text when absent
  std::optional<unsigned> k;        // polar degree (also accepted as p)
  std::optional<unsigned> s;        // Euler / reciprocity order
  std::optional<unsigned> d;        // formula-only commands
  std::optional<unsigned> n;
  std::vector<std::string> points;  // "a,b,c" each
  std::uint64_t seed = kDefaultSeed;
  unsigned resolution = 200;
  std::size_t chart = 2;
  std::optional<std::string> window;  // "xmin,xmax,ymin,ymax"; auto-fit when absent
  bool allow_irregular = false;
  bool timing = false;
  OutputFormat output = OutputFormat::json;
  GroebnerLimits limits = GroebnerLimits::from_env();
};

JobSpec job_from_json(const nlohmann::json& j);
nlohmann::json to_json(const JobSpec& job);

inline constexpr const char* kSchemaVersion = "1";

struct Report {
  std::string schema_version = kSchemaVersion;
  nlohmann::json command;  // echo of the job
  nlohmann::json result;
  std::vector<std::string> warnings;
  /// Wall time in microseconds, present only when the job asked for it.
  std::optional<std::int64_t> timing_us;
  /// CSV or SVG text for plot jobs with a non-JSON output format.
  std::optional<std::string> artifact;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
};

/// Dispatch a job to the library. Errors propagate as polarmaps::Error.
Report run(const JobSpec& job);

/// Documented exit status for an exception escaping run():
/// 2 parse, 3 precondition (range, dimension, undefined map included),
/// 4 resource, 5 degenerate, 6 anything else.
int exit_status(const std::exception& e);
std::string error_class(const std::exception& e);

/// JSON object describing a failed job (schema_version, command, error).
nlohmann::json error_json(const nlohmann::json& command, const std::exception& e);

/// Plain-text rendering of a report, one "key: value" line per field.
std::string render_text(const Report& report);

/// Run every JSON job on its own line of `in`; one JSON report (or error
/// object) per output line, in input order. Jobs may run on `threads`
/// workers; output order is unaffected. Returns the worst exit status.
int run_batch(std::istream& in, std::ostream& out, unsigned threads = 1);

}  // namespace polarmaps
