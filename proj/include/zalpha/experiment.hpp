#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zalpha/estimators.hpp"

namespace zalpha {

// ---------------------------------------------------------------------------
// Experiment runner: turns a config into a report file (CSV or JSON) plus
// one witness sidecar per row, so every reported number can be recomputed
// from serialized inputs. All writes are temp-and-rename; reruns with the
// same config are byte-identical apart from the timestamp field.
// ---------------------------------------------------------------------------

enum class Command { qtriangle, qlinear, multiplier, unorm, pelczynski, certify };
enum class ReportFormat { csv, json };

const char* command_name(Command c);
Command command_from_name(const std::string& name);  // throws on unknown
const char* format_name(ReportFormat f);
ReportFormat format_from_name(const std::string& name);  // throws on unknown

struct ExperimentConfig {
  Command command = Command::qtriangle;
  double alpha = 1.0;
  std::vector<std::size_t> dims;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::vector<Family> families = all_families();
  ReportFormat format = ReportFormat::csv;
  std::string out;               // report path (required)
  std::size_t budget = 10000;    // pelczynski: total expansion budget
  std::string in;                // pelczynski: problem file (optional); certify: certificate file
  Execution exec = Execution::parallel;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError on any violated precondition for cfg.command
/// (empty dims, zero trials, odd unorm dims, missing paths, ...).
void validate_config(const ExperimentConfig& cfg);

/// One report row. Fields that a command does not use are zero/empty:
/// pelczynski reports expansions as the estimate, certify the relative
/// factorization defect.
struct ReportRow {
  std::string command;
  double alpha = 0.0;
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string family_set;
  std::string constant_name;
  double estimate = 0.0;
  std::string witness_ref;  // sidecar file (basename) or input path
  std::string timestamp;    // ISO 8601 UTC; the only nondeterministic field
};

/// Header plus one line per row; '.' decimal, %.17g for the float fields.
std::string csv_report(const std::vector<ReportRow>& rows);

/// Array of row objects with exactly the CSV field names.
nlohmann::ordered_json json_report(const std::vector<ReportRow>& rows);

/// Serialized argmax witness with everything needed to recompute the
/// estimate; inverse of sidecar_to_report.
nlohmann::ordered_json witness_sidecar_json(const ConstantReport& rep);
ConstantReport sidecar_to_report(const nlohmann::json& j);

/// "2026-01-31T12:00:00Z" for the current wall clock.
std::string utc_timestamp();

/// Runs the configured command, writing sidecars and the report.
/// Exit codes: 0 success, 1 certificate verification failure, 2 config or
/// input error, 3 derivation failure. One-line messages go to `log`;
/// failures leave no partial output files.
int run_experiment(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace zalpha
