#pragma once

// Command-line front end: list the registry, verify one identity, sweep a
// parameter grid, or run the canonical report.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hseries/catalog.hpp"

namespace hseries::cli {

enum class Command { List, Verify, Sweep, Report };
enum class Format { Text, Json, Csv, Markdown };

/// Exit statuses.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  Command command = Command::List;
  std::optional<std::string> id;
  std::optional<std::string> z;
  std::optional<std::string> m;
  /// Extra name=value parameters (--param).
  std::vector<std::pair<std::string, std::string>> params;
  /// Sweep grid: "z=0,1/2,1" or "0,1/2,1" for single-parameter identities;
  /// several axes separated by ';' form a Cartesian product.
  std::optional<std::string> grid;
  long mantissa_bits = 128;
  double tol = 1e-10;
  long max_terms = 2'000'000;
  Format format = Format::Text;
  /// Include wall-clock times; off by default so output is reproducible.
  bool timing = false;
  /// Worker threads for `report`; 0 picks the hardware concurrency.
  unsigned jobs = 0;

  /// Throws DomainError unless tol > 0, mantissa_bits >= 53 and max_terms >= 1.
  void validate() const;
  PrecisionContext context() const;
};

Format parse_format(std::string_view text);
std::string to_string(Format f);

/// Executes the command and writes the document to `out`, diagnostics to `err`.
/// 0 when every requested verification passes, 1 on failures or convergence
/// problems, 2 on usage and domain errors.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parameter grid of a sweep, expanded to points.
std::vector<catalog::Params> parse_grid(std::string_view grid, const catalog::IdentityRecord& record);

/// JSON form of a report. Values carry every digit of the working precision
/// as decimal strings plus an `approx` double.
nlohmann::json to_json(const catalog::VerificationReport& r, bool timing);
/// Inverse of to_json; decimal strings are read at the working precision.
catalog::VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace hseries::cli
