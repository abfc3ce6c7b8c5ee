#pragma once

#include "ncspace/numlab/suite.hpp"
#include "ncspace/verify/catalog.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ncspace::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Suite { Symbolic, Numeric, All };
std::string_view suite_name(Suite s);
/// Throws std::invalid_argument for anything but symbolic, numeric or all.
Suite parse_suite(std::string_view name);

struct RunConfig {
  int dimension = 4;
  double mass = 1.0;
  int grid = 65;
  double pmax = 6.0;
  std::optional<double> tolerance;
  Suite suite = Suite::All;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
  bool strict = false;

  /// Throws std::invalid_argument for values no suite can run with.
  void validate() const;
  numlab::NumericConfig numeric() const;
};

struct SymbolicEntry {
  std::string id;
  std::string reference;
  std::string status;
  std::string failing_case;
  std::size_t cases_checked = 0;
  std::string witness;
  double ms = 0.0;
};

struct Report {
  std::string version = kVersion;
  RunConfig config;
  std::vector<SymbolicEntry> symbolic;
  std::vector<numlab::NumericRecord> numeric;
  bool pass = false;
};

Report build_report(const RunConfig& config);

/// Report as pretty-printed JSON with stable key order:
/// {version, config, symbolic:[{id, paper_ref, status, witness, ms, ...}],
///  numeric:[{id, paper_ref, grids:[{N, h, residual}], slope, status, ...}], verdict}.
std::string to_json(const Report& report);
/// Same without wall-clock fields, for determinism comparisons.
std::string to_json_without_timing(const Report& report);

/// Rows "check,N,h,residual", one per check and grid.
std::string to_csv(const Report& report);

/// One line per record plus the verdict.
void print_summary(const Report& report, std::ostream& out);

}  // namespace ncspace::cli
