#include "ncspace/cli/report.hpp"

#include "ncspace/expr/eval.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace ncspace::cli {

using json = nlohmann::ordered_json;

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Symbolic:
      return "symbolic";
    case Suite::Numeric:
      return "numeric";
    case Suite::All:
      break;
  }
  return "all";
}

Suite parse_suite(std::string_view name) {
  if (name == "symbolic") return Suite::Symbolic;
  if (name == "numeric") return Suite::Numeric;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("suite must be symbolic, numeric or all");
}

void RunConfig::validate() const {
  if (dimension < 2 || dimension > 8) throw std::invalid_argument("--dim must be between 2 and 8");
  if (suite != Suite::Symbolic) {
    numeric().grid.validate();
    // the refinement ladder also needs the half-resolution grid
    numeric().grid.coarser().validate();
    if (tolerance && !(*tolerance > 0.0)) throw std::invalid_argument("--tol must be positive");
  }
}

numlab::NumericConfig RunConfig::numeric() const {
  numlab::NumericConfig c;
  c.grid = {grid, pmax, mass};
  c.tolerance = tolerance;
  c.strict = strict;
  return c;
}

Report build_report(const RunConfig& config) {
  config.validate();
  Report report;
  report.config = config;
  bool pass = true;
  if (config.suite != Suite::Numeric) {
    for (const auto& r : verify::verify_all(config.dimension)) {
      SymbolicEntry e;
      e.id = std::string(r.name());
      e.reference = std::string(r.reference());
      e.status = std::string(verify::status_name(r.status));
      e.failing_case = r.failing_case;
      e.cases_checked = r.cases_checked;
      e.witness = r.status == verify::Status::Pass ? "" : expr::format(r.witness);
      e.ms = r.ms;
      pass = pass && r.status == verify::Status::Pass;
      report.symbolic.push_back(std::move(e));
    }
  }
  if (config.suite != Suite::Symbolic) {
    report.numeric = numlab::run_numeric_suite(config.numeric());
    for (const auto& r : report.numeric) pass = pass && r.pass;
  }
  report.pass = pass;
  return report;
}

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json report_json(const Report& report, bool timing) {
  json j;
  j["version"] = report.version;
  const RunConfig& c = report.config;
  j["config"] = {{"suite", suite_name(c.suite)},
                 {"dimension", c.dimension},
                 {"mass", c.mass},
                 {"grid", c.grid},
                 {"pmax", c.pmax},
                 {"tolerance", c.tolerance ? json(*c.tolerance) : json(nullptr)},
                 {"strict", c.strict}};

  json symbolic = json::array();
  for (const auto& e : report.symbolic) {
    json r = {{"id", e.id}, {"paper_ref", e.reference}, {"status", e.status}, {"witness", e.witness}};
    if (timing) r["ms"] = e.ms;
    r["cases_checked"] = e.cases_checked;
    r["failing_case"] = e.failing_case;
    symbolic.push_back(std::move(r));
  }
  j["symbolic"] = std::move(symbolic);

  json numeric = json::array();
  for (const auto& n : report.numeric) {
    json grids = json::array();
    for (const auto& g : n.grids) grids.push_back({{"N", g.points}, {"h", g.h}, {"residual", g.residual}});
    json r = {{"id", n.id},
              {"paper_ref", n.reference},
              {"grids", std::move(grids)},
              {"slope", number_or_null(n.slope)},
              {"status", n.pass ? "pass" : "fail"}};
    r["kind"] = n.kind == numlab::NumericKind::Bound ? "bound" : "convergence";
    r["tolerance"] = n.tolerance;
    if (n.kind == numlab::NumericKind::Convergence)
      r["convergence"] = std::string(numlab::convergence_status_name(n.convergence));
    r["note"] = n.note;
    r["warnings"] = n.warnings;
    if (timing) r["ms"] = n.ms;
    numeric.push_back(std::move(r));
  }
  j["numeric"] = std::move(numeric);
  j["verdict"] = report.pass ? "pass" : "fail";
  return j;
}

}  // namespace

std::string to_json(const Report& report) { return report_json(report, true).dump(2) + "\n"; }
std::string to_json_without_timing(const Report& report) { return report_json(report, false).dump(2) + "\n"; }

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "check,N,h,residual\n";
  char buf[64];
  for (const auto& n : report.numeric)
    for (const auto& g : n.grids) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", g.h, g.residual);
      out << n.id << ',' << g.points << ',' << buf << '\n';
    }
  return out.str();
}

void print_summary(const Report& report, std::ostream& out) {
  char buf[256];
  if (!report.symbolic.empty()) out << "symbolic suite (d=" << report.config.dimension << ")\n";
  for (const auto& e : report.symbolic) {
    std::snprintf(buf, sizeof buf, "  %-4s %-32s %6zu cases %9.1f ms", e.status == "pass" ? "PASS" : "FAIL",
                  e.id.c_str(), e.cases_checked, e.ms);
    out << buf;
    if (!e.failing_case.empty()) out << "  first failure at " << e.failing_case;
    out << '\n';
  }
  if (!report.numeric.empty())
    out << "numeric suite (N=" << report.config.grid << ", pmax=" << report.config.pmax
        << ", m=" << report.config.mass << ")\n";
  for (const auto& n : report.numeric) {
    std::snprintf(buf, sizeof buf, "  %-4s %-26s", n.pass ? "PASS" : "FAIL", n.id.c_str());
    out << buf;
    for (const auto& g : n.grids) {
      std::snprintf(buf, sizeof buf, " N=%d:%.3e", g.points, g.residual);
      out << buf;
    }
    if (std::isfinite(n.slope)) {
      std::snprintf(buf, sizeof buf, " slope=%.2f", n.slope);
      out << buf;
    }
    if (!n.note.empty()) out << "  (" << n.note << ")";
    out << '\n';
  }
  out << "verdict: " << (report.pass ? "pass" : "fail") << '\n';
}

}  // namespace ncspace::cli
