#include "ncspace/cli/commands.hpp"

#include "ncspace/algebra/errors.hpp"
#include "ncspace/expr/eval.hpp"
#include "ncspace/expr/parser.hpp"

#include <fstream>
#include <ostream>

namespace ncspace::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

std::string cmd_eval(const std::string& expression, int dimension) {
  const algebra::PoincareAlgebra alg(dimension);
  return expr::format(expr::evaluate(expr::parse(expression, dimension), alg));
}

Report cmd_verify(const RunConfig& config, std::ostream& out) {
  Report report = build_report(config);
  print_summary(report, out);
  if (config.json_path) write_file(*config.json_path, to_json(report));
  if (config.csv_path) write_file(*config.csv_path, to_csv(report));
  return report;
}

int run_eval(const std::string& expression, int dimension, std::ostream& out, std::ostream& err) {
  try {
    out << cmd_eval(expression, dimension) << '\n';
    return kExitPass;
  } catch (const expr::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "  " << expression << '\n';
    err << "  " << std::string(e.offset() - 1, ' ') << "^\n";
  } catch (const expr::IndexRangeError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return cmd_verify(config, out).pass ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace ncspace::cli
