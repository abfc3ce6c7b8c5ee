// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "ncspace/cli/report.hpp"
#include "ncspace/expr/eval.hpp"
#include "ncspace/expr/parser.hpp"
#include "ncspace/verify/catalog.hpp"

#include <malloc.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ncspace;
using verify::IdentityId;
using verify::Status;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("AC%d %s %s%s%s\n", id, ok ? "PASS" : "FAIL", what.c_str(), detail.empty() ? "" : ": ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string join(const std::vector<std::string>& items, std::size_t limit = 6) {
  std::string out;
  for (std::size_t k = 0; k < items.size() && k < limit; ++k) out += (k ? ", " : "") + items[k];
  if (items.size() > limit) out += ", ... (" + std::to_string(items.size()) + " total)";
  return out;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void ac1() {
  const auto t = std::chrono::steady_clock::now();
  const auto records = verify::verify_all(4);
  const double secs = seconds_since(t);
  std::vector<std::string> failed;
  std::size_t cases = 0;
  for (const auto& r : records) {
    cases += r.cases_checked;
    if (r.status != Status::Pass) failed.push_back(std::string(r.name()) + " at " + r.failing_case);
  }
  const bool ok = failed.empty() && records.size() == 11 && secs < 30.0;
  std::string detail = std::to_string(records.size()) + " identities, " + std::to_string(cases) + " cases, " +
                       fmt("%.2f s", secs);
  if (!failed.empty()) detail += "; failing " + join(failed);
  report(1, ok, "symbolic exactness in d=4", detail);
}

void ac2() {
  std::vector<std::string> failed;
  for (int d : {2, 3, 5}) {
    const algebra::PoincareAlgebra alg(d);
    for (IdentityId id :
         {IdentityId::XPCommutator, IdentityId::JXCovariance, IdentityId::XXSnyder, IdentityId::MassCasimir}) {
      const auto r = verify::verify(id, alg);
      if (r.status != Status::Pass) failed.push_back(std::string(r.name()) + " d=" + std::to_string(d));
    }
    algebra::AlgebraElement contraction = alg.zero();
    for (int mu = 0; mu < d; ++mu)
      contraction +=
          alg.commutator(alg.coordinate(mu), alg.momentum(mu)) * algebra::ParamPolynomial(algebra::eta(mu, mu));
    if (!alg.equals(contraction, alg.scalar(algebra::GaussianRational(0, d - 1))))
      failed.push_back("contraction d=" + std::to_string(d));
  }
  report(2, failed.empty(), "dimension generality for d in {2,3,5}", failed.empty() ? "" : "failing " + join(failed));
}

void ac3() {
  const algebra::PoincareAlgebra alg(4);
  const auto jacobi = verify::verify(IdentityId::PoincareJacobi, alg);
  const auto constants = alg.structure_constants();
  std::size_t caught = 0;
  for (const auto& c : constants)
    if (verify::verify(IdentityId::PoincareJacobi, alg.with_flipped_constant(c)).status == Status::Fail) ++caught;
  const bool ok = jacobi.status == Status::Pass && jacobi.cases_checked == 1000 && caught == constants.size() &&
                  !constants.empty();
  report(3, ok, "Jacobi consistency and mutation detection",
         std::to_string(jacobi.cases_checked) + " triples " + std::string(verify::status_name(jacobi.status)) + ", " +
             std::to_string(caught) + "/" + std::to_string(constants.size()) + " sign flips detected");
}

void ac4() {
  const algebra::PoincareAlgebra alg(4);
  std::string orders;
  bool ok = verify::verify(IdentityId::TranslationAdjointX, alg).status == Status::Pass;
  for (int mu = 0; mu < 4; ++mu) {
    const int k = alg.adjoint_translation_series(alg.coordinate(mu)).vanishing_order;
    ok = ok && k == 2;
    orders += (mu ? "," : "") + std::to_string(k);
  }
  report(4, ok, "translation series terminates at second order", "vanishing orders " + orders);
}

void numeric_family(int id, const std::string& what, const cli::Report& r, const std::vector<std::string>& prefixes,
                    double time_limit_ms) {
  std::vector<std::string> failed;
  std::size_t matched = 0;
  double worst = 0.0;
  for (const auto& rec : r.numeric) {
    bool hit = false;
    for (const auto& p : prefixes) hit = hit || rec.id.rfind(p, 0) == 0;
    if (!hit) continue;
    ++matched;
    const double at_config = rec.kind == numlab::NumericKind::Bound ? rec.grids.front().residual : rec.grids[1].residual;
    if (rec.kind == numlab::NumericKind::Convergence) worst = std::max(worst, at_config);
    if (!rec.pass || rec.ms > time_limit_ms) {
      std::string why = rec.id + " (" + fmt("%.2e", at_config);
      if (rec.kind == numlab::NumericKind::Convergence && !std::isnan(rec.slope)) why += fmt(", slope %.2f", rec.slope);
      failed.push_back(why + ")");
    }
  }
  std::string detail = std::to_string(matched - failed.size()) + "/" + std::to_string(matched) + " records pass";
  if (worst > 0.0) detail += fmt(", worst residual %.2e", worst);
  if (!failed.empty()) detail += "; failing " + join(failed, 4);
  report(id, failed.empty() && matched > 0, what, detail);
}

/// Random expression text over the whole grammar.
std::string random_expression(std::mt19937& rng, int depth) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto idx = [&] { return std::to_string(pick(0, 3)); };
  // X, XT and M2 expand into many words; at most two per expression keeps free products small.
  int heavy = 2;
  std::function<std::string(int)> expr, factor;
  factor = [&](int dep) -> std::string {
    int choice = pick(0, dep > 0 ? 10 : 6);
    if (choice >= 5 && choice <= 7 && heavy-- <= 0) choice = 3;
    switch (choice) {
      case 0: return std::to_string(pick(0, 9)) + (pick(0, 1) ? "/" + std::to_string(pick(1, 7)) : "") + (pick(0, 1) ? "i" : "");
      case 1: return "a[" + idx() + "]";
      case 2: return "th[" + idx() + "," + idx() + "]";
      case 3: return "P[" + idx() + "]";
      case 4: return "J[" + idx() + "," + idx() + "]";
      case 5: return pick(0, 1) ? "M2" : "Minv2^" + std::to_string(pick(1, 2));
      case 6: return "X[" + idx() + "]";
      case 7: return "XT[" + idx() + "]";
      case 8: return "comm(" + expr(dep - 1) + "," + expr(dep - 1) + ")";
      case 9: return "nf(" + expr(dep - 1) + ")";
      default: return "(" + expr(dep - 1) + ")";
    }
  };
  expr = [&](int dep) {
    std::string out;
    const int terms = pick(1, 3);
    for (int t = 0; t < terms; ++t) {
      if (t) out += pick(0, 1) ? " + " : " - ";
      out += factor(dep);
      const int extra = pick(0, 2);
      for (int k = 0; k < extra; ++k) out += "*" + factor(dep);
    }
    return out;
  };
  return expr(depth);
}

void ac9() {
  const algebra::PoincareAlgebra alg(4);
  std::mt19937 rng(909);
  int round_trips = 0;
  std::string first_bad;
  for (int k = 0; k < 200; ++k) {
    const std::string text = random_expression(rng, 2);
    try {
      const auto value = expr::evaluate(expr::parse(text), alg);
      const auto back = expr::evaluate(expr::parse(expr::format(value)), alg);
      if (alg.equals(value, back)) ++round_trips;
      else if (first_bad.empty()) first_bad = text;
    } catch (const std::exception& e) {
      if (first_bad.empty()) first_bad = text + " (" + e.what() + ")";
    }
  }

  const std::vector<std::pair<std::string, std::size_t>> malformed = {
      {"", 1},          {"P[1] +", 7},     {"P[", 3},          {"P[1", 4},       {"J[0 1]", 5},
      {"comm(P[1])", 10}, {"nf P[1]", 4},  {"1/0", 3},         {"P[1]]", 5},     {"* P[1]", 1},
      {"X[1] X[2]", 6}, {"foo[1]", 1},     {"M2^", 4},         {"th[0,]", 6},    {"(P[0]", 6},
      {"P[-1]", 3},     {"a[1", 4},        {"2 ++ 3", 4},      {"XT[", 4},       {"Minv2^99", 7}};
  int positioned = 0;
  std::string first_miss;
  for (const auto& [text, offset] : malformed) {
    try {
      expr::parse(text);
      if (first_miss.empty()) first_miss = "'" + text + "' accepted";
    } catch (const expr::ParseError& e) {
      if (e.offset() == offset && !e.expected().empty()) ++positioned;
      else if (first_miss.empty()) first_miss = "'" + text + "' at " + std::to_string(e.offset());
    } catch (const std::exception& e) {
      if (first_miss.empty()) first_miss = "'" + text + "' threw " + e.what();
    }
  }
  int ranged = 0;
  for (const std::string text : {"P[4]", "J[0,9]", "XT[7]"}) {
    try {
      expr::parse(text, 4);
    } catch (const expr::IndexRangeError&) {
      ++ranged;
    }
  }
  const bool ok = round_trips == 200 && positioned == static_cast<int>(malformed.size()) && ranged == 3;
  std::string detail = std::to_string(round_trips) + "/200 round trips, " + std::to_string(positioned) + "/" +
                       std::to_string(malformed.size()) + " malformed inputs positioned, " + std::to_string(ranged) +
                       "/3 index errors";
  if (!first_bad.empty()) detail += "; first mismatch " + first_bad;
  if (!first_miss.empty()) detail += "; " + first_miss;
  report(9, ok, "parser round trip and error positions", detail);
}

}  // namespace

int main() {
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);

  ac1();
  ac2();
  ac3();
  ac4();

  const cli::RunConfig defaults;
  const auto t = std::chrono::steady_clock::now();
  const cli::Report first = cli::build_report(defaults);
  const double first_secs = seconds_since(t);

  numeric_family(5, "numeric hermiticity at N=65", first, {"HERMITICITY_"}, 3 * 60000.0);
  numeric_family(6, "numeric commutators at N=65", first, {"COMMUTATOR_X_P_", "COMMUTATOR_X_X_", "COMMUTATOR_XT_XT_"},
                 3 * 60000.0);
  numeric_family(7, "translation covariance at N=65", first, {"TRANSLATION_X_"}, 3 * 60000.0);
  numeric_family(8, "Robertson bound on randomized states", first, {"UNCERTAINTY_"}, 60000.0);

  ac9();

  const cli::Report second = cli::build_report(defaults);
  const std::string a = cli::to_json_without_timing(first);
  const std::string b = cli::to_json_without_timing(second);
  report(10, a == b, "report determinism across two default runs",
         std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different") + fmt(", %.1f s per run", first_secs));

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
