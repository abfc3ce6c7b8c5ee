#pragma once

#include "ncspace/numlab/checks.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncspace::numlab {

struct NumericConfig {
  GridSpec grid{65, 6.0, 1.0};
  /// Replaces every residual tolerance when set.
  std::optional<double> tolerance;
  /// Boundary-decay warnings become errors.
  bool strict = false;
  /// Seed for the randomized uncertainty states.
  unsigned long long seed = 20240611ULL;
};

/// Slope window for derivative-bearing checks.
inline constexpr double kMinSlope = 1.6;
inline constexpr double kMaxSlope = 2.4;
/// Robertson margins above this count as satisfied.
inline constexpr double kMarginSlack = -1e-6;

/// Grids (and their fields) shared between checks of one run.
class GridCache {
public:
  GridPtr get(const GridSpec& spec);

private:
  std::map<int, GridPtr> grids_;
};

enum class NumericKind {
  Convergence,  ///< residual on a refinement ladder, tolerance plus slope window
  Bound,        ///< single-grid inequality; the stored value is the margin
};

/// Everything a check needs on one grid; `warnings` collects boundary-decay messages.
struct CheckContext {
  GridPtr grid;
  std::vector<std::string>* warnings = nullptr;
  bool strict = false;
};

struct NumericCheck {
  std::string id;
  std::string reference;
  NumericKind kind = NumericKind::Convergence;
  double tolerance = 0.0;
  std::function<double(const CheckContext&)> evaluate;
};

struct NumericRecord {
  std::string id;
  std::string reference;
  NumericKind kind = NumericKind::Convergence;
  double tolerance = 0.0;
  /// One point per grid, coarse to fine; for Bound checks the residual field holds the margin.
  std::vector<ConvergencePoint> grids;
  /// NaN when no slope applies.
  double slope = 0.0;
  ConvergenceStatus convergence = ConvergenceStatus::Converged;
  bool pass = false;
  std::string note;
  std::vector<std::string> warnings;
  double ms = 0.0;
};

/// The numeric check list for `config`, in report order.
std::vector<NumericCheck> numeric_catalog(const NumericConfig& config);

NumericRecord run_check(const NumericCheck& check, const NumericConfig& config, GridCache& cache);
std::vector<NumericRecord> run_numeric_suite(const NumericConfig& config);

/// Reference Gaussian pair used for hermiticity checks (width m, centers inside pmax/3).
std::pair<Wavefunction, Wavefunction> hermiticity_pair(const GridPtr& grid);
/// Reference state for commutator, translation and remainder checks.
Wavefunction probe_state(const GridPtr& grid);

}  // namespace ncspace::numlab
