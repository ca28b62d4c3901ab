#pragma once

// Normal-subgradient projection method for equilibrium problems whose
// bifunction is quasiconvex in its second argument:
//
//   g  ∈ ∂*₂f(x, x);  stop if g = 0
//   x ← P_C(x − α_k g/‖g‖);  stop if x did not move
//
// NG1 also stops when the step is shorter than tol_step. NG2 solves the
// best-response problem at every iterate and stops once −min_y f(x, y)
// drops below tol_residual.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qep/bifunction.hpp"
#include "qep/feasible_set.hpp"
#include "qep/linalg.hpp"

namespace qep {

enum class Variant { NG1, NG2 };

std::string_view to_string(Variant v) noexcept;
/// Accepts "ng1"/"NG1"/"ng2"/"NG2"; throws ConfigError otherwise.
Variant parse_variant(std::string_view text);

/// α_k = scale/(k + 1): positive, not summable, square summable.
struct StepSchedule {
  double scale = 100.0;

  double alpha(std::size_t k) const noexcept { return scale / static_cast<double>(k + 1); }
};

inline double step_alpha(const StepSchedule& schedule, std::size_t k) noexcept {
  return schedule.alpha(k);
}

enum class TraceRetention { Full, LastN, None };

struct SolverConfig {
  Variant variant = Variant::NG1;
  StepSchedule schedule{};
  std::size_t max_iter = 2000;
  double tol_step = 1e-4;
  double tol_residual = 1e-3;
  double tol_success = 1e-1;
  double tol_zero_grad = 1e-12;
  TraceRetention retention = TraceRetention::Full;
  std::size_t retain_last = 100;
  /// Projected onto the set before the first iteration. Defaults to the set's center.
  std::optional<Vector> start;

  /// Throws ConfigError on nonpositive tolerances, scale, or max_iter.
  void validate() const;
};

struct IterationRecord {
  std::size_t k = 0;
  Vector x;
  double g_raw_norm = 0.0;
  /// Zero vector when the gradient test stopped the run.
  Vector g_unit;
  double alpha = 0.0;
  /// ‖x^{k+1} − x^k‖, zero when no step was taken.
  double step_norm = 0.0;
  /// Present when a step was taken.
  std::optional<Vector> x_next;
  std::optional<double> residual;
};

enum class SolveStatus {
  SolvedByZeroGradient,
  SolvedByFixedPoint,
  StepBelowTol,
  ResidualBelowTol,
  MaxIterReached,
};

std::string_view to_string(SolveStatus s) noexcept;

struct SolveReport {
  SolveStatus status = SolveStatus::MaxIterReached;
  Vector x_final;
  /// Number of iterations visited, including the one that stopped the run.
  std::size_t iterations = 0;
  std::vector<IterationRecord> trace;
  /// −min_y f(x_final, y); empty when the oracle has no best response.
  std::optional<double> final_residual;
  /// Smallest residual seen at any evaluated iterate and where it occurred.
  /// NG2 evaluates every iterate, NG1 only the final one.
  std::optional<double> best_residual;
  std::optional<Vector> best_x;
  double elapsed_seconds = 0.0;
};

/// Runs the method from config.start (or the set's center). Oracle domain
/// errors are rethrown as DomainError naming the iteration and carrying x^k.
/// Throws ConfigError if NG2 is requested and the oracle has no best response.
SolveReport normal_subgradient_solve(const EquilibriumOracle& oracle, const ConvexSet& set,
                                     const SolverConfig& config);

inline constexpr double kStepLengthSlack = 1e-12;
inline constexpr double kFejerSlack = 1e-10;

/// ‖x^{k+1} − x^k‖ ≤ α_k for every record.
bool step_length_audit(const std::vector<IterationRecord>& trace, double slack = kStepLengthSlack);

/// ‖x^{k+1} − z‖² ≤ ‖x^k − z‖² + 2α_k⟨g^k, z − x^k⟩ + 2α_k² for every record
/// that took a step. Throws DimensionError if z has the wrong size.
bool fejer_audit(const std::vector<IterationRecord>& trace, const Vector& z,
                 double slack = kFejerSlack);

}  // namespace qep
