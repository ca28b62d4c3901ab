#pragma once

// Benchmark sweeps over generated affine-fractional instances. The default
// entry point runs the solves of a sweep in parallel with OpenMP; the serial
// path in qep::reference is kept as the oracle it is tested against. Both
// aggregate in instance order, so their rows agree except for timing.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qep/bifunction.hpp"
#include "qep/solver.hpp"

namespace qep {

struct BenchmarkRow {
  std::size_t n = 0;
  std::size_t n_prob = 0;
  std::size_t n_success = 0;
  double mean_time_seconds = 0.0;
  /// Mean residual over instances that did not fail.
  double mean_error = 0.0;
  /// Solves aborted by an oracle error; counted as non-successes.
  std::size_t n_failed = 0;
};

struct BenchmarkReport {
  Variant variant = Variant::NG2;
  double scale = 100.0;
  std::uint64_t seed = 0;
  std::vector<BenchmarkRow> rows;
};

struct BenchmarkOptions {
  std::vector<std::size_t> sizes;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  /// variant, schedule and tolerances; start and retention are overridden.
  SolverConfig solver{};
};

struct InstanceOutcome {
  bool failed = false;
  bool success = false;
  /// The residual used for classification: best seen under NG2, final under NG1.
  double error = 0.0;
  double seconds = 0.0;
  SolveStatus status = SolveStatus::MaxIterReached;
  std::size_t iterations = 0;
  Vector x_evaluated;
  std::string failure;
};

/// Solves one instance from the box center and classifies it against tol_success.
InstanceOutcome solve_instance(const AffineFractionalInstance& inst, const SolverConfig& config);

/// Aggregates one size's outcomes into a table row.
BenchmarkRow summarize_outcomes(std::size_t n, const std::vector<InstanceOutcome>& outcomes);

/// Instances for size index i come from generate_instances with seed + i.
/// When outcomes is non-null it receives the per-instance results, one list per size.
BenchmarkReport run_benchmark(const BenchmarkOptions& options,
                              std::vector<std::vector<InstanceOutcome>>* outcomes = nullptr);

namespace reference {

BenchmarkReport run_benchmark_serial(const BenchmarkOptions& options,
                                     std::vector<std::vector<InstanceOutcome>>* outcomes = nullptr);

}  // namespace reference

}  // namespace qep
