#pragma once

// File formats.
//
// Instance files are JSON objects:
//   {"n": 2, "A": [[..],[..]], "b": [..], "A1": [[..],[..]], "b1": [..],
//    "c": [..], "d": 1.0, "box_low": 1.0, "box_high": 3.0}
//
// Trace files are CSV with header `k,alpha,step_norm,g_raw_norm,residual`,
// numbers printed with 17 significant digits, residual empty when not evaluated.
//
// Benchmark CSV: `n,n_prob,n_success,mean_time_seconds,mean_error`.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qep/benchmark.hpp"
#include "qep/bifunction.hpp"
#include "qep/monotonicity.hpp"
#include "qep/solver.hpp"

namespace qep {

std::string instance_to_json(const AffineFractionalInstance& inst);
/// Throws ParseError naming the offending field.
AffineFractionalInstance instance_from_json(const std::string& text);

void write_instance_file(const AffineFractionalInstance& inst, const std::string& path);
AffineFractionalInstance parse_instance_file(const std::string& path);

/// Shortest representation with 17 significant digits ("%.17g").
std::string format_real(double v);

void write_trace_csv(const SolveReport& report, std::ostream& out);
/// Throws std::runtime_error if the file cannot be written.
void write_trace_csv(const SolveReport& report, const std::string& path);

/// One parsed trace row; mirrors the CSV columns.
struct TraceRow {
  std::size_t k = 0;
  double alpha = 0.0;
  double step_norm = 0.0;
  double g_raw_norm = 0.0;
  std::optional<double> residual;
};

std::vector<TraceRow> read_trace_csv(std::istream& in);

void write_benchmark_csv(const BenchmarkReport& report, std::ostream& out);
void write_benchmark_table(const BenchmarkReport& report, std::ostream& out);

std::string paramonotonicity_to_json(const ParamonotonicityReport& report);

}  // namespace qep
