#include "qep/benchmark.hpp"

#include <algorithm>
#include <exception>

#include "qep/errors.hpp"
#include "qep/generator.hpp"
#include "qep/oracles.hpp"

namespace qep {

InstanceOutcome solve_instance(const AffineFractionalInstance& inst, const SolverConfig& config) {
  InstanceOutcome out;
  SolverConfig cfg = config;
  cfg.start.reset();
  cfg.retention = TraceRetention::None;
  try {
    const AffineFractionalOracle oracle(inst);
    const SolveReport report = normal_subgradient_solve(oracle, inst.box(), cfg);
    out.seconds = report.elapsed_seconds;
    out.status = report.status;
    out.iterations = report.iterations;
    out.error = std::max(0.0, *report.best_residual);
    out.x_evaluated = *report.best_x;
    out.success = out.error < cfg.tol_success;
  } catch (const std::exception& e) {
    out.failed = true;
    out.success = false;
    out.failure = e.what();
  }
  return out;
}

BenchmarkRow summarize_outcomes(std::size_t n, const std::vector<InstanceOutcome>& outcomes) {
  BenchmarkRow row;
  row.n = n;
  row.n_prob = outcomes.size();
  double time_sum = 0.0;
  double error_sum = 0.0;
  for (const InstanceOutcome& o : outcomes) {
    time_sum += o.seconds;
    if (o.failed) {
      ++row.n_failed;
    } else {
      error_sum += o.error;
    }
    if (o.success) ++row.n_success;
  }
  if (row.n_prob > 0) row.mean_time_seconds = time_sum / static_cast<double>(row.n_prob);
  const std::size_t evaluated = row.n_prob - row.n_failed;
  row.mean_error = evaluated > 0 ? error_sum / static_cast<double>(evaluated) : 0.0;
  return row;
}

namespace {

void validate(const BenchmarkOptions& options) {
  if (options.sizes.empty()) throw ConfigError("benchmark: no sizes given");
  if (options.count < 1) throw ConfigError("benchmark: count must be at least 1");
  options.solver.validate();
}

struct Job {
  std::size_t size_index;
  const AffineFractionalInstance* inst;
};

std::vector<std::vector<AffineFractionalInstance>> generate_all(const BenchmarkOptions& options,
                                                                std::vector<Job>& jobs) {
  std::vector<std::vector<AffineFractionalInstance>> batches;
  batches.reserve(options.sizes.size());
  for (std::size_t i = 0; i < options.sizes.size(); ++i) {
    GeneratorConfig gen;
    gen.n = options.sizes[i];
    gen.count = options.count;
    gen.seed = options.seed + i;
    batches.push_back(generate_instances(gen));
  }
  for (std::size_t i = 0; i < batches.size(); ++i)
    for (const auto& inst : batches[i]) jobs.push_back({i, &inst});
  return batches;
}

BenchmarkReport aggregate(const BenchmarkOptions& options, const std::vector<InstanceOutcome>& flat,
                          std::vector<std::vector<InstanceOutcome>>* outcomes) {
  BenchmarkReport report;
  report.variant = options.solver.variant;
  report.scale = options.solver.schedule.scale;
  report.seed = options.seed;

  std::vector<std::vector<InstanceOutcome>> per_size(options.sizes.size());
  for (std::size_t i = 0; i < options.sizes.size(); ++i) {
    const auto first = flat.begin() + static_cast<std::ptrdiff_t>(i * options.count);
    per_size[i].assign(first, first + static_cast<std::ptrdiff_t>(options.count));
    report.rows.push_back(summarize_outcomes(options.sizes[i], per_size[i]));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const BenchmarkRow& a, const BenchmarkRow& b) { return a.n < b.n; });
  if (outcomes != nullptr) *outcomes = std::move(per_size);
  return report;
}

}  // namespace

BenchmarkReport run_benchmark(const BenchmarkOptions& options,
                              std::vector<std::vector<InstanceOutcome>>* outcomes) {
  validate(options);
  std::vector<Job> jobs;
  const auto batches = generate_all(options, jobs);
  std::vector<InstanceOutcome> flat(jobs.size());

  const auto total = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t j = 0; j < total; ++j) {
    flat[j] = solve_instance(*jobs[j].inst, options.solver);
  }
  return aggregate(options, flat, outcomes);
}

namespace reference {

BenchmarkReport run_benchmark_serial(const BenchmarkOptions& options,
                                     std::vector<std::vector<InstanceOutcome>>* outcomes) {
  validate(options);
  std::vector<Job> jobs;
  const auto batches = generate_all(options, jobs);
  std::vector<InstanceOutcome> flat;
  flat.reserve(jobs.size());
  for (const Job& job : jobs) flat.push_back(solve_instance(*job.inst, options.solver));
  return aggregate(options, flat, outcomes);
}

}  // namespace reference

}  // namespace qep
