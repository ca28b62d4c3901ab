#include <gtest/gtest.h>

#include "qep/benchmark.hpp"
#include "qep/errors.hpp"
#include "qep/fractional_lp.hpp"
#include "qep/generator.hpp"

using namespace qep;

namespace {

BenchmarkOptions options_for(Variant variant, std::vector<std::size_t> sizes, std::size_t count,
                             std::uint64_t seed) {
  BenchmarkOptions options;
  options.sizes = std::move(sizes);
  options.count = count;
  options.seed = seed;
  options.solver.variant = variant;
  return options;
}

void expect_same_rows_except_timing(const BenchmarkReport& a, const BenchmarkReport& b) {
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].n, b.rows[i].n);
    EXPECT_EQ(a.rows[i].n_prob, b.rows[i].n_prob);
    EXPECT_EQ(a.rows[i].n_success, b.rows[i].n_success);
    EXPECT_EQ(a.rows[i].n_failed, b.rows[i].n_failed);
    EXPECT_EQ(a.rows[i].mean_error, b.rows[i].mean_error);
  }
}

}  // namespace

TEST(RunBenchmark, Bookkeeping) {
  const auto report = run_benchmark(options_for(Variant::NG2, {5}, 2, 42));
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].n, 5u);
  EXPECT_EQ(report.rows[0].n_prob, 2u);
  EXPECT_LE(report.rows[0].n_success, 2u);
  EXPECT_GE(report.rows[0].mean_error, 0.0);
  EXPECT_EQ(report.variant, Variant::NG2);
  EXPECT_EQ(report.seed, 42u);
}

TEST(RunBenchmark, RowsSortedBySize) {
  const auto report = run_benchmark(options_for(Variant::NG1, {7, 2, 4}, 2, 3));
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].n, 2u);
  EXPECT_EQ(report.rows[1].n, 4u);
  EXPECT_EQ(report.rows[2].n, 7u);
}

TEST(RunBenchmark, RejectsEmptySweeps) {
  EXPECT_THROW(run_benchmark(options_for(Variant::NG1, {}, 2, 0)), ConfigError);
  EXPECT_THROW(run_benchmark(options_for(Variant::NG1, {3}, 0, 0)), ConfigError);
}

TEST(SummarizeOutcomes, AggregationArithmetic) {
  std::vector<InstanceOutcome> outcomes(4);
  for (auto& o : outcomes) {
    o.error = 0.05;
    o.success = true;
    o.seconds = 0.5;
  }
  const BenchmarkRow row = summarize_outcomes(10, outcomes);
  EXPECT_EQ(row.n_prob, 4u);
  EXPECT_EQ(row.n_success, 4u);
  EXPECT_DOUBLE_EQ(row.mean_error, 0.05);
  EXPECT_DOUBLE_EQ(row.mean_time_seconds, 0.5);

  outcomes[0].failed = true;
  outcomes[0].success = false;
  outcomes[0].error = 0.0;
  const BenchmarkRow with_failure = summarize_outcomes(10, outcomes);
  EXPECT_EQ(with_failure.n_success, 3u);
  EXPECT_EQ(with_failure.n_failed, 1u);
  EXPECT_DOUBLE_EQ(with_failure.mean_error, 0.05);
}

TEST(RunBenchmark, ParallelMatchesSerialReference) {
  for (Variant v : {Variant::NG1, Variant::NG2}) {
    auto options = options_for(v, {3, 6}, 6, 900);
    options.solver.schedule.scale = 2.0;
    std::vector<std::vector<InstanceOutcome>> par, ser;
    const auto parallel = run_benchmark(options, &par);
    const auto serial = reference::run_benchmark_serial(options, &ser);
    expect_same_rows_except_timing(parallel, serial);
    for (std::size_t i = 0; i < par.size(); ++i) {
      for (std::size_t j = 0; j < par[i].size(); ++j) {
        EXPECT_EQ(par[i][j].x_evaluated, ser[i][j].x_evaluated);
        EXPECT_EQ(par[i][j].iterations, ser[i][j].iterations);
        EXPECT_EQ(par[i][j].status, ser[i][j].status);
      }
    }
  }
}

TEST(RunBenchmark, DeterministicModuloTiming) {
  const auto options = options_for(Variant::NG2, {4, 8}, 5, 17);
  expect_same_rows_except_timing(run_benchmark(options), run_benchmark(options));
}

TEST(RunBenchmark, SuccessVerdictsSurviveAnOfflineRecheck) {
  for (Variant v : {Variant::NG1, Variant::NG2}) {
    auto options = options_for(v, {5}, 8, 123);
    options.solver.schedule.scale = 1.0;
    options.solver.max_iter = 100;
    std::vector<std::vector<InstanceOutcome>> outcomes;
    run_benchmark(options, &outcomes);

    GeneratorConfig gen;
    gen.n = 5;
    gen.count = 8;
    gen.seed = 123;
    const auto instances = generate_instances(gen);
    for (std::size_t j = 0; j < instances.size(); ++j) {
      const auto& o = outcomes[0][j];
      ASSERT_FALSE(o.failed) << o.failure;
      const double residual = best_response_residual(instances[j], o.x_evaluated).residual;
      EXPECT_EQ(std::max(0.0, residual), o.error);
      EXPECT_EQ(residual < options.solver.tol_success, o.success);
    }
  }
}
