// qep: solve, benchmark, generate and certify affine-fractional equilibrium problems.
//
// Exit codes: 0 success, 1 solve or convergence failure, 2 input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qep/benchmark.hpp"
#include "qep/errors.hpp"
#include "qep/generator.hpp"
#include "qep/io.hpp"
#include "qep/monotonicity.hpp"
#include "qep/oracles.hpp"
#include "qep/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSolveFailure = 1;
constexpr int kExitInputError = 2;

struct ToleranceFlags {
  std::size_t max_iter = 2000;
  double tol_step = 1e-4;
  double tol_residual = 1e-3;
  double tol_success = 1e-1;
  double scale = 100.0;
  std::string variant = "ng2";

  void attach(CLI::App* cmd) {
    cmd->add_option("--variant", variant, "ng1 or ng2")->capture_default_str();
    cmd->add_option("--scale", scale, "step scale s in alpha_k = s/(k+1)")->capture_default_str();
    cmd->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();
    cmd->add_option("--tol-step", tol_step, "NG1 step-length stop")->capture_default_str();
    cmd->add_option("--tol-residual", tol_residual, "NG2 residual stop")->capture_default_str();
    cmd->add_option("--tol-success", tol_success, "success threshold on the residual")
        ->capture_default_str();
  }

  qep::SolverConfig config() const {
    qep::SolverConfig cfg;
    cfg.variant = qep::parse_variant(variant);
    cfg.schedule.scale = scale;
    cfg.max_iter = max_iter;
    cfg.tol_step = tol_step;
    cfg.tol_residual = tol_residual;
    cfg.tol_success = tol_success;
    return cfg;
  }
};

int run_solve(const std::string& instance_path, const ToleranceFlags& flags,
              const std::string& trace_path) {
  const qep::AffineFractionalInstance inst = qep::parse_instance_file(instance_path);
  qep::SolverConfig cfg = flags.config();
  cfg.retention = trace_path.empty() ? qep::TraceRetention::None : qep::TraceRetention::Full;

  const qep::AffineFractionalOracle oracle(inst);
  const qep::SolveReport report = qep::normal_subgradient_solve(oracle, inst.box(), cfg);
  if (!trace_path.empty()) qep::write_trace_csv(report, trace_path);

  const double err = *report.best_residual;
  std::cout << "status          " << qep::to_string(report.status) << '\n'
            << "iterations      " << report.iterations << '\n'
            << "final residual  " << qep::format_real(*report.final_residual) << '\n'
            << "best residual   " << qep::format_real(err) << '\n'
            << "elapsed (s)     " << qep::format_real(report.elapsed_seconds) << '\n'
            << "x_final        ";
  for (double v : report.x_final) std::cout << ' ' << qep::format_real(v);
  std::cout << '\n';
  return err < cfg.tol_success ? kExitOk : kExitSolveFailure;
}

int run_bench(const std::vector<std::size_t>& sizes, std::size_t count, std::uint64_t seed,
              const ToleranceFlags& flags, const std::string& csv_path, bool serial) {
  qep::BenchmarkOptions options;
  options.sizes = sizes;
  options.count = count;
  options.seed = seed;
  options.solver = flags.config();

  const qep::BenchmarkReport report = serial ? qep::reference::run_benchmark_serial(options)
                                             : qep::run_benchmark(options);
  qep::write_benchmark_table(report, std::cout);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open '" + csv_path + "' for writing");
    qep::write_benchmark_csv(report, out);
  }
  return kExitOk;
}

int run_check(const std::string& instance_path, double tol) {
  const qep::AffineFractionalInstance inst = qep::parse_instance_file(instance_path);
  std::cout << qep::paramonotonicity_to_json(qep::check_paramonotone(inst, tol)) << '\n';
  return kExitOk;
}

int run_gen(const qep::GeneratorConfig& cfg, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const auto instances = qep::generate_instances(cfg);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "instance_n%zu_%04zu.json", cfg.n, i);
    qep::write_instance_file(instances[i], (fs::path(out_dir) / name).string());
  }
  std::cout << "wrote " << instances.size() << " instances to " << out_dir << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal-subgradient solver for quasiconvex equilibrium problems"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string trace_path;
  ToleranceFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "solve one instance file");
  solve->add_option("--instance", instance_path, "instance JSON")->required();
  solve->add_option("--trace", trace_path, "write the iteration trace as CSV");
  solve_flags.attach(solve);

  std::vector<std::size_t> sizes{5, 10, 20};
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::string csv_path;
  bool serial = false;
  ToleranceFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "benchmark sweep over generated instances");
  bench->add_option("--sizes", sizes, "comma-separated dimensions")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--count", count, "instances per size")->capture_default_str();
  bench->add_option("--seed", seed, "base seed; size i uses seed + i")->capture_default_str();
  bench->add_option("--csv", csv_path, "also write the rows as CSV");
  bench->add_flag("--serial", serial, "use the single-threaded reference sweep");
  bench_flags.attach(bench);

  std::string check_path;
  double check_tol = qep::kParamonotoneTol;
  auto* check = app.add_subcommand("check", "paramonotonicity certificate for an instance");
  check->add_option("--instance", check_path, "instance JSON")->required();
  check->add_option("--tol", check_tol, "relative tolerance")->capture_default_str();

  qep::GeneratorConfig gen_cfg;
  std::string out_dir;
  auto* gen = app.add_subcommand("gen", "write random instances as JSON files");
  gen->add_option("--n", gen_cfg.n, "dimension")->required();
  gen->add_option("--count", gen_cfg.count, "number of instances")->required();
  gen->add_option("--seed", gen_cfg.seed, "seed")->required();
  gen->add_option("--out", out_dir, "output directory")->required();
  gen->add_flag("--paramonotone", gen_cfg.require_paramonotone,
                "redraw instances failing the paramonotonicity check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve) return run_solve(instance_path, solve_flags, trace_path);
    if (*bench) return run_bench(sizes, count, seed, bench_flags, csv_path, serial);
    if (*check) return run_check(check_path, check_tol);
    if (*gen) return run_gen(gen_cfg, out_dir);
  } catch (const qep::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const qep::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const qep::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolveFailure;
  }
  return kExitOk;
}
