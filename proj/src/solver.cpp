#include "qep/solver.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <string>

#include "qep/errors.hpp"

namespace qep {

std::string_view to_string(Variant v) noexcept { return v == Variant::NG1 ? "NG1" : "NG2"; }

Variant parse_variant(std::string_view text) {
  if (text == "ng1" || text == "NG1") return Variant::NG1;
  if (text == "ng2" || text == "NG2") return Variant::NG2;
  throw ConfigError("unknown variant '" + std::string(text) + "' (expected ng1 or ng2)");
}

std::string_view to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::SolvedByZeroGradient: return "SolvedByZeroGradient";
    case SolveStatus::SolvedByFixedPoint: return "SolvedByFixedPoint";
    case SolveStatus::StepBelowTol: return "StepBelowTol";
    case SolveStatus::ResidualBelowTol: return "ResidualBelowTol";
    case SolveStatus::MaxIterReached: return "MaxIterReached";
  }
  return "unknown";
}

void SolverConfig::validate() const {
  if (!(schedule.scale > 0.0)) throw ConfigError("step scale must be positive");
  if (max_iter < 1) throw ConfigError("max_iter must be at least 1");
  if (!(tol_step > 0.0) || !(tol_residual > 0.0) || !(tol_success > 0.0) || !(tol_zero_grad > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }
}

namespace {

class TraceSink {
 public:
  TraceSink(TraceRetention retention, std::size_t keep) : retention_(retention), keep_(keep) {}

  void push(IterationRecord record) {
    if (retention_ == TraceRetention::None) return;
    records_.push_back(std::move(record));
    if (retention_ == TraceRetention::LastN && records_.size() > keep_) records_.pop_front();
  }

  std::vector<IterationRecord> take() {
    return {std::make_move_iterator(records_.begin()), std::make_move_iterator(records_.end())};
  }

 private:
  TraceRetention retention_;
  std::size_t keep_;
  std::deque<IterationRecord> records_;
};

// Rethrows oracle domain errors with the iteration index and the iterate.
template <typename Fn>
auto at_iterate(std::size_t k, const Vector& x, Fn&& fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    throw DomainError("iteration " + std::to_string(k) + ": " + e.what(), x.values());
  }
}

}  // namespace

SolveReport normal_subgradient_solve(const EquilibriumOracle& oracle, const ConvexSet& set,
                                     const SolverConfig& config) {
  config.validate();
  if (oracle.dimension() != set.dimension()) {
    throw DimensionError("oracle dimension " + std::to_string(oracle.dimension()) +
                         " differs from set dimension " + std::to_string(set.dimension()));
  }
  const bool ng2 = config.variant == Variant::NG2;
  if (ng2 && !oracle.has_best_response()) {
    throw ConfigError("NG2 needs an oracle with a best response");
  }

  const auto started = std::chrono::steady_clock::now();
  SolveReport report;
  TraceSink sink(config.retention, config.retain_last);

  Vector x = set.project(config.start.value_or(set.center()));
  std::optional<double> residual_at_x;

  auto evaluate_residual = [&](std::size_t k, const Vector& point) {
    const double r = at_iterate(k, point, [&] { return oracle.best_response(point)->residual(); });
    if (!report.best_residual || r < *report.best_residual) {
      report.best_residual = r;
      report.best_x = point;
    }
    return r;
  };

  report.status = SolveStatus::MaxIterReached;
  std::size_t k = 0;
  for (; k < config.max_iter; ++k) {
    IterationRecord rec;
    rec.k = k;
    rec.x = x;
    rec.alpha = config.schedule.alpha(k);

    if (ng2) {
      residual_at_x = evaluate_residual(k, x);
      rec.residual = residual_at_x;
      if (*residual_at_x < config.tol_residual) {
        rec.g_unit = Vector(x.size());
        report.status = SolveStatus::ResidualBelowTol;
        sink.push(std::move(rec));
        break;
      }
    }

    const Vector g = at_iterate(k, x, [&] { return oracle.diagonal_subgradient(x); });
    rec.g_raw_norm = norm(g);
    if (rec.g_raw_norm <= config.tol_zero_grad) {
      rec.g_unit = Vector(x.size());
      report.status = SolveStatus::SolvedByZeroGradient;
      sink.push(std::move(rec));
      break;
    }

    rec.g_unit = (1.0 / rec.g_raw_norm) * g;
    Vector next = set.project(x - rec.alpha * rec.g_unit);
    rec.step_norm = distance(next, x);
    const double step = rec.step_norm;
    const bool fixed_point = next == x;
    rec.x_next = next;
    sink.push(std::move(rec));

    if (fixed_point) {
      report.status = SolveStatus::SolvedByFixedPoint;
      break;
    }
    x = std::move(next);
    residual_at_x.reset();
    if (!ng2 && step < config.tol_step) {
      report.status = SolveStatus::StepBelowTol;
      break;
    }
  }

  report.iterations = report.status == SolveStatus::MaxIterReached ? config.max_iter : k + 1;
  if (oracle.has_best_response()) {
    report.final_residual = residual_at_x ? *residual_at_x : evaluate_residual(k, x);
  }
  report.x_final = std::move(x);
  report.trace = sink.take();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

bool step_length_audit(const std::vector<IterationRecord>& trace, double slack) {
  for (const auto& rec : trace) {
    if (!(rec.step_norm <= rec.alpha + slack)) return false;
  }
  return true;
}

bool fejer_audit(const std::vector<IterationRecord>& trace, const Vector& z, double slack) {
  for (const auto& rec : trace) {
    if (!rec.x_next) continue;
    if (z.size() != rec.x.size()) throw DimensionError("fejer_audit: z has the wrong dimension");
    const double lhs = squared_distance(*rec.x_next, z);
    const double rhs = squared_distance(rec.x, z) + 2.0 * rec.alpha * dot(rec.g_unit, z - rec.x) +
                       2.0 * rec.alpha * rec.alpha;
    if (!(lhs <= rhs + slack)) return false;
  }
  return true;
}

}  // namespace qep
