#include "qep/fractional_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qep/errors.hpp"

namespace qep {

double FractionalObjective::operator()(const Vector& y) const {
  const double den = denominator(y);
  if (!(den > 0.0)) {
    throw DomainError("fractional objective: nonpositive denominator " + std::to_string(den),
                      y.values());
  }
  return numerator(y) / den;
}

FractionalObjective fractional_objective_at(const AffineFractionalInstance& inst, const Vector& x) {
  const Vector u = inst.a() * x + inst.b();
  return FractionalObjective{transpose_times(inst.a1(), u), dot(inst.b1(), u), inst.c(), inst.d()};
}

BoxMinimum minimize_linear_over_box(const Vector& w, const BoxSet& box) {
  if (w.size() != box.dimension()) throw DimensionError("minimize_linear_over_box: size mismatch");
  Vector y(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) y[i] = w[i] < 0.0 ? box.hi()[i] : box.lo()[i];
  const double value = dot(w, y);
  return {std::move(y), value};
}

DinkelbachResult dinkelbach_minimize(const FractionalObjective& obj, const BoxSet& box, double tol,
                                     int max_iter) {
  if (!(tol > 0.0)) throw ConfigError("dinkelbach_minimize: tol must be positive");
  if (obj.p.size() != box.dimension() || obj.c.size() != box.dimension()) {
    throw DimensionError("dinkelbach_minimize: objective and box dimensions differ");
  }

  DinkelbachResult result;
  double alpha = obj(box.center());
  result.alphas.push_back(alpha);

  Vector y = box.center();
  for (int it = 1; it <= max_iter; ++it) {
    auto [vertex, linear] = minimize_linear_over_box(obj.p - alpha * obj.c, box);
    const double parametric = linear + obj.q - alpha * obj.d;
    y = std::move(vertex);
    result.iterations = it;
    result.parametric_value = parametric;

    const double den = obj.denominator(y);
    if (std::abs(parametric) <= tol * std::max(1.0, std::abs(alpha) * den)) break;

    const double next = obj(y);
    // F(α) < 0 guarantees next < α in exact arithmetic; equality means round-off stalled.
    if (!(next < alpha)) break;
    alpha = next;
    result.alphas.push_back(alpha);

    if (it == max_iter) {
      throw ConvergenceError("dinkelbach_minimize: no convergence in " + std::to_string(max_iter) +
                                 " iterations",
                             y.values());
    }
  }

  result.value = obj(y);
  result.y = std::move(y);
  return result;
}

BoxMinimum grid_bruteforce_minimize(const FractionalObjective& obj, const BoxSet& box,
                                    std::size_t points_per_axis) {
  const std::size_t n = box.dimension();
  if (n > 3) throw DimensionError("grid_bruteforce_minimize: dimension above 3");
  if (points_per_axis < 2) throw ConfigError("grid_bruteforce_minimize: need at least 2 points");

  auto coordinate = [&](std::size_t axis, std::size_t i) {
    if (i + 1 == points_per_axis) return box.hi()[axis];
    const double t = static_cast<double>(i) / static_cast<double>(points_per_axis - 1);
    return box.lo()[axis] + t * (box.hi()[axis] - box.lo()[axis]);
  };

  std::size_t total = 1;
  for (std::size_t axis = 0; axis < n; ++axis) total *= points_per_axis;

  BoxMinimum best{Vector(n), std::numeric_limits<double>::infinity()};
  Vector y(n);
  for (std::size_t flat = 0; flat < total; ++flat) {
    // First axis varies slowest.
    std::size_t rest = flat;
    for (std::size_t axis = n; axis-- > 0;) {
      y[axis] = coordinate(axis, rest % points_per_axis);
      rest /= points_per_axis;
    }
    const double v = obj(y);
    if (v < best.value) best = {y, v};
  }
  return best;
}

ResidualResult best_response_residual(const AffineFractionalInstance& inst, const Vector& x,
                                      double tol) {
  const FractionalObjective obj = fractional_objective_at(inst, x);
  DinkelbachResult r = dinkelbach_minimize(obj, inst.box(), tol);
  const double residual = obj(x) - r.value;
  return {std::move(r.y), residual, r.iterations};
}

}  // namespace qep
