#pragma once

// Minimizing a linear-fractional function over a box. Dinkelbach's method
// reduces it to a sequence of linear problems over the box, each solved in
// closed form. The grid search is an independent check for n ≤ 3.

#include <cstddef>
#include <vector>

#include "qep/bifunction.hpp"
#include "qep/feasible_set.hpp"
#include "qep/linalg.hpp"

namespace qep {

/// y ↦ (pᵀy + q)/(cᵀy + d)
struct FractionalObjective {
  Vector p;
  double q = 0.0;
  Vector c;
  double d = 1.0;

  double numerator(const Vector& y) const { return dot(p, y) + q; }
  double denominator(const Vector& y) const { return dot(c, y) + d; }
  /// Throws DomainError where the denominator is not positive.
  double operator()(const Vector& y) const;
};

/// The objective φ_x of f(x, ·) = φ_x(·) − φ_x(x): p = A₁ᵀ(Ax+b), q = b₁ᵀ(Ax+b).
FractionalObjective fractional_objective_at(const AffineFractionalInstance& inst, const Vector& x);

struct BoxMinimum {
  Vector y;
  double value = 0.0;
};

/// Vertex minimizer of wᵀy: lo where w ≥ 0, hi where w < 0.
BoxMinimum minimize_linear_over_box(const Vector& w, const BoxSet& box);

struct DinkelbachResult {
  Vector y;
  double value = 0.0;
  int iterations = 0;
  /// Ratio estimates, starting at the box center value. Nonincreasing.
  std::vector<double> alphas;
  /// min over the box of numerator − α·denominator at the last α.
  double parametric_value = 0.0;
};

inline constexpr double kDinkelbachTol = 1e-10;
inline constexpr int kDinkelbachMaxIter = 100;

/// Stops once |F(α)| ≤ tol·max(1, |α|·(cᵀy + d)). Throws ConvergenceError
/// carrying the last iterate after max_iter linear solves.
DinkelbachResult dinkelbach_minimize(const FractionalObjective& obj, const BoxSet& box,
                                     double tol = kDinkelbachTol,
                                     int max_iter = kDinkelbachMaxIter);

/// Exhaustive search over a uniform grid with both endpoints on every axis.
/// The first grid point (lexicographic) wins ties. Rejects dimension > 3.
BoxMinimum grid_bruteforce_minimize(const FractionalObjective& obj, const BoxSet& box,
                                    std::size_t points_per_axis);

struct ResidualResult {
  Vector y;
  double residual = 0.0;
  int iterations = 0;
};

/// −min_{y ∈ box} f(x, y), with the minimizer.
ResidualResult best_response_residual(const AffineFractionalInstance& inst, const Vector& x,
                                      double tol = kDinkelbachTol);

}  // namespace qep
