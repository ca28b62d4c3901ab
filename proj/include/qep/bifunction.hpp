#pragma once

// Equilibrium-problem bifunctions f(x, y) with f(x, x) = 0 and their diagonal
// Greenberg–Pierskalla subgradients, i.e. a direction g with
// ⟨g, y − x⟩ < 0 whenever f(x, y) < 0.

#include <cstddef>
#include <optional>

#include "qep/feasible_set.hpp"
#include "qep/linalg.hpp"

namespace qep {

/// A minimizer of f(x, ·) over the feasible set and the attained value.
struct BestResponse {
  Vector y;
  double min_value = 0.0;

  /// −min_y f(x, y); zero certifies that x solves the equilibrium problem.
  double residual() const noexcept { return -min_value; }
};

class EquilibriumOracle {
 public:
  virtual ~EquilibriumOracle() = default;

  virtual std::size_t dimension() const noexcept = 0;
  virtual double value(const Vector& x, const Vector& y) const = 0;
  /// Some element of the star subdifferential of f(x, ·) at x, unnormalized.
  virtual Vector diagonal_subgradient(const Vector& x) const = 0;

  virtual bool has_best_response() const noexcept { return false; }
  /// min over the feasible set of f(x, ·); nullopt when the family has no exact oracle.
  virtual std::optional<BestResponse> best_response(const Vector& /*x*/) const {
    return std::nullopt;
  }
};

/// f(x,y) = ⟨Ax + b, (A₁y + b₁)/(cᵀy + d) − (A₁x + b₁)/(cᵀx + d)⟩ on a box
/// where the denominator stays positive.
class AffineFractionalInstance {
 public:
  /// Throws DimensionError on inconsistent shapes and DomainError if
  /// min over the box of cᵀy + d is not strictly positive.
  AffineFractionalInstance(Matrix a, Vector b, Matrix a1, Vector b1, Vector c, double d, BoxSet box);

  std::size_t dimension() const noexcept { return b_.size(); }
  const Matrix& a() const noexcept { return a_; }
  const Vector& b() const noexcept { return b_; }
  const Matrix& a1() const noexcept { return a1_; }
  const Vector& b1() const noexcept { return b1_; }
  const Vector& c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  const BoxSet& box() const noexcept { return box_; }

  /// cᵀy + d
  double denominator(const Vector& y) const;
  /// Closed-form minimum of the denominator at the sign-selected box vertex.
  double min_denominator_over_box() const;

  friend bool operator==(const AffineFractionalInstance&, const AffineFractionalInstance&) = default;

 private:
  Matrix a_;
  Vector b_;
  Matrix a1_;
  Vector b1_;
  Vector c_;
  double d_;
  BoxSet box_;
};

/// F(x) = Mx + r, f(x,y) = ⟨F(x), y − x⟩.
class AffineVIInstance {
 public:
  AffineVIInstance(Matrix m, Vector r, BoxSet box);

  std::size_t dimension() const noexcept { return r_.size(); }
  const Matrix& m() const noexcept { return m_; }
  const Vector& r() const noexcept { return r_; }
  const BoxSet& box() const noexcept { return box_; }

  Vector operator_value(const Vector& x) const { return m_ * x + r_; }

 private:
  Matrix m_;
  Vector r_;
  BoxSet box_;
};

double fractional_value(const AffineFractionalInstance& inst, const Vector& x, const Vector& y);

/// g = p − αc with p = A₁ᵀ(Ax+b), q = b₁ᵀ(Ax+b), α = (pᵀx+q)/(cᵀx+d): the
/// gradient of y ↦ (pᵀy + q) − α(cᵀy + d), which lies in the GP subdifferential
/// of y ↦ (pᵀy + q)/(cᵀy + d) at x.
Vector fractional_diagonal_subgradient(const AffineFractionalInstance& inst, const Vector& x);

double vi_value(const AffineVIInstance& inst, const Vector& x, const Vector& y);
Vector vi_diagonal_subgradient(const AffineVIInstance& inst, const Vector& x);

}  // namespace qep
