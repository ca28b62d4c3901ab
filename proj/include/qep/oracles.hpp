#pragma once

#include "qep/bifunction.hpp"
#include "qep/fractional_lp.hpp"

namespace qep {

/// Affine-fractional bifunction; best responses via Dinkelbach.
class AffineFractionalOracle final : public EquilibriumOracle {
 public:
  explicit AffineFractionalOracle(AffineFractionalInstance inst, double dinkelbach_tol = kDinkelbachTol)
      : inst_(std::move(inst)), dinkelbach_tol_(dinkelbach_tol) {}

  const AffineFractionalInstance& instance() const noexcept { return inst_; }

  std::size_t dimension() const noexcept override { return inst_.dimension(); }
  double value(const Vector& x, const Vector& y) const override {
    return fractional_value(inst_, x, y);
  }
  Vector diagonal_subgradient(const Vector& x) const override {
    return fractional_diagonal_subgradient(inst_, x);
  }
  bool has_best_response() const noexcept override { return true; }
  std::optional<BestResponse> best_response(const Vector& x) const override {
    auto r = best_response_residual(inst_, x, dinkelbach_tol_);
    return BestResponse{std::move(r.y), -r.residual};
  }

 private:
  AffineFractionalInstance inst_;
  double dinkelbach_tol_;
};

/// Affine variational inequality; the best response is a box vertex.
class AffineVIOracle final : public EquilibriumOracle {
 public:
  explicit AffineVIOracle(AffineVIInstance inst) : inst_(std::move(inst)) {}

  const AffineVIInstance& instance() const noexcept { return inst_; }

  std::size_t dimension() const noexcept override { return inst_.dimension(); }
  double value(const Vector& x, const Vector& y) const override { return vi_value(inst_, x, y); }
  Vector diagonal_subgradient(const Vector& x) const override {
    return vi_diagonal_subgradient(inst_, x);
  }
  bool has_best_response() const noexcept override { return true; }
  std::optional<BestResponse> best_response(const Vector& x) const override {
    const Vector fx = inst_.operator_value(x);
    auto [y, linear] = minimize_linear_over_box(fx, inst_.box());
    return BestResponse{std::move(y), linear - dot(fx, x)};
  }

 private:
  AffineVIInstance inst_;
};

}  // namespace qep
