#pragma once

#include <cstddef>

#include "qep/bifunction.hpp"
#include "qep/linalg.hpp"

namespace qep {

/// Paramonotonicity certificate for the affine-fractional bifunction: it holds
/// iff the symmetric part of Â = (d·A₁ᵀ − c·b₁ᵀ)·A is positive semidefinite and
/// rank(½(Â + Âᵀ)) ≤ rank(Â).
struct ParamonotonicityReport {
  Matrix a_hat;
  Matrix a_hat_sym;
  double min_eigenvalue = 0.0;
  std::size_t rank_sym = 0;
  std::size_t rank_a_hat = 0;
  bool verdict = false;
  /// Requested relative tolerance.
  double tol = 0.0;
  /// Absolute slack actually applied to min_eigenvalue: tol·max(1, ‖Â‖_F).
  double psd_slack = 0.0;
};

inline constexpr double kParamonotoneTol = 1e-8;

Matrix compute_a_hat(const AffineFractionalInstance& inst);

ParamonotonicityReport check_paramonotone(const AffineFractionalInstance& inst,
                                          double tol = kParamonotoneTol);

}  // namespace qep
