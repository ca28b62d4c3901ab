#include "qep/monotonicity.hpp"

#include <algorithm>

#include "qep/errors.hpp"

namespace qep {

Matrix compute_a_hat(const AffineFractionalInstance& inst) {
  const Matrix left = inst.d() * inst.a1().transpose() - outer(inst.c(), inst.b1());
  return left * inst.a();
}

ParamonotonicityReport check_paramonotone(const AffineFractionalInstance& inst, double tol) {
  if (!(tol > 0.0)) throw ConfigError("check_paramonotone: tol must be positive");

  ParamonotonicityReport report;
  report.tol = tol;
  report.a_hat = compute_a_hat(inst);
  report.a_hat_sym = symmetric_part(report.a_hat);
  report.psd_slack = tol * std::max(1.0, report.a_hat.frobenius_norm());

  // Jacobi runs to near machine precision; tol only governs the verdicts below.
  const double jacobi_tol = 1e-14;
  const Vector eig = symmetric_eigenvalues(report.a_hat_sym, jacobi_tol);
  report.min_eigenvalue = eig.empty() ? 0.0 : eig[0];
  report.rank_sym = numeric_rank(singular_values(report.a_hat_sym, jacobi_tol), tol);
  report.rank_a_hat = numeric_rank(singular_values(report.a_hat, jacobi_tol), tol);
  report.verdict = report.min_eigenvalue >= -report.psd_slack && report.rank_sym <= report.rank_a_hat;
  return report;
}

}  // namespace qep
