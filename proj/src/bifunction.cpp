#include "qep/bifunction.hpp"

#include <cmath>
#include <string>

#include "qep/errors.hpp"

namespace qep {

namespace {

void require_square(const Matrix& m, std::size_t n, const char* name) {
  if (m.rows() != n || m.cols() != n) {
    throw DimensionError(std::string(name) + " must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
}

void require_size(const Vector& v, std::size_t n, const char* name) {
  if (v.size() != n) {
    throw DimensionError(std::string(name) + " must have " + std::to_string(n) + " entries");
  }
}

double checked_denominator(const AffineFractionalInstance& inst, const Vector& y) {
  const double den = inst.denominator(y);
  if (!(den > 0.0)) {
    throw DomainError("nonpositive denominator cᵀy + d = " + std::to_string(den), y.values());
  }
  return den;
}

}  // namespace

AffineFractionalInstance::AffineFractionalInstance(Matrix a, Vector b, Matrix a1, Vector b1, Vector c,
                                                   double d, BoxSet box)
    : a_(std::move(a)),
      b_(std::move(b)),
      a1_(std::move(a1)),
      b1_(std::move(b1)),
      c_(std::move(c)),
      d_(d),
      box_(std::move(box)) {
  const std::size_t n = b_.size();
  require_square(a_, n, "A");
  require_square(a1_, n, "A1");
  require_size(b1_, n, "b1");
  require_size(c_, n, "c");
  if (box_.dimension() != n) throw DimensionError("box dimension must equal n");
  if (!std::isfinite(d_)) throw DimensionError("d must be finite");

  const double min_den = min_denominator_over_box();
  if (!(min_den > 0.0)) {
    throw DomainError("denominator cᵀy + d reaches " + std::to_string(min_den) + " on the box",
                      {});
  }
}

double AffineFractionalInstance::denominator(const Vector& y) const { return dot(c_, y) + d_; }

double AffineFractionalInstance::min_denominator_over_box() const {
  double sum = d_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    sum += c_[i] * (c_[i] > 0.0 ? box_.lo()[i] : box_.hi()[i]);
  }
  return sum;
}

AffineVIInstance::AffineVIInstance(Matrix m, Vector r, BoxSet box)
    : m_(std::move(m)), r_(std::move(r)), box_(std::move(box)) {
  require_square(m_, r_.size(), "M");
  if (box_.dimension() != r_.size()) throw DimensionError("box dimension must equal n");
}

double fractional_value(const AffineFractionalInstance& inst, const Vector& x, const Vector& y) {
  const double den_x = checked_denominator(inst, x);
  const double den_y = checked_denominator(inst, y);
  const Vector u = inst.a() * x + inst.b();
  const Vector phi_y = (1.0 / den_y) * (inst.a1() * y + inst.b1());
  const Vector phi_x = (1.0 / den_x) * (inst.a1() * x + inst.b1());
  return dot(u, phi_y - phi_x);
}

Vector fractional_diagonal_subgradient(const AffineFractionalInstance& inst, const Vector& x) {
  const double den = checked_denominator(inst, x);
  const Vector u = inst.a() * x + inst.b();
  const Vector p = transpose_times(inst.a1(), u);
  const double q = dot(inst.b1(), u);
  const double ratio = (dot(p, x) + q) / den;
  return p - ratio * inst.c();
}

double vi_value(const AffineVIInstance& inst, const Vector& x, const Vector& y) {
  return dot(inst.operator_value(x), y - x);
}

Vector vi_diagonal_subgradient(const AffineVIInstance& inst, const Vector& x) {
  return inst.operator_value(x);
}

}  // namespace qep
