#include "qep/feasible_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qep/errors.hpp"

namespace qep {

namespace {

void require_dimension(std::size_t expected, const Vector& x, const char* op) {
  if (x.size() != expected) {
    throw DimensionError(std::string(op) + ": point has dimension " + std::to_string(x.size()) +
                         ", set has " + std::to_string(expected));
  }
}

}  // namespace

BoxSet::BoxSet(Vector lo, Vector hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size()) throw DimensionError("BoxSet: lo and hi differ in size");
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (lo_[i] > hi_[i]) {
      throw DimensionError("BoxSet: lo > hi in coordinate " + std::to_string(i));
    }
  }
}

BoxSet BoxSet::cube(std::size_t n, double lo, double hi) { return BoxSet(Vector(n, lo), Vector(n, hi)); }

Vector BoxSet::project(const Vector& x) const {
  require_dimension(dimension(), x, "BoxSet::project");
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::clamp(x[i], lo_[i], hi_[i]);
  return out;
}

bool BoxSet::contains(const Vector& x, double tol) const {
  require_dimension(dimension(), x, "BoxSet::contains");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lo_[i] - tol || x[i] > hi_[i] + tol) return false;
  }
  return true;
}

Vector BoxSet::center() const { return 0.5 * (lo_ + hi_); }

BallSet::BallSet(Vector center, double radius) : center_(std::move(center)), radius_(radius) {
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
    throw DimensionError("BallSet: radius must be positive and finite");
  }
}

Vector BallSet::project(const Vector& x) const {
  require_dimension(dimension(), x, "BallSet::project");
  const double dist = distance(x, center_);
  // The slack keeps projection idempotent: a rescaled point can land a few ulp
  // outside the sphere. x == center lands here too.
  if (dist <= radius_ * (1.0 + 8.0 * std::numeric_limits<double>::epsilon())) return x;
  return center_ + (radius_ / dist) * (x - center_);
}

bool BallSet::contains(const Vector& x, double tol) const {
  require_dimension(dimension(), x, "BallSet::contains");
  return distance(x, center_) <= radius_ + tol;
}

}  // namespace qep
