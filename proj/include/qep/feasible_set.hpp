#pragma once

#include <cstddef>

#include "qep/linalg.hpp"

namespace qep {

/// Closed convex set with a cheap Euclidean projection.
class ConvexSet {
 public:
  virtual ~ConvexSet() = default;

  virtual std::size_t dimension() const noexcept = 0;
  virtual Vector project(const Vector& x) const = 0;
  /// Membership with every defining inequality relaxed by tol.
  virtual bool contains(const Vector& x, double tol) const = 0;
  /// A canonical interior point, used as the default starting point.
  virtual Vector center() const = 0;
};

class BoxSet final : public ConvexSet {
 public:
  /// Throws DimensionError if sizes differ or lo[i] > hi[i].
  BoxSet(Vector lo, Vector hi);
  /// [lo, hi]ⁿ
  static BoxSet cube(std::size_t n, double lo, double hi);

  const Vector& lo() const noexcept { return lo_; }
  const Vector& hi() const noexcept { return hi_; }

  std::size_t dimension() const noexcept override { return lo_.size(); }
  Vector project(const Vector& x) const override;
  bool contains(const Vector& x, double tol) const override;
  Vector center() const override;

  friend bool operator==(const BoxSet& a, const BoxSet& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

 private:
  Vector lo_;
  Vector hi_;
};

class BallSet final : public ConvexSet {
 public:
  /// Throws DimensionError unless radius > 0.
  BallSet(Vector center, double radius);

  double radius() const noexcept { return radius_; }

  std::size_t dimension() const noexcept override { return center_.size(); }
  Vector project(const Vector& x) const override;
  bool contains(const Vector& x, double tol) const override;
  Vector center() const override { return center_; }

 private:
  Vector center_;
  double radius_;
};

}  // namespace qep
