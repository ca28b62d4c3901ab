#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qep {

/// Shape or symmetry mismatch between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point where the bifunction is undefined (nonpositive denominator).
class DomainError : public std::domain_error {
 public:
  DomainError(const std::string& what, std::vector<double> point)
      : std::domain_error(what), point_(std::move(point)) {}

  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::vector<double> point_;
};

/// An iterative routine ran out of iterations. Carries its last iterate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> last_iterate)
      : std::runtime_error(what), last_iterate_(std::move(last_iterate)) {}

  const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }

 private:
  std::vector<double> last_iterate_;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed instance file. `field()` names the offending key, empty for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string field)
      : std::runtime_error(what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, double acceptance_rate)
      : std::runtime_error(what), acceptance_rate_(acceptance_rate) {}

  double acceptance_rate() const noexcept { return acceptance_rate_; }

 private:
  double acceptance_rate_;
};

}  // namespace qep
