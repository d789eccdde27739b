#pragma once

#include <stdexcept>
#include <string>

namespace latpoly {

/// Thrown when every start of a multistart optimization hits the iteration
/// cap. Distinct from a successful (possibly poor) lower-bound estimate.
class nonconvergence_error : public std::runtime_error {
public:
  explicit nonconvergence_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown by the ratio-polynomial builder when the dimension growth loop
/// caps out before the requested regular-to-sup ratio is reached.
class eta_unreachable_error : public std::runtime_error {
public:
  eta_unreachable_error(const std::string& what, int degree_, double best_)
      : std::runtime_error(what), degree(degree_), best_eta(best_) {}
  int degree;
  double best_eta;
};

/// Thrown when the bisection endpoints fail to bracket the target value
/// after re-estimation.
class bisection_bracket_error : public std::runtime_error {
public:
  explicit bisection_bracket_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace latpoly
