#pragma once

#include <stdexcept>
#include <string>

namespace swivel {

/// A numerical routine exhausted its budget (step refinement, shooting
/// iterations, ...) without reaching its tolerance.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// A geodesic left the metric's chart domain during integration.
class chart_exit_error : public std::domain_error {
 public:
  chart_exit_error(const std::string& what, double u, double v)
      : std::domain_error(what), exit_u(u), exit_v(v) {}
  double exit_u;
  double exit_v;
};

/// The two-triangle (kite) configuration does not exist for the requested
/// lengths at this base point: the closure equation has != 2 roots.
class kite_property_error : public std::domain_error {
 public:
  kite_property_error(const std::string& what, int roots)
      : std::domain_error(what), roots_found(roots) {}
  int roots_found;
};

}  // namespace swivel
