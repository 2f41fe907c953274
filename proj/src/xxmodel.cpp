#include "xxdeficit/xxmodel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxdeficit {

namespace {
constexpr double kPi = std::numbers::pi;
}

Lambda::Lambda(double value) : value_(value) {
  if (!(value >= 0.0))
    throw std::invalid_argument(
        "Lambda: field strength must be >= 0, got " + std::to_string(value) +
        " (the phase diagram is symmetric, pass the magnitude explicitly)");
}

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::Critical:
      return "Critical";
    case Phase::TransitionPoint:
      return "TransitionPoint";
    case Phase::Polarized:
      return "Polarized";
  }
  return "Unknown";
}

Correlators correlators(Lambda lambda) {
  const double l = lambda.value();
  if (l >= 1.0)
    throw std::domain_error(
        "correlators: lambda >= 1 lies in the polarized phase; use "
        "polarized_correlators()");
  const double sigma_z = 1.0 - 2.0 * std::acos(l) / kPi;
  // sin(acos(l)) written as sqrt(1 - l^2); stable as l -> 1.
  const double xx = -(2.0 / kPi) * std::sqrt(1.0 - l * l);
  const double zz = sigma_z * sigma_z - (4.0 / (kPi * kPi)) * (1.0 - l * l);
  return {sigma_z, zz, xx};
}

Correlators polarized_correlators() { return {1.0, 1.0, 0.0}; }

Phase classify_phase(Lambda lambda) {
  if (lambda.value() < 1.0) return Phase::Critical;
  if (lambda.value() > 1.0) return Phase::Polarized;
  return Phase::TransitionPoint;
}

}  // namespace xxdeficit
