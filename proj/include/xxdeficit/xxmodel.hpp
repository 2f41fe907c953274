#pragma once

namespace xxdeficit {

// Dimensionless transverse-field strength. The phase diagram is symmetric
// in the sign of the field, so only the non-negative branch is accepted;
// callers with a negative field get an explicit error instead of |lambda|.
class Lambda {
 public:
  explicit Lambda(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// Two-spin expectation values of adjacent bulk spins.
struct Correlators {
  double sigma_z;  // <sigma^z> of either spin
  double zz;       // <sigma^z_l sigma^z_{l+1}>
  double xx;       // <sigma^x_l sigma^x_{l+1}>
};

enum class Phase { Critical, TransitionPoint, Polarized };

const char* to_string(Phase phase);

// Thermodynamic-limit bulk correlators, valid for 0 <= lambda < 1.
// lambda >= 1 is rejected; that regime is served by polarized_correlators().
Correlators correlators(Lambda lambda);

// Correlators of the fully polarized ground state (lambda >= 1).
Correlators polarized_correlators();

// Critical below 1, polarized above 1, transition point at exactly 1.
Phase classify_phase(Lambda lambda);

}  // namespace xxdeficit
