#pragma once

#include <array>
#include <vector>

#include "xxdeficit/linalg.hpp"
#include "xxdeficit/xstate.hpp"
#include "xxdeficit/xxmodel.hpp"

namespace xxdeficit {

// Parameters of a 2x2 unitary V = t I + i (y1 s1 + y2 s2 + y3 s3).
// (t, y1, y2, y3) must sit on the unit 3-sphere within 1e-12.
class UnitaryParams {
 public:
  UnitaryParams(double t, double y1, double y2, double y3);

  double t() const { return t_; }
  double y1() const { return y1_; }
  double y2() const { return y2_; }
  double y3() const { return y3_; }

 private:
  double t_;
  double y1_;
  double y2_;
  double y3_;
};

// Unit vector along which V rotates the computational-basis measurement.
struct MeasurementDirection {
  double z1;
  double z2;
  double z3;
};

MeasurementDirection measurement_direction(const UnitaryParams& u);

Matrix2c unitary_matrix(const UnitaryParams& u);

struct DeficitResult {
  double value;          // bits, clamped to >= 0
  double minimizing_z3;  // |z3| of the best measurement, in [0, 1]
  double post_entropy;   // bits, at the minimizing measurement
  double pre_entropy;    // bits
};

// Spectrum of the dephased state as a function of the single variable z3.
std::array<double, 4> post_measurement_spectrum(const XStateParams& p,
                                                double z3);

// Entropy of the dephased state; an even function of z3.
double post_measurement_entropy(const XStateParams& p, double z3);

// Explicit dephased state sum_k (I x B_k) rho (I x B_k) with
// B_k = V |k><k| V^dag. This is the brute-force route; its spectrum must
// agree with post_measurement_spectrum at z3 = measurement_direction(u).z3.
Matrix4c post_measurement_state(const XStateParams& p,
                                const UnitaryParams& u);

// One-way deficit via the closed-form reduction: scan plus golden-section
// minimization of post_measurement_entropy over z3 in [0, 1].
DeficitResult minimize_over_z3(const XStateParams& p);

// Deterministic low-discrepancy sample of the measurement manifold with
// at least resolution^3 points; used by the oracle and exposed for tests.
std::vector<UnitaryParams> measurement_sphere_grid(int resolution);

// Independent check of the z3 reduction: brute-force minimization over the
// full unitary manifold (grid plus local refinement), with each candidate
// state built explicitly and diagonalized numerically. resolution >= 16.
DeficitResult oracle_full_measurement(const XStateParams& p, int resolution);

// Deficit of the adjacent bulk-spin state at field strength lambda.
// Exactly zero (with zero entropies) for lambda >= 1.
DeficitResult deficit_for_lambda(Lambda lambda);

}  // namespace xxdeficit
