#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "test_helpers.hpp"
#include "xxdeficit/linalg.hpp"
#include "xxdeficit/xstate.hpp"
#include "xxdeficit/xxmodel.hpp"

using namespace xxdeficit;
using xxdeficit::testing::near;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("lambda rejects negative fields") {
  CHECK_THROWS_AS(Lambda(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(Lambda(std::nan("")), std::invalid_argument);
  CHECK(Lambda(0.0).value() == 0.0);
}

TEST_CASE("correlators at lambda = 0") {
  const Correlators corr = correlators(Lambda(0.0));
  CHECK(near(corr.sigma_z, 0.0, 1e-15));
  CHECK(near(corr.zz, -4.0 / (kPi * kPi), 1e-15));
  CHECK(near(corr.xx, -2.0 / kPi, 1e-15));
}

TEST_CASE("correlators at lambda = 0.6 reproduce the known values") {
  const Correlators corr = correlators(Lambda(0.6));
  CHECK(near(corr.sigma_z, 0.409666, 1e-6));
  CHECK(near(corr.xx, -0.509296, 1e-6));
  CHECK(near(corr.zz, -0.0915564, 1e-6));
}

TEST_CASE("correlators approach the polarized values as lambda -> 1") {
  const Correlators near_one = correlators(Lambda(0.999));
  const Correlators polar = polarized_correlators();
  CHECK(near(near_one.sigma_z, polar.sigma_z, 0.1));
  CHECK(near(near_one.zz, polar.zz, 0.1));
  CHECK(near(near_one.xx, polar.xx, 0.1));

  const Correlators closer = correlators(Lambda(1.0 - 1e-4));
  CHECK(near(closer.sigma_z, 1.0, 0.01));
  CHECK(near(closer.xx, 0.0, 0.01));
  CHECK(near(closer.zz, 1.0, 0.05));
}

TEST_CASE("correlators reject the polarized domain and negative fields") {
  CHECK_THROWS_AS(correlators(Lambda(1.0)), std::domain_error);
  CHECK_THROWS_AS(correlators(Lambda(1.5)), std::domain_error);
  CHECK_THROWS_AS(correlators(Lambda(-0.2)), std::invalid_argument);
}

TEST_CASE("polarized correlators describe the pure up-up state") {
  const Correlators corr = polarized_correlators();
  CHECK(corr.sigma_z == 1.0);
  CHECK(corr.zz == 1.0);
  CHECK(corr.xx == 0.0);

  const XStateParams p = params_from_correlators(corr);
  const Matrix4c rho = build_density_matrix(p);
  CHECK(near(std::abs(rho(0, 0) - Complex{1.0, 0.0}), 0.0, 1e-15));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != 0 || j != 0) CHECK(near(std::abs(rho(i, j)), 0.0, 1e-15));
  CHECK(near(entropy(p), 0.0, 1e-15));
}

TEST_CASE("phase classification is exact at the transition") {
  CHECK(classify_phase(Lambda(0.5)) == Phase::Critical);
  CHECK(classify_phase(Lambda(0.0)) == Phase::Critical);
  CHECK(classify_phase(Lambda(1.0)) == Phase::TransitionPoint);
  CHECK(classify_phase(Lambda(1.2)) == Phase::Polarized);
}

TEST_CASE("correlators vary smoothly over the critical phase") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> pick(0.0, 0.99);
  const double step = 1e-4;
  for (int trial = 0; trial < 200; ++trial) {
    const double l = std::min(pick(rng), 0.99 - step);
    const Correlators a = correlators(Lambda(l));
    const Correlators b = correlators(Lambda(l + step));
    CHECK(std::abs(b.sigma_z - a.sigma_z) < 10.0 * step);
    CHECK(std::abs(b.zz - a.zz) < 10.0 * step);
    CHECK(std::abs(b.xx - a.xx) < 10.0 * step);
  }
}

TEST_CASE("correlators yield valid density matrices across the phase") {
  for (int i = 0; i < 1000; ++i) {
    const double l = static_cast<double>(i) / 1000.0;
    const XStateParams p = params_from_correlators(correlators(Lambda(l)));
    const auto numeric = hermitian_eigenvalues(build_density_matrix(p));
    double trace = 0.0;
    for (double v : numeric) {
      CHECK(v >= kEigenvalueFloor);
      trace += v;
    }
    CHECK(near(trace, 1.0, 1e-12));
  }
}
