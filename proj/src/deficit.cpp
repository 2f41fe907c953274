#include "xxdeficit/deficit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xxdeficit {

namespace {

constexpr double kUnitNormTol = 1e-12;
constexpr double kRadicandFloor = -1e-12;
constexpr double kZ3Tol = 1e-10;       // absolute tolerance on z3
constexpr double kEntropyTol = 1e-12;  // absolute tolerance on entropy
constexpr int kScanIntervals = 200;    // 201-point seeding scan
constexpr double kDeficitFloor = -1e-9;

std::string short_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

UnitaryParams::UnitaryParams(double t, double y1, double y2, double y3)
    : t_(t), y1_(y1), y2_(y2), y3_(y3) {
  const double norm2 = t * t + y1 * y1 + y2 * y2 + y3 * y3;
  if (!(std::abs(norm2 - 1.0) <= kUnitNormTol))
    throw std::invalid_argument(
        "UnitaryParams: (t, y) must lie on the unit 3-sphere, |.|^2 = " +
        short_num(norm2));
}

MeasurementDirection measurement_direction(const UnitaryParams& u) {
  return {2.0 * (-u.t() * u.y2() + u.y1() * u.y3()),
          2.0 * (u.t() * u.y1() + u.y2() * u.y3()),
          u.t() * u.t() + u.y3() * u.y3() - u.y1() * u.y1() -
              u.y2() * u.y2()};
}

Matrix2c unitary_matrix(const UnitaryParams& u) {
  const Complex i{0.0, 1.0};
  Matrix2c v;
  v << u.t() + i * u.y3(), u.y2() + i * u.y1(),
      -u.y2() + i * u.y1(), u.t() - i * u.y3();
  return v;
}

std::array<double, 4> post_measurement_spectrum(const XStateParams& p,
                                                double z3) {
  if (!(std::abs(z3) <= 1.0 + 1e-12))
    throw std::invalid_argument("post_measurement_spectrum: |z3| must be <= 1, got " +
                                short_num(z3));
  const double r = p.r();
  const double c = p.c();
  const double c3 = p.c3();
  const double transverse = c * c * std::max(0.0, 1.0 - z3 * z3);
  // (r -+ c3 z3)^2 + c^2 (1 - z3^2), the two radicands in factored form.
  const auto split = [&](double sign) {
    const double axial = r + sign * c3 * z3;
    const double radicand = axial * axial + transverse;
    if (radicand < kRadicandFloor)
      throw std::logic_error("post_measurement_spectrum: negative radicand " +
                             short_num(radicand));
    return std::sqrt(std::max(radicand, 0.0));
  };
  const double minus = split(-1.0);
  const double plus = split(+1.0);
  return {0.25 * (1.0 - r * z3 + minus), 0.25 * (1.0 - r * z3 - minus),
          0.25 * (1.0 + r * z3 + plus), 0.25 * (1.0 + r * z3 - plus)};
}

double post_measurement_entropy(const XStateParams& p, double z3) {
  return entropy_kernel(post_measurement_spectrum(p, z3));
}

namespace {

Matrix4c dephase(const Matrix4c& rho, const UnitaryParams& u) {
  const Matrix2c v = unitary_matrix(u);
  const Matrix2c id = Matrix2c::Identity();
  Matrix4c out = Matrix4c::Zero();
  for (int k = 0; k < 2; ++k) {
    const Matrix2c bk = v * basis_projector(k) * v.adjoint();
    const Matrix4c lifted = kron(id, bk);
    out += lifted * rho * lifted;
  }
  return out;
}

double dephased_entropy(const Matrix4c& rho, const UnitaryParams& u) {
  return entropy_kernel(hermitian_eigenvalues(dephase(rho, u)));
}

DeficitResult make_result(double post, double pre, double z3) {
  double value = post - pre;
  if (value < kDeficitFloor)
    throw std::logic_error(
        "deficit: post-measurement entropy fell below the state entropy by " +
        short_num(-value));
  return {std::max(value, 0.0), std::abs(z3), post, pre};
}

// Orthonormal basis of the tangent space of the 3-sphere at q.
std::array<Eigen::Vector4d, 3> tangent_basis(const Eigen::Vector4d& q) {
  int skip = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(q(i)) > std::abs(q(skip))) skip = i;
  std::array<Eigen::Vector4d, 3> basis;
  int count = 0;
  for (int axis = 0; axis < 4; ++axis) {
    if (axis == skip) continue;
    Eigen::Vector4d v = Eigen::Vector4d::Unit(axis);
    v -= v.dot(q) * q;
    for (int j = 0; j < count; ++j) v -= v.dot(basis[j]) * basis[j];
    basis[count++] = v.normalized();
  }
  return basis;
}

}  // namespace

Matrix4c post_measurement_state(const XStateParams& p,
                                const UnitaryParams& u) {
  return dephase(build_density_matrix(p), u);
}

DeficitResult minimize_over_z3(const XStateParams& p) {
  const double pre = entropy(p);
  const auto objective = [&](double z3) {
    return post_measurement_entropy(p, z3);
  };

  // Uniform scan guards against missing a basin; ties keep the smaller z3.
  int best_index = 0;
  double best_scan = objective(0.0);
  for (int i = 1; i <= kScanIntervals; ++i) {
    const double f = objective(static_cast<double>(i) / kScanIntervals);
    if (f < best_scan) {
      best_scan = f;
      best_index = i;
    }
  }

  double lo = best_index == 0
                  ? 0.0
                  : static_cast<double>(best_index - 1) / kScanIntervals;
  double hi = best_index == kScanIntervals
                  ? 1.0
                  : static_cast<double>(best_index + 1) / kScanIntervals;

  constexpr double kInvPhi = 0.6180339887498949;
  double inner_lo = hi - kInvPhi * (hi - lo);
  double inner_hi = lo + kInvPhi * (hi - lo);
  double f_lo = objective(inner_lo);
  double f_hi = objective(inner_hi);
  while (hi - lo > kZ3Tol && std::abs(f_lo - f_hi) > kEntropyTol) {
    if (f_lo < f_hi) {
      hi = inner_hi;
      inner_hi = inner_lo;
      f_hi = f_lo;
      inner_lo = hi - kInvPhi * (hi - lo);
      f_lo = objective(inner_lo);
    } else {
      lo = inner_lo;
      inner_lo = inner_hi;
      f_lo = f_hi;
      inner_hi = lo + kInvPhi * (hi - lo);
      f_hi = objective(inner_hi);
    }
  }
  const double interior_z3 = 0.5 * (lo + hi);
  const double interior_f = objective(interior_z3);

  // Boundary minima are common (pure measurement axes); ties between
  // candidates resolve toward the smaller z3.
  const double candidates[3][2] = {{0.0, objective(0.0)},
                                   {interior_z3, interior_f},
                                   {1.0, objective(1.0)}};
  double best_z3 = candidates[0][0];
  double best_f = candidates[0][1];
  for (const auto& cand : candidates) {
    if (cand[1] < best_f - kEntropyTol) {
      best_z3 = cand[0];
      best_f = cand[1];
    }
  }
  return make_result(best_f, pre, best_z3);
}

namespace {

double halton(std::int64_t index, int base) {
  double inv = 1.0;
  double value = 0.0;
  for (std::int64_t n = index; n > 0; n /= base) {
    inv /= base;
    value += inv * static_cast<double>(n % base);
  }
  return value;
}

}  // namespace

std::vector<UnitaryParams> measurement_sphere_grid(int resolution) {
  if (resolution < 16)
    throw std::invalid_argument(
        "measurement_sphere_grid: resolution must be >= 16, got " +
        std::to_string(resolution));
  const std::int64_t n = static_cast<std::int64_t>(resolution) * resolution *
                         static_cast<std::int64_t>(resolution);
  std::vector<UnitaryParams> grid;
  grid.reserve(static_cast<std::size_t>(n) + 4);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (std::int64_t i = 1; i <= n; ++i) {
    // Halton points pushed through Hopf coordinates give a uniform,
    // deterministic cover of the 3-sphere.
    const double eta = std::asin(std::sqrt(halton(i, 2)));
    const double xi1 = kTwoPi * halton(i, 3);
    const double xi2 = kTwoPi * halton(i, 5);
    grid.emplace_back(std::cos(eta) * std::cos(xi1),
                      std::sin(eta) * std::cos(xi2),
                      std::sin(eta) * std::sin(xi2),
                      std::cos(eta) * std::sin(xi1));
  }
  // Measurement axes z, -z, y, x; boundary minimizers land here exactly.
  const double rt = std::sqrt(0.5);
  grid.emplace_back(1.0, 0.0, 0.0, 0.0);
  grid.emplace_back(0.0, 1.0, 0.0, 0.0);
  grid.emplace_back(rt, rt, 0.0, 0.0);
  grid.emplace_back(rt, 0.0, rt, 0.0);
  return grid;
}

DeficitResult oracle_full_measurement(const XStateParams& p, int resolution) {
  if (resolution < 16)
    throw std::invalid_argument(
        "oracle_full_measurement: resolution must be >= 16, got " +
        std::to_string(resolution));
  const Matrix4c rho = build_density_matrix(p);
  const double pre = entropy_kernel(hermitian_eigenvalues(rho));

  const std::vector<UnitaryParams> grid = measurement_sphere_grid(resolution);
  std::size_t best_index = 0;
  double best_f = dephased_entropy(rho, grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double f = dephased_entropy(rho, grid[i]);
    if (f < best_f) {
      best_f = f;
      best_index = i;
    }
  }

  // Local compass search on the sphere around the best grid point.
  const UnitaryParams& seed = grid[best_index];
  Eigen::Vector4d q(seed.t(), seed.y1(), seed.y2(), seed.y3());
  const double spacing =
      std::cbrt(2.0 * std::numbers::pi * std::numbers::pi /
                static_cast<double>(grid.size()));
  double step = 2.0 * spacing;
  int evaluations_left = 20000;
  while (step > 1e-8 && evaluations_left > 0) {
    const auto basis = tangent_basis(q);
    Eigen::Vector4d best_q = q;
    double best_local = best_f;
    for (const auto& direction : basis) {
      for (double sign : {1.0, -1.0}) {
        const Eigen::Vector4d cand = (q + sign * step * direction).normalized();
        const double f =
            dephased_entropy(rho, UnitaryParams(cand(0), cand(1), cand(2),
                                                cand(3)));
        --evaluations_left;
        if (f < best_local) {
          best_local = f;
          best_q = cand;
        }
      }
    }
    if (best_local < best_f) {
      best_f = best_local;
      q = best_q;
    } else {
      step *= 0.5;
    }
  }

  const MeasurementDirection dir =
      measurement_direction(UnitaryParams(q(0), q(1), q(2), q(3)));
  return make_result(best_f, pre, dir.z3);
}

DeficitResult deficit_for_lambda(Lambda lambda) {
  if (classify_phase(lambda) != Phase::Critical) {
    // Polarized ground state: pure, unchanged by a z-basis measurement.
    return {0.0, 1.0, 0.0, 0.0};
  }
  return minimize_over_z3(params_from_correlators(correlators(lambda)));
}

}  // namespace xxdeficit
