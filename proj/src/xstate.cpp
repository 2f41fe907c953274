#include "xxdeficit/xstate.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace xxdeficit {

namespace {

std::string short_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

XStateParams::XStateParams(double r, double c, double c3)
    : r_(r), c_(c), c3_(c3) {
  // The smaller eigenvalue of each X-state block; the larger ones cannot
  // go negative unless these do.
  const double transverse_min = 0.25 * (1.0 - c3 - 2.0 * std::abs(c));
  const double longitudinal_min = 0.25 * (1.0 + c3 - 2.0 * std::abs(r));
  if (!(transverse_min >= kEigenvalueFloor))
    throw std::invalid_argument(
        "XStateParams: eigenvalue (1 - c3 - 2|c|)/4 = " +
        short_num(transverse_min) + " is negative; state is not positive "
        "semidefinite");
  if (!(longitudinal_min >= kEigenvalueFloor))
    throw std::invalid_argument(
        "XStateParams: eigenvalue (1 + c3 - 2|r|)/4 = " +
        short_num(longitudinal_min) + " is negative; state is not positive "
        "semidefinite");
}

XStateParams params_from_correlators(const Correlators& corr) {
  return {corr.sigma_z, corr.xx, corr.zz};
}

Matrix4c build_density_matrix(const XStateParams& p) {
  const Matrix2c id = Matrix2c::Identity();
  const Matrix2c s1 = pauli(1);
  const Matrix2c s2 = pauli(2);
  const Matrix2c s3 = pauli(3);
  Matrix4c rho = kron(id, id);
  rho += p.r() * (kron(s3, id) + kron(id, s3));
  rho += p.c() * (kron(s1, s1) + kron(s2, s2));
  rho += p.c3() * kron(s3, s3);
  return 0.25 * rho;
}

std::array<double, 4> spectrum(const XStateParams& p) {
  const double off = 2.0 * std::abs(p.c());
  const double mag = 2.0 * std::abs(p.r());
  return {0.25 * (1.0 - p.c3() + off), 0.25 * (1.0 - p.c3() - off),
          0.25 * (1.0 + p.c3() + mag), 0.25 * (1.0 + p.c3() - mag)};
}

double entropy(const XStateParams& p) {
  // 2 - (1/4) sum x log2(x) over the four quadrupled eigenvalues x.
  const double xs[4] = {1.0 - p.c3() + 2.0 * std::abs(p.c()),
                        1.0 - p.c3() - 2.0 * std::abs(p.c()),
                        1.0 + p.c3() + 2.0 * std::abs(p.r()),
                        1.0 + p.c3() - 2.0 * std::abs(p.r())};
  double acc = 0.0;
  for (double x : xs)
    if (x > 0.0) acc += x * std::log2(x);
  return 2.0 - 0.25 * acc;
}

}  // namespace xxdeficit
