#include "xxdeficit/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace xxdeficit {

namespace {

const Complex kImag{0.0, 1.0};

std::string short_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

Matrix2c pauli(int index) {
  Matrix2c m;
  switch (index) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kImag, kImag, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3, got " +
                                  std::to_string(index));
  }
  return m;
}

Matrix2c basis_projector(int k) {
  if (k != 0 && k != 1)
    throw std::invalid_argument("basis_projector: k must be 0 or 1, got " +
                                std::to_string(k));
  Matrix2c m = Matrix2c::Zero();
  m(k, k) = 1.0;
  return m;
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const Matrix4c& m) {
  const double asymmetry = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > kHermitianTol)
    throw std::invalid_argument(
        "hermitian_eigenvalues: matrix is not Hermitian, max |M - M^dag| = " +
        short_num(asymmetry));
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  return {ev(3), ev(2), ev(1), ev(0)};
}

double entropy_kernel(std::span<const double> probs) {
  double sum = 0.0;
  double bits = 0.0;
  for (double p : probs) {
    if (p < kEigenvalueFloor)
      throw std::invalid_argument("entropy_kernel: probability " +
                                  short_num(p) + " below clamp tolerance");
    const double q = p < 0.0 ? 0.0 : p;
    sum += q;
    if (q > 0.0) bits -= q * std::log2(q);
  }
  if (std::abs(sum - 1.0) > kProbabilitySumTol)
    throw std::invalid_argument("entropy_kernel: probabilities sum to " +
                                short_num(sum));
  return bits;
}

double entropy_kernel(std::initializer_list<double> probs) {
  return entropy_kernel(std::span<const double>(probs.begin(), probs.size()));
}

}  // namespace xxdeficit
