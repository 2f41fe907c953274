#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

namespace xxdeficit {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

// Shared numeric tolerances.
inline constexpr double kHermitianTol = 1e-12;      // entrywise |M - M^dag|
inline constexpr double kEigenvalueFloor = -1e-10;  // clamp limit for spectra
inline constexpr double kProbabilitySumTol = 1e-8;

// Standard Pauli matrix, index in {1, 2, 3}.
Matrix2c pauli(int index);

// Projector |k><k| onto the computational basis, k in {0, 1}.
Matrix2c basis_projector(int k);

// Kronecker product; row index of the result is 2*i_a + i_b.
Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

// Real spectrum of a Hermitian 4x4 matrix in descending order.
// Rejects input that is not Hermitian within kHermitianTol.
std::array<double, 4> hermitian_eigenvalues(const Matrix4c& m);

// -sum p log2(p) with the convention 0 log 0 = 0. Entries in
// [kEigenvalueFloor, 0) are clamped to zero; anything more negative is
// rejected, as is a total far from 1.
double entropy_kernel(std::span<const double> probs);
double entropy_kernel(std::initializer_list<double> probs);

}  // namespace xxdeficit
