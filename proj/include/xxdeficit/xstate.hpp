#pragma once

#include <array>

#include "xxdeficit/linalg.hpp"
#include "xxdeficit/xxmodel.hpp"

namespace xxdeficit {

// Symmetric two-qubit X state in Bloch form: both spins share the same z
// magnetization r and the same transverse correlator c; c3 is the
// longitudinal correlator. The symmetry is enforced at the type level
// because the closed-form post-measurement spectrum assumes it.
// Construction rejects parameters whose spectrum dips below
// kEigenvalueFloor, naming the offending eigenvalue.
class XStateParams {
 public:
  XStateParams(double r, double c, double c3);

  double r() const { return r_; }
  double c() const { return c_; }
  double c3() const { return c3_; }

 private:
  double r_;
  double c_;
  double c3_;
};

// r = <sigma^z>, c = <sigma^x sigma^x>, c3 = <sigma^z sigma^z>.
XStateParams params_from_correlators(const Correlators& corr);

// (I x I + r s3 x I + r I x s3 + c s1 x s1 + c s2 x s2 + c3 s3 x s3) / 4.
Matrix4c build_density_matrix(const XStateParams& p);

// Closed-form spectrum: (1 - c3 +- 2|c|)/4 and (1 + c3 +- 2|r|)/4.
std::array<double, 4> spectrum(const XStateParams& p);

// Von Neumann entropy in bits.
double entropy(const XStateParams& p);

}  // namespace xxdeficit
