#include <Eigen/Eigenvalues>
#include <cmath>

#include "spinindex/error.hpp"
#include "spinindex/spinindex.hpp"

namespace spinindex {

namespace {

constexpr double kFixedTolerance = 1e-9;

template <int N>
std::complex<double> det_one_minus(const Eigen::Matrix<double, N, N>& rotation) {
  Eigen::EigenSolver<Eigen::Matrix<double, N, N>> solver(rotation, false);
  std::complex<double> product = 1.0;
  for (int i = 0; i < N; ++i) {
    const std::complex<double> f = 1.0 - solver.eigenvalues()[i];
    if (std::abs(f) < kFixedTolerance) throw NonIsolatedFixedPoint("rotation part has eigenvalue 1");
    product *= f;
  }
  return product;
}

}  // namespace

double nu_numeric_oracle(const SpinMatrix4<double>& phi_hat, const HyperboloidPoint4<double>& x) {
  const Quaternion<double> q = zeta_inv(x);
  const double s = 1.0 / std::sqrt(1.0 - q.norm2());
  const SpinMatrix4<double> g{Quaternion<double>::real(s), q * s, q.conj() * s, Quaternion<double>::real(s)};
  const SpinMatrix4<double> d = g.group_inverse() * phi_hat * g;
  const auto lorentz = eta4_unchecked(d);
  if (std::abs(lorentz(4, 4) - 1.0) > kFixedTolerance) throw InconsistentInput("the point is not fixed");
  Eigen::Matrix4d rotation;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) rotation(i, j) = lorentz(i, j);
  }
  const double trace_difference = 2.0 * d.a.re() - 2.0 * d.d.re();
  return trace_difference / det_one_minus<4>(rotation).real();
}

std::complex<double> nu_numeric_oracle_2d(const SpinMatrix2<std::complex<double>>& phi_hat,
                                          const HyperboloidPoint2<double>& x) {
  const std::complex<double> z = zeta2_inv<std::complex<double>>(x);
  const double s = 1.0 / std::sqrt(1.0 - std::norm(z));
  const SpinMatrix2<std::complex<double>> g{s, z * s, std::conj(z) * s, s};
  const auto d = g.group_inverse() * phi_hat * g;
  const auto lorentz = eta2_unchecked(d);
  if (std::abs(lorentz(2, 2) - 1.0) > kFixedTolerance) throw InconsistentInput("the point is not fixed");
  Eigen::Matrix2d rotation;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) rotation(i, j) = lorentz(i, j);
  }
  return (d.d - d.a) / det_one_minus<2>(rotation).real();
}

}  // namespace spinindex
