#pragma once

// Minimal complex linear algebra for the 2- and 4-dimensional spin spaces.
// Fixed-size Eigen value types; free functions templated on expressions.
// Basis ordering everywhere: {|00>,|01>,|10>,|11>} = {|uu>,|ud>,|du>,|dd>},
// left tensor factor = particle 1.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace qedmagic {

template <typename S> using Cplx = std::complex<S>;
template <typename S> using CVec2T = Eigen::Matrix<Cplx<S>, 2, 1>;
template <typename S> using CVec4T = Eigen::Matrix<Cplx<S>, 4, 1>;
template <typename S> using CMat2T = Eigen::Matrix<Cplx<S>, 2, 2>;
template <typename S> using CMat4T = Eigen::Matrix<Cplx<S>, 4, 4>;

using cplx = Cplx<double>;
using CVec2 = CVec2T<double>;
using CVec4 = CVec4T<double>;
using CMat2 = CMat2T<double>;
using CMat4 = CMat4T<double>;

// Relative squared-norm threshold below which an output state counts as
// annihilated: the only physical zero in scope is exact, so anything this
// small is roundoff.
inline constexpr double eps_norm = 1e-12;

struct VanishingState : std::runtime_error {
  VanishingState() : std::runtime_error("amplitude annihilates this state") {}
};

// Kronecker product, qubit 1 = left factor.
template <typename DA, typename DB>
  requires(DA::ColsAtCompileTime == 2)
CMat4T<typename DA::RealScalar> tensor(const Eigen::MatrixBase<DA>& a,
                                       const Eigen::MatrixBase<DB>& b) {
  static_assert(DA::RowsAtCompileTime == 2 && DA::ColsAtCompileTime == 2);
  static_assert(DB::RowsAtCompileTime == 2 && DB::ColsAtCompileTime == 2);
  CMat4T<typename DA::RealScalar> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b.derived();
  return out;
}

template <typename DA, typename DB>
  requires(DA::ColsAtCompileTime == 1)
CVec4T<typename DA::RealScalar> tensor(const Eigen::MatrixBase<DA>& a,
                                       const Eigen::MatrixBase<DB>& b) {
  static_assert(DA::RowsAtCompileTime == 2 && DB::RowsAtCompileTime == 2);
  static_assert(DB::ColsAtCompileTime == 1);
  CVec4T<typename DA::RealScalar> out;
  out.template head<2>() = a(0) * b.derived();
  out.template tail<2>() = a(1) * b.derived();
  return out;
}

// v / |v|, guarded by eps_norm relative to scale_sq (the squared magnitude of
// the largest amplitude entry at the same kinematic point; 1 for bare vectors).
template <typename D>
Eigen::Matrix<typename D::Scalar, D::RowsAtCompileTime, 1> normalize(
    const Eigen::MatrixBase<D>& v, typename D::RealScalar scale_sq = 1) {
  const auto n2 = v.squaredNorm();
  if (!(n2 >= eps_norm * scale_sq)) throw VanishingState{};
  return v.derived() / std::sqrt(n2);
}

// <v|m|v>; imaginary part is roundoff for Hermitian m.
template <typename DV, typename DM>
typename DV::Scalar expectation(const Eigen::MatrixBase<DV>& v,
                                const Eigen::MatrixBase<DM>& m) {
  return v.dot(m * v.derived());
}

}  // namespace qedmagic
