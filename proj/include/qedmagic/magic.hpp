#pragma once

// Stabilizer Renyi entropy M_alpha and its two-qubit bounds.
// Natural logarithm throughout; every magic value is in nats.

#include "qedmagic/pauli.hpp"
#include "qedmagic/qlinalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qedmagic {

// Xi_P = <psi|P|psi>^2 / d for one Pauli string; psi normalized.
template <int Dim>
double xi_p(const Eigen::Matrix<cplx, Dim, 1>& psi, const PauliStringT<Dim>& p) {
  const double e = std::real(expectation(psi, p.matrix));
  return e * e / Dim;
}

namespace detail {
template <int Dim> const auto& strings_for();
template <> inline const auto& strings_for<2>() { return pauli_strings_1q(); }
template <> inline const auto& strings_for<4>() { return pauli_strings_2q(); }
}  // namespace detail

// Sum over all Pauli strings of <psi|P|psi>^(2 alpha) / d.
template <typename D>
double pauli_moment(const Eigen::MatrixBase<D>& psi, int alpha) {
  constexpr int Dim = D::RowsAtCompileTime;
  static_assert(Dim == 2 || Dim == 4, "1- or 2-qubit states only");
  if (alpha < 2) throw std::invalid_argument("alpha must be an integer >= 2");
  const Eigen::Matrix<cplx, Dim, 1> v = psi.derived();
  double sum = 0;
  for (const auto& p : detail::strings_for<Dim>()) {
    const double e = std::real(expectation(v, p.matrix));
    double pw = e * e;
    for (int k = 1; k < alpha; ++k) pw *= e * e;
    sum += pw;
  }
  return sum / Dim;
}

template <typename D>
double xi2(const Eigen::MatrixBase<D>& psi) {
  return pauli_moment(psi, 2);
}

// M_alpha = log(pauli_moment) / (1 - alpha); zero exactly on stabilizer states.
template <typename D>
double sre(const Eigen::MatrixBase<D>& psi, int alpha = 2) {
  return std::log(pauli_moment(psi, alpha)) / (1.0 - alpha);
}

struct MagicValue {
  double xi2;
  double m2;  // -log(xi2)
};

template <typename D>
MagicValue magic_value(const Eigen::MatrixBase<D>& psi) {
  const double x = xi2(psi);
  return {x, -std::log(x)};
}

namespace detail {
inline void check_power_of_two(int d) {
  if (d < 2 || (d & (d - 1)) != 0)
    throw std::invalid_argument("dimension must be 2^n, n >= 1");
}
}  // namespace detail

// Upper bound (1/(1-alpha)) log[(1 + (d-1)(d+1)^(1-alpha))/d]; for d=4,
// alpha=2 this is log(5/2), saturated only by a SIC fiducial if one exists.
inline double sic_bound(int d, int alpha) {
  detail::check_power_of_two(d);
  const double a = alpha;
  return std::log((1 + (d - 1) * std::pow(d + 1.0, 1 - a)) / d) / (1 - a);
}

// Value attained by Weyl-Heisenberg MUB states:
// (1/(1-alpha)) log[(1 + (d-1) d^(1-alpha))/d]; log(16/7) for d=4, alpha=2.
// Proven maximal for two qubits; asserted here only for d=4.
inline double whmub_value(int d, int alpha) {
  detail::check_power_of_two(d);
  const double a = alpha;
  return std::log((1 + (d - 1) * std::pow(double(d), 1 - a)) / d) / (1 - a);
}

}  // namespace qedmagic
