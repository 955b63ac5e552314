#pragma once

// Dirac-representation spinor algebra on fixed-size Eigen types. Spins are
// projected on the lab z axis for every leg (no helicity basis); spinor
// normalization is ubar u = 2m, vbar v = -2m. Metric signature (+,-,-,-).

#include "qedmagic/pauli.hpp"

#include <cmath>

namespace qedmagic {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;  // contravariant (E, px, py, pz)

// 0 selects spin up along z, 1 selects spin down.
inline constexpr int spin_up = 0;
inline constexpr int spin_down = 1;

inline const CMat4& gamma(int mu) {
  static const std::array<CMat4, 4> g = [] {
    std::array<CMat4, 4> out;
    for (auto& m : out) m.setZero();
    out[0].diagonal() << 1, 1, -1, -1;
    const auto& sigma = detail::pauli1_matrices();
    for (int k = 1; k < 4; ++k) {
      out[k].topRightCorner<2, 2>() = sigma[k];
      out[k].bottomLeftCorner<2, 2>() = -sigma[k];
    }
    return out;
  }();
  return g.at(static_cast<std::size_t>(mu));
}

inline CMat2 sigma_dot(const Vec3& n) {
  const auto& s = detail::pauli1_matrices();
  return n.x() * s[1] + n.y() * s[2] + n.z() * s[3];
}

namespace detail {

// z-axis fallback keeps the rest-frame spinor well defined at |p| = 0.
inline Vec3 direction(const Vec3& p) {
  const double n = p.norm();
  return n > 0 ? Vec3(p / n) : Vec3(0, 0, 1);
}

inline CVec2 basis2(int s) {
  CVec2 xi = CVec2::Zero();
  xi(s) = 1;
  return xi;
}

}  // namespace detail

// Positive-energy spinor: pure boost of the rest-frame Sigma_z eigenstate.
inline CVec4 u_spinor(double mass, const Vec3& p, int spin) {
  const double e = std::sqrt(mass * mass + p.squaredNorm());
  const double a = std::sqrt(e + mass), b = std::sqrt(std::max(e - mass, 0.0));
  const CVec2 xi = detail::basis2(spin);
  CVec4 w;
  w.head<2>() = a * xi;
  w.tail<2>() = b * (sigma_dot(detail::direction(p)) * xi);
  return w;
}

// Negative-energy spinor with eta_s = sigma1 xi_s, so that v(spin) pairs with
// the antiparticle carrying that z-spin label in the amplitude tables.
inline CVec4 v_spinor(double mass, const Vec3& p, int spin) {
  const double e = std::sqrt(mass * mass + p.squaredNorm());
  const double a = std::sqrt(e + mass), b = std::sqrt(std::max(e - mass, 0.0));
  const CVec2 eta = detail::basis2(1 - spin);
  CVec4 w;
  w.head<2>() = b * (sigma_dot(detail::direction(p)) * eta);
  w.tail<2>() = a * eta;
  return w;
}

// J^mu = wbar gamma^mu w, with the bar applied here (wbar_leg passed unbarred).
inline CVec4 current(const CVec4& wbar_leg, const CVec4& w) {
  CVec4 j;
  for (int mu = 0; mu < 4; ++mu) j(mu) = wbar_leg.dot(gamma(0) * (gamma(mu) * w));
  return j;
}

inline cplx mink(const CVec4& a, const CVec4& b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

inline double mink(const Vec4& a, const Vec4& b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

inline cplx mink(const CVec4& a, const Vec4& b) {
  return a(0) * b(0) - a(1) * b(1) - a(2) * b(2) - a(3) * b(3);
}

inline Vec4 four_momentum(double energy, const Vec3& p) {
  return Vec4(energy, p.x(), p.y(), p.z());
}

inline CMat4 slash(const Vec4& p) {
  CMat4 m = p(0) * gamma(0);
  for (int k = 1; k < 4; ++k) m -= p(k) * gamma(k);
  return m;
}

}  // namespace qedmagic
