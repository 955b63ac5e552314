#pragma once

// Tree-level spin-amplitude matrices for the five processes, assembled from
// Dirac currents with the photon propagator in Feynman gauge. Entry (f, i) is
// the i -> f amplitude in the {|uu>,|ud>,|du>,|dd>} basis, couplings stripped.

#include "qedmagic/dirac.hpp"
#include "qedmagic/kinematics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qedmagic {

struct SpinAmplitudeMatrix {
  CMat4 entries;  // (f, i)
  KinematicPoint point;
};

namespace detail {

// Current tables indexed by the two spin labels of the legs involved.
using CurrentTable = std::array<std::array<CVec4, 2>, 2>;

template <typename Build>
CurrentTable make_currents(Build&& build) {
  CurrentTable t;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t[a][b] = build(a, b);
  return t;
}

inline cplx gauge_term(const CVec4& j1, const CVec4& j2, const Vec4& q,
                       double xi_gauge) {
  const double q2 = mink(q, q);
  return xi_gauge * mink(j1, q) * mink(j2, q) / (q2 * q2);
}

}  // namespace detail

// xi_gauge adds the non-Feynman propagator piece xi q^mu q^nu / q^4; current
// conservation makes it drop out, which the gauge-independence check exploits.
inline SpinAmplitudeMatrix amplitude_matrix(const KinematicPoint& point,
                                            double xi_gauge = 0.0) {
  const LegMomenta legs =
      leg_momenta(point.process, point.theta, point.lambda, point.mu_param);
  const Vec3 p1 = legs.p1.tail<3>(), p2 = legs.p2.tail<3>();
  const Vec3 k1 = legs.k1.tail<3>(), k2 = legs.k2.tail<3>();

  CMat4 a;
  auto entry_loop = [&a](auto&& entry) {
    for (int ci = 0; ci < 4; ++ci)
      for (int fi = 0; fi < 4; ++fi)
        a(fi, ci) = entry(fi >> 1, fi & 1, ci >> 1, ci & 1);
  };

  switch (point.process) {
    case Process::EeToMuMu:
    case Process::MuMuToEe: {
      const Vec4 q = legs.p1 + legs.p2;
      const double s = mink(q, q);
      const auto j_in = detail::make_currents([&](int s1, int s2) {
        return current(v_spinor(legs.mass_in1, p2, s2),
                       u_spinor(legs.mass_in1, p1, s1));
      });
      const auto j_out = detail::make_currents([&](int r1, int r2) {
        return current(u_spinor(legs.mass_out1, k1, r1),
                       v_spinor(legs.mass_out1, k2, r2));
      });
      entry_loop([&](int r1, int r2, int s1, int s2) {
        cplx amp = mink(j_in[s1][s2], j_out[r1][r2]) / s;
        if (xi_gauge != 0)
          amp += detail::gauge_term(j_in[s1][s2], j_out[r1][r2], q, xi_gauge);
        return amp;
      });
      break;
    }
    case Process::Moller: {
      const Vec4 qt = legs.p1 - legs.k1, qu = legs.p1 - legs.k2;
      const double t = mink(qt, qt), u = mink(qu, qu);
      const auto jt1 = detail::make_currents([&](int r1, int s1) {
        return current(u_spinor(1, k1, r1), u_spinor(1, p1, s1));
      });
      const auto jt2 = detail::make_currents([&](int r2, int s2) {
        return current(u_spinor(1, k2, r2), u_spinor(1, p2, s2));
      });
      const auto ju1 = detail::make_currents([&](int r2, int s1) {
        return current(u_spinor(1, k2, r2), u_spinor(1, p1, s1));
      });
      const auto ju2 = detail::make_currents([&](int r1, int s2) {
        return current(u_spinor(1, k1, r1), u_spinor(1, p2, s2));
      });
      entry_loop([&](int r1, int r2, int s1, int s2) {
        cplx amp = mink(jt1[r1][s1], jt2[r2][s2]) / t -
                   mink(ju1[r2][s1], ju2[r1][s2]) / u;
        if (xi_gauge != 0)
          amp += detail::gauge_term(jt1[r1][s1], jt2[r2][s2], qt, xi_gauge) -
                 detail::gauge_term(ju1[r2][s1], ju2[r1][s2], qu, xi_gauge);
        return amp;
      });
      break;
    }
    case Process::Bhabha: {
      const Vec4 qs = legs.p1 + legs.p2, qt = legs.p1 - legs.k1;
      const double s = mink(qs, qs), t = mink(qt, qt);
      const auto js1 = detail::make_currents([&](int s1, int s2) {
        return current(v_spinor(1, p2, s2), u_spinor(1, p1, s1));
      });
      const auto js2 = detail::make_currents([&](int r1, int r2) {
        return current(u_spinor(1, k1, r1), v_spinor(1, k2, r2));
      });
      const auto jt1 = detail::make_currents([&](int r1, int s1) {
        return current(u_spinor(1, k1, r1), u_spinor(1, p1, s1));
      });
      const auto jt2 = detail::make_currents([&](int s2, int r2) {
        return current(v_spinor(1, p2, s2), v_spinor(1, k2, r2));
      });
      entry_loop([&](int r1, int r2, int s1, int s2) {
        return mink(js1[s1][s2], js2[r1][r2]) / s -
               mink(jt1[r1][s1], jt2[s2][r2]) / t;
      });
      break;
    }
    case Process::EMuElastic: {
      const Vec4 qt = legs.p1 - legs.k1;
      const double t = mink(qt, qt);
      const double heavy = legs.mass_in2;
      const auto j1 = detail::make_currents([&](int r1, int s1) {
        return current(u_spinor(1, k1, r1), u_spinor(1, p1, s1));
      });
      const auto j2 = detail::make_currents([&](int r2, int s2) {
        return current(u_spinor(heavy, k2, r2), u_spinor(heavy, p2, s2));
      });
      entry_loop([&](int r1, int r2, int s1, int s2) {
        cplx amp = mink(j1[r1][s1], j2[r2][s2]) / t;
        if (xi_gauge != 0)
          amp += detail::gauge_term(j1[r1][s1], j2[r2][s2], qt, xi_gauge);
        return amp;
      });
      break;
    }
  }
  return {a, point};
}

// Removes the unphysical global phase and scale: the largest-magnitude entry
// (first in row-major order on ties) becomes exactly 1. Zero matrices pass
// through unchanged.
inline CMat4 fix_phase_scale(const CMat4& a) {
  double best = -1;
  cplx z = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (std::abs(a(r, c)) > best) {
        best = std::abs(a(r, c));
        z = a(r, c);
      }
  if (best <= 0) return a;
  return a * (std::conj(z) / (best * best));
}

// Max entrywise difference after fixing phase and scale of both matrices.
inline double fixed_deviation(const CMat4& a, const CMat4& b) {
  return (fix_phase_scale(a) - fix_phase_scale(b)).cwiseAbs().maxCoeff();
}

// X on both qubits: the spin relabeling induced by flipping the z axis.
inline CMat4 spin_flip_both() {
  const auto& x = detail::pauli1_matrices()[1];
  return tensor(x, x);
}

// Exchange of the two tensor slots: |ud> <-> |du>.
inline CMat4 particle_swap() {
  CMat4 s = CMat4::Zero();
  s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1;
  return s;
}

struct ExchangeReport {
  double max_relative_deviation;
  bool ok;
};

// Fermi statistics for identical final fermions: swapping them (theta ->
// pi - theta together with the induced z-flip spin relabeling and slot swap)
// must negate every amplitude.
inline ExchangeReport exchange_antisymmetry_check(const KinematicPoint& point,
                                                  double tol = 1e-10) {
  if (point.process != Process::Moller)
    throw std::invalid_argument("exchange check applies to identical fermions");
  const CMat4 xx = spin_flip_both();
  const CMat4 direct =
      amplitude_matrix(make_point(point.process, pi - point.theta, point.lambda,
                                  point.mu_param))
          .entries;
  const CMat4 exchanged =
      -xx * amplitude_matrix(point).entries * xx * particle_swap();
  const double dev = (direct - exchanged).cwiseAbs().maxCoeff() /
                     direct.cwiseAbs().maxCoeff();
  return {dev, dev <= tol};
}

}  // namespace qedmagic
