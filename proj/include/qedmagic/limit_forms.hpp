#pragma once

// Hard-coded analytic limits of the amplitude matrices (threshold, low- and
// high-energy) and the closed-form Xi_2 curves they produce. Leading mass or
// momentum powers are stripped; they cancel on normalization. Source layouts
// that index rows by the initial state are transposed here so every matrix is
// (final, initial) like the engine output.

#include "qedmagic/kinematics.hpp"
#include "qedmagic/qlinalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qedmagic {

namespace limits {

inline CMat4 threshold_eetomumu(double lambda) {
  CMat4 a = CMat4::Zero();
  a(0, 0) = a(3, 3) = -2;
  a(1, 1) = a(2, 2) = -lambda;
  a(1, 2) = a(2, 1) = lambda;
  return a;
}

inline CMat4 moller_low(double theta) {
  CMat4 a = CMat4::Zero();
  const double s = std::sin(theta), sh = std::sin(theta / 2), ch = std::cos(theta / 2);
  a(0, 0) = a(3, 3) = 4 * std::cos(theta) / (s * s);
  a(1, 1) = a(2, 2) = 1 / (sh * sh);
  a(1, 2) = a(2, 1) = -1 / (ch * ch);
  return a;
}

inline CMat4 bhabha_low(double theta) {
  return (2 / (1 - std::cos(theta))) * CMat4::Identity();
}

inline CMat4 emu_low(double theta, double lambda) {
  return (2 * lambda / (std::cos(theta) - 1)) * CMat4::Identity();
}

inline CMat4 mumutoee_low(double theta, double lambda) {
  const double c2 = std::cos(2 * theta);
  const double a = 0.5 * (-3 - lambda + (lambda - 1) * c2);
  const double b = (1 - lambda) * std::sin(theta) * std::sin(theta);
  const double c = (1 - lambda) * std::cos(theta) * std::sin(theta);
  const double v = 0.5 * (-1 - lambda + (1 - lambda) * c2);
  CMat4 m;
  m << a, c, -c, b,
       c, v, -v, c,
      -c, -v, v, -c,
       b, c, -c, a;
  return m;
}

// O(1) plus O(1/mu) terms; inv_mu = 0 keeps the direction limit only.
inline CMat4 eetomumu_high(double theta, double lambda, double inv_mu) {
  const double s2 = std::sin(2 * theta), c2 = std::cos(2 * theta);
  const double w = 0.5 * (1 - inv_mu) * s2;
  const double x = 0.5 * (1 - inv_mu) * (1 - c2);
  const double y = -0.5 * (3 + c2) + 0.5 * inv_mu * (c2 - 1);
  const double r = 0.5 * lambda * inv_mu * s2;
  const double q = 0.5 * lambda * inv_mu * (1 - c2);
  CMat4 m;
  m << y, r, -r, x,
       w, -q, q, w,
      -w, q, -q, -w,
       x, r, -r, y;
  return m;
}

// Mass-role swap of the annihilation channel: light and heavy legs trade
// places, and mu rescales to the heavy-leg momentum in its own mass units.
inline CMat4 mumutoee_high(double theta, double lambda, double inv_mu) {
  return eetomumu_high(theta, 1 / lambda, inv_mu / lambda);
}

inline CMat4 moller_high(double theta) {
  const double ct = std::cos(theta), c2 = std::cos(2 * theta);
  const double csc = 1 / std::sin(theta);
  const double sh = std::sin(theta / 2), ch = std::cos(theta / 2);
  const double d = (7 + c2) * ct * csc * csc;
  const double o = (3 + c2) * csc;
  CMat4 m;
  m << d, o, o, 2 * ct,
      -4 * csc, 2 / (sh * sh), -2 / (ch * ch), 4 * csc,
      -4 * csc, -2 / (ch * ch), 2 / (sh * sh), 4 * csc,
      2 * ct, -o, -o, d;
  return m.transpose();
}

inline CMat4 bhabha_high(double theta) {
  const double ct = std::cos(theta), c2 = std::cos(2 * theta);
  const double cth = 1 / std::tan(theta / 2), ch = std::cos(theta / 2);
  const double d = (15 * ct + std::cos(3 * theta)) / (4 - 4 * ct);
  const double o = 0.5 * (3 + c2) * cth;
  const double e = -2 * ch * ch * ct;
  CMat4 m;
  m << d, -o, o, e,
      2 * cth, 2 * cth * cth, 2, 2 * cth,
      -2 * cth, 2, 2 * cth * cth, -2 * cth,
      e, -o, o, d;
  return m.transpose();
}

inline CMat4 emu_high(double theta) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cth = 1 / std::tan(theta / 2);
  const double d = 3 + 4 / (ct - 1) + ct;
  const double o = -2 * cth + st;
  CMat4 m;
  m << d, o, o, -1 - ct,
      2 * cth, -2 * cth * cth, 2, -2 * cth,
      2 * cth, 2, -2 * cth * cth, -2 * cth,
      -1 - ct, -o, -o, d;
  return m.transpose();
}

}  // namespace limits

inline CMat4 limit_matrix(Process process, Regime regime, double theta,
                          double lambda, double inv_mu = 0.0) {
  switch (process) {
    case Process::EeToMuMu:
      if (regime == Regime::Threshold) return limits::threshold_eetomumu(lambda);
      if (regime == Regime::HighEnergy)
        return limits::eetomumu_high(theta, lambda, inv_mu);
      break;
    case Process::Moller:
      if (regime == Regime::LowEnergy) return limits::moller_low(theta);
      if (regime == Regime::HighEnergy) return limits::moller_high(theta);
      break;
    case Process::Bhabha:
      if (regime == Regime::LowEnergy) return limits::bhabha_low(theta);
      if (regime == Regime::HighEnergy) return limits::bhabha_high(theta);
      break;
    case Process::EMuElastic:
      if (regime == Regime::LowEnergy) return limits::emu_low(theta, lambda);
      if (regime == Regime::HighEnergy) return limits::emu_high(theta);
      break;
    case Process::MuMuToEe:
      if (regime == Regime::LowEnergy) return limits::mumutoee_low(theta, lambda);
      if (regime == Regime::HighEnergy)
        return limits::mumutoee_high(theta, lambda, inv_mu);
      break;
  }
  throw std::invalid_argument("no analytic limit for " + process_name(process) +
                              "/" + regime_name(regime));
}

inline bool has_limit_form(Process process, Regime regime) {
  switch (regime) {
    case Regime::Threshold: return process == Process::EeToMuMu;
    case Regime::LowEnergy: return process != Process::EeToMuMu;
    case Regime::HighEnergy: return true;
  }
  return false;
}

// Closed-form Xi_2 curves; values in (0, 1], magic is -log of them.
inline double closed_f1(double) { return 1.0; }

inline double closed_f2(double theta) {
  const double c = std::cos(theta);
  const double c4 = c * c * c * c;
  const double den = std::cos(2 * theta) + 3;
  return 16 * (c4 * c4 + 14 * c4 + 1) / (den * den * den * den);
}

inline double closed_f3(double theta) {
  const double den = 3 * std::cos(2 * theta) + 5;
  return (993 * std::cos(2 * theta) + 294 * std::cos(4 * theta) +
          15 * std::cos(6 * theta) + 746) /
         (4 * den * den * den);
}

inline double closed_f4(double theta) {
  const double num = 13336 * std::cos(2 * theta) + 5796 * std::cos(4 * theta) +
                     1960 * std::cos(6 * theta) + 532 * std::cos(8 * theta) +
                     56 * std::cos(10 * theta) + 28 * std::cos(12 * theta) +
                     8 * std::cos(14 * theta) + std::cos(16 * theta) + 11051;
  const double den = std::cos(2 * theta) + 3;
  return num / (128 * den * den * den * den);
}

inline double closed_f5(double theta) { return (std::cos(8 * theta) + 7) / 8; }

inline double closed_g1(double lambda) {
  const double l2 = lambda * lambda, l4 = l2 * l2;
  const double den = l2 + 1;
  return (l4 * l4 + 14 * l4 + 1) / (den * den * den * den);
}

inline double closed_g2(double lambda) {
  const double l2 = lambda * lambda, l4 = l2 * l2;
  const double den = l2 + 2;
  return (l4 * l4 + 28 * l4 + 16) / (den * den * den * den);
}

// Xi_2 at the theta maximizing the id-13 class of the low-energy mu mu -> ee
// distribution (theta = pi/4 or 3pi/4); log(16/7) at lambda=0, log(9/5) at 1.
inline double g8_max_closed(double lambda) {
  const double l2 = lambda * lambda, l4 = l2 * l2;
  const double den = l2 + 2;
  return (l4 * l4 + 19 * l4 + 18 * l2 + 7) / (den * den * den * den);
}

inline double closed_form_xi2(const std::string& name, double theta,
                              double lambda) {
  if (name == "F1") return closed_f1(theta);
  if (name == "F2") return closed_f2(theta);
  if (name == "F3") return closed_f3(theta);
  if (name == "F4") return closed_f4(theta);
  if (name == "F5") return closed_f5(theta);
  if (name == "G1") return closed_g1(lambda);
  if (name == "G2") return closed_g2(lambda);
  if (name == "G8max") return g8_max_closed(lambda);
  throw std::invalid_argument("unknown closed form '" + name + "'");
}

}  // namespace qedmagic
