#pragma once

// CM-frame kinematics for the five processes. Incoming particle 1 moves along
// +z, outgoing particle 1 at polar angle theta in the x-z plane (azimuth 0).
// All masses and momenta in electron-mass units; lambda = ratio of the light
// to the heavy lepton mass, mu = |p1|/m_e.

#include "qedmagic/dirac.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qedmagic {

inline constexpr double pi = std::numbers::pi;

enum class Process { EeToMuMu, Moller, Bhabha, EMuElastic, MuMuToEe };
enum class Regime { Threshold, LowEnergy, HighEnergy };

struct KinematicsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Collinear beams or theta at an endpoint: the (x,y,z) triad is undefined.
struct DegenerateFrame : KinematicsError {
  using KinematicsError::KinematicsError;
};

inline std::string process_name(Process p) {
  switch (p) {
    case Process::EeToMuMu: return "eetomumu";
    case Process::Moller: return "moller";
    case Process::Bhabha: return "bhabha";
    case Process::EMuElastic: return "emu";
    case Process::MuMuToEe: return "mumutoee";
  }
  throw std::invalid_argument("unknown process");
}

inline Process parse_process(const std::string& s) {
  for (Process p : {Process::EeToMuMu, Process::Moller, Process::Bhabha,
                    Process::EMuElastic, Process::MuMuToEe})
    if (s == process_name(p)) return p;
  throw std::invalid_argument("unknown process '" + s + "'");
}

inline std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Threshold: return "threshold";
    case Regime::LowEnergy: return "low";
    case Regime::HighEnergy: return "high";
  }
  throw std::invalid_argument("unknown regime");
}

inline Regime parse_regime(const std::string& s) {
  for (Regime r : {Regime::Threshold, Regime::LowEnergy, Regime::HighEnergy})
    if (s == regime_name(r)) return r;
  throw std::invalid_argument("unknown regime '" + s + "'");
}

struct KinematicPoint {
  Process process;
  double theta;     // radians, strictly inside (0, pi)
  double lambda;    // mass ratio in (0, 1]
  double mu_param;  // |p1|/m_e > 0
  double sqrt_s;    // derived CM energy
};

// Masses and on-shell four-momenta of the four legs at a kinematic point.
struct LegMomenta {
  double mass_in1, mass_in2, mass_out1, mass_out2;
  Vec4 p1, p2, k1, k2;
};

inline LegMomenta leg_momenta(Process process, double theta, double lambda,
                              double mu_param) {
  if (!(theta > 0 && theta < pi))
    throw DegenerateFrame("theta must be strictly inside (0, pi)");
  if (!(lambda > 0 && lambda <= 1))
    throw KinematicsError("lambda must be in (0, 1]");
  if (!(mu_param > 0)) throw KinematicsError("mu must be positive");

  const double heavy = 1.0 / lambda;
  const Vec3 zhat(0, 0, 1);
  const Vec3 nhat(std::sin(theta), 0, std::cos(theta));

  LegMomenta legs;
  double p = mu_param, k = 0, e = 0;
  switch (process) {
    case Process::EeToMuMu: {
      legs = {1, 1, heavy, heavy, {}, {}, {}, {}};
      e = std::sqrt(1 + p * p);
      if (e < heavy) throw KinematicsError("below heavy-pair threshold");
      k = std::sqrt(e * e - heavy * heavy);
      break;
    }
    case Process::Moller:
    case Process::Bhabha: {
      legs = {1, 1, 1, 1, {}, {}, {}, {}};
      e = std::sqrt(1 + p * p);
      k = p;
      break;
    }
    case Process::EMuElastic: {
      legs = {1, heavy, 1, heavy, {}, {}, {}, {}};
      const double e1 = std::sqrt(1 + p * p);
      const double e2 = std::sqrt(heavy * heavy + p * p);
      legs.p1 = four_momentum(e1, p * zhat);
      legs.p2 = four_momentum(e2, -p * zhat);
      legs.k1 = four_momentum(e1, p * nhat);
      legs.k2 = four_momentum(e2, -p * nhat);
      return legs;
    }
    case Process::MuMuToEe: {
      legs = {heavy, heavy, 1, 1, {}, {}, {}, {}};
      e = std::sqrt(heavy * heavy + p * p);
      k = std::sqrt(e * e - 1);
      break;
    }
  }
  legs.p1 = four_momentum(e, p * zhat);
  legs.p2 = four_momentum(e, -p * zhat);
  legs.k1 = four_momentum(e, k * nhat);
  legs.k2 = four_momentum(e, -k * nhat);
  return legs;
}

inline KinematicPoint make_point(Process process, double theta, double lambda,
                                 double mu_param) {
  const LegMomenta legs = leg_momenta(process, theta, lambda, mu_param);
  return {process, theta, lambda, mu_param, legs.p1(0) + legs.p2(0)};
}

// mu such that sqrt_s sits a relative eps above the heavy-pair threshold.
inline double threshold_mu(double lambda, double eps) {
  if (!(lambda > 0 && lambda <= 1))
    throw KinematicsError("lambda must be in (0, 1]");
  if (!(eps > 0)) throw KinematicsError("eps must be positive");
  const double e = (1 + eps) / lambda;
  return std::sqrt(e * e - 1);
}

struct FrameTriad {
  Vec3 x, y, z;
};

// z along the beam, y normal to the scattering plane, x completing the triad;
// the outgoing particle 1 then has azimuth 0 and particle 2 has pi.
inline FrameTriad cm_frame(const Vec3& p1_direction, const Vec3& k1_direction) {
  const Vec3 cross = k1_direction.cross(p1_direction);
  const double denom = cross.norm();
  if (!(denom > 1e-14 * p1_direction.norm() * k1_direction.norm()))
    throw DegenerateFrame("incoming and outgoing momenta are collinear");
  FrameTriad f;
  f.z = p1_direction.normalized();
  f.y = cross / denom;
  f.x = f.z.cross(f.y);
  return f;
}

}  // namespace qedmagic
