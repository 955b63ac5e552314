#include "doctest.h"

#include <cmath>
#include <utility>

#include "qedmagic/amplitudes.hpp"
#include "qedmagic/dirac.hpp"
#include "qedmagic/kinematics.hpp"

using namespace qedmagic;

TEST_CASE("gamma matrix algebra") {
  const double g[4] = {1, -1, -1, -1};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const CMat4 anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      const CMat4 want =
          (mu == nu ? 2.0 * g[mu] : 0.0) * CMat4::Identity();
      CHECK((anti - want).norm() < 1e-14);
    }
}

TEST_CASE("spinors satisfy the free dirac equation and normalization") {
  const double m = 0.7;
  const Vec3 p(0.3, -0.4, 1.2);
  const double e = std::sqrt(m * m + p.squaredNorm());
  const Vec4 pm = four_momentum(e, p);

  for (int s : {spin_up, spin_down}) {
    const CVec4 u = u_spinor(m, p, s);
    const CVec4 v = v_spinor(m, p, s);
    CHECK((slash(pm) * u - m * u).norm() < 1e-12);
    CHECK((slash(pm) * v + m * v).norm() < 1e-12);
    // ubar u = 2m, vbar v = -2m.
    const cplx uu = u.dot(gamma(0) * u);
    const cplx vv = v.dot(gamma(0) * v);
    CHECK(uu.real() == doctest::Approx(2 * m).epsilon(1e-12));
    CHECK(vv.real() == doctest::Approx(-2 * m).epsilon(1e-12));
    CHECK(std::abs(uu.imag()) < 1e-13);
  }

  // Zero momentum falls back to the z axis instead of dividing by zero.
  CHECK_NOTHROW(u_spinor(1.0, Vec3::Zero(), spin_up));
}

TEST_CASE("currents are conserved") {
  const double m = 1.0;
  const Vec3 p(0.2, 0.1, 0.9), k(-0.5, 0.4, 0.3);
  const double ep = std::sqrt(m * m + p.squaredNorm());
  const double ek = std::sqrt(m * m + k.squaredNorm());
  const CVec4 j =
      current(u_spinor(m, k, spin_up), u_spinor(m, p, spin_down));
  const Vec4 q = four_momentum(ep - ek, p - k);
  CHECK(std::abs(mink(j, q)) < 1e-12);
}

TEST_CASE("kinematics: conservation, shells, validation") {
  for (Process p : {Process::EeToMuMu, Process::Moller, Process::Bhabha,
                    Process::EMuElastic, Process::MuMuToEe}) {
    const double mu = p == Process::EeToMuMu ? 300.0 : 2.5;
    const LegMomenta legs = leg_momenta(p, 0.8, 0.25, mu);
    const Vec4 balance = legs.p1 + legs.p2 - legs.k1 - legs.k2;
    CHECK(balance.cwiseAbs().maxCoeff() < 1e-9);
    const std::pair<double, Vec4> shells[] = {{legs.mass_in1, legs.p1},
                                              {legs.mass_in2, legs.p2},
                                              {legs.mass_out1, legs.k1},
                                              {legs.mass_out2, legs.k2}};
    for (const auto& [mass, mom] : shells) {
      const double shell = mom(0) * mom(0) - mom.tail<3>().squaredNorm();
      CHECK(shell == doctest::Approx(mass * mass).epsilon(1e-10));
    }
  }

  CHECK_THROWS_AS(leg_momenta(Process::EeToMuMu, 0.5, 0.25, 1.0),
                  KinematicsError);  // below the heavy-pair threshold
  CHECK_THROWS_AS(leg_momenta(Process::Moller, 0.0, 1.0, 1.0),
                  DegenerateFrame);
  CHECK_THROWS_AS(leg_momenta(Process::Moller, pi, 1.0, 1.0), DegenerateFrame);
  CHECK_THROWS_AS(leg_momenta(Process::Moller, 0.5, 0.0, 1.0),
                  KinematicsError);
  CHECK_THROWS_AS(leg_momenta(Process::Moller, 0.5, 1.5, 1.0),
                  KinematicsError);
  CHECK_THROWS_AS(leg_momenta(Process::Moller, 0.5, 1.0, -1.0),
                  KinematicsError);

  // threshold_mu: resulting CM energy sits the requested fraction above 2/lambda.
  const double lam = 0.5, eps = 1e-6;
  const double mu = threshold_mu(lam, eps);
  const double e = std::sqrt(1 + mu * mu);
  CHECK(e * lam == doctest::Approx(1 + eps).epsilon(1e-12));
}

TEST_CASE("cm frame triad") {
  const Vec3 p1(0, 0, 1);
  const Vec3 k1(std::sin(0.6), 0, std::cos(0.6));
  const FrameTriad f = cm_frame(p1, k1);
  CHECK(f.x.norm() == doctest::Approx(1).epsilon(1e-12));
  CHECK(f.y.norm() == doctest::Approx(1).epsilon(1e-12));
  CHECK(f.z.norm() == doctest::Approx(1).epsilon(1e-12));
  CHECK(std::abs(f.x.dot(f.y)) < 1e-12);
  CHECK(std::abs(f.y.dot(f.z)) < 1e-12);
  CHECK((f.z - p1).norm() < 1e-12);
  CHECK((f.x - f.z.cross(f.y)).norm() < 1e-12);  // x completes z cross y
  // Final particle 1 at azimuth 0, its partner at pi.
  CHECK(std::atan2(k1.dot(f.y), k1.dot(f.x)) == doctest::Approx(0));
  const Vec3 k2 = -k1;
  CHECK(std::abs(std::atan2(k2.dot(f.y), k2.dot(f.x))) ==
        doctest::Approx(pi).epsilon(1e-12));
  CHECK_THROWS_AS(cm_frame(p1, p1), DegenerateFrame);
}

TEST_CASE("amplitude matrix: gauge term drops out") {
  for (Process p : {Process::EeToMuMu, Process::MuMuToEe}) {
    const KinematicPoint pt = make_point(p, 1.1, 0.5, 9.0);
    const CMat4 a0 = amplitude_matrix(pt).entries;
    const CMat4 a1 = amplitude_matrix(pt, 7.3).entries;
    CHECK((a0 - a1).cwiseAbs().maxCoeff() <
          1e-12 * a0.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("exchange antisymmetry at one deterministic point") {
  const ExchangeReport rep =
      exchange_antisymmetry_check(make_point(Process::Moller, 0.9, 1.0, 3.7));
  CHECK(rep.ok);
  CHECK(rep.max_relative_deviation < 1e-12);
  CHECK_THROWS_AS(
      exchange_antisymmetry_check(make_point(Process::Bhabha, 0.9, 1.0, 3.7)),
      std::invalid_argument);
}

TEST_CASE("phase and scale fixing") {
  CMat4 a = CMat4::Zero();
  a(1, 2) = cplx(0, 2);
  a(3, 3) = cplx(1, 0);
  const CMat4 f = fix_phase_scale(a);
  CHECK(std::abs(f(1, 2) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(f(3, 3) - cplx(0, -0.5)) < 1e-15);

  const CMat4 z = fix_phase_scale(CMat4::Zero());
  CHECK(z.norm() == 0);
}
