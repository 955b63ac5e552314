#include "doctest.h"

#include <cmath>

#include "qedmagic/limit_forms.hpp"
#include "qedmagic/magic.hpp"
#include "qedmagic/stabilizer.hpp"

using namespace qedmagic;

namespace {
double m2_from(const CMat4& a, int id) {
  const CVec4 out = a * stabilizer_catalog()[id - 1].state;
  return sre(CVec4(out.normalized()), 2);
}
}  // namespace

TEST_CASE("limit form availability") {
  CHECK(has_limit_form(Process::EeToMuMu, Regime::Threshold));
  CHECK_FALSE(has_limit_form(Process::Moller, Regime::Threshold));
  CHECK_FALSE(has_limit_form(Process::EeToMuMu, Regime::LowEnergy));
  for (Process p : {Process::Moller, Process::Bhabha, Process::EMuElastic,
                    Process::MuMuToEe})
    CHECK(has_limit_form(p, Regime::LowEnergy));
  for (Process p : {Process::EeToMuMu, Process::Moller, Process::Bhabha,
                    Process::EMuElastic, Process::MuMuToEe})
    CHECK(has_limit_form(p, Regime::HighEnergy));

  CHECK_THROWS_AS(limit_matrix(Process::Moller, Regime::Threshold, 1, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(limit_matrix(Process::EeToMuMu, Regime::LowEnergy, 1, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("closed-form curves at exact points") {
  CHECK(closed_f1(0.3) == 1.0);
  CHECK(closed_f5(pi / 8) == doctest::Approx(0.75).epsilon(1e-14));
  // F2 peak: theta = 2 arctan sqrt(sqrt(2)-1) gives xi2 = 3/4.
  const double th2 = 2 * std::atan(std::sqrt(std::sqrt(2.0) - 1));
  CHECK(closed_f2(th2) == doctest::Approx(0.75).epsilon(1e-12));
  // F3 peak at arctan(2 sqrt 2) gives 5/9.
  CHECK(closed_f3(std::atan(2 * std::sqrt(2.0))) ==
        doctest::Approx(5.0 / 9.0).epsilon(1e-12));
  // F4 peak at pi/4 gives 5/9; F4(pi/2) = 1 (zero magic).
  CHECK(closed_f4(pi / 4) == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
  CHECK(closed_f4(pi / 2) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(closed_g1(std::sqrt(2.0) - 1) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(closed_g1(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(closed_g2(1) == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
  CHECK(g8_max_closed(0) == doctest::Approx(7.0 / 16.0).epsilon(1e-14));
  CHECK(g8_max_closed(1) == doctest::Approx(5.0 / 9.0).epsilon(1e-14));

  CHECK(closed_form_xi2("F2", th2, 0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(closed_form_xi2("G1", 0, std::sqrt(2.0) - 1) ==
        doctest::Approx(0.75).epsilon(1e-12));
  CHECK_THROWS_AS(closed_form_xi2("F99", 1, 1), std::invalid_argument);
}

TEST_CASE("matrix forms reproduce their closed-form curves") {
  for (double theta : {0.3, 0.9, 1.7, 2.8}) {
    CHECK(m2_from(limits::moller_low(theta), 3) ==
          doctest::Approx(-std::log(closed_f2(theta))).epsilon(1e-12));
    CHECK(m2_from(limits::moller_low(theta), 13) ==
          doctest::Approx(-std::log(closed_f3(theta))).epsilon(1e-12));
    CHECK(m2_from(limits::eetomumu_high(theta, 0.005, 0), 1) ==
          doctest::Approx(-std::log(closed_f4(theta))).epsilon(1e-12));
    // State 3 sits in the kernel of the direction limit; its distribution is
    // carried by the 1/mu coefficient matrix.
    const CMat4 tier1 = limits::eetomumu_high(theta, 0.005, 1) -
                        limits::eetomumu_high(theta, 0.005, 0);
    CHECK(m2_from(tier1, 3) ==
          doctest::Approx(-std::log(closed_f5(theta))).epsilon(1e-12));
    // Identity-like low-energy forms: no magic for any catalog state.
    CHECK(m2_from(limits::bhabha_low(theta), 13) ==
          doctest::Approx(0).epsilon(1e-12));
    CHECK(std::abs(m2_from(limits::emu_low(theta, 0.3), 29)) < 1e-12);
  }
  for (double lam : {0.1, 0.41421356, 0.9}) {
    CHECK(m2_from(limits::threshold_eetomumu(lam), 7) ==
          doctest::Approx(-std::log(closed_g1(lam))).epsilon(1e-11));
    CHECK(m2_from(limits::threshold_eetomumu(lam), 13) ==
          doctest::Approx(-std::log(closed_g2(lam))).epsilon(1e-11));
  }
}

TEST_CASE("mass-role swap of the annihilation high-energy form") {
  // Same direction part; the 1/mu part rescales by the mass ratio swap.
  const double theta = 1.234, lam = 0.2;
  const CMat4 a = limits::mumutoee_high(theta, lam, 0);
  const CMat4 b = limits::eetomumu_high(theta, 1 / lam, 0);
  CHECK((a - b).norm() < 1e-14);
}
