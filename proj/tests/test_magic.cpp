#include "doctest.h"

#include <cmath>

#include "qedmagic/magic.hpp"
#include "qedmagic/stabilizer.hpp"

using namespace qedmagic;

namespace {
CVec2 bloch(double x, double y, double z) {
  // Unit Bloch vector (x, y, z) -> pure state.
  const double t = std::acos(z);
  CVec2 v;
  v << std::cos(t / 2),
      std::polar(std::sin(t / 2), std::atan2(y, x));
  return v;
}
}  // namespace

TEST_CASE("known single-qubit magic values") {
  // T state: equator at 45 degrees, the magic = log(4/3) benchmark.
  const CVec2 t = bloch(std::sqrt(0.5), std::sqrt(0.5), 0);
  CHECK(sre(t, 2) == doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-12));

  // Body-diagonal state saturates the d=2 bound log(3/2).
  const double s = 1 / std::sqrt(3.0);
  const CVec2 h = bloch(s, s, s);
  CHECK(sre(h, 2) == doctest::Approx(std::log(3.0 / 2.0)).epsilon(1e-12));
  CHECK(sre(h, 2) == doctest::Approx(sic_bound(2, 2)).epsilon(1e-12));

  // Third-order moment of the T state: sum <P>^6 / 2 = 5/8.
  CHECK(pauli_moment(t, 3) == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(sre(t, 3) == doctest::Approx(std::log(8.0 / 5.0) / 2).epsilon(1e-12));
}

TEST_CASE("order must be at least 2") {
  const CVec2 e0 = (CVec2() << 1, 0).finished();
  CHECK_THROWS_AS(pauli_moment(e0, 1), std::invalid_argument);
  CHECK_THROWS_AS(pauli_moment(e0, 0), std::invalid_argument);
}

TEST_CASE("two-qubit values and helpers") {
  // Stabilizer states carry exactly zero magic.
  for (int i : {0, 11, 36, 59})
    CHECK(std::abs(sre(stabilizer_catalog()[i].state, 2)) < 1e-12);

  // T tensor T is additive: 2 log(4/3).
  const CVec2 t = bloch(std::sqrt(0.5), std::sqrt(0.5), 0);
  const CVec4 tt = tensor(t, t);
  CHECK(sre(tt, 2) == doctest::Approx(2 * std::log(4.0 / 3.0)).epsilon(1e-12));

  const MagicValue mv = magic_value(tt);
  CHECK(mv.m2 == doctest::Approx(-std::log(mv.xi2)).epsilon(1e-14));
  CHECK(xi2(tt) == doctest::Approx(mv.xi2).epsilon(1e-14));
}

TEST_CASE("bound constants") {
  CHECK(sic_bound(4, 2) == doctest::Approx(std::log(5.0 / 2.0)).epsilon(1e-14));
  CHECK(whmub_value(4, 2) ==
        doctest::Approx(std::log(16.0 / 7.0)).epsilon(1e-14));
  CHECK(whmub_value(2, 2) ==
        doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-14));
  CHECK(whmub_value(4, 2) < sic_bound(4, 2));
  CHECK_THROWS_AS(sic_bound(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(whmub_value(0, 2), std::invalid_argument);
}
