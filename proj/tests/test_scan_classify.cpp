#include "doctest.h"

#include <cmath>

#include "qedmagic/limit_forms.hpp"
#include "qedmagic/scan.hpp"

using namespace qedmagic;

namespace {
const DistributionClass* class_of(const ClassificationReport& r, int rep) {
  for (const DistributionClass& c : r.classes)
    if (c.representative == rep) return &c;
  return nullptr;
}
}  // namespace

TEST_CASE("grids") {
  const auto tg = theta_grid(180);
  REQUIRE(tg.size() == 179);
  CHECK(tg.front() == doctest::Approx(pi / 180).epsilon(1e-15));
  CHECK(tg.back() == doctest::Approx(179 * pi / 180).epsilon(1e-15));

  const auto lg = lambda_grid(4);
  REQUIRE(lg.size() == 5);
  CHECK(lg.front() == 0.0);
  CHECK(lg[2] == 0.5);
  CHECK(lg.back() == 1.0);

  CHECK_THROWS_AS(theta_grid(1), std::invalid_argument);
  CHECK_THROWS_AS(lambda_grid(0), std::invalid_argument);
}

TEST_CASE("maximum location") {
  const auto mr = find_maxima([](double x) { return std::cos(x - 1); }, 0, pi,
                              false);
  CHECK_FALSE(mr.flat);
  CHECK(mr.best == doctest::Approx(1.0).epsilon(1e-10));
  REQUIRE(mr.maxima.size() == 1);
  CHECK(std::abs(mr.maxima[0].arg - 1.0) < 1e-6);

  // Two exactly-degenerate peaks both survive, in ascending order.
  const auto two = find_maxima(
      [](double x) {
        const double s = std::sin(2 * x);
        return s * s;
      },
      0, pi, false);
  REQUIRE(two.maxima.size() == 2);
  CHECK(std::abs(two.maxima[0].arg - pi / 4) < 1e-6);
  CHECK(std::abs(two.maxima[1].arg - 3 * pi / 4) < 1e-6);

  // Included endpoints are eligible maximizers.
  const auto edge = find_maxima([](double x) { return x; }, 0, 1, true);
  REQUIRE(edge.maxima.size() == 1);
  CHECK(std::abs(edge.maxima[0].arg - 1.0) < 1e-9);

  const auto flat = find_maxima([](double) { return 0.42; }, 0, 1, true);
  CHECK(flat.flat);
  CHECK(flat.best == doctest::Approx(0.42));
  CHECK(flat.maxima.empty());
}

TEST_CASE("default mu per regime") {
  CHECK(default_mu(Process::Moller, Regime::LowEnergy, 1.0) == 1e-3);
  CHECK(default_mu(Process::MuMuToEe, Regime::LowEnergy, 0.005) == 1e-3);
  CHECK(default_mu(Process::Moller, Regime::HighEnergy, 1.0) == 1e6);
  CHECK(default_mu(Process::Bhabha, Regime::HighEnergy, 1.0) == 1e6);
  CHECK(default_mu(Process::EeToMuMu, Regime::HighEnergy, 0.5) == 8e6);
  CHECK(default_mu(Process::EMuElastic, Regime::HighEnergy, 0.5) == 8e6);
  CHECK(default_mu(Process::EeToMuMu, Regime::Threshold, 0.3) ==
        doctest::Approx(threshold_mu(0.3, 1e-6)).epsilon(1e-15));
  CHECK_THROWS_AS(default_mu(Process::Moller, Regime::Threshold, 1.0),
                  std::invalid_argument);
}

TEST_CASE("distribution statuses") {
  // Identity-proportional amplitude: alive everywhere, never magic.
  const auto zero = magic_distribution(Process::Bhabha, Regime::LowEnergy, 13,
                                       1.0, Source::Limit, 36);
  CHECK(zero.status == DistributionStatus::ZeroMagic);
  REQUIRE(zero.samples.size() == 35);
  for (const Sample& s : zero.samples) {
    CHECK_FALSE(s.vanished);
    CHECK(std::abs(s.m2) < 1e-12);
    CHECK(s.xi2 == doctest::Approx(1.0).epsilon(1e-12));
  }

  // The threshold matrix annihilates state 41 at every lambda.
  const auto dead = magic_distribution(Process::EeToMuMu, Regime::Threshold,
                                       41, 0.3, Source::Limit, 36);
  CHECK(dead.status == DistributionStatus::VanishingAmplitude);
  for (const Sample& s : dead.samples) {
    CHECK(s.vanished);
    CHECK(std::isnan(s.m2));
  }

  const auto live = magic_distribution(Process::EeToMuMu, Regime::Threshold, 7,
                                       0.3, Source::Limit, 36);
  CHECK(live.status == DistributionStatus::Normal);
  for (const Sample& s : live.samples)
    CHECK(s.m2 == doctest::Approx(-std::log(closed_g1(0.3))).epsilon(1e-11));

  CHECK_THROWS_AS(magic_distribution(Process::Moller, Regime::LowEnergy, 0,
                                     1.0, Source::Limit),
                  std::invalid_argument);
  CHECK_THROWS_AS(magic_distribution(Process::Moller, Regime::LowEnergy, 61,
                                     1.0, Source::Limit),
                  std::invalid_argument);
}

TEST_CASE("engine source tracks the analytic limit at the default mu") {
  const auto eng = magic_distribution(Process::Moller, Regime::LowEnergy, 3,
                                      1.0, Source::Engine, 24);
  const auto lim = magic_distribution(Process::Moller, Regime::LowEnergy, 3,
                                      1.0, Source::Limit, 24);
  REQUIRE(eng.samples.size() == lim.samples.size());
  for (std::size_t i = 0; i < eng.samples.size(); ++i) {
    REQUIRE_FALSE(eng.samples[i].vanished);
    CHECK(std::abs(eng.samples[i].m2 - lim.samples[i].m2) < 1e-5);
  }
}

TEST_CASE("threshold classification") {
  const auto report = classify(Process::EeToMuMu, Regime::Threshold);
  CHECK(report.lambda_scanned);
  CHECK(std::isnan(report.lambda));
  REQUIRE(report.classes.size() == 4);

  std::size_t total = 0;
  for (const DistributionClass& c : report.classes) {
    total += c.members.size();
    REQUIRE_FALSE(c.members.empty());
    CHECK(c.representative == c.members.front());
    CHECK(std::is_sorted(c.members.begin(), c.members.end()));
  }
  CHECK(total == 60);

  const DistributionClass* flat = class_of(report, 1);
  REQUIRE(flat != nullptr);
  CHECK(flat->flat);
  CHECK(flat->status == DistributionStatus::ZeroMagic);

  const DistributionClass* g1 = class_of(report, 7);
  REQUIRE(g1 != nullptr);
  CHECK(g1->members == std::vector<int>{7, 8, 11, 12, 46, 47, 59, 60});
  CHECK(g1->status == DistributionStatus::Normal);
  CHECK_FALSE(g1->flat);
  CHECK(g1->m2_max == doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-9));
  REQUIRE(g1->maximizers.size() == 1);
  CHECK(std::abs(g1->maximizers[0] - (std::sqrt(2.0) - 1)) < 1e-6);

  const DistributionClass* g2 = class_of(report, 13);
  REQUIRE(g2 != nullptr);
  CHECK(g2->m2_max == doctest::Approx(std::log(9.0 / 5.0)).epsilon(1e-9));
  REQUIRE(g2->maximizers.size() == 1);
  CHECK(std::abs(g2->maximizers[0] - 1.0) < 1e-6);

  const DistributionClass* dash = class_of(report, 41);
  REQUIRE(dash != nullptr);
  CHECK(dash->members == std::vector<int>{41});
  CHECK(dash->status == DistributionStatus::VanishingAmplitude);
  CHECK(dash->m2_max == 0.0);
  CHECK(dash->maximizers.empty());
}

TEST_CASE("low-energy like-lepton classification") {
  const auto report = classify(Process::Moller, Regime::LowEnergy);
  CHECK_FALSE(report.lambda_scanned);
  CHECK(report.lambda == 0.005);
  REQUIRE(report.classes.size() == 3);

  const DistributionClass* f2 = class_of(report, 3);
  REQUIRE(f2 != nullptr);
  CHECK(f2->m2_max == doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-9));
  REQUIRE(f2->maximizers.size() == 2);
  const double th2 = 2 * std::atan(std::sqrt(std::sqrt(2.0) - 1));
  CHECK(std::abs(f2->maximizers[0] - th2) < 1e-6);
  CHECK(std::abs(f2->maximizers[1] - (pi - th2)) < 1e-6);

  const DistributionClass* f3 = class_of(report, 13);
  REQUIRE(f3 != nullptr);
  CHECK(f3->m2_max == doctest::Approx(std::log(9.0 / 5.0)).epsilon(1e-9));
  REQUIRE(f3->maximizers.size() == 2);
  CHECK(std::abs(f3->maximizers[0] - std::atan(2 * std::sqrt(2.0))) < 1e-6);
}

TEST_CASE("limit profiles") {
  // Threshold grid has n+1 lambda points; the annihilated state is all
  // wildcard, the surviving ones match their closed forms pointwise.
  const auto dead = limit_profile(Process::EeToMuMu, Regime::Threshold, 41,
                                  0.0, 10);
  REQUIRE(dead.size() == 11);
  for (double v : dead) CHECK(std::isnan(v));

  const auto g2 = limit_profile(Process::EeToMuMu, Regime::Threshold, 13, 0.0,
                                10);
  REQUIRE(g2.size() == 11);
  for (int k = 0; k <= 10; ++k) {
    if (std::isnan(g2[static_cast<std::size_t>(k)])) continue;
    CHECK(g2[static_cast<std::size_t>(k)] ==
          doctest::Approx(-std::log(closed_g2(k / 10.0))).epsilon(1e-11));
  }

  const auto f5 = limit_profile(Process::EeToMuMu, Regime::HighEnergy, 3,
                                0.005, 12);
  REQUIRE(f5.size() == 11);
  for (int k = 1; k < 12; ++k) {
    const double v = f5[static_cast<std::size_t>(k - 1)];
    if (std::isnan(v)) continue;
    CHECK(v ==
          doctest::Approx(-std::log(closed_f5(k * pi / 12))).epsilon(1e-11));
  }
}

TEST_CASE("maximum curve of the annihilation low-energy peak class") {
  const auto curve = g8_max_curve({0.0, 1.0});
  REQUIRE(curve.size() == 2);
  CHECK(curve[0].first == 0.0);
  CHECK(curve[0].second ==
        doctest::Approx(std::log(16.0 / 7.0)).epsilon(1e-9));
  CHECK(curve[1].second == doctest::Approx(std::log(9.0 / 5.0)).epsilon(1e-9));
}
