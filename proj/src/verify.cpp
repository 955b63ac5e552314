#include "qedmagic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qedmagic/amplitudes.hpp"
#include "qedmagic/io.hpp"
#include "qedmagic/limit_forms.hpp"
#include "qedmagic/magic.hpp"
#include "qedmagic/scan.hpp"
#include "qedmagic/stabilizer.hpp"
#include "qedmagic/tables.hpp"

namespace qedmagic {

namespace {

// Explicit bit handling keeps the stream identical across standard libraries.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * pi * u2);
  }
  cplx cnormal() { return {normal(), normal()}; }
  CVec4 haar4() {
    CVec4 v;
    for (int i = 0; i < 4; ++i) v(i) = cnormal();
    return v.normalized();
  }
  CVec2 haar2() {
    CVec2 v;
    for (int i = 0; i < 2; ++i) v(i) = cnormal();
    return v.normalized();
  }
};

std::string table_detail(const TableCheck& tc) {
  std::ostringstream os;
  for (const RowCheck& rc : tc.rows)
    if (!rc.detail.empty()) os << rc.label << ": " << rc.detail;
  return os.str();
}

CriterionResult catalog_integrity() {
  CriterionResult r{1, "stabilizer catalog integrity", false, ""};
  const CatalogReport rep = verify_catalog();
  const bool counts = count_stabilizer_states(1) == 6 &&
                      count_stabilizer_states(2) == 60 &&
                      count_stabilizer_states(3) == 1080;
  r.pass = rep.ok && counts;
  std::ostringstream os;
  if (!counts) os << "state-count formula broke; ";
  for (const auto& f : rep.failures) os << f << "; ";
  if (r.pass) os << "60 states, zero magic, closed under the gate set";
  r.detail = os.str();
  return r;
}

CriterionResult measure_properties(std::uint64_t seed) {
  CriterionResult r{2, "magic measure properties", false, ""};
  Rng rng(seed);
  const std::vector<CMat4> gates{on_qubit1(hadamard_gate()),
                                 on_qubit2(hadamard_gate()),
                                 on_qubit1(phase_gate()),
                                 on_qubit2(phase_gate()),
                                 cnot12(),
                                 cnot21()};
  double worst_clifford = 0, worst_add = 0, worst_phase = 0, worst_purity = 0;
  for (int t = 0; t < 1000; ++t) {
    const CVec4 psi = rng.haar4();
    const double m = sre(psi, 2);

    CVec4 phi = psi;
    const int k = 1 + static_cast<int>(rng.gen() % 10);
    for (int i = 0; i < k; ++i) phi = gates[rng.gen() % gates.size()] * phi;
    worst_clifford = std::max(worst_clifford, std::abs(sre(phi, 2) - m));

    const CVec2 a = rng.haar2(), b = rng.haar2();
    worst_add = std::max(
        worst_add, std::abs(sre(tensor(a, b), 2) - sre(a, 2) - sre(b, 2)));

    const cplx ph = std::polar(1.0, 2 * pi * rng.uniform());
    worst_phase = std::max(worst_phase, std::abs(sre(CVec4(ph * psi), 2) - m));

    double purity = 0;
    for (const auto& p : pauli_strings_2q()) purity += xi_p(psi, p);
    worst_purity = std::max(worst_purity, std::abs(purity - 1.0));
  }

  double worst_m2 = 0;
  for (int t = 0; t < 100000; ++t)
    worst_m2 = std::max(worst_m2, sre(rng.haar4(), 2));
  const double bound = whmub_value(4, 2);

  r.pass = worst_clifford <= 1e-11 && worst_add <= 1e-11 &&
           worst_phase <= 1e-11 && worst_purity <= 1e-11 &&
           worst_m2 <= bound + 1e-9;
  std::ostringstream os;
  os << "gate dev " << fmt(worst_clifford) << ", additivity "
     << fmt(worst_add) << ", phase " << fmt(worst_phase) << ", purity "
     << fmt(worst_purity) << ", haar max " << fmt(worst_m2) << " vs bound "
     << fmt(bound);
  r.detail = os.str();
  return r;
}

CriterionResult bound_constants() {
  CriterionResult r{3, "magic bound constants", false, ""};
  const double sic = sic_bound(4, 2);
  const double mub = whmub_value(4, 2);
  r.pass = std::abs(sic - std::log(5.0 / 2.0)) <= 1e-12 &&
           std::abs(mub - std::log(16.0 / 7.0)) <= 1e-12 && mub < sic;
  r.detail = "sic " + fmt(sic) + ", mub " + fmt(mub);
  return r;
}

CriterionResult threshold_matrix() {
  CriterionResult r{4, "threshold matrix convergence", false, ""};
  const double lambda = 0.3, theta = 0.7;
  const CMat4 lim = limits::threshold_eetomumu(lambda);
  const CMat4 eng6 =
      amplitude_matrix(
          make_point(Process::EeToMuMu, theta, lambda, threshold_mu(lambda, 1e-6)))
          .entries;
  const CMat4 eng7 =
      amplitude_matrix(
          make_point(Process::EeToMuMu, theta, lambda, threshold_mu(lambda, 1e-7)))
          .entries;
  const double dev6 = fixed_deviation(eng6, lim);
  const double dev7 = fixed_deviation(eng7, lim);

  const CVec4 psi41 = stabilizer_catalog()[40].state;
  const double kill41 =
      (eng6 * psi41).norm() / eng6.cwiseAbs().maxCoeff();

  r.pass = dev6 <= 1e-5 && dev7 <= dev6 / 9.9 && kill41 < 1e-10;
  r.detail = "dev " + fmt(dev6) + " -> " + fmt(dev7) + ", id-41 residual " +
             fmt(kill41);
  return r;
}

CriterionResult threshold_classes() {
  CriterionResult r{5, "threshold classification", false, ""};
  const TableCheck tc = check_table(reference_tables()[0]);

  // Spot readings at lambda = 0.005: the two curved classes sit at the
  // expected tiny magic, 1.0e-4 and 5.0e-5 up to O(lambda^4).
  const CMat4 a = limits::threshold_eetomumu(0.005);
  const double m7 = sre(CVec4(a * stabilizer_catalog()[6].state).normalized(), 2);
  const double m13 =
      sre(CVec4(a * stabilizer_catalog()[12].state).normalized(), 2);
  const bool readings = std::abs(m7 - 9e-5) / 9e-5 <= 0.2 &&
                        std::abs(m13 - 5e-5) / 5e-5 <= 0.2;

  r.pass = tc.ok && readings;
  r.detail = table_detail(tc) + "small-mass-ratio readings " + fmt(m7) +
             ", " + fmt(m13);
  return r;
}

CriterionResult moller_low_classes() {
  CriterionResult r{6, "low-energy like-lepton classification", false, ""};
  const TableCheck tc = check_table(reference_tables()[1]);
  r.pass = tc.ok;
  r.detail = tc.ok ? "3 classes with recorded peaks" : table_detail(tc);
  return r;
}

CriterionResult identity_channels() {
  CriterionResult r{7, "low-energy identity channels", false, ""};
  double worst = 0;
  for (Process p : {Process::Bhabha, Process::EMuElastic}) {
    for (double theta : theta_grid(180)) {
      const CMat4 a =
          amplitude_matrix(make_point(p, theta, 0.5, 1e-3)).entries;
      for (const auto& s : stabilizer_catalog())
        worst = std::max(worst, sre(CVec4(a * s.state).normalized(), 2));
    }
  }
  r.pass = worst < 1e-10;
  r.detail = "worst magic " + fmt(worst);
  return r;
}

// Index helpers for the 179-point theta grid, theta_k = k pi / 180.
double mirror_dev(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0;
  for (std::size_t g = 0; g < a.size(); ++g) {
    const double x = a[g], y = b[a.size() - 1 - g];
    if (std::isnan(x) || std::isnan(y)) continue;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

CriterionResult mumutoee_low_classes() {
  CriterionResult r{8, "low-energy annihilation classification", false, ""};
  const TableCheck tc = check_table(reference_tables()[2]);

  double worst = 0;
  for (double lam : {0.3, 0.005}) {
    auto prof = [lam](int id) {
      return limit_profile(Process::MuMuToEe, Regime::LowEnergy, id, lam);
    };
    const auto g3 = prof(1), g4 = prof(3), g5 = prof(5), g6 = prof(7);
    const auto g7 = prof(11), g8 = prof(13);
    const auto g9 = prof(29), g9t = prof(33);
    const auto g10 = prof(46), g10t = prof(47);

    for (const auto& p : {g3, g4, g5, g6, g7, g8})
      worst = std::max(worst, mirror_dev(p, p));
    worst = std::max(worst, mirror_dev(g9t, g9));
    worst = std::max(worst, mirror_dev(g10t, g10));
    // Quarter-turn pairs: G5 = G4(pi/2 - theta), G6 = G3(pi/2 - theta),
    // G10 = G4(theta + pi/4) where both sides live on the grid.
    for (int k = 1; k <= 89; ++k) {
      if (!std::isnan(g5[k - 1]) && !std::isnan(g4[89 - k]))
        worst = std::max(worst, std::abs(g5[k - 1] - g4[89 - k]));
      if (!std::isnan(g6[k - 1]) && !std::isnan(g3[89 - k]))
        worst = std::max(worst, std::abs(g6[k - 1] - g3[89 - k]));
    }
    for (int k = 1; k <= 134; ++k)
      if (!std::isnan(g10[k - 1]) && !std::isnan(g4[k + 44]))
        worst = std::max(worst, std::abs(g10[k - 1] - g4[k + 44]));
  }
  const bool sym_ok = worst <= 1e-10;

  double curve_dev = 0;
  std::vector<double> lams;
  for (int k = 0; k < 50; ++k) lams.push_back(k / 49.0);
  for (const auto& [lam, m2max] : g8_max_curve(lams))
    curve_dev =
        std::max(curve_dev, std::abs(m2max + std::log(g8_max_closed(lam))));

  r.pass = tc.ok && sym_ok && curve_dev <= 1e-9;
  r.detail = table_detail(tc) + "symmetry dev " + fmt(worst) +
             ", peak-curve dev " + fmt(curve_dev);
  return r;
}

CriterionResult eetomumu_high_classes() {
  CriterionResult r{9, "high-energy annihilation classification", false, ""};
  const TableCheck tc = check_table(reference_tables()[3]);

  // lambda -> 0 the low-energy annihilation curves collapse onto the
  // high-energy ones.
  const auto grid = theta_grid(180);
  double collapse = 0;
  for (int id : {1, 3, 5, 11, 46}) {
    const auto p = limit_profile(Process::MuMuToEe, Regime::LowEnergy, id, 0.0);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      if (std::isnan(p[g])) continue;
      const double want = id == 1 ? -std::log(closed_f4(grid[g]))
                                  : -std::log(closed_f5(grid[g]));
      collapse = std::max(collapse, std::abs(p[g] - want));
    }
  }

  // The two annihilation channels share every high-energy distribution.
  double channel_dev = 0;
  bool pattern_ok = true;
  for (int id = 1; id <= 60; ++id) {
    const auto pe =
        limit_profile(Process::EeToMuMu, Regime::HighEnergy, id, 0.005);
    const auto pm =
        limit_profile(Process::MuMuToEe, Regime::HighEnergy, id, 0.005);
    for (std::size_t g = 0; g < pe.size(); ++g) {
      if (std::isnan(pe[g]) != std::isnan(pm[g])) pattern_ok = false;
      if (!std::isnan(pe[g]) && !std::isnan(pm[g]))
        channel_dev = std::max(channel_dev, std::abs(pe[g] - pm[g]));
    }
  }

  r.pass = tc.ok && collapse <= 1e-10 && pattern_ok && channel_dev <= 1e-10;
  r.detail = table_detail(tc) + "collapse dev " + fmt(collapse) +
             ", channel dev " + fmt(channel_dev) +
             (pattern_ok ? "" : ", kill patterns differ");
  return r;
}

CriterionResult elastic_high_tables() {
  CriterionResult r{10, "high-energy elastic tables", false, ""};
  const TableCheck t5 = check_table(reference_tables()[4]);
  const TableCheck t6 = check_table(reference_tables()[5]);
  const TableCheck t7 = check_table(reference_tables()[6]);

  // Mirror partners recorded as tilded rows.
  auto prof = [](Process p, int id) {
    return limit_profile(p, Regime::HighEnergy, id, 0.005);
  };
  double worst = 0;
  worst = std::max(worst, mirror_dev(prof(Process::Moller, 30),
                                     prof(Process::Moller, 29)));
  worst = std::max(worst, mirror_dev(prof(Process::Moller, 48),
                                     prof(Process::Moller, 45)));
  worst = std::max(worst, mirror_dev(prof(Process::Bhabha, 33),
                                     prof(Process::Bhabha, 29)));
  worst = std::max(worst, mirror_dev(prof(Process::Bhabha, 47),
                                     prof(Process::Bhabha, 46)));

  r.pass = t5.ok && t6.ok && t7.ok && worst <= 1e-10;
  r.detail = table_detail(t5) + table_detail(t6) + table_detail(t7) +
             "mirror dev " + fmt(worst);
  return r;
}

CriterionResult exchange_antisymmetry(std::uint64_t seed) {
  CriterionResult r{11, "exchange antisymmetry", false, ""};
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  double worst = 0;
  bool ok = true;
  for (int t = 0; t < 20; ++t) {
    const double theta = 0.05 + rng.uniform() * (pi - 0.1);
    const double mu = std::pow(10.0, rng.uniform() * 6 - 3);
    const ExchangeReport rep = exchange_antisymmetry_check(
        make_point(Process::Moller, theta, 1.0, mu), 1e-10);
    worst = std::max(worst, rep.max_relative_deviation);
    ok = ok && rep.ok;
  }
  r.pass = ok;
  r.detail = "worst relative dev " + fmt(worst) + " over 20 random points";
  return r;
}

struct Anchor {
  Process process;
  Regime regime;
  double mu1, bound1, mu2, bound2;
};

CriterionResult engine_limit_convergence() {
  CriterionResult r{12, "engine-limit convergence", false, ""};
  const double lambda = 0.5;
  // mu1 is the documented default for each regime; mu2 sits one decade
  // further into the limit. Bounds carry >= 3x margin over measured worst
  // deviations and are far inside the 1e-4 / 1e-6 interface guarantees.
  const std::vector<Anchor> anchors{
      {Process::Moller, Regime::LowEnergy, 1e-3, 9e-7, 1e-4, 9e-9},
      {Process::Bhabha, Regime::LowEnergy, 1e-3, 9e-7, 1e-4, 9e-9},
      {Process::EMuElastic, Regime::LowEnergy, 1e-3, 9e-7, 1e-4, 9e-9},
      {Process::MuMuToEe, Regime::LowEnergy, 1e-3, 9e-7, 1e-4, 9e-9},
      {Process::EeToMuMu, Regime::Threshold, threshold_mu(lambda, 1e-6), 1.2e-6,
       threshold_mu(lambda, 1e-7), 1.2e-7},
      {Process::Moller, Regime::HighEnergy, 1e6, 4.1e-7, 1e7, 4.1e-8},
      {Process::Bhabha, Regime::HighEnergy, 1e6, 4.1e-7, 1e7, 4.1e-8},
      {Process::EeToMuMu, Regime::HighEnergy, 8e6, 2.0e-6, 8e7, 2.0e-7},
      {Process::EMuElastic, Regime::HighEnergy, 8e6, 3.0e-6, 8e7, 3.0e-7},
      {Process::MuMuToEe, Regime::HighEnergy, 8e6, 1.0e-6, 8e7, 1.0e-7},
  };

  const auto& catalog = stabilizer_catalog();
  const auto grid = theta_grid(180);
  bool ok = true;
  double worst_ratio = 0;  // measured dev / allowed bound
  std::ostringstream os;
  for (const Anchor& a : anchors) {
    for (const auto& [mu, bound] : {std::pair{a.mu1, a.bound1},
                                    std::pair{a.mu2, a.bound2}}) {
      double worst = 0;
      for (double theta : grid) {
        const CMat4 eng =
            amplitude_matrix(make_point(a.process, theta, lambda, mu)).entries;
        const CMat4 lim =
            limit_matrix(a.process, a.regime, theta, lambda, 1.0 / mu);
        const double se = eng.cwiseAbs().maxCoeff();
        const double sl = lim.cwiseAbs().maxCoeff();
        for (const auto& s : catalog) {
          const CVec4 oe = eng * s.state, ol = lim * s.state;
          if (oe.norm() < 1e-9 * se || ol.norm() < 1e-9 * sl) continue;
          worst = std::max(
              worst, std::abs(sre(CVec4(oe.normalized()), 2) -
                              sre(CVec4(ol.normalized()), 2)));
        }
      }
      if (worst > bound) {
        ok = false;
        os << process_name(a.process) << '/' << regime_name(a.regime)
           << " mu=" << fmt(mu) << " dev " << fmt(worst) << " > "
           << fmt(bound) << "; ";
      }
      worst_ratio = std::max(worst_ratio, worst / bound);
    }
  }
  r.pass = ok;
  r.detail = os.str() + "worst dev/bound " + fmt(worst_ratio);
  return r;
}

CriterionResult global_maximum() {
  CriterionResult r{13, "global magic maximum", false, ""};
  const auto hits = global_max_scan();
  bool ok = !hits.empty();
  const double cap = whmub_value(4, 2) + 1e-9;
  for (const GlobalMaxHit& h : hits) {
    const double off =
        std::min(std::abs(h.theta - pi / 4), std::abs(h.theta - 3 * pi / 4));
    ok = ok && h.process == Process::MuMuToEe && h.regime == Regime::LowEnergy &&
         h.lambda <= 1e-4 && h.initial_id >= 13 && h.initial_id <= 28 &&
         off <= 1e-9 && h.m2 <= cap;
  }
  r.pass = ok;
  r.detail = std::to_string(hits.size()) +
             " hits, all in the small-mass-ratio annihilation channel at the "
             "quarter angles";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_verification(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(catalog_integrity());
  out.push_back(measure_properties(seed));
  out.push_back(bound_constants());
  out.push_back(threshold_matrix());
  out.push_back(threshold_classes());
  out.push_back(moller_low_classes());
  out.push_back(identity_channels());
  out.push_back(mumutoee_low_classes());
  out.push_back(eetomumu_high_classes());
  out.push_back(elastic_high_tables());
  out.push_back(exchange_antisymmetry(seed));
  out.push_back(engine_limit_convergence());
  out.push_back(global_maximum());
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace qedmagic
