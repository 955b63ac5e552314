#include "qedmagic/scan.hpp"

#include "qedmagic/amplitudes.hpp"
#include "qedmagic/limit_forms.hpp"
#include "qedmagic/magic.hpp"
#include "qedmagic/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qedmagic {

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

// Pointwise agreement threshold between distributions; distinct printed
// distributions differ at the 1e-2 level, so the gap is enormous.
constexpr double eps_class = 1e-9;

double m2_of(const CVec4& out) { return sre(out.normalized(), 2); }

const CVec4& catalog_state(int id) {
  if (id < 1 || id > 60) throw std::invalid_argument("initial id must be 1..60");
  return stabilizer_catalog()[static_cast<std::size_t>(id - 1)].state;
}

}  // namespace

std::vector<double> theta_grid(int n) {
  if (n < 2) throw std::invalid_argument("grid size must be at least 2");
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k < n; ++k) g.push_back(k * pi / n);
  return g;
}

std::vector<double> lambda_grid(int n) {
  if (n < 1) throw std::invalid_argument("grid size must be at least 1");
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) g.push_back(static_cast<double>(k) / n);
  return g;
}

double default_mu(Process process, Regime regime, double lambda) {
  switch (regime) {
    case Regime::Threshold:
      if (process != Process::EeToMuMu)
        throw std::invalid_argument("threshold regime applies to the annihilation process");
      return threshold_mu(lambda, 1e-6);
    case Regime::LowEnergy: return 1e-3;
    case Regime::HighEnergy:
      // The t-channel forms converge in mu alone; the annihilation and
      // mixed-flavor ones need the heavy-leg momentum large in its own mass,
      // so their default sits further out.
      return process == Process::Moller || process == Process::Bhabha ? 1e6
                                                                      : 8e6;
  }
  throw std::invalid_argument("unknown regime");
}

MagicDistribution magic_distribution(Process process, Regime regime,
                                     int initial_id, double lambda,
                                     Source source, int grid_n,
                                     double mu_param) {
  const CVec4& psi = catalog_state(initial_id);
  const double mu = mu_param > 0 ? mu_param : default_mu(process, regime, lambda);
  MagicDistribution dist{process, regime, initial_id, lambda, mu, source, {}, {}};

  for (double theta : theta_grid(grid_n)) {
    const CMat4 a = source == Source::Engine
                        ? amplitude_matrix(make_point(process, theta, lambda, mu))
                              .entries
                        : limit_matrix(process, regime, theta, lambda, 1 / mu);
    const double scale = a.cwiseAbs().maxCoeff();
    const CVec4 out = a * psi;
    Sample s{theta, nan_v, nan_v, true};
    if (out.squaredNorm() >= eps_norm * scale * scale) {
      const MagicValue mv = magic_value(out.normalized().eval());
      s = {theta, mv.xi2, mv.m2, false};
    }
    dist.samples.push_back(s);
  }

  bool any_alive = false, any_magic = false;
  for (const Sample& s : dist.samples) {
    any_alive = any_alive || !s.vanished;
    any_magic = any_magic || (!s.vanished && s.m2 >= 1e-10);
  }
  dist.status = !any_alive ? DistributionStatus::VanishingAmplitude
                : any_magic ? DistributionStatus::Normal
                            : DistributionStatus::ZeroMagic;
  return dist;
}

namespace {

// Golden-section maximum on [a, b] to |b - a| < tol.
Maximum golden_max(const std::function<double(double)>& f, double a, double b,
                   double tol) {
  const double gr = (std::sqrt(5.0) - 1) / 2;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  const double x = (a + b) / 2;
  return {x, f(x)};
}

}  // namespace

MaximaResult find_maxima(const std::function<double(double)>& f, double lo,
                         double hi, bool include_endpoints, int grid_n) {
  const int k0 = include_endpoints ? 0 : 1;
  const int k1 = include_endpoints ? grid_n : grid_n - 1;
  std::vector<double> xs, vs;
  for (int k = k0; k <= k1; ++k) {
    xs.push_back(lo + k * (hi - lo) / grid_n);
    vs.push_back(f(xs.back()));
  }
  const double grid_best = *std::max_element(vs.begin(), vs.end());
  const double grid_min = *std::min_element(vs.begin(), vs.end());
  if (grid_best - grid_min < 1e-12) return {{}, grid_best, true};

  // Refinement guard keeps t/u-channel poles out of the bracket.
  const double edge = include_endpoints ? 0.0 : 1e-6;
  std::vector<Maximum> candidates;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (vs[i] <= grid_best - 1e-4) continue;
    const double a = std::max(i > 0 ? xs[i - 1] : lo, lo + edge);
    const double b = std::min(i + 1 < xs.size() ? xs[i + 1] : hi, hi - edge);
    const Maximum m = golden_max(f, a, b, 1e-11);
    // Merge refinements that landed on the same (possibly flat-topped) peak.
    bool merged = false;
    for (Maximum& c : candidates)
      if (std::abs(m.arg - c.arg) < 1e-3) {
        if (m.value > c.value) c = m;
        merged = true;
        break;
      }
    if (!merged) candidates.push_back(m);
  }
  double best = grid_best;
  for (const Maximum& c : candidates) best = std::max(best, c.value);
  MaximaResult result{{}, best, false};
  for (const Maximum& c : candidates)
    if (c.value > best - 1e-8) result.maxima.push_back(c);
  std::sort(result.maxima.begin(), result.maxima.end(),
            [](const Maximum& a, const Maximum& b) { return a.arg < b.arg; });
  return result;
}

namespace {

struct StateProfile {
  bool vanished;                // killed at every grid point, every tier
  int tier;                     // which mu-power its distribution came from
  std::vector<double> m2;       // NaN = wildcard (killed at that point only)
};

struct TierGrid {
  std::vector<double> grid;     // lambda values (threshold) or theta values
  bool lambda_scanned;
  // tiers[t][g]: mu-power-t coefficient matrix at grid point g.
  std::vector<std::vector<CMat4>> tiers;
};

TierGrid build_tiers(Process process, Regime regime, double lambda, int grid_n) {
  TierGrid tg;
  if (regime == Regime::Threshold) {
    if (process != Process::EeToMuMu)
      throw std::invalid_argument("threshold regime applies to the annihilation process");
    tg.grid = lambda_grid(grid_n);
    tg.lambda_scanned = true;
    tg.tiers.resize(1);
    for (double l : tg.grid)
      tg.tiers[0].push_back(limits::threshold_eetomumu(l));
    return tg;
  }
  tg.grid = theta_grid(grid_n);
  tg.lambda_scanned = false;
  const bool two_tier =
      regime == Regime::HighEnergy &&
      (process == Process::EeToMuMu || process == Process::MuMuToEe);
  tg.tiers.resize(two_tier ? 2 : 1);
  for (double theta : tg.grid) {
    const CMat4 a0 = limit_matrix(process, regime, theta, lambda, 0);
    tg.tiers[0].push_back(a0);
    if (two_tier)
      tg.tiers[1].push_back(limit_matrix(process, regime, theta, lambda, 1) - a0);
  }
  return tg;
}

// A state's distribution comes from its lowest mu-power tier that is not
// identically zero; isolated zeros within that tier are wildcards.
StateProfile state_profile(const TierGrid& tg, const CVec4& psi) {
  const std::size_t n = tg.grid.size();
  for (std::size_t t = 0; t < tg.tiers.size(); ++t) {
    StateProfile prof{false, static_cast<int>(t), std::vector<double>(n, nan_v)};
    bool alive = false;
    for (std::size_t g = 0; g < n; ++g) {
      const CMat4& a = tg.tiers[t][g];
      const CVec4 out = a * psi;
      if (out.norm() > 4e-9 * a.cwiseAbs().maxCoeff()) {
        prof.m2[g] = m2_of(out);
        alive = true;
      }
    }
    if (alive) return prof;
  }
  return {true, -1, std::vector<double>(n, nan_v)};
}

bool profiles_match(const StateProfile& a, const StateProfile& b) {
  if (a.vanished != b.vanished) return false;
  if (a.vanished) return true;
  for (std::size_t g = 0; g < a.m2.size(); ++g) {
    if (std::isnan(a.m2[g]) || std::isnan(b.m2[g])) continue;  // wildcard
    if (std::abs(a.m2[g] - b.m2[g]) >= eps_class) return false;
  }
  return true;
}

}  // namespace

std::vector<double> limit_profile(Process process, Regime regime,
                                  int initial_id, double lambda, int grid_n) {
  const TierGrid tg = build_tiers(process, regime, lambda, grid_n);
  return state_profile(tg, catalog_state(initial_id)).m2;
}

ClassificationReport classify(Process process, Regime regime, double lambda,
                              int grid_n) {
  const TierGrid tg = build_tiers(process, regime, lambda, grid_n);
  const auto& catalog = stabilizer_catalog();

  std::vector<StateProfile> profiles;
  profiles.reserve(60);
  for (const auto& s : catalog) profiles.push_back(state_profile(tg, s.state));

  ClassificationReport report{process, regime,
                              tg.lambda_scanned ? nan_v : lambda,
                              tg.lambda_scanned, {}};
  std::vector<int> class_rep;  // representative index per class
  for (int i = 0; i < 60; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < class_rep.size(); ++c)
      if (profiles_match(profiles[static_cast<std::size_t>(i)],
                         profiles[static_cast<std::size_t>(class_rep[c])])) {
        report.classes[c].members.push_back(i + 1);
        placed = true;
        break;
      }
    if (!placed) {
      class_rep.push_back(i);
      report.classes.push_back({i + 1, {i + 1}, {}, false, 0, {}});
    }
  }

  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    DistributionClass& cls = report.classes[c];
    const StateProfile& prof = profiles[static_cast<std::size_t>(class_rep[c])];
    if (prof.vanished) {
      cls.status = DistributionStatus::VanishingAmplitude;
      continue;
    }
    bool any_magic = false;
    for (double v : prof.m2) any_magic = any_magic || (!std::isnan(v) && v >= 1e-10);
    cls.status = any_magic ? DistributionStatus::Normal : DistributionStatus::ZeroMagic;

    const CVec4 psi = catalog[static_cast<std::size_t>(class_rep[c])].state;
    const int tier = prof.tier;
    std::function<double(double)> f;
    if (tg.lambda_scanned) {
      f = [psi](double l) {
        const CMat4 a = limits::threshold_eetomumu(l);
        const CVec4 out = a * psi;
        return out.norm() > 1e-9 ? m2_of(out) : 0.0;
      };
    } else {
      f = [psi, process, regime, lambda, tier](double theta) {
        CMat4 a = limit_matrix(process, regime, theta, lambda, 0);
        if (tier == 1) a = limit_matrix(process, regime, theta, lambda, 1) - a;
        const CVec4 out = a * psi;
        return out.norm() > 1e-9 ? m2_of(out) : 0.0;
      };
    }
    const MaximaResult mr = tg.lambda_scanned ? find_maxima(f, 0, 1, true)
                                              : find_maxima(f, 0, pi, false);
    cls.flat = mr.flat;
    if (!mr.flat) {
      cls.m2_max = mr.best;
      for (const Maximum& m : mr.maxima) cls.maximizers.push_back(m.arg);
    }
  }
  return report;
}

std::vector<std::pair<double, double>> g8_max_curve(
    const std::vector<double>& lambdas) {
  const CVec4 psi = catalog_state(13);
  std::vector<std::pair<double, double>> curve;
  curve.reserve(lambdas.size());
  for (double l : lambdas) {
    const auto f = [&](double theta) {
      const CVec4 out = limits::mumutoee_low(theta, l) * psi;
      return out.norm() > 1e-9 ? m2_of(out) : 0.0;
    };
    curve.emplace_back(l, find_maxima(f, 0, pi, false).best);
  }
  return curve;
}

std::vector<GlobalMaxHit> global_max_scan() {
  const double threshold = whmub_value(4, 2) - 1e-6;
  const std::vector<double> lambdas{0.0, 1e-4, 0.005, 0.1, 0.3, 0.5, 0.8, 1.0};
  const auto& catalog = stabilizer_catalog();
  std::vector<GlobalMaxHit> hits;

  for (Process process : {Process::EeToMuMu, Process::Moller, Process::Bhabha,
                          Process::EMuElastic, Process::MuMuToEe})
    for (Regime regime :
         {Regime::Threshold, Regime::LowEnergy, Regime::HighEnergy}) {
      if (!has_limit_form(process, regime)) continue;
      for (double lambda : lambdas) {
        // 1/lambda appears in the heavy-leg forms; lambda = 0 stays valid only
        // where the printed form is lambda-polynomial.
        if (lambda == 0 && (regime == Regime::Threshold ||
                            (process == Process::MuMuToEe &&
                             regime == Regime::HighEnergy)))
          continue;
        for (double theta : theta_grid()) {
          // The s-channel direction limit plus its 1/mu term at mu = 1e3;
          // elsewhere the forms are mu-free.
          const CMat4 a = limit_matrix(process, regime, theta, lambda, 1e-3);
          const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
          for (int id = 1; id <= 60; ++id) {
            const CVec4 out = a * catalog[static_cast<std::size_t>(id - 1)].state;
            if (out.norm() < 1e-9 * scale) continue;
            const double v = m2_of(out);
            if (v >= threshold)
              hits.push_back({process, regime, lambda, id, theta, v});
          }
        }
      }
    }
  return hits;
}

}  // namespace qedmagic
