#pragma once

// Magic distributions over the kinematic grids, grouping of the 60 initial
// states into distribution classes, and maximum location.

#include "qedmagic/kinematics.hpp"
#include "qedmagic/qlinalg.hpp"

#include <functional>
#include <vector>

namespace qedmagic {

enum class Source { Engine, Limit };

inline Source parse_source(const std::string& s) {
  if (s == "engine") return Source::Engine;
  if (s == "limit") return Source::Limit;
  throw std::invalid_argument("unknown source '" + s + "'");
}

enum class DistributionStatus { Normal, VanishingAmplitude, ZeroMagic };

inline std::string status_name(DistributionStatus s) {
  switch (s) {
    case DistributionStatus::Normal: return "normal";
    case DistributionStatus::VanishingAmplitude: return "vanishing_amplitude";
    case DistributionStatus::ZeroMagic: return "zero_magic";
  }
  throw std::invalid_argument("unknown status");
}

// theta_k = k pi / n, k = 1..n-1: endpoints excluded (t/u-channel poles).
std::vector<double> theta_grid(int n = 180);

// k / n, k = 0..n: endpoints included (threshold forms are regular there).
std::vector<double> lambda_grid(int n = 180);

struct Sample {
  double theta;
  double xi2;   // NaN when vanished
  double m2;    // NaN when vanished
  bool vanished;
};

struct MagicDistribution {
  Process process;
  Regime regime;
  int initial_id;
  double lambda;
  double mu_param;  // engine momentum; 1/mu feeds the printed 1/mu terms
  Source source;
  std::vector<Sample> samples;
  DistributionStatus status;
};

// Regime defaults: mu = 1e-3 (low); 1e6 (high, like-lepton) or 8e6 (high,
// heavy-leg channels); threshold regime: the momentum sitting a relative
// 1e-6 above the heavy-pair threshold.
double default_mu(Process process, Regime regime, double lambda);

// mu_param = 0 selects the regime default. The limit source uses mu only
// through the printed 1/mu terms (s-channel high energy); elsewhere the forms
// are mu-free.
MagicDistribution magic_distribution(Process process, Regime regime,
                                     int initial_id, double lambda,
                                     Source source, int grid_n = 180,
                                     double mu_param = 0);

struct Maximum {
  double arg;  // theta or lambda
  double value;
};

struct MaximaResult {
  std::vector<Maximum> maxima;  // all maximizers within 1e-8 of best
  double best;
  bool flat;  // value range below 1e-12 across the grid: no meaningful argmax
};

// Coarse scan (grid_n cells) then golden-section refinement of every cell
// within 1e-4 of the best, to |arg| resolution 1e-11.
MaximaResult find_maxima(const std::function<double(double)>& f, double lo,
                         double hi, bool include_endpoints, int grid_n = 720);

struct DistributionClass {
  int representative;        // lowest member id
  std::vector<int> members;  // ascending
  DistributionStatus status;
  bool flat;
  double m2_max;                  // 0 when flat or vanishing
  std::vector<double> maximizers; // empty when flat or vanishing
};

struct ClassificationReport {
  Process process;
  Regime regime;
  double lambda;         // NaN for the threshold regime (scanned, not fixed)
  bool lambda_scanned;   // true: classes live on the lambda grid, maxima over lambda
  std::vector<DistributionClass> classes;
};

// Groups states by pointwise M2 agreement (within 1e-9) of their analytic
// limit distributions; the threshold regime classifies over lambda in [0,1],
// the others over theta at fixed lambda. States killed at every grid point
// form their own class. For the s-channel high-energy forms a state killed by
// the mu->inf matrix falls through to the printed 1/mu term; isolated zeros
// are wildcards.
ClassificationReport classify(Process process, Regime regime,
                              double lambda = 0.005, int grid_n = 180);

// M2 of one catalog state across the grid, from the analytic limit with the
// same tier fallback as classify(); NaN where the amplitude kills the state.
// Grid variable is lambda for the threshold regime, theta otherwise.
std::vector<double> limit_profile(Process process, Regime regime,
                                  int initial_id, double lambda,
                                  int grid_n = 180);

// Maximum over theta of the id-13 class of the low-energy mu mu -> ee
// distribution, per lambda; reproduces g8_max_closed.
std::vector<std::pair<double, double>> g8_max_curve(
    const std::vector<double>& lambdas);

struct GlobalMaxHit {
  Process process;
  Regime regime;
  double lambda;
  int initial_id;
  double theta;
  double m2;
};

// Sweep of every analytic-limit configuration for magic reaching
// log(16/7) - 1e-6; locates the unique maximal-magic configuration.
std::vector<GlobalMaxHit> global_max_scan();

}  // namespace qedmagic
