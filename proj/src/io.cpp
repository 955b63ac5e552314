#include "qedmagic/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace qedmagic {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_distribution_csv(std::ostream& os, const MagicDistribution& dist) {
  os << "theta,xi2,m2\n";
  for (const Sample& s : dist.samples) {
    os << fmt(s.theta) << ',';
    if (s.vanished)
      os << "nan,nan\n";
    else
      os << fmt(s.xi2) << ',' << fmt(s.m2) << '\n';
  }
}

std::string classification_json(const ClassificationReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["process"] = process_name(report.process);
  j["regime"] = regime_name(report.regime);
  j["scan_variable"] = report.lambda_scanned ? "lambda" : "theta_rad";
  if (report.lambda_scanned)
    j["lambda"] = nullptr;
  else
    j["lambda"] = report.lambda;
  j["classes"] = nlohmann::json::array();
  for (const DistributionClass& cls : report.classes) {
    nlohmann::json c;
    c["representative"] = cls.representative;
    c["members"] = cls.members;
    c["status"] = status_name(cls.status);
    if (cls.status == DistributionStatus::VanishingAmplitude) {
      c["m2_max"] = nullptr;
      c["maximizers"] = nlohmann::json::array();
    } else {
      c["flat"] = cls.flat;
      c["m2_max"] = cls.m2_max;
      c["maximizers"] = cls.maximizers;
    }
    j["classes"].push_back(c);
  }
  return j.dump(2);
}

std::string matrix_json(const SpinAmplitudeMatrix& amp) {
  nlohmann::json j;
  j["schema"] = 1;
  j["process"] = process_name(amp.point.process);
  j["theta_rad"] = amp.point.theta;
  j["lambda"] = amp.point.lambda;
  j["mu"] = amp.point.mu_param;
  j["sqrt_s"] = amp.point.sqrt_s;
  j["basis"] = {"uu", "ud", "du", "dd"};
  j["layout"] = "row-major; row = final spin pair, column = initial spin pair";
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      entries.push_back({amp.entries(r, c).real(), amp.entries(r, c).imag()});
  j["entries"] = entries;
  return j.dump(2);
}

void write_matrix_text(std::ostream& os, const CMat4& a) {
  char buf[64];
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      std::snprintf(buf, sizeof buf, "%.9g%+.9gi", a(r, c).real(),
                    a(r, c).imag());
      os << buf << (c == 3 ? "\n" : "  ");
    }
  }
}

namespace {

FigureData profile_figure(const std::string& name, Process process,
                          Regime regime, double lambda,
                          const std::vector<int>& reps) {
  const bool over_lambda = regime == Regime::Threshold;
  FigureData fig{name, {over_lambda ? "lambda" : "theta_rad"}, {}};
  const std::vector<double> grid =
      over_lambda ? lambda_grid(180) : theta_grid(180);
  std::vector<std::vector<double>> profs;
  for (int id : reps) {
    fig.columns.push_back("m2_id" + std::to_string(id));
    profs.push_back(limit_profile(process, regime, id, lambda));
  }
  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<double> row{grid[g]};
    for (const auto& p : profs) row.push_back(p[g]);
    fig.rows.push_back(std::move(row));
  }
  return fig;
}

}  // namespace

FigureData figure_data(int which) {
  switch (which) {
    case 2:
      return profile_figure("fig2_eetomumu_threshold", Process::EeToMuMu,
                            Regime::Threshold, 0.005, {1, 7, 13});
    case 3:
      return profile_figure("fig3_moller_low", Process::Moller,
                            Regime::LowEnergy, 0.005, {3, 13});
    case 4:
      return profile_figure("fig4_mumutoee_low", Process::MuMuToEe,
                            Regime::LowEnergy, 0.005,
                            {1, 3, 5, 7, 9, 11, 13, 29, 33, 46, 47});
    case 5: {
      FigureData fig{"fig5_mumutoee_low_max", {"lambda", "m2_max"}, {}};
      for (const auto& [l, m] : g8_max_curve(lambda_grid(180)))
        fig.rows.push_back({l, m});
      return fig;
    }
    case 6:
      return profile_figure("fig6_eetomumu_high", Process::EeToMuMu,
                            Regime::HighEnergy, 0.005, {1, 3});
    case 7:
      return profile_figure("fig7_moller_high", Process::Moller,
                            Regime::HighEnergy, 0.005,
                            {1, 3, 5, 7, 9, 11, 13, 29, 30, 37, 38, 45, 48});
    case 8:
      return profile_figure("fig8_emu_high", Process::EMuElastic,
                            Regime::HighEnergy, 0.005,
                            {1, 5, 7, 9, 11, 13, 29, 30, 37, 38, 45, 48});
    default:
      throw std::invalid_argument("figure index must be 2..8");
  }
}

std::string figure_csv(const FigureData& fig) {
  std::string out;
  for (std::size_t i = 0; i < fig.columns.size(); ++i) {
    out += fig.columns[i];
    out += i + 1 == fig.columns.size() ? '\n' : ',';
  }
  for (const auto& row : fig.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += fmt(row[i]);
      out += i + 1 == row.size() ? '\n' : ',';
    }
  }
  return out;
}

}  // namespace qedmagic
