// Command-line front end: catalog listing, single-point evaluation, grid
// scans, classification, table and figure reproduction, and the self-check
// suite. Angles in radians, magic in nats, everywhere.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qedmagic/amplitudes.hpp"
#include "qedmagic/io.hpp"
#include "qedmagic/limit_forms.hpp"
#include "qedmagic/magic.hpp"
#include "qedmagic/scan.hpp"
#include "qedmagic/stabilizer.hpp"
#include "qedmagic/tables.hpp"
#include "qedmagic/verify.hpp"

namespace {

using namespace qedmagic;

double mode_lambda(const std::string& mode) {
  return mode == "physical" ? 0.004836 : 0.005;
}

std::string roman_name(int n) {
  static const char* names[] = {"", "I", "II", "III", "IV", "V", "VI", "VII"};
  return names[n];
}

int table_index(const std::string& which) {
  static const std::map<std::string, int> roman{{"I", 1},  {"II", 2},
                                                {"III", 3}, {"IV", 4},
                                                {"V", 5},   {"VI", 6},
                                                {"VII", 7}};
  if (auto it = roman.find(which); it != roman.end()) return it->second;
  if (which.size() == 1 && which[0] >= '1' && which[0] <= '7')
    return which[0] - '0';
  throw std::invalid_argument("--which must be I..VII (or 1..7), got '" +
                              which + "'");
}

int run_stabilizers_list(const std::string& format) {
  const auto& catalog = stabilizer_catalog();
  if (format == "csv") {
    std::cout << "id,c1_re,c1_im,c2_re,c2_im,c3_re,c3_im,c4_re,c4_im,"
                 "entangled\n";
    for (const auto& s : catalog) {
      std::cout << s.id;
      for (int i = 0; i < 4; ++i)
        std::cout << ',' << fmt(s.coeffs(i).real()) << ','
                  << fmt(s.coeffs(i).imag());
      std::cout << ',' << (s.entangled ? 1 : 0) << '\n';
    }
    return 0;
  }
  nlohmann::json j;
  j["schema"] = 1;
  j["states"] = nlohmann::json::array();
  for (const auto& s : catalog) {
    nlohmann::json st;
    st["id"] = s.id;
    st["coeffs"] = nlohmann::json::array();
    for (int i = 0; i < 4; ++i)
      st["coeffs"].push_back({s.coeffs(i).real(), s.coeffs(i).imag()});
    st["entangled"] = s.entangled;
    j["states"].push_back(st);
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_magic_eval(const std::vector<double>& coeffs, int alpha) {
  CVec4 v;
  for (int i = 0; i < 4; ++i) v(i) = cplx(coeffs[2 * i], coeffs[2 * i + 1]);
  const CVec4 psi = normalize(v);
  const double moment = pauli_moment(psi, alpha);
  const double m = std::log(moment) / (1.0 - alpha);
  std::cout << "xi_" << alpha << " = " << fmt(moment) << '\n'
            << "m_" << alpha << " = " << fmt(m) << " nats\n";
  return 0;
}

int run_amplitude(const std::string& process, double theta, double lambda,
                  double mu, const std::string& format) {
  const SpinAmplitudeMatrix amp =
      amplitude_matrix(make_point(parse_process(process), theta, lambda, mu));
  if (format == "text")
    write_matrix_text(std::cout, amp.entries);
  else
    std::cout << matrix_json(amp) << '\n';
  return 0;
}

int run_limit_matrix(const std::string& process, const std::string& regime,
                     double theta, double lambda, double inv_mu,
                     const std::string& format) {
  const Process p = parse_process(process);
  const Regime r = parse_regime(regime);
  const CMat4 a = limit_matrix(p, r, theta, lambda, inv_mu);
  if (format == "text") {
    write_matrix_text(std::cout, a);
    return 0;
  }
  nlohmann::json j;
  j["schema"] = 1;
  j["process"] = process_name(p);
  j["regime"] = regime_name(r);
  j["theta_rad"] = theta;
  j["lambda"] = lambda;
  j["inv_mu"] = inv_mu;
  j["basis"] = {"uu", "ud", "du", "dd"};
  j["layout"] = "row-major; row = final spin pair, column = initial spin pair";
  nlohmann::json entries = nlohmann::json::array();
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col)
      entries.push_back({a(row, col).real(), a(row, col).imag()});
  j["entries"] = entries;
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_scan(const std::string& process, const std::string& regime,
             const std::string& initial, double lambda, int grid,
             const std::string& source, double mu, const std::string& out) {
  const Process p = parse_process(process);
  const Regime r = parse_regime(regime);
  const Source src = parse_source(source);

  std::vector<int> ids;
  if (initial == "all") {
    for (int i = 1; i <= 60; ++i) ids.push_back(i);
  } else {
    try {
      ids.push_back(std::stoi(initial));
    } catch (const std::exception&) {
      throw std::invalid_argument("--initial must be a catalog id 1..60 or 'all'");
    }
  }

  std::vector<MagicDistribution> dists;
  for (int id : ids)
    dists.push_back(magic_distribution(p, r, id, lambda, src, grid, mu));

  const bool to_stdout = out == "-";
  if (!out.empty()) {
    std::ofstream file;
    if (!to_stdout) {
      file.open(out);
      if (!file) throw std::runtime_error("cannot open '" + out + "'");
    }
    std::ostream& os = to_stdout ? std::cout : file;
    if (ids.size() == 1) {
      write_distribution_csv(os, dists[0]);
    } else {
      os << "initial_id,theta,xi2,m2\n";
      for (const auto& d : dists)
        for (const Sample& s : d.samples) {
          os << d.initial_id << ',' << fmt(s.theta) << ',';
          if (s.vanished)
            os << "nan,nan\n";
          else
            os << fmt(s.xi2) << ',' << fmt(s.m2) << '\n';
        }
    }
  }
  if (!to_stdout) {
    for (const auto& d : dists)
      std::cout << "initial " << d.initial_id << ": " << status_name(d.status)
                << '\n';
    if (!out.empty()) std::cout << "wrote " << out << '\n';
  }
  return 0;
}

int run_classify(const std::string& process, const std::string& regime,
                 double lambda, int grid) {
  std::cout << classification_json(
                   classify(parse_process(process), parse_regime(regime),
                            lambda, grid))
            << '\n';
  return 0;
}

int run_tables(const std::string& which) {
  std::vector<int> nums;
  if (which == "all")
    for (int i = 1; i <= 7; ++i) nums.push_back(i);
  else
    nums.push_back(table_index(which));

  bool all_ok = true;
  for (int n : nums) {
    const ReferenceTable& table = reference_tables()[n - 1];
    const TableCheck tc = check_table(table);
    all_ok = all_ok && tc.ok;
    std::cout << "Table " << roman_name(n) << " (" << process_name(table.process)
              << " / " << regime_name(table.regime)
              << "): " << (tc.ok ? "PASS" : "FAIL") << '\n';
    for (const RowCheck& rc : tc.rows) {
      const bool ok = rc.members_ok && rc.value_ok && rc.args_ok;
      std::cout << "  " << rc.label << "\n    expected: " << rc.expected
                << "\n    actual:   " << rc.actual << "\n    "
                << (ok ? "ok" : "MISMATCH " + rc.detail) << '\n';
    }
  }
  return all_ok ? 0 : 1;
}

int run_figures(const std::string& which, const std::string& out_dir) {
  std::vector<int> nums;
  if (which == "all")
    for (int i = 2; i <= 8; ++i) nums.push_back(i);
  else
    nums.push_back(std::stoi(which));

  std::filesystem::create_directories(out_dir);
  for (int n : nums) {
    const FigureData fig = figure_data(n);
    const std::filesystem::path path =
        std::filesystem::path(out_dir) / (fig.name + ".csv");
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path.string() + "'");
    file << figure_csv(fig);
    std::cout << "wrote " << path.string() << '\n';
  }
  return 0;
}

int run_verify(std::uint64_t seed) {
  const auto results = run_verification(seed);
  for (const CriterionResult& r : results) {
    std::printf("[%2d/13] %s  %s", r.number, r.pass ? "PASS" : "FAIL",
                r.name.c_str());
    if (!r.detail.empty()) std::printf("  (%s)", r.detail.c_str());
    std::printf("\n");
  }
  const bool ok = all_passed(results);
  std::printf("%s\n", ok ? "all checks passed" : "CHECKS FAILED");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Magic (stabilizer Renyi entropy) generated by tree-level two-lepton "
      "scattering.\nAngles are radians; magic values are nats. Environment "
      "overrides use the QEDMAGIC_ prefix."};
  app.require_subcommand(1);

  std::string mode = "paper";
  std::uint64_t seed = 12345;
  int threads = 1;
  app.add_option("--mode", mode,
                 "mass-ratio preset: paper (0.005) or physical (0.004836)")
      ->check(CLI::IsMember({"paper", "physical"}))
      ->envname("QEDMAGIC_MODE")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for the randomized property suites")
      ->envname("QEDMAGIC_SEED")
      ->capture_default_str();
  app.add_option("--threads", threads,
                 "worker budget; reserved, execution is sequential and the "
                 "output order canonical either way")
      ->check(CLI::PositiveNumber)
      ->envname("QEDMAGIC_THREADS")
      ->capture_default_str();

  int rc = 0;

  // stabilizers list
  auto* stabilizers = app.add_subcommand("stabilizers", "catalog utilities");
  stabilizers->require_subcommand(1);
  auto* stab_list =
      stabilizers->add_subcommand("list", "emit the 60-state catalog");
  std::string stab_format = "json";
  stab_list->add_option("--format", stab_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  stab_list->callback([&] { rc = run_stabilizers_list(stab_format); });

  // magic eval
  auto* magic = app.add_subcommand("magic", "single-state evaluation");
  magic->require_subcommand(1);
  auto* magic_eval = magic->add_subcommand(
      "eval", "magic of one two-qubit state from its coefficients");
  std::vector<double> coeffs;
  int alpha = 2;
  magic_eval
      ->add_option("--coeffs", coeffs,
                   "8 reals: re,im for each of the 4 components")
      ->expected(8)
      ->required()
      ->delimiter(',');
  magic_eval->add_option("--alpha", alpha, "Renyi order, integer >= 2")
      ->check(CLI::Range(2, 16))
      ->capture_default_str();
  magic_eval->callback([&] { rc = run_magic_eval(coeffs, alpha); });

  // amplitude
  auto* amplitude = app.add_subcommand(
      "amplitude", "spin amplitude matrix from the spinor engine");
  std::string amp_process;
  double amp_theta = 0, amp_lambda = -1, amp_mu = 0;
  std::string amp_format = "json";
  amplitude->add_option("--process", amp_process,
                        "eetomumu|moller|bhabha|emu|mumutoee")
      ->required();
  amplitude->add_option("--theta", amp_theta, "CM polar angle, radians")
      ->required();
  amplitude->add_option("--lambda", amp_lambda,
                        "light/heavy mass ratio in (0,1]; default per --mode");
  amplitude->add_option("--mu", amp_mu, "incoming momentum over light mass")
      ->required();
  amplitude->add_option("--format", amp_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  amplitude->callback([&] {
    const double l = amplitude->count("--lambda") ? amp_lambda : mode_lambda(mode);
    rc = run_amplitude(amp_process, amp_theta, l, amp_mu, amp_format);
  });

  // limit-matrix
  auto* limit = app.add_subcommand(
      "limit-matrix", "hard-coded analytic limit of the amplitude matrix");
  std::string lim_process, lim_regime;
  double lim_theta = 0, lim_lambda = -1, lim_inv_mu = 0;
  std::string lim_format = "json";
  limit->add_option("--process", lim_process,
                    "eetomumu|moller|bhabha|emu|mumutoee")
      ->required();
  limit->add_option("--regime", lim_regime, "threshold|low|high")->required();
  limit->add_option("--theta", lim_theta,
                    "CM polar angle, radians (ignored at threshold)")
      ->required();
  limit->add_option("--lambda", lim_lambda,
                    "light/heavy mass ratio; default per --mode");
  limit->add_option("--inv-mu", lim_inv_mu,
                    "1/mu weight of the subleading high-energy term")
      ->capture_default_str();
  limit->add_option("--format", lim_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  limit->callback([&] {
    const double l = limit->count("--lambda") ? lim_lambda : mode_lambda(mode);
    rc = run_limit_matrix(lim_process, lim_regime, lim_theta, l, lim_inv_mu,
                          lim_format);
  });

  // scan
  auto* scan = app.add_subcommand(
      "scan", "magic distribution over the angular (or mass-ratio) grid");
  std::string scan_process, scan_regime, scan_initial = "all";
  std::string scan_source = "limit", scan_out;
  double scan_lambda = -1, scan_mu = 0;
  int scan_grid = 180;
  scan->add_option("--process", scan_process,
                   "eetomumu|moller|bhabha|emu|mumutoee")
      ->required();
  scan->add_option("--regime", scan_regime, "threshold|low|high")->required();
  scan->add_option("--initial", scan_initial, "catalog id 1..60, or all")
      ->capture_default_str();
  scan->add_option("--lambda", scan_lambda,
                   "light/heavy mass ratio; default per --mode");
  scan->add_option("--grid", scan_grid, "grid divisions")
      ->check(CLI::Range(4, 100000))
      ->capture_default_str();
  scan->add_option("--source", scan_source,
                   "engine (spinor amplitudes) or limit (analytic forms)")
      ->check(CLI::IsMember({"engine", "limit"}));
  scan->add_option("--mu", scan_mu,
                   "engine momentum parameter; 0 picks the regime default");
  scan->add_option("--out", scan_out, "CSV path ('-' for stdout)");
  scan->callback([&] {
    const double l = scan->count("--lambda") ? scan_lambda : mode_lambda(mode);
    rc = run_scan(scan_process, scan_regime, scan_initial, l, scan_grid,
                  scan_source, scan_mu, scan_out);
  });

  // classify
  auto* cls = app.add_subcommand(
      "classify", "group the 60 initial states into distribution classes");
  std::string cls_process, cls_regime, cls_format = "json";
  double cls_lambda = -1;
  int cls_grid = 180;
  cls->add_option("--process", cls_process,
                  "eetomumu|moller|bhabha|emu|mumutoee")
      ->required();
  cls->add_option("--regime", cls_regime, "threshold|low|high")->required();
  cls->add_option("--lambda", cls_lambda,
                  "light/heavy mass ratio; default per --mode");
  cls->add_option("--grid", cls_grid, "grid divisions")
      ->check(CLI::Range(4, 100000))
      ->capture_default_str();
  cls->add_option("--format", cls_format, "json")
      ->check(CLI::IsMember({"json"}));
  cls->callback([&] {
    const double l = cls->count("--lambda") ? cls_lambda : mode_lambda(mode);
    rc = run_classify(cls_process, cls_regime, l, cls_grid);
  });

  // tables reproduce
  auto* tables = app.add_subcommand("tables", "reference-table reproduction");
  tables->require_subcommand(1);
  auto* tab_rep = tables->add_subcommand(
      "reproduce", "side-by-side expected/actual comparison");
  std::string tab_which = "all";
  tab_rep->add_option("--which", tab_which, "I..VII or all")
      ->capture_default_str();
  tab_rep->callback([&] { rc = run_tables(tab_which); });

  // figures emit
  auto* figures = app.add_subcommand("figures", "line-plot data emission");
  figures->require_subcommand(1);
  auto* fig_emit =
      figures->add_subcommand("emit", "write per-panel CSV data files");
  std::string fig_which = "all", fig_out = ".";
  fig_emit->add_option("--which", fig_which, "panel number 2..8, or all")
      ->capture_default_str();
  fig_emit->add_option("--out", fig_out, "output directory")
      ->capture_default_str();
  fig_emit->callback([&] { rc = run_figures(fig_which, fig_out); });

  // verify all
  auto* verify = app.add_subcommand("verify", "self-check suite");
  std::string verify_target = "all";
  verify->add_option("target", verify_target, "what to verify (all)")
      ->check(CLI::IsMember({"all"}))
      ->capture_default_str();
  verify->callback([&] { rc = run_verify(seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const KinematicsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const VanishingState& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
