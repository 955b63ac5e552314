#include "doctest.h"

#include <cmath>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qedmagic/amplitudes.hpp"
#include "qedmagic/io.hpp"

using namespace qedmagic;

TEST_CASE("number formatting round-trips") {
  CHECK(fmt(0.5) == "0.5");
  CHECK(fmt(std::nan("")) == "nan");
  CHECK(fmt(-std::numeric_limits<double>::quiet_NaN()) == "nan");
  for (double v : {pi, 1.0 / 3, 1e-300, -2.7182818284590452, 1e17})
    CHECK(std::stod(fmt(v)) == v);
}

TEST_CASE("distribution csv layout") {
  const auto dist = magic_distribution(Process::EeToMuMu, Regime::Threshold,
                                       41, 0.3, Source::Limit, 12);
  std::ostringstream os;
  write_distribution_csv(os, dist);
  const std::string text = os.str();

  std::istringstream in(text);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "theta,xi2,m2");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.substr(line.find(',')) == ",nan,nan");
  }
  CHECK(rows == 11);
}

TEST_CASE("classification json schema") {
  const auto report = classify(Process::EeToMuMu, Regime::Threshold);
  const std::string text = classification_json(report);
  const auto j = nlohmann::json::parse(text);

  CHECK(j["schema"] == 1);
  CHECK(j["process"] == "eetomumu");
  CHECK(j["regime"] == "threshold");
  CHECK(j["scan_variable"] == "lambda");
  CHECK(j["lambda"].is_null());
  REQUIRE(j["classes"].is_array());

  std::size_t total = 0;
  bool saw_vanishing = false;
  for (const auto& c : j["classes"]) {
    total += c["members"].size();
    if (c["status"] == "vanishing_amplitude") {
      saw_vanishing = true;
      CHECK(c["m2_max"].is_null());
      CHECK(c["maximizers"].empty());
    } else {
      CHECK(c.contains("flat"));
      CHECK(c["m2_max"].is_number());
    }
  }
  CHECK(total == 60);
  CHECK(saw_vanishing);

  // Byte-identical on re-run: the pipeline has no hidden state.
  CHECK(classification_json(classify(Process::EeToMuMu, Regime::Threshold)) ==
        text);
}

TEST_CASE("matrix json and text layouts") {
  const auto amp = amplitude_matrix(make_point(Process::EeToMuMu, 1.0, 0.5, 9.0));
  const auto j = nlohmann::json::parse(matrix_json(amp));
  CHECK(j["schema"] == 1);
  CHECK(j["theta_rad"] == 1.0);
  CHECK(j["lambda"] == 0.5);
  CHECK(j["basis"][0] == "uu");
  REQUIRE(j["entries"].size() == 16);
  const auto& e01 = j["entries"][1];
  CHECK(e01[0].get<double>() == amp.entries(0, 1).real());
  CHECK(e01[1].get<double>() == amp.entries(0, 1).imag());

  std::ostringstream os;
  write_matrix_text(os, amp.entries);
  const std::string text = os.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(std::count(text.begin(), text.end(), 'i') == 16);
}

TEST_CASE("figure tables") {
  const FigureData f5 = figure_data(5);
  CHECK(f5.name == "fig5_mumutoee_low_max");
  REQUIRE(f5.columns == std::vector<std::string>{"lambda", "m2_max"});
  REQUIRE(f5.rows.size() == 181);
  CHECK(f5.rows.front()[0] == 0.0);
  CHECK(f5.rows.front()[1] ==
        doctest::Approx(std::log(16.0 / 7.0)).epsilon(1e-9));
  CHECK(f5.rows.back()[1] == doctest::Approx(std::log(9.0 / 5.0)).epsilon(1e-9));

  const FigureData f3 = figure_data(3);
  REQUIRE(f3.columns ==
          std::vector<std::string>{"theta_rad", "m2_id3", "m2_id13"});
  CHECK(f3.rows.size() == 179);

  const std::string csv = figure_csv(f3);
  CHECK(csv.rfind("theta_rad,m2_id3,m2_id13\n", 0) == 0);
  CHECK(figure_csv(figure_data(3)) == csv);

  CHECK_THROWS_AS(figure_data(1), std::invalid_argument);
  CHECK_THROWS_AS(figure_data(9), std::invalid_argument);
}
