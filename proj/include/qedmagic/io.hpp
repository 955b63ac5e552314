#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qedmagic/amplitudes.hpp"
#include "qedmagic/scan.hpp"

namespace qedmagic {

// Round-trip decimal form (%.17g); NaN prints as "nan" regardless of sign.
std::string fmt(double v);

// One header line `theta,xi2,m2` (radians, nats), then one row per grid
// point.
// Killed points carry nan in both value columns.
void write_distribution_csv(std::ostream& os, const MagicDistribution& dist);

// Classification result as JSON, schema 1. Maximizers are labelled by the
// scanned variable (theta_rad or lambda).
std::string classification_json(const ClassificationReport& report);

// Spin amplitude matrix as JSON, schema 1: row-major [re, im] pairs with the
// kinematic point alongside. Row = final helicity pair, column = initial.
std::string matrix_json(const SpinAmplitudeMatrix& amp);

// Plain-text 4x4 layout for terminal viewing, entries as re+imi.
void write_matrix_text(std::ostream& os, const CMat4& a);

struct FigureData {
  std::string name;                  // file stem, e.g. "fig4_mumutoee_low"
  std::vector<std::string> columns;  // header names, first is the abscissa
  std::vector<std::vector<double>> rows;
};

// Data behind one of the seven line plots (2..8). CSV via figure_csv.
FigureData figure_data(int which);

std::string figure_csv(const FigureData& fig);

}  // namespace qedmagic
