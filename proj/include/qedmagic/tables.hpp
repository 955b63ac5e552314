#pragma once

#include <limits>
#include <string>
#include <vector>

#include "qedmagic/scan.hpp"

namespace qedmagic {

// One distribution class as recorded in the reference tables: which catalog
// states share the class, plus the peak data where the table records it.
// Peak tolerances are per row because the recorded decimals vary in width.
struct TableRow {
  std::string label;
  std::vector<int> members;
  bool vanishing = false;  // the amplitude kills these states outright
  bool flat = false;       // identically zero distribution, any arg maximal
  double m2_max = std::numeric_limits<double>::quiet_NaN();  // NaN: unrecorded
  double tol_value = 0;
  std::vector<double> maximizers;  // ascending; empty: unrecorded
  double tol_arg = 0;
};

struct ReferenceTable {
  int number;  // 1..7
  Process process;
  Regime regime;
  std::string caption;
  std::vector<TableRow> rows;
};

const std::vector<ReferenceTable>& reference_tables();

struct RowCheck {
  std::string label;
  bool members_ok = false;
  bool value_ok = true;
  bool args_ok = true;
  std::string expected;  // recorded row, rendered for display
  std::string actual;    // computed class, rendered for display
  std::string detail;    // empty when the row reproduces
};

struct TableCheck {
  int number = 0;
  bool ok = false;
  std::vector<RowCheck> rows;
};

// Reclassifies from the analytic limits (lambda = 0.005 where the form
// depends on it) and compares member sets and recorded peaks row by row.
TableCheck check_table(const ReferenceTable& table);

}  // namespace qedmagic
