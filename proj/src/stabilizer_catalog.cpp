#include "qedmagic/stabilizer.hpp"

#include "qedmagic/magic.hpp"
#include "qedmagic/pauli.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qedmagic {

namespace {

// (re, im) integer pairs for c1..c4; normalization factor 1, 1/sqrt(2) or 1/2
// follows from the nonzero count. Ids 1..36 are product states, 37..60
// maximally entangled.
constexpr int kCoeffs[60][4][2] = {
    {{1, 0}, {0, 0}, {0, 0}, {0, 0}},    // 1
    {{0, 0}, {0, 0}, {0, 0}, {1, 0}},    // 2
    {{0, 0}, {1, 0}, {0, 0}, {0, 0}},    // 3
    {{0, 0}, {0, 0}, {1, 0}, {0, 0}},    // 4
    {{1, 0}, {1, 0}, {1, 0}, {1, 0}},    // 5
    {{1, 0}, {-1, 0}, {-1, 0}, {1, 0}},  // 6
    {{1, 0}, {-1, 0}, {1, 0}, {-1, 0}},  // 7
    {{1, 0}, {1, 0}, {-1, 0}, {-1, 0}},  // 8
    {{1, 0}, {0, 1}, {0, 1}, {-1, 0}},   // 9
    {{1, 0}, {0, -1}, {0, -1}, {-1, 0}}, // 10
    {{1, 0}, {0, -1}, {0, 1}, {1, 0}},   // 11
    {{1, 0}, {0, 1}, {0, -1}, {1, 0}},   // 12
    {{1, 0}, {0, 1}, {1, 0}, {0, 1}},    // 13
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},  // 14
    {{1, 0}, {0, -1}, {-1, 0}, {0, 1}},  // 15
    {{1, 0}, {1, 0}, {0, -1}, {0, -1}},  // 16
    {{1, 0}, {0, -1}, {1, 0}, {0, -1}},  // 17
    {{1, 0}, {-1, 0}, {0, -1}, {0, 1}},  // 18
    {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},  // 19
    {{1, 0}, {1, 0}, {0, 1}, {0, 1}},    // 20
    {{1, 0}, {0, -1}, {0, 0}, {0, 0}},   // 21
    {{0, 0}, {1, 0}, {0, 0}, {0, -1}},   // 22
    {{0, 0}, {0, 0}, {1, 0}, {0, 1}},    // 23
    {{1, 0}, {0, 0}, {0, 1}, {0, 0}},    // 24
    {{1, 0}, {0, 1}, {0, 0}, {0, 0}},    // 25
    {{0, 0}, {1, 0}, {0, 0}, {0, 1}},    // 26
    {{0, 0}, {0, 0}, {1, 0}, {0, -1}},   // 27
    {{1, 0}, {0, 0}, {0, -1}, {0, 0}},   // 28
    {{1, 0}, {1, 0}, {0, 0}, {0, 0}},    // 29
    {{0, 0}, {1, 0}, {0, 0}, {1, 0}},    // 30
    {{0, 0}, {0, 0}, {1, 0}, {-1, 0}},   // 31
    {{1, 0}, {0, 0}, {-1, 0}, {0, 0}},   // 32
    {{1, 0}, {-1, 0}, {0, 0}, {0, 0}},   // 33
    {{0, 0}, {1, 0}, {0, 0}, {-1, 0}},   // 34
    {{0, 0}, {0, 0}, {1, 0}, {1, 0}},    // 35
    {{1, 0}, {0, 0}, {1, 0}, {0, 0}},    // 36
    {{1, 0}, {0, 0}, {0, 0}, {1, 0}},    // 37
    {{1, 0}, {0, 0}, {0, 0}, {-1, 0}},   // 38
    {{1, 0}, {0, 0}, {0, 0}, {0, 1}},    // 39
    {{1, 0}, {0, 0}, {0, 0}, {0, -1}},   // 40
    {{0, 0}, {1, 0}, {1, 0}, {0, 0}},    // 41
    {{0, 0}, {1, 0}, {-1, 0}, {0, 0}},   // 42
    {{0, 0}, {1, 0}, {0, 1}, {0, 0}},    // 43
    {{0, 0}, {1, 0}, {0, -1}, {0, 0}},   // 44
    {{1, 0}, {-1, 0}, {-1, 0}, {-1, 0}}, // 45
    {{1, 0}, {-1, 0}, {1, 0}, {1, 0}},   // 46
    {{1, 0}, {1, 0}, {-1, 0}, {1, 0}},   // 47
    {{1, 0}, {1, 0}, {1, 0}, {-1, 0}},   // 48
    {{1, 0}, {0, -1}, {0, -1}, {1, 0}},  // 49
    {{1, 0}, {0, 1}, {0, 1}, {1, 0}},    // 50
    {{1, 0}, {-1, 0}, {0, -1}, {0, -1}}, // 51
    {{1, 0}, {0, -1}, {-1, 0}, {0, -1}}, // 52
    {{1, 0}, {-1, 0}, {0, 1}, {0, 1}},   // 53
    {{1, 0}, {0, 1}, {-1, 0}, {0, 1}},   // 54
    {{1, 0}, {0, -1}, {1, 0}, {0, 1}},   // 55
    {{1, 0}, {0, 1}, {1, 0}, {0, -1}},   // 56
    {{1, 0}, {1, 0}, {0, -1}, {0, 1}},   // 57
    {{1, 0}, {1, 0}, {0, 1}, {0, -1}},   // 58
    {{1, 0}, {0, -1}, {0, 1}, {-1, 0}},  // 59
    {{1, 0}, {0, 1}, {0, -1}, {-1, 0}},  // 60
};

std::array<StabilizerState, 60> build_catalog() {
  std::array<StabilizerState, 60> cat;
  for (int i = 0; i < 60; ++i) {
    CVec4 c;
    for (int j = 0; j < 4; ++j)
      c(j) = cplx(kCoeffs[i][j][0], kCoeffs[i][j][1]);
    cat[i] = {i + 1, c, normalize(c), i >= 36};
  }
  return cat;
}

}  // namespace

const std::array<StabilizerState, 60>& stabilizer_catalog() {
  static const std::array<StabilizerState, 60> cat = build_catalog();
  return cat;
}

std::uint64_t count_stabilizer_states(int n) {
  if (n < 1 || n > 30) throw std::range_error("state count: n out of range");
  std::uint64_t count = std::uint64_t{1} << n;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t factor = (std::uint64_t{1} << (n - k)) + 1;
    if (count > UINT64_MAX / factor) throw std::range_error("state count overflow");
    count *= factor;
  }
  return count;
}

namespace {

bool same_ray(const CVec4& a, const CVec4& b) {
  return std::abs(a.dot(b)) > 1.0 - 1e-9;
}

}  // namespace

CatalogReport verify_catalog() {
  CatalogReport report;
  const auto& cat = stabilizer_catalog();
  auto fail = [&report](const std::string& what) {
    report.ok = false;
    report.failures.push_back(what);
  };

  for (const auto& s : cat) {
    if (std::abs(sre(s.state, 2)) > 1e-12) {
      std::ostringstream os;
      os << "state " << s.id << ": nonzero magic";
      fail(os.str());
    }
    const double c = concurrence(s.state);
    const bool product = c < 1e-9, maximal = std::abs(c - 1) < 1e-9;
    if (!(product || maximal) || (s.entangled ? !maximal : !product)) {
      std::ostringstream os;
      os << "state " << s.id << ": entanglement label mismatch (C=" << c << ")";
      fail(os.str());
    }
  }

  for (int i = 0; i < 60; ++i)
    for (int j = i + 1; j < 60; ++j)
      if (same_ray(cat[i].state, cat[j].state)) {
        std::ostringstream os;
        os << "states " << i + 1 << " and " << j + 1 << " coincide as rays";
        fail(os.str());
      }

  const CMat4 generators[6] = {on_qubit1(hadamard_gate()), on_qubit2(hadamard_gate()),
                               on_qubit1(phase_gate()),    on_qubit2(phase_gate()),
                               cnot12(),                   cnot21()};
  for (int g = 0; g < 6; ++g)
    for (const auto& s : cat) {
      const CVec4 mapped = generators[g] * s.state;
      bool found = false;
      for (const auto& t : cat) found = found || same_ray(mapped, t.state);
      if (!found) {
        std::ostringstream os;
        os << "generator " << g << " maps state " << s.id << " outside the set";
        fail(os.str());
      }
    }

  if (count_stabilizer_states(2) != cat.size()) fail("state count formula mismatch");
  return report;
}

}  // namespace qedmagic
