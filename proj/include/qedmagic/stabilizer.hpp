#pragma once

// The 60 two-qubit stabilizer states, in the catalog order that the
// classification tables index into. Hard-coded (the ordering is load-bearing),
// then cross-verified by verify_catalog().

#include "qedmagic/qlinalg.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qedmagic {

struct StabilizerState {
  int id;             // 1..60
  CVec4 coeffs;       // unnormalized catalog coefficients (entries 0, +-1, +-i)
  CVec4 state;        // normalized
  bool entangled;     // false for ids 1..36 (product), true for 37..60 (maximal)
};

const std::array<StabilizerState, 60>& stabilizer_catalog();

// 2^n * prod_{k=0}^{n-1} (2^{n-k} + 1); 6, 60, 1080 for n = 1, 2, 3.
std::uint64_t count_stabilizer_states(int n);

// C = 2 |c1 c4 - c2 c3| for normalized psi: 0 on product states, 1 on
// maximally entangled ones.
inline double concurrence(const CVec4& psi) {
  return 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2));
}

struct CatalogReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks: every state has M2 = 0 within 1e-12; pairwise distinct as rays;
// entangled flags match concurrence; the ray set is closed under H, S on
// either qubit and both CNOTs.
CatalogReport verify_catalog();

}  // namespace qedmagic
