#pragma once

// Phase-free Pauli strings for 1 and 2 qubits, plus the Clifford gates used
// by the catalog closure and invariance checks.

#include "qedmagic/qlinalg.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qedmagic {

namespace detail {
inline const std::array<CMat2, 4>& pauli1_matrices() {
  static const std::array<CMat2, 4> p = [] {
    std::array<CMat2, 4> m;
    const cplx i{0, 1};
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, -i, i, 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  return p;
}
}  // namespace detail

inline constexpr char kPauliLabels[5] = "IXYZ";

template <int Dim> struct PauliStringT {
  std::string labels;  // "I".."Z" for n=1, "II".."ZZ" for n=2
  Eigen::Matrix<cplx, Dim, Dim> matrix;
};
using PauliString1 = PauliStringT<2>;
using PauliString = PauliStringT<4>;

// Canonical lexicographic order I<X<Y<Z; left label acts on particle 1.
inline const std::array<PauliString1, 4>& pauli_strings_1q() {
  static const std::array<PauliString1, 4> strings = [] {
    std::array<PauliString1, 4> out;
    for (int a = 0; a < 4; ++a)
      out[a] = {std::string(1, kPauliLabels[a]), detail::pauli1_matrices()[a]};
    return out;
  }();
  return strings;
}

inline const std::array<PauliString, 16>& pauli_strings_2q() {
  static const std::array<PauliString, 16> strings = [] {
    std::array<PauliString, 16> out;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        out[4 * a + b] = {{kPauliLabels[a], kPauliLabels[b]},
                          tensor(detail::pauli1_matrices()[a],
                                 detail::pauli1_matrices()[b])};
    return out;
  }();
  return strings;
}

inline std::size_t pauli_string_count(int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("pauli strings: n must be 1 or 2");
  return n == 1 ? 4u : 16u;
}

// Single-qubit Clifford generators and the two-qubit embeddings.
inline CMat2 hadamard_gate() {
  CMat2 h;
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

inline CMat2 phase_gate() {
  CMat2 s;
  s << 1, 0, 0, cplx{0, 1};
  return s;
}

inline CMat4 on_qubit1(const CMat2& g) { return tensor(g, detail::pauli1_matrices()[0]); }
inline CMat4 on_qubit2(const CMat2& g) { return tensor(detail::pauli1_matrices()[0], g); }

inline CMat4 cnot12() {
  CMat4 c = CMat4::Zero();
  c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1;
  return c;
}

inline CMat4 cnot21() {
  CMat4 c = CMat4::Zero();
  c(0, 0) = c(3, 1) = c(2, 2) = c(1, 3) = 1;
  return c;
}

}  // namespace qedmagic
