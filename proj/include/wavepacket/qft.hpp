#pragma once

#include <numbers>

#include "wavepacket/circuit.hpp"

namespace wavepacket {

// Quantum Fourier transform on m qubits with the positive-exponent convention:
// the resulting unitary has entries exp(+2*pi*i*k*j / 2^m) / sqrt(2^m).
// Layout follows the textbook ladder (Hadamard plus controlled phases from the
// most significant qubit down) and a final layer of qubit-reversal swaps.
inline Circuit qft_circuit(int m) {
  if (m < 1 || m > 26) {
    throw InvalidParams("qft_circuit: qubit count must be in [1, 26]");
  }
  Circuit c;
  c.n = m;
  for (int i = m - 1; i >= 0; --i) {
    c.gates.push_back(gate_h(i));
    for (int d = 1; d <= i; ++d) {
      const double theta = 2.0 * std::numbers::pi / static_cast<double>(pow2(d + 1));
      c.gates.push_back(make_controlled({{i - d, true}}, gate_rz(theta, i)));
    }
  }
  for (int i = 0; i < m / 2; ++i) {
    c.gates.push_back(gate_swap(i, m - 1 - i));
  }
  return c;
}

// Inverse Fourier transform (negative-exponent convention).
inline Circuit iqft_circuit(int m) { return adjoint(qft_circuit(m)); }

}  // namespace wavepacket
