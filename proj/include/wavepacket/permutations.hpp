#pragma once

#include <cstddef>
#include <vector>

#include "wavepacket/circuit.hpp"

namespace wavepacket {

// Size parameters for the classical index maps realized by the permutation
// circuits below. Shift/R/Q/T use m (total register size); S uses (n, b);
// WQ uses (n, j).
struct PermSpec {
  enum class Kind { Shift, R, Q, S, T, WQ };
  Kind kind = Kind::Shift;
  int m = 0;
  int n = 0;
  int b = 0;
  int j = 0;
};

// Evaluates the defining index map for a permutation spec: table[x] is the
// image of basis state |x>. Computed case-by-case from the index equations,
// entirely independent of the circuit constructions.
inline std::vector<std::size_t> perm_definition_table(const PermSpec& spec) {
  using Kind = PermSpec::Kind;
  switch (spec.kind) {
    case Kind::Shift: {
      if (spec.m < 1) throw InvalidParams("perm_definition_table: shift needs m >= 1");
      const std::size_t size = pow2(spec.m);
      std::vector<std::size_t> table(size);
      for (std::size_t x = 0; x < size; ++x) table[x] = (x + 1) % size;
      return table;
    }
    case Kind::R: {
      if (spec.m < 1) throw InvalidParams("perm_definition_table: R needs m >= 1");
      const std::size_t size = pow2(spec.m);
      std::vector<std::size_t> table(size);
      for (std::size_t j = 0; j < size / 2; ++j) {
        table[j] = 2 * j;
        table[size - 1 - j] = 2 * j + 1;
      }
      return table;
    }
    case Kind::Q: {
      if (spec.m < 2) throw InvalidParams("perm_definition_table: Q needs m >= 2");
      const std::size_t size = pow2(spec.m);
      std::vector<std::size_t> table(size);
      for (std::size_t j = 0; j < size / 2; ++j) table[j] = 2 * j;
      table[size - 1] = size - 1;
      table[size / 2] = 1;
      for (std::size_t j = 1; j < size / 4; ++j) {
        table[size - 2 * j] = 4 * j + 1;
        table[size - 2 * j - 1] = 4 * j - 1;
      }
      return table;
    }
    case Kind::S: {
      if (spec.b < 0 || spec.n < spec.b + 2) {
        throw InvalidParams("perm_definition_table: S needs n >= b + 2");
      }
      const std::size_t size = pow2(spec.n);
      const std::size_t block = pow2(spec.b);
      const std::size_t blocks = size / block;
      std::vector<std::size_t> table(size);
      for (std::size_t j = 0; j < blocks / 2; ++j) {
        for (std::size_t k = 0; k < block; ++k) {
          const std::size_t low = block * j + k;
          const std::size_t high = block * (blocks - 1 - j) + k;
          if (j % 2 == 0) {
            table[low] = 2 * block * j + k;
            table[high] = 2 * block * j + block + k;
          } else {
            table[low] = 2 * block * j + block + k;
            table[high] = 2 * block * j + k;
          }
        }
      }
      return table;
    }
    case Kind::T: {
      if (spec.m < 2) throw InvalidParams("perm_definition_table: T needs m >= 2");
      const std::size_t size = pow2(spec.m);
      std::vector<std::size_t> table(size);
      for (std::size_t x = 0; x < size; ++x) {
        // Swap the first and third quarter of the index range.
        const bool second_highest = (x >> (spec.m - 2)) & 1u;
        table[x] = second_highest ? x : (x ^ (size / 2));
      }
      return table;
    }
    case Kind::WQ: {
      if (spec.j < 2 || spec.j > spec.n) {
        throw InvalidParams("perm_definition_table: WQ needs 2 <= j <= n");
      }
      const int n = spec.n;
      const int j = spec.j;
      const std::size_t size = pow2(n);
      std::vector<std::size_t> table(size);
      for (std::size_t x = 0; x < size; ++x) {
        const std::size_t top = (x >> (n - 1)) & 1u;
        const std::size_t low = (x >> (n - j)) & 1u;
        std::size_t y = x;
        y = (y & ~(std::size_t{1} << (n - 1))) | (low << (n - 1));
        y = (y & ~(std::size_t{1} << (n - j))) | (top << (n - j));
        for (int i = n - 2; i >= n - j + 1; --i) {
          const std::size_t mid = ((x >> i) & 1u) ^ top ^ 1u;
          y = (y & ~(std::size_t{1} << i)) | (mid << i);
        }
        table[x] = y;
      }
      return table;
    }
  }
  throw InvalidParams("perm_definition_table: unknown kind");
}

// Cyclic increment |x> -> |x+1 mod 2^m>: descending cascade of
// multi-controlled NOTs (all lower qubits as on-controls), then X on qubit 0.
inline Circuit shift_circuit(int m) {
  if (m < 1) throw InvalidParams("shift_circuit: m >= 1 required");
  Circuit c;
  c.n = m;
  for (int i = m - 1; i >= 1; --i) {
    std::vector<ControlTerm> controls;
    for (int q = 0; q < i; ++q) controls.push_back({q, true});
    c.gates.push_back(make_controlled(controls, gate_x(i)));
  }
  c.gates.push_back(gate_x(0));
  return c;
}

// Even/odd interleaver: |j> -> |2j>, |M-1-j> -> |2j+1>. CNOT cascade from the
// top qubit followed by a cascade of adjacent swaps.
inline Circuit r_perm_circuit(int m) {
  if (m < 1) throw InvalidParams("r_perm_circuit: m >= 1 required");
  Circuit c;
  c.n = m;
  if (m == 1) return c;
  for (int t = m - 2; t >= 0; --t) {
    c.gates.push_back(make_controlled({{m - 1, true}}, gate_x(t)));
  }
  for (int i = m - 1; i >= 1; --i) {
    c.gates.push_back(gate_swap(i, i - 1));
  }
  return c;
}

// Frequency-folding permutation: decrement the lower m-1 qubits, CNOT from the
// top qubit to the bottom one, increment back, then interleave with R.
inline Circuit q_perm_circuit(int m) {
  if (m < 2) throw InvalidParams("q_perm_circuit: m >= 2 required");
  Circuit c;
  c.n = m;
  const Circuit up = shift_circuit(m - 1);
  const Circuit down = adjoint(up);
  c.gates.insert(c.gates.end(), down.gates.begin(), down.gates.end());
  c.gates.push_back(make_controlled({{m - 1, true}}, gate_x(0)));
  c.gates.insert(c.gates.end(), up.gates.begin(), up.gates.end());
  const Circuit r = r_perm_circuit(m);
  c.gates.insert(c.gates.end(), r.gates.begin(), r.gates.end());
  return c;
}

// Block interleaver acting on the top n-b qubits: R on the block index, then a
// CNOT twisting the lowest block bit by the next one.
inline Circuit s_perm_circuit(int n, int b) {
  if (b < 0 || n < b + 2) throw InvalidParams("s_perm_circuit: n >= b + 2 required");
  Circuit c;
  c.n = n;
  const Circuit r = r_perm_circuit(n - b);
  for (const Gate& g : r.gates) c.gates.push_back(shift_qubits(g, b));
  c.gates.push_back(make_controlled({{b + 1, true}}, gate_x(b)));
  return c;
}

// Transposition of the first and third quarter of the index range: one
// zero-controlled NOT from the second-highest qubit onto the highest one.
inline Circuit t_perm_circuit(int n) {
  if (n < 2) throw InvalidParams("t_perm_circuit: n >= 2 required");
  Circuit c;
  c.n = n;
  c.gates.push_back(make_controlled({{n - 2, false}}, gate_x(n - 1)));
  return c;
}

// Top-j-qubit permutation sending the pattern 0...01 to 1...10 while fixing
// 1...11: j-2 zero-controlled NOTs from the top qubit onto the middle qubits,
// then a swap of the top and (n-j)-th qubit.
inline Circuit wq_circuit(int n, int j) {
  if (j < 2 || j > n) throw InvalidParams("wq_circuit: 2 <= j <= n required");
  Circuit c;
  c.n = n;
  for (int t = n - 2; t >= n - j + 1; --t) {
    c.gates.push_back(make_controlled({{n - 1, false}}, gate_x(t)));
  }
  c.gates.push_back(gate_swap(n - 1, n - j));
  return c;
}

// Extracts the classical permutation realized by a circuit: table[x] = y where
// |<y|U|x>| ~ 1. Amplitudes strictly between the thresholds mean the circuit
// is not a permutation.
inline std::vector<std::size_t> perm_table(const Circuit& c) {
  const std::size_t size = pow2(c.n);
  std::vector<std::size_t> table(size);
  std::vector<bool> used(size, false);
  for (std::size_t x = 0; x < size; ++x) {
    ComplexVector basis(size, Complex{0.0, 0.0});
    basis[x] = Complex{1.0, 0.0};
    const ComplexVector image = apply_circuit(c, basis);
    bool found = false;
    for (std::size_t y = 0; y < size; ++y) {
      const double mag = std::abs(image[y]);
      if (mag > 1.0 - 1e-8) {
        if (found) throw NotAPermutation("perm_table: two near-unit amplitudes in one column");
        table[x] = y;
        found = true;
      } else if (mag > 1e-8) {
        throw NotAPermutation("perm_table: column amplitude neither ~0 nor ~1");
      }
    }
    if (!found) throw NotAPermutation("perm_table: no unit amplitude found in column");
    if (used[table[x]]) throw NotAPermutation("perm_table: image index repeated");
    used[table[x]] = true;
  }
  return table;
}

}  // namespace wavepacket
