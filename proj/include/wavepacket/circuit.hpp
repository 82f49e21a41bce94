#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>

#include "wavepacket/tensor.hpp"
#include "wavepacket/types.hpp"

namespace wavepacket {

enum class GateKind { X, Y, Z, H, Rz, Swap, Custom, Controlled };

struct ControlTerm {
  int qubit = 0;
  bool on = true;  // on = |1⟩-control, off = |0⟩-control
};

// One IR atom. Custom targets are ordered: the first listed target is the most
// significant bit of the block index. Controlled wraps exactly one non-Controlled
// inner gate (make_controlled merges nested control sets).
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  double theta = 0.0;           // Rz only
  DenseUnitary matrix;          // Custom only
  std::vector<ControlTerm> controls;  // Controlled only
  std::vector<Gate> inner;            // Controlled only, exactly one element
};

// Ancillas occupy the topmost qubit indices n..n+ancilla-1; they start in |0⟩
// and every synthesized circuit must return them to |0⟩ (verified at evaluation).
struct Circuit {
  int n = 0;
  int ancilla = 0;
  std::vector<Gate> gates;
};

inline Gate gate_x(int t) { return Gate{GateKind::X, {t}, 0.0, {}, {}, {}}; }
inline Gate gate_y(int t) { return Gate{GateKind::Y, {t}, 0.0, {}, {}, {}}; }
inline Gate gate_z(int t) { return Gate{GateKind::Z, {t}, 0.0, {}, {}, {}}; }
inline Gate gate_h(int t) { return Gate{GateKind::H, {t}, 0.0, {}, {}, {}}; }
inline Gate gate_rz(double theta, int t) {
  return Gate{GateKind::Rz, {t}, theta, {}, {}, {}};
}
inline Gate gate_swap(int a, int b) {
  return Gate{GateKind::Swap, {a, b}, 0.0, {}, {}, {}};
}

inline Gate gate_custom(const DenseUnitary& m, const std::vector<int>& targets) {
  if (targets.empty()) throw InvalidParams("custom gate needs at least one target");
  if (m.dim != pow2(static_cast<int>(targets.size())))
    throw InvalidParams("custom gate matrix dimension does not match target count");
  if (unitarity_defect(m) > 1e-12)
    throw InvalidParams("custom gate matrix is not unitary within 1e-12");
  return Gate{GateKind::Custom, targets, 0.0, m, {}, {}};
}

inline Gate make_controlled(const std::vector<ControlTerm>& controls, const Gate& g) {
  if (controls.empty()) return g;
  Gate out;
  out.kind = GateKind::Controlled;
  if (g.kind == GateKind::Controlled) {
    out.controls = g.controls;
    out.controls.insert(out.controls.end(), controls.begin(), controls.end());
    out.inner = g.inner;
    out.targets = g.targets;
  } else {
    out.controls = controls;
    out.inner = {g};
    out.targets = g.targets;
  }
  return out;
}

// Re-embeds a gate with every qubit index shifted by delta.
inline Gate shift_qubits(const Gate& g, int delta) {
  Gate out = g;
  for (int& t : out.targets) t += delta;
  for (ControlTerm& c : out.controls) c.qubit += delta;
  for (Gate& in : out.inner) in = shift_qubits(in, delta);
  return out;
}

namespace detail {

inline void validate_gate(const Gate& g, int total_qubits) {
  auto check_index = [&](int q) {
    if (q < 0 || q >= total_qubits)
      throw InvalidParams("gate references qubit index out of range");
  };
  std::vector<int> seen;
  auto check_distinct = [&](int q) {
    if (std::find(seen.begin(), seen.end(), q) != seen.end())
      throw InvalidParams("gate references a qubit twice");
    seen.push_back(q);
  };
  switch (g.kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::Rz:
      if (g.targets.size() != 1) throw InvalidParams("single-qubit gate needs one target");
      break;
    case GateKind::Swap:
      if (g.targets.size() != 2) throw InvalidParams("swap needs two targets");
      break;
    case GateKind::Custom:
      if (g.targets.empty() || g.matrix.dim != pow2(static_cast<int>(g.targets.size())))
        throw InvalidParams("custom gate matrix/target mismatch");
      break;
    case GateKind::Controlled: {
      if (g.inner.size() != 1) throw InvalidParams("controlled gate needs one inner gate");
      if (g.inner[0].kind == GateKind::Controlled)
        throw InvalidParams("nested controlled gates are not allowed");
      if (g.controls.empty()) throw InvalidParams("controlled gate needs controls");
      validate_gate(g.inner[0], total_qubits);
      for (const ControlTerm& c : g.controls) {
        check_index(c.qubit);
        check_distinct(c.qubit);
      }
      for (int t : g.inner[0].targets) check_distinct(t);
      return;
    }
  }
  for (int t : g.targets) {
    check_index(t);
    check_distinct(t);
  }
}

inline void validate_circuit(const Circuit& c) {
  if (c.n < 1 || c.ancilla < 0) throw InvalidParams("circuit needs n >= 1, ancilla >= 0");
  for (const Gate& g : c.gates) validate_gate(g, c.n + c.ancilla);
}

// Expands i by inserting a zero bit at each position in fixed_sorted (ascending).
inline std::uint64_t spread_bits(std::uint64_t i, const std::vector<int>& fixed_sorted) {
  std::uint64_t x = i;
  for (int p : fixed_sorted) {
    const std::uint64_t low = x & ((std::uint64_t{1} << p) - 1);
    x = ((x >> p) << (p + 1)) | low;
  }
  return x;
}

inline void apply_gate(ComplexVector& state, int total_qubits, const Gate& g,
                       std::uint64_t cmask, std::uint64_t cval) {
  if (g.kind == GateKind::Controlled) {
    std::uint64_t m = cmask, v = cval;
    for (const ControlTerm& c : g.controls) {
      m |= std::uint64_t{1} << c.qubit;
      if (c.on) v |= std::uint64_t{1} << c.qubit;
    }
    apply_gate(state, total_qubits, g.inner[0], m, v);
    return;
  }

  std::vector<int> fixed;
  for (int q = 0; q < total_qubits; ++q)
    if (cmask & (std::uint64_t{1} << q)) fixed.push_back(q);
  for (int t : g.targets) fixed.push_back(t);
  std::sort(fixed.begin(), fixed.end());
  const int free_bits = total_qubits - static_cast<int>(fixed.size());
  const std::uint64_t free_count = std::uint64_t{1} << free_bits;

  switch (g.kind) {
    case GateKind::X: {
      const std::uint64_t tb = std::uint64_t{1} << g.targets[0];
      for (std::uint64_t i = 0; i < free_count; ++i) {
        const std::uint64_t base = spread_bits(i, fixed) | cval;
        std::swap(state[base], state[base | tb]);
      }
      break;
    }
    case GateKind::Y: {
      const std::uint64_t tb = std::uint64_t{1} << g.targets[0];
      const Complex im{0.0, 1.0};
      for (std::uint64_t i = 0; i < free_count; ++i) {
        const std::uint64_t base = spread_bits(i, fixed) | cval;
        const Complex a0 = state[base], a1 = state[base | tb];
        state[base] = -im * a1;
        state[base | tb] = im * a0;
      }
      break;
    }
    case GateKind::Z: {
      const std::uint64_t tb = std::uint64_t{1} << g.targets[0];
      for (std::uint64_t i = 0; i < free_count; ++i)
        state[(spread_bits(i, fixed) | cval) | tb] *= -1.0;
      break;
    }
    case GateKind::H: {
      const std::uint64_t tb = std::uint64_t{1} << g.targets[0];
      const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
      for (std::uint64_t i = 0; i < free_count; ++i) {
        const std::uint64_t base = spread_bits(i, fixed) | cval;
        const Complex a0 = state[base], a1 = state[base | tb];
        state[base] = (a0 + a1) * inv_sqrt2;
        state[base | tb] = (a0 - a1) * inv_sqrt2;
      }
      break;
    }
    case GateKind::Rz: {
      const std::uint64_t tb = std::uint64_t{1} << g.targets[0];
      const Complex phase = std::polar(1.0, g.theta);
      for (std::uint64_t i = 0; i < free_count; ++i)
        state[(spread_bits(i, fixed) | cval) | tb] *= phase;
      break;
    }
    case GateKind::Swap: {
      const std::uint64_t ab = std::uint64_t{1} << g.targets[0];
      const std::uint64_t bb = std::uint64_t{1} << g.targets[1];
      for (std::uint64_t i = 0; i < free_count; ++i) {
        const std::uint64_t base = spread_bits(i, fixed) | cval;
        std::swap(state[base | ab], state[base | bb]);
      }
      break;
    }
    case GateKind::Custom: {
      const int k = static_cast<int>(g.targets.size());
      const std::size_t block = pow2(k);
      std::vector<std::uint64_t> offset(block, 0);
      for (std::size_t l = 0; l < block; ++l)
        for (int t = 0; t < k; ++t)
          if ((l >> (k - 1 - t)) & 1) offset[l] |= std::uint64_t{1} << g.targets[t];
      ComplexVector in(block), out(block);
      for (std::uint64_t i = 0; i < free_count; ++i) {
        const std::uint64_t base = spread_bits(i, fixed) | cval;
        for (std::size_t l = 0; l < block; ++l) in[l] = state[base | offset[l]];
        for (std::size_t r = 0; r < block; ++r) {
          Complex s{};
          for (std::size_t c = 0; c < block; ++c) s += g.matrix.at(r, c) * in[c];
          out[r] = s;
        }
        for (std::size_t l = 0; l < block; ++l) state[base | offset[l]] = out[l];
      }
      break;
    }
    case GateKind::Controlled:
      break;  // handled above
  }
}

inline double off_block_mass(const ComplexVector& state, std::size_t data_dim) {
  double s = 0.0;
  for (std::size_t i = data_dim; i < state.size(); ++i) s += std::norm(state[i]);
  return std::sqrt(s);
}

}  // namespace detail

// Acts gate-by-gate on a data statevector with ancillas appended in |0⟩,
// verifies they return to |0⟩ (relative ℓ2 mass ≤ 1e-10), then projects back.
inline ComplexVector apply_circuit(const Circuit& c, const ComplexVector& psi) {
  detail::validate_circuit(c);
  const int total = c.n + c.ancilla;
  if (total > 26) throw DimensionTooLarge("apply_circuit supports n + ancilla <= 26");
  const std::size_t data_dim = pow2(c.n);
  if (psi.size() != data_dim) throw InvalidParams("apply_circuit: state length != 2^n");

  ComplexVector state(pow2(total));
  std::copy(psi.begin(), psi.end(), state.begin());
  for (const Gate& g : c.gates) detail::apply_gate(state, total, g, 0, 0);

  const double orig = norm2(psi);
  if (orig > 0.0 && detail::off_block_mass(state, data_dim) > 1e-10 * orig)
    throw AncillaLeakage("ancilla qubits did not return to |0>");

  ComplexVector out(state.begin(), state.begin() + data_dim);
  const double kept = norm2(out);
  if (orig > 0.0 && kept > 0.0) {
    const double scale = orig / kept;
    for (Complex& x : out) x *= scale;
  }
  return out;
}

// Evaluates the full (n+ancilla)-qubit operator column by column and restricts
// to the ancilla-|0⟩ block.
inline DenseUnitary circuit_to_unitary(const Circuit& c) {
  detail::validate_circuit(c);
  const int total = c.n + c.ancilla;
  if (total > 12) throw DimensionTooLarge("circuit_to_unitary supports n + ancilla <= 12");
  const std::size_t data_dim = pow2(c.n);
  const std::size_t full_dim = pow2(total);

  DenseUnitary out(data_dim);
  std::atomic<bool> leaked{false};
  parallel_for(data_dim, [&](std::size_t c0, std::size_t c1) {
    ComplexVector state(full_dim);
    for (std::size_t col = c0; col < c1; ++col) {
      std::fill(state.begin(), state.end(), Complex{});
      state[col] = 1.0;
      for (const Gate& g : c.gates) detail::apply_gate(state, total, g, 0, 0);
      if (detail::off_block_mass(state, data_dim) > 1e-10) leaked.store(true);
      for (std::size_t r = 0; r < data_dim; ++r) out.at(r, col) = state[r];
    }
  });
  if (leaked.load()) throw AncillaLeakage("ancilla qubits did not return to |0>");
  return out;
}

inline Gate adjoint_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::Swap:
      return g;
    case GateKind::Rz:
      return gate_rz(-g.theta, g.targets[0]);
    case GateKind::Custom:
      return gate_custom(dagger(g.matrix), g.targets);
    case GateKind::Controlled: {
      Gate out = g;
      out.inner[0] = adjoint_gate(g.inner[0]);
      return out;
    }
  }
  throw InvalidParams("unknown gate kind");
}

inline Circuit adjoint(const Circuit& c) {
  Circuit out;
  out.n = c.n;
  out.ancilla = c.ancilla;
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
    out.gates.push_back(adjoint_gate(*it));
  return out;
}

struct GateCounts {
  std::size_t single_qubit = 0;
  std::size_t two_qubit = 0;
  std::size_t custom_block = 0;
  std::map<int, std::size_t> multi_control;  // keyed by control arity
};

inline GateCounts gate_counts(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
      case GateKind::H:
      case GateKind::Rz:
        ++counts.single_qubit;
        break;
      case GateKind::Swap:
        ++counts.two_qubit;
        break;
      case GateKind::Custom:
        ++counts.custom_block;
        break;
      case GateKind::Controlled: {
        const int arity = static_cast<int>(g.controls.size());
        const GateKind ik = g.inner[0].kind;
        const bool inner_1q = ik != GateKind::Swap && ik != GateKind::Custom;
        if (arity == 1 && inner_1q)
          ++counts.two_qubit;
        else
          ++counts.multi_control[arity];
        break;
      }
    }
  }
  return counts;
}

// Elementary-equivalent total: a k-controlled gate is weighted 2k-1 (linear
// ancilla-assisted decomposition); everything else counts as one gate.
inline std::size_t weighted_total(const GateCounts& counts) {
  std::size_t total = counts.single_qubit + counts.two_qubit + counts.custom_block;
  for (const auto& [arity, count] : counts.multi_control)
    total += count * static_cast<std::size_t>(2 * arity - 1);
  return total;
}

// Rewrites every multi-controlled non-NOT gate as: multi-controlled NOT onto one
// shared fresh ancilla, singly-controlled gate, uncompute NOT. Multi-controlled
// NOT itself stays primitive. Adds at most one ancilla.
inline Circuit lower_multicontrol(const Circuit& c) {
  auto needs_lowering = [](const Gate& g) {
    return g.kind == GateKind::Controlled && g.controls.size() >= 2 &&
           g.inner[0].kind != GateKind::X;
  };
  bool any = false;
  for (const Gate& g : c.gates)
    if (needs_lowering(g)) any = true;
  if (!any) return c;

  Circuit out;
  out.n = c.n;
  out.ancilla = c.ancilla + 1;
  const int anc = c.n + c.ancilla;
  for (const Gate& g : c.gates) {
    if (!needs_lowering(g)) {
      out.gates.push_back(g);
      continue;
    }
    const Gate mcx = make_controlled(g.controls, gate_x(anc));
    out.gates.push_back(mcx);
    out.gates.push_back(make_controlled({{anc, true}}, g.inner[0]));
    out.gates.push_back(mcx);
  }
  return out;
}

}  // namespace wavepacket
