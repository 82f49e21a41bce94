#pragma once

#include <string>

#include "wavepacket/diag.hpp"
#include "wavepacket/permutations.hpp"
#include "wavepacket/qft.hpp"

namespace wavepacket {

struct WaveletParams {
  int n = 0;
  BetaProfile beta = beta_linear();
};

struct ComparatorSpec {
  int m = 0;
};

// Reorders the Fourier output into wavelet coefficient order: each recursion
// level folds the current half-band down, demodulates it with a controlled
// inverse Fourier transform, and descends into the upper half.
inline Circuit shannon_reshuffle_circuit(int n) {
  if (n < 1) throw InvalidParams("shannon_reshuffle_circuit: n >= 1 required");
  Circuit c;
  c.n = n;
  if (n == 1) {
    c.gates.push_back(gate_x(0));
    return c;
  }
  std::vector<ControlTerm> acc;
  for (int m = n; m >= 2; --m) {
    std::vector<ControlTerm> fold = acc;
    fold.push_back({m - 2, false});
    c.gates.push_back(make_controlled(fold, gate_x(m - 1)));
    std::vector<ControlTerm> demod = acc;
    demod.push_back({m - 1, false});
    for (const Gate& g : iqft_circuit(m - 1).gates) {
      c.gates.push_back(make_controlled(demod, g));
    }
    acc.push_back({m - 1, true});
  }
  c.gates.push_back(make_controlled(acc, gate_x(0)));
  return c;
}

// Frequency-sharp wavelet analysis circuit.
inline Circuit shannon_circuit(int n) {
  if (n < 2) throw InvalidParams("shannon_circuit: n >= 2 required");
  Circuit c;
  c.n = n;
  for (const Gate& g : qft_circuit(n).gates) c.gates.push_back(g);
  for (const Gate& g : shannon_reshuffle_circuit(n).gates) c.gates.push_back(g);
  return c;
}

// Minimal MSB-first prefix cover of {x in [0, 2^m) : 3x < 2^m}: for every set
// bit of the largest member, the shared prefix above it followed by 0, plus
// the exact pattern of the largest member itself.
inline std::vector<std::string> comparator_prefixes(int m) {
  if (m < 1 || m > 62) throw InvalidParams("comparator_prefixes: 1 <= m <= 62 required");
  const std::size_t top = (pow2(m) - 1) / 3;
  std::vector<std::string> out;
  std::string prefix;
  for (int i = m - 1; i >= 0; --i) {
    const bool bit = ((top >> i) & 1) != 0;
    if (bit) out.push_back(prefix + '0');
    prefix += bit ? '1' : '0';
  }
  out.push_back(prefix);
  return out;
}

inline std::vector<std::string> comparator_prefixes(const ComparatorSpec& s) {
  return comparator_prefixes(s.m);
}

// Smooth-wavelet coupling block at level j: pairs the frequencies 2^{n-j}+q
// and -2^{n-j}+q (rows in that order, q below the top qubit), identity past
// the window where the bump vanishes.
inline DenseUnitary wk_matrix(int n, int j, const BetaProfile& beta) {
  if (j < 2 || j > n - 1) throw InvalidParams("wk_matrix: 2 <= j <= n-1 required");
  const std::size_t half = pow2(n - j);
  const DiagonalSpec spec = wavelet_d_spec(n, j);
  const double pi = std::numbers::pi;
  const DenseUnitary hi = kron(hadamard_matrix(), identity_matrix(half));
  const DenseUnitary inner = mat_mul(
      hi, mat_mul(direct_sum(exp_affine_of_beta_diag(half, spec, -pi / 2.0, 0.0, 0.0, beta),
                             exp_affine_of_beta_diag(half, spec, pi / 2.0, 0.0, 0.0, beta)),
                  hi));
  const DenseUnitary outer =
      direct_sum(exp_affine_of_beta_diag(half, spec, 0.0, pi / 3.0, 5.0 * pi / 12.0, beta),
                 exp_affine_of_beta_diag(half, spec, 0.0, 2.0 * pi / 3.0, -5.0 * pi / 12.0, beta));
  const DenseUnitary factored = mat_mul(outer, inner);
  // Cross-check the factorization against the raw per-pair coupling entries.
  DenseUnitary direct = identity_matrix(2 * half);
  const BumpWindow w{beta};
  for (std::size_t q = 0; q < spec.length; ++q) {
    const double win = pi * (spec.entry(q) + 0.5);
    const double third = win / 3.0;
    direct.at(q, q) = std::polar(eval_g(w, -pi / 2.0 + win), pi / 4.0 + third);
    direct.at(q, half + q) = std::polar(eval_g(w, pi / 2.0 + win), -pi / 4.0 + third);
    direct.at(half + q, q) = -std::polar(eval_g(w, pi / 2.0 + win), -pi / 4.0 + 2.0 * third);
    direct.at(half + q, half + q) =
        -std::polar(eval_g(w, -pi / 2.0 + win), pi / 4.0 + 2.0 * third);
  }
  if (max_abs_diff(factored, direct) > 1e-12) {
    throw WavepacketError("wk_matrix: factored form disagrees with coupling equations");
  }
  return factored;
}

// Level-1 coupling degenerates to a diagonal because the two band centers
// coincide modulo N; this is its phase profile over q.
inline DenseUnitary wk_tilde_matrix(int n, const BetaProfile& beta) {
  if (n < 3) throw InvalidParams("wk_tilde_matrix: n >= 3 required");
  const double pi = std::numbers::pi;
  return exp_affine_of_beta_diag(pow2(n - 1), wavelet_d_spec(n, 1), -pi / 2.0, 2.0 * pi / 3.0,
                                 -5.0 * pi / 12.0, beta);
}

namespace detail {

// Flips `target` exactly when the value on qubits [0, m) satisfies 3x < 2^m.
inline void append_comparator_gates(Circuit& c, int m, int target) {
  for (const std::string& p : comparator_prefixes(m)) {
    std::vector<ControlTerm> ctrls;
    for (std::size_t i = 0; i < p.size(); ++i) {
      ctrls.push_back({m - 1 - static_cast<int>(i), p[i] == '1'});
    }
    c.gates.push_back(make_controlled(ctrls, gate_x(target)));
  }
}

// One MCX matching the exact m-bit value `pattern` on qubits [0, m).
inline void append_exact_match_gate(Circuit& c, int m, std::size_t pattern, int target) {
  std::vector<ControlTerm> ctrls;
  for (int i = m - 1; i >= 0; --i) ctrls.push_back({i, ((pattern >> i) & 1) != 0});
  c.gates.push_back(make_controlled(ctrls, gate_x(target)));
}

// Diagonal phase layer e^{i(alpha*beta(d) + gamma*d + delta)} over the lower m
// qubits: rotation cascades in Synthesized mode, one controlled block
// otherwise. Gating controls keep the polynomial continuation past the spec
// window from ever firing.
inline void append_stage_diag(Circuit& c, int m, const DiagonalSpec& spec, double alpha,
                              double gamma, double delta, const BetaProfile& beta,
                              const std::vector<ControlTerm>& ctrls, DiagMode mode) {
  if (mode == DiagMode::Synthesized) {
    append_exp_poly_gates(c, m, beta_phase_polynomial(spec, alpha, gamma, delta, beta), 0, ctrls);
    return;
  }
  std::vector<int> targets;
  for (int i = m - 1; i >= 0; --i) targets.push_back(i);
  c.gates.push_back(make_controlled(
      ctrls, gate_custom(exp_affine_of_beta_diag(pow2(m), spec, alpha, gamma, delta, beta),
                         targets)));
}

// Coupling stage for level j >= 2, assuming the level's pairs have been
// permuted to {top j-1 qubits on} with qubit m = n-j selecting the pair half.
inline void append_wk_stage(Circuit& c, int n, int j, const BetaProfile& beta, DiagMode mode,
                            int anc) {
  const int m = n - j;
  const double pi = std::numbers::pi;
  const DiagonalSpec spec = wavelet_d_spec(n, j);
  append_comparator_gates(c, m, anc);
  std::vector<ControlTerm> base;
  for (int t = n - j + 1; t <= n - 1; ++t) base.push_back({t, true});
  base.push_back({anc, true});
  std::vector<ControlTerm> off = base, on = base;
  off.push_back({m, false});
  on.push_back({m, true});
  const Gate h = make_controlled(base, gate_h(m));
  c.gates.push_back(h);
  append_stage_diag(c, m, spec, -pi / 2.0, 0.0, 0.0, beta, off, mode);
  append_stage_diag(c, m, spec, pi / 2.0, 0.0, 0.0, beta, on, mode);
  c.gates.push_back(h);
  append_stage_diag(c, m, spec, 0.0, pi / 3.0, 5.0 * pi / 12.0, beta, off, mode);
  append_stage_diag(c, m, spec, 0.0, 2.0 * pi / 3.0, -5.0 * pi / 12.0, beta, on, mode);
  append_comparator_gates(c, m, anc);
}

// Narrowest-level 2x2 coupling on the pair {1, N-1}, permuted to the top of
// the register: fires when all qubits above the bottom one are on.
inline void append_top_block(Circuit& c, int n, DiagMode mode) {
  const double pi = std::numbers::pi;
  std::vector<ControlTerm> ctrls;
  for (int t = n - 1; t >= 1; --t) ctrls.push_back({t, true});
  if (mode == DiagMode::CustomBlocks) {
    DenseUnitary block(2);
    const double s = 1.0 / std::sqrt(2.0);
    block.at(0, 0) = std::polar(s, pi / 4.0);
    block.at(0, 1) = std::polar(s, -pi / 4.0);
    block.at(1, 0) = -std::polar(s, -pi / 4.0);
    block.at(1, 1) = -std::polar(s, pi / 4.0);
    c.gates.push_back(make_controlled(ctrls, gate_custom(block, {0})));
    return;
  }
  c.gates.push_back(make_controlled(ctrls, gate_rz(-pi / 2.0, 0)));
  c.gates.push_back(make_controlled(ctrls, gate_h(0)));
  c.gates.push_back(make_controlled(ctrls, gate_rz(pi / 2.0, 0)));
  std::vector<ControlTerm> rest(ctrls.begin(), ctrls.end() - 1);
  c.gates.push_back(rest.empty() ? gate_rz(pi / 4.0, 1) : make_controlled(rest, gate_rz(pi / 4.0, 1)));
}

}  // namespace detail

// Level-j coupling of the frequencies 2^{n-j}+q with -2^{n-j}+q, conjugated
// by the permutation that moves the pair onto the top of the register. One
// ancilla holds the window comparator flag.
inline Circuit wr_circuit(int n, int j, const BetaProfile& beta,
                          DiagMode mode = DiagMode::CustomBlocks) {
  if (n < 2 || j < 1 || j > n - 1) throw InvalidParams("wr_circuit: 1 <= j <= n-1 required");
  Circuit c;
  c.n = n;
  c.ancilla = 1;
  const int anc = n;
  if (j == 1) {
    // Both centers collapse onto N/2+q: a gated diagonal on the upper half.
    const double pi = std::numbers::pi;
    detail::append_comparator_gates(c, n - 1, anc);
    detail::append_stage_diag(c, n - 1, wavelet_d_spec(n, 1), -pi / 2.0, 2.0 * pi / 3.0,
                              -5.0 * pi / 12.0, beta, {{anc, true}, {n - 1, true}}, mode);
    detail::append_comparator_gates(c, n - 1, anc);
    return c;
  }
  const Circuit perm = wq_circuit(n, j);
  for (const Gate& g : perm.gates) c.gates.push_back(g);
  detail::append_wk_stage(c, n, j, beta, mode, anc);
  for (const Gate& g : adjoint(perm).gates) c.gates.push_back(g);
  return c;
}

// Level-j coupling of the mirrored frequencies 2^{n-j}-q with -2^{n-j}-q
// (q >= 1). The entry permutation and bit complement map the pair onto the
// same canonical layout the plus-side stage uses, with the window shifted by
// one step and its endpoint excluded.
inline Circuit wl_circuit(int n, int j, const BetaProfile& beta,
                          DiagMode mode = DiagMode::CustomBlocks) {
  if (n < 2 || j < 1 || j > n - 1) throw InvalidParams("wl_circuit: 1 <= j <= n-1 required");
  Circuit c;
  c.n = n;
  c.ancilla = 1;
  const int anc = n;
  const int m = n - j;
  if (m <= 1) return c;  // window 1 <= q < ceil(2^m/3) is empty
  const double pi = std::numbers::pi;
  const DiagonalSpec base_spec = wavelet_d_spec(n, j);
  DiagonalSpec shifted = base_spec;
  shifted.intercept += shifted.slope;  // evaluated at q = l+1 after the complement
  shifted.length = base_spec.length - 1;
  const std::size_t excluded = base_spec.length - 1;

  const bool level_one = (j == 1);
  const Circuit perm = level_one ? Circuit{} : wq_circuit(n, j);
  if (!level_one) {
    c.gates.push_back(gate_x(m));
    for (const Gate& g : perm.gates) c.gates.push_back(g);
  }
  for (int t = 0; t < m; ++t) c.gates.push_back(gate_x(t));
  detail::append_comparator_gates(c, m, anc);
  detail::append_exact_match_gate(c, m, excluded, anc);

  std::vector<ControlTerm> ctrl_base;
  if (level_one) {
    ctrl_base.push_back({n - 1, false});
  } else {
    for (int t = n - j + 1; t <= n - 1; ++t) ctrl_base.push_back({t, true});
  }
  ctrl_base.push_back({anc, true});
  if (level_one) {
    detail::append_stage_diag(c, m, shifted, pi / 2.0, -2.0 * pi / 3.0, 5.0 * pi / 12.0, beta,
                              ctrl_base, mode);
  } else {
    std::vector<ControlTerm> off = ctrl_base, on = ctrl_base;
    off.push_back({m, false});
    on.push_back({m, true});
    const Gate h = make_controlled(ctrl_base, gate_h(m));
    c.gates.push_back(h);
    detail::append_stage_diag(c, m, shifted, pi / 2.0, 0.0, 0.0, beta, off, mode);
    detail::append_stage_diag(c, m, shifted, -pi / 2.0, 0.0, 0.0, beta, on, mode);
    c.gates.push_back(h);
    detail::append_stage_diag(c, m, shifted, 0.0, -2.0 * pi / 3.0, 5.0 * pi / 12.0, beta, off,
                              mode);
    detail::append_stage_diag(c, m, shifted, 0.0, -pi / 3.0, -5.0 * pi / 12.0, beta, on, mode);
  }

  detail::append_exact_match_gate(c, m, excluded, anc);
  detail::append_comparator_gates(c, m, anc);
  for (int t = 0; t < m; ++t) c.gates.push_back(gate_x(t));
  if (!level_one) {
    for (const Gate& g : adjoint(perm).gates) c.gates.push_back(g);
    c.gates.push_back(gate_x(m));
  }
  return c;
}

// Full frequency-reallocation unitary: all plus-side stages with their
// conjugating permutations fused into short bridge segments, the narrowest
// 2x2 block, then every minus-side stage.
inline Circuit tw_circuit(int n, const BetaProfile& beta,
                          DiagMode mode = DiagMode::CustomBlocks) {
  if (n < 3) throw InvalidParams("tw_circuit: n >= 3 required");
  Circuit c;
  c.n = n;
  c.ancilla = 1;
  const int anc = n;
  for (const Gate& g : wr_circuit(n, 1, beta, mode).gates) c.gates.push_back(g);
  c.gates.push_back(gate_swap(n - 1, n - 2));
  detail::append_wk_stage(c, n, 2, beta, mode, anc);
  for (int j = 2; j <= n - 1; ++j) {
    // Bridge: undo the level-j permutation and apply the level-(j+1) one.
    c.gates.push_back(gate_swap(n - 1, n - j));
    c.gates.push_back(make_controlled({{n - 1, false}}, gate_x(n - j)));
    c.gates.push_back(gate_swap(n - 1, n - j - 1));
    if (j + 1 <= n - 1) {
      detail::append_wk_stage(c, n, j + 1, beta, mode, anc);
    } else {
      detail::append_top_block(c, n, mode);
    }
  }
  c.gates.push_back(gate_swap(n - 1, 0));
  for (int t = n - 2; t >= 1; --t) {
    c.gates.push_back(make_controlled({{n - 1, false}}, gate_x(t)));
  }
  for (int j = 1; j <= n - 1; ++j) {
    for (const Gate& g : wl_circuit(n, j, beta, mode).gates) c.gates.push_back(g);
  }
  return c;
}

// Smooth wavelet analysis circuit: Fourier transform, frequency reallocation,
// then the same reshuffle the sharp wavelet uses.
inline Circuit meyer_circuit(int n, const BetaProfile& beta,
                             DiagMode mode = DiagMode::CustomBlocks) {
  if (n < 3) throw InvalidParams("meyer_circuit: n >= 3 required");
  Circuit c;
  c.n = n;
  c.ancilla = 1;
  for (const Gate& g : qft_circuit(n).gates) c.gates.push_back(g);
  for (const Gate& g : tw_circuit(n, beta, mode).gates) c.gates.push_back(g);
  for (const Gate& g : shannon_reshuffle_circuit(n).gates) c.gates.push_back(g);
  return c;
}

}  // namespace wavepacket
