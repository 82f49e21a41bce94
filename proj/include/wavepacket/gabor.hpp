#pragma once

#include "wavepacket/diag.hpp"
#include "wavepacket/permutations.hpp"
#include "wavepacket/qft.hpp"

namespace wavepacket {

// Parameters for both Gabor transform kinds. `b` is the window exponent: the
// frequency bands have width B = 2^b and each band carries 2B modulations.
struct GaborParams {
  int n = 0;
  int b = 0;
  BetaProfile beta = beta_linear();
};

inline int default_b(int n) { return (n - 1) / 2; }

inline void validate_sharp(const GaborParams& p) {
  if (p.n < 2 || p.b < 0 || p.b > p.n - 2) {
    throw InvalidParams("sharp Gabor needs n >= 2 and 0 <= b <= n-2");
  }
}

inline void validate_blended(const GaborParams& p) {
  if (p.b < 1 || p.b > p.n - 2 || p.n - p.b < 3) {
    throw InvalidParams("blended Gabor needs 1 <= b <= n-2 and n-b >= 3");
  }
}

// Frequency-sharp Gabor analysis circuit: Fourier transform, band reshuffle,
// then a small inverse Fourier transform that demodulates within each band.
inline Circuit sharp_gabor_circuit(const GaborParams& p) {
  validate_sharp(p);
  Circuit c;
  c.n = p.n;
  for (const Gate& g : qft_circuit(p.n).gates) c.gates.push_back(g);
  for (const Gate& g : s_perm_circuit(p.n, p.b).gates) c.gates.push_back(g);
  for (const Gate& g : iqft_circuit(p.b + 1).gates) c.gates.push_back(g);
  return c;
}

// The four B x B blocks of the band-coupling unitary V_G. The top qubit of a
// block selects between the two coupled half-bands; H conjugation turns the
// smooth window weights into diagonal phases.
struct VgBlocks {
  DenseUnitary khat_e;  // lowest band, no partner to blend with
  DenseUnitary k_e;     // even coupling block
  DenseUnitary k_o;     // odd coupling block
  DenseUnitary khat_o;  // highest band, no partner
};

namespace detail {

// (H (x) I) . diag(top, bottom) . (H (x) I) for two equal-size diagonals.
inline DenseUnitary h_conjugated_pair(const DenseUnitary& top, const DenseUnitary& bottom) {
  const DenseUnitary hi = kron(hadamard_matrix(), identity_matrix(top.dim));
  return mat_mul(hi, mat_mul(direct_sum(top, bottom), hi));
}

}  // namespace detail

inline VgBlocks vg_blocks(int b, const BetaProfile& beta) {
  if (b < 1) throw InvalidParams("vg_blocks: b >= 1 required");
  const std::size_t half = pow2(b - 1);
  const DiagonalSpec dm = dminus_spec(b);
  const DiagonalSpec dp = dplus_spec(b);
  const double pi = std::numbers::pi;
  const DenseUnitary em_plus = exp_affine_of_beta_diag(half, dm, pi / 2.0, pi / 2.0, 0.0, beta);
  const DenseUnitary em_minus = exp_affine_of_beta_diag(half, dm, -pi / 2.0, pi / 2.0, 0.0, beta);
  const DenseUnitary ep_plus = exp_affine_of_beta_diag(half, dp, pi / 2.0, pi / 2.0, 0.0, beta);
  const DenseUnitary ep_minus = exp_affine_of_beta_diag(half, dp, -pi / 2.0, pi / 2.0, 0.0, beta);
  VgBlocks blocks;
  blocks.khat_e = kron(identity_matrix(2), em_plus);
  blocks.k_e = detail::h_conjugated_pair(em_plus, em_minus);
  blocks.k_o = detail::h_conjugated_pair(ep_minus, ep_plus);
  blocks.khat_o = kron(identity_matrix(2), ep_minus);
  return blocks;
}

// Full N x N band-coupling unitary: block-diagonal with K_hat_e first, then
// alternating K_o / K_e pairs, and K_hat_o last.
inline DenseUnitary assemble_vg_matrix(int b, int n, const BetaProfile& beta) {
  GaborParams p;
  p.n = n;
  p.b = b;
  validate_blended(p);
  const VgBlocks blocks = vg_blocks(b, beta);
  const std::size_t dim = pow2(n);
  const std::size_t block = pow2(b);
  const std::size_t count = dim / block;
  DenseUnitary v(dim);
  for (std::size_t idx = 0; idx < count; ++idx) {
    const DenseUnitary* src = nullptr;
    if (idx == 0) {
      src = &blocks.khat_e;
    } else if (idx == count - 1) {
      src = &blocks.khat_o;
    } else {
      src = (idx % 2 == 0) ? &blocks.k_e : &blocks.k_o;
    }
    for (std::size_t r = 0; r < block; ++r) {
      for (std::size_t c = 0; c < block; ++c) {
        v.at(idx * block + r, idx * block + c) = src->at(r, c);
      }
    }
  }
  return v;
}

namespace detail {

// Emits one H-conjugated diagonal pair under a shared control set: the block
// acts on qubits 0..b-1 with qubit b-1 selecting the half.
inline void append_h_diag_block(Circuit& c, int b, const std::vector<ControlTerm>& ctrls,
                                const DiagonalSpec& spec, double alpha_top, double alpha_bottom,
                                double gamma, const BetaProfile& beta) {
  const Gate h = gate_h(b - 1);
  c.gates.push_back(ctrls.empty() ? h : make_controlled(ctrls, h));
  std::vector<ControlTerm> top = ctrls;
  top.push_back({b - 1, false});
  std::vector<ControlTerm> bottom = ctrls;
  bottom.push_back({b - 1, true});
  auto phase_poly = [&](double alpha) {
    RealPolynomial q = beta_phase_polynomial(spec, alpha, gamma, 0.0, beta);
    // With no residual qubits only the value at index zero can ever fire.
    if (b == 1 && !q.coeffs.empty()) q = RealPolynomial{{q.coeffs[0]}};
    return q;
  };
  if (alpha_top != 0.0 || gamma != 0.0) {
    append_exp_poly_gates(c, b - 1, phase_poly(alpha_top), 0, top);
  }
  if (alpha_bottom != 0.0 || gamma != 0.0) {
    append_exp_poly_gates(c, b - 1, phase_poly(alpha_bottom), 0, bottom);
  }
  c.gates.push_back(ctrls.empty() ? h : make_controlled(ctrls, h));
}

// Appends the controlled band-coupling layer. Block index bits live on qubits
// b..n-1; the even/odd blocks fire on the parity bit q_b and the two boundary
// blocks are fixed up by corrections controlled on the full block index.
inline void append_vg_gates(Circuit& c, const GaborParams& p, DiagMode mode) {
  const int b = p.b;
  const std::size_t block = pow2(b);
  std::vector<ControlTerm> even{{b, false}};
  std::vector<ControlTerm> odd{{b, true}};
  std::vector<ControlTerm> all_off;
  std::vector<ControlTerm> all_on;
  for (int q = b; q < p.n; ++q) {
    all_off.push_back({q, false});
    all_on.push_back({q, true});
  }
  std::vector<int> targets;
  for (int q = b - 1; q >= 0; --q) targets.push_back(q);
  const double pi = std::numbers::pi;
  if (mode == DiagMode::CustomBlocks) {
    const VgBlocks blocks = vg_blocks(b, p.beta);
    const DenseUnitary corr_e = mat_mul(dagger(blocks.k_e), blocks.khat_e);
    const DenseUnitary corr_o = mat_mul(dagger(blocks.k_o), blocks.khat_o);
    c.gates.push_back(make_controlled(even, gate_custom(blocks.k_e, targets)));
    c.gates.push_back(make_controlled(all_off, gate_custom(corr_e, targets)));
    c.gates.push_back(make_controlled(odd, gate_custom(blocks.k_o, targets)));
    c.gates.push_back(make_controlled(all_on, gate_custom(corr_o, targets)));
    return;
  }
  const DiagonalSpec dm = dminus_spec(b);
  const DiagonalSpec dp = dplus_spec(b);
  (void)block;
  append_h_diag_block(c, b, even, dm, pi / 2.0, -pi / 2.0, pi / 2.0, p.beta);
  append_h_diag_block(c, b, all_off, dm, 0.0, pi, 0.0, p.beta);
  append_h_diag_block(c, b, odd, dp, -pi / 2.0, pi / 2.0, pi / 2.0, p.beta);
  append_h_diag_block(c, b, all_on, dp, 0.0, -pi, 0.0, p.beta);
}

}  // namespace detail

// Blended Gabor analysis circuit: Fourier transform, pair-reordering
// permutation, band-coupling layer, inverse reorder, band reshuffle, and the
// demodulating inverse Fourier transform.
inline Circuit blended_gabor_circuit(const GaborParams& p,
                                     DiagMode mode = DiagMode::CustomBlocks) {
  validate_blended(p);
  Circuit c;
  c.n = p.n;
  for (const Gate& g : qft_circuit(p.n).gates) c.gates.push_back(g);
  const Circuit pairs = q_perm_circuit(p.n - p.b + 1);
  for (const Gate& g : pairs.gates) c.gates.push_back(shift_qubits(g, p.b - 1));
  detail::append_vg_gates(c, p, mode);
  const Circuit unpair = adjoint(pairs);
  for (const Gate& g : unpair.gates) c.gates.push_back(shift_qubits(g, p.b - 1));
  for (const Gate& g : s_perm_circuit(p.n, p.b).gates) c.gates.push_back(g);
  for (const Gate& g : iqft_circuit(p.b + 1).gates) c.gates.push_back(g);
  return c;
}

}  // namespace wavepacket
