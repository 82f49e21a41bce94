#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wavepacket/beta.hpp"
#include "wavepacket/circuit.hpp"

namespace wavepacket {

// One multilinear term: coefficient times the product of the bits picked out
// by mask.
struct MonomialTerm {
  std::uint32_t mask = 0;
  double coeff = 0.0;
};

// Expands x^s over m-bit integers x into multilinear bit monomials using bit
// idempotency: x^s = sum_J c_J prod_{j in J} x_j. Exact in 64-bit integers.
inline std::vector<MonomialTerm> monomial_expand(int m, int s) {
  if (m < 1 || s < 0) throw InvalidParams("monomial_expand: need m >= 1, s >= 0");
  double guard = 1.0;
  for (int i = 0; i < s; ++i) guard *= static_cast<double>(m);
  if (guard > 1e6) throw TooLarge("monomial_expand: m^s exceeds the term guard");
  if (static_cast<long long>(m) * s > 62) {
    throw TooLarge("monomial_expand: coefficients would overflow 64-bit integers");
  }
  std::map<std::uint32_t, long long> terms;
  terms[0] = 1;
  for (int round = 0; round < s; ++round) {
    std::map<std::uint32_t, long long> next;
    for (const auto& [mask, coeff] : terms) {
      for (int j = 0; j < m; ++j) {
        next[mask | (1u << j)] += coeff * (1LL << j);
      }
    }
    terms = std::move(next);
  }
  std::vector<MonomialTerm> out;
  out.reserve(terms.size());
  for (const auto& [mask, coeff] : terms) {
    if (coeff != 0) out.push_back({mask, static_cast<double>(coeff)});
  }
  return out;
}

// Appends gates realizing diag{e^{i q(x)}} over the m qubits starting at
// `offset`, with every gate additionally guarded by `ctrls`. Cross terms
// become multi-controlled Rz; the constant term becomes a (possibly
// controlled) global phase.
inline void append_exp_poly_gates(Circuit& c, int m, const RealPolynomial& q, int offset,
                                  const std::vector<ControlTerm>& ctrls) {
  if (q.degree() > 16) throw TooLarge("append_exp_poly_gates: polynomial degree above 16");
  std::map<std::uint32_t, double> theta;
  for (std::size_t s = 1; s < q.coeffs.size(); ++s) {
    if (q.coeffs[s] == 0.0) continue;
    if (m < 1) throw InvalidParams("append_exp_poly_gates: nonconstant polynomial on empty register");
    for (const MonomialTerm& t : monomial_expand(m, static_cast<int>(s))) {
      theta[t.mask] += q.coeffs[s] * t.coeff;
    }
  }
  for (const auto& [mask, angle] : theta) {
    if (angle == 0.0) continue;
    int lowest = 0;
    while (!((mask >> lowest) & 1u)) ++lowest;
    std::vector<ControlTerm> all = ctrls;
    for (int j = lowest + 1; j < m; ++j) {
      if ((mask >> j) & 1u) all.push_back({offset + j, true});
    }
    const Gate rz = gate_rz(angle, offset + lowest);
    c.gates.push_back(all.empty() ? rz : make_controlled(all, rz));
  }
  const double constant = q.coeffs.empty() ? 0.0 : q.coeffs[0];
  if (constant != 0.0) {
    if (ctrls.empty()) {
      if (m < 1) throw InvalidParams("append_exp_poly_gates: global phase needs a qubit");
      c.gates.push_back(gate_rz(constant, offset));
      c.gates.push_back(gate_x(offset));
      c.gates.push_back(gate_rz(constant, offset));
      c.gates.push_back(gate_x(offset));
    } else {
      // Fold the phase onto one control qubit.
      std::vector<ControlTerm> rest(ctrls.begin(), ctrls.end() - 1);
      const ControlTerm last = ctrls.back();
      const Gate rz = gate_rz(constant, last.qubit);
      if (last.on) {
        c.gates.push_back(rest.empty() ? rz : make_controlled(rest, rz));
      } else {
        c.gates.push_back(gate_x(last.qubit));
        c.gates.push_back(rest.empty() ? rz : make_controlled(rest, rz));
        c.gates.push_back(gate_x(last.qubit));
      }
    }
  }
}

// Circuit form of diag{e^{i q(x)} : x in [2^m]}.
inline Circuit exp_poly_circuit(int m, const RealPolynomial& q) {
  if (m < 1) throw InvalidParams("exp_poly_circuit: m >= 1 required");
  Circuit c;
  c.n = m;
  append_exp_poly_gates(c, m, q, 0, {});
  return c;
}

// Arithmetic-progression diagonal d_q = slope*q + intercept for q < length.
struct DiagonalSpec {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t length = 0;

  double entry(std::size_t q) const { return slope * static_cast<double>(q) + intercept; }
};

// D+ = diag{0, 1/B, ..., (B/2-1)/B}.
inline DiagonalSpec dplus_spec(int b) {
  if (b < 1) throw InvalidParams("dplus_spec: b >= 1 required");
  const double block = static_cast<double>(pow2(b));
  return {1.0 / block, 0.0, pow2(b) / 2};
}

// D- = D+ - (1/2) I.
inline DiagonalSpec dminus_spec(int b) {
  DiagonalSpec d = dplus_spec(b);
  d.intercept = -0.5;
  return d;
}

// Wavelet-level diagonal: ceil(N/(3*2^j)) entries -1/2 + 3q*2^{j-1}/N.
inline DiagonalSpec wavelet_d_spec(int n, int j) {
  if (j < 1 || j > n) throw InvalidParams("wavelet_d_spec: 1 <= j <= n required");
  const double size = static_cast<double>(pow2(n));
  const std::size_t len = (pow2(n) + 3 * pow2(j) - 1) / (3 * pow2(j));
  return {3.0 * static_cast<double>(pow2(j)) / (2.0 * size), -0.5, len};
}

// Padded version: same progression continued to N/2^j entries.
inline DiagonalSpec wavelet_dp_spec(int n, int j) {
  DiagonalSpec d = wavelet_d_spec(n, j);
  d.length = pow2(n - j);
  return d;
}

// Dense diagonal oracle diag{e^{i(alpha*beta(d_k) + gamma*d_k + delta)}},
// identity-padded past the spec's defined length.
inline DenseUnitary exp_affine_of_beta_diag(std::size_t dim, const DiagonalSpec& d, double alpha,
                                            double gamma, double delta, const BetaProfile& p) {
  if (dim < d.length) {
    throw InvalidParams("exp_affine_of_beta_diag: dimension smaller than spec length");
  }
  DenseUnitary u(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (k < d.length) {
      const double dk = d.entry(k);
      u.at(k, k) = std::polar(1.0, alpha * eval_beta(p, dk) + gamma * dk + delta);
    } else {
      u.at(k, k) = Complex{1.0, 0.0};
    }
  }
  return u;
}

// Phase polynomial x -> alpha*beta(d_x) + gamma*d_x + delta for a diagonal
// spec whose entries stay inside one polynomial piece of beta (true for every
// spec above: entries lie in [-1/2, 1/2)). Negative-side entries use the even
// extension, i.e. beta(d) = base(-d).
inline RealPolynomial beta_phase_polynomial(const DiagonalSpec& d, double alpha, double gamma,
                                            double delta, const BetaProfile& p) {
  const bool negative_side = d.intercept < 0.0;
  const double sign = negative_side ? -1.0 : 1.0;
  RealPolynomial out = poly_scale(affine_compose(p.base, sign * d.slope, sign * d.intercept), alpha);
  RealPolynomial linear;
  linear.coeffs = {gamma * d.intercept + delta, gamma * d.slope};
  return poly_add(out, linear);
}

}  // namespace wavepacket
