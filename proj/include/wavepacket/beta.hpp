#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wavepacket/types.hpp"

namespace wavepacket {

// Real polynomial with ascending coefficients; an empty vector is the zero
// polynomial. Degrees are capped at 16 because synthesized gate counts grow
// like m^degree.
struct RealPolynomial {
  std::vector<double> coeffs;

  int degree() const {
    for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
      if (coeffs[static_cast<std::size_t>(d)] != 0.0) return d;
    }
    return 0;
  }
};

inline double eval_poly(const RealPolynomial& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * x + p.coeffs[i];
  return acc;
}

inline RealPolynomial poly_add(const RealPolynomial& a, const RealPolynomial& b) {
  RealPolynomial out = a;
  if (b.coeffs.size() > out.coeffs.size()) out.coeffs.resize(b.coeffs.size(), 0.0);
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

inline RealPolynomial poly_scale(const RealPolynomial& a, double s) {
  RealPolynomial out = a;
  for (double& c : out.coeffs) c *= s;
  return out;
}

// p(slope*x + intercept), expanded back into coefficients in x (Horner over
// the linear substitution).
inline RealPolynomial affine_compose(const RealPolynomial& p, double slope, double intercept) {
  RealPolynomial acc;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    // acc <- acc * (slope*x + intercept) + c_i
    RealPolynomial next;
    next.coeffs.assign(acc.coeffs.size() + 1, 0.0);
    for (std::size_t k = 0; k < acc.coeffs.size(); ++k) {
      next.coeffs[k] += acc.coeffs[k] * intercept;
      next.coeffs[k + 1] += acc.coeffs[k] * slope;
    }
    if (next.coeffs.empty()) next.coeffs.push_back(0.0);
    next.coeffs[0] += p.coeffs[i];
    acc = std::move(next);
  }
  return acc;
}

// Blending profile beta: defined by a base polynomial on [0,1/2] (extended by
// the complement identity beta(x) = 1 - beta(1-x) on (1/2,1]) or directly on
// [0,1]; always extended evenly to negative arguments.
struct BetaProfile {
  enum class Domain { HalfWithComplement, FullDirect };
  Domain domain = Domain::HalfWithComplement;
  RealPolynomial base;
  std::string name;
};

inline BetaProfile beta_linear() {
  BetaProfile p;
  p.domain = BetaProfile::Domain::HalfWithComplement;
  p.base.coeffs = {0.0, 1.0};
  p.name = "linear";
  return p;
}

inline BetaProfile beta_quadratic() {
  BetaProfile p;
  p.domain = BetaProfile::Domain::HalfWithComplement;
  p.base.coeffs = {0.0, 0.0, 2.0};
  p.name = "quadratic";
  return p;
}

inline BetaProfile beta_deg7() {
  BetaProfile p;
  p.domain = BetaProfile::Domain::FullDirect;
  // x^4 (35 - 84 x + 70 x^2 - 20 x^3)
  p.base.coeffs = {0.0, 0.0, 0.0, 0.0, 35.0, -84.0, 70.0, -20.0};
  p.name = "deg7";
  return p;
}

inline BetaProfile parse_beta(const std::string& name) {
  if (name == "linear") return beta_linear();
  if (name == "quadratic") return beta_quadratic();
  if (name == "deg7") return beta_deg7();
  throw InvalidParams("parse_beta: unknown profile '" + name + "'");
}

inline double eval_beta(const BetaProfile& p, double x) {
  const double y = std::abs(x);
  if (y > 1.0 + 1e-12) throw DomainError("eval_beta: |x| must be <= 1");
  if (p.domain == BetaProfile::Domain::HalfWithComplement && y > 0.5) {
    return 1.0 - eval_poly(p.base, 1.0 - y);
  }
  return eval_poly(p.base, y);
}

// Smoothed window g(s) = cos((pi/2) beta(s/pi)) inside (-pi, pi), zero outside.
struct BumpWindow {
  BetaProfile profile;
};

inline double eval_g(const BumpWindow& w, double s) {
  const double pi = std::numbers::pi;
  if (std::abs(s) >= pi) return 0.0;
  return std::cos(0.5 * pi * eval_beta(w.profile, s / pi));
}

}  // namespace wavepacket
