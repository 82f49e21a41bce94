#pragma once

#include <algorithm>
#include <cmath>

#include "wavepacket/types.hpp"

namespace wavepacket {

inline DenseUnitary identity_matrix(std::size_t dim) {
  DenseUnitary out(dim);
  for (std::size_t i = 0; i < dim; ++i) out.at(i, i) = 1.0;
  return out;
}

inline DenseUnitary hadamard_matrix() {
  DenseUnitary h(2);
  const double s = 1.0 / std::sqrt(2.0);
  h.at(0, 0) = s;
  h.at(0, 1) = s;
  h.at(1, 0) = s;
  h.at(1, 1) = -s;
  return h;
}

// Kronecker product; the first factor indexes the more significant bits.
inline DenseUnitary kron(const DenseUnitary& a, const DenseUnitary& b) {
  DenseUnitary out(a.dim * b.dim);
  for (std::size_t ra = 0; ra < a.dim; ++ra)
    for (std::size_t ca = 0; ca < a.dim; ++ca) {
      const Complex f = a.at(ra, ca);
      if (f == Complex{}) continue;
      for (std::size_t rb = 0; rb < b.dim; ++rb)
        for (std::size_t cb = 0; cb < b.dim; ++cb)
          out.at(ra * b.dim + rb, ca * b.dim + cb) = f * b.at(rb, cb);
    }
  return out;
}

inline DenseUnitary direct_sum(const DenseUnitary& a, const DenseUnitary& b) {
  DenseUnitary out(a.dim + b.dim);
  for (std::size_t r = 0; r < a.dim; ++r)
    for (std::size_t c = 0; c < a.dim; ++c) out.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.dim; ++r)
    for (std::size_t c = 0; c < b.dim; ++c) out.at(a.dim + r, a.dim + c) = b.at(r, c);
  return out;
}

inline DenseUnitary dagger(const DenseUnitary& a) {
  DenseUnitary out(a.dim);
  for (std::size_t r = 0; r < a.dim; ++r)
    for (std::size_t c = 0; c < a.dim; ++c) out.at(c, r) = std::conj(a.at(r, c));
  return out;
}

// ‖U†U − I‖_max
inline double unitarity_defect(const DenseUnitary& u) {
  const std::size_t d = u.dim;
  std::vector<double> worst_per_col(d, 0.0);
  parallel_for(d, [&](std::size_t c0, std::size_t c1) {
    for (std::size_t c = c0; c < c1; ++c) {
      double worst = 0.0;
      for (std::size_t r = 0; r < d; ++r) {
        Complex s{};
        for (std::size_t k = 0; k < d; ++k) s += std::conj(u.at(k, r)) * u.at(k, c);
        if (r == c) s -= 1.0;
        worst = std::max(worst, std::abs(s));
      }
      worst_per_col[c] = worst;
    }
  });
  double worst = 0.0;
  for (double w : worst_per_col) worst = std::max(worst, w);
  return worst;
}

inline ComplexVector apply(const DenseUnitary& u, const ComplexVector& v) {
  if (u.dim != v.size()) throw InvalidParams("apply: dimension mismatch");
  ComplexVector out(u.dim);
  for (std::size_t r = 0; r < u.dim; ++r) {
    Complex s{};
    for (std::size_t c = 0; c < u.dim; ++c) s += u.at(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

inline DenseUnitary mat_mul(const DenseUnitary& a, const DenseUnitary& b) {
  if (a.dim != b.dim) throw InvalidParams("mat_mul: dimension mismatch");
  const std::size_t d = a.dim;
  DenseUnitary out(d);
  parallel_for(d, [&](std::size_t r0, std::size_t r1) {
    for (std::size_t r = r0; r < r1; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        const Complex f = a.at(r, k);
        if (f == Complex{}) continue;
        for (std::size_t c = 0; c < d; ++c) out.at(r, c) += f * b.at(k, c);
      }
  });
  return out;
}

inline double max_abs_diff(const DenseUnitary& a, const DenseUnitary& b) {
  if (a.dim != b.dim) throw InvalidParams("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
  return worst;
}

inline double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw InvalidParams("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double norm2(const ComplexVector& v) {
  double s = 0.0;
  for (const Complex& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace wavepacket
