#pragma once

#include <cmath>
#include <numbers>

#include "wavepacket/beta.hpp"
#include "wavepacket/tensor.hpp"

namespace wavepacket {

constexpr double kTau = 2.0 * std::numbers::pi;

// Orthonormal basis for one transform kind: column k of `matrix` is the
// spatial-domain basis vector psi_k, ordered exactly as the transform outputs
// its coefficients.
struct BasisMatrix {
  TransformKind kind = TransformKind::GaborSharp;
  int n = 0;
  int b = 0;          // window exponent, Gabor kinds only
  BetaProfile beta;   // blended kinds only
  DenseUnitary matrix;
};

// Shared parameter bundle for the classical reference path.
struct TransformParams {
  int n = 0;
  int b = 0;          // Gabor kinds only
  BetaProfile beta;   // blended kinds only
};

// Positive-exponent discrete Fourier matrix: F[k][j] = e^{+2 pi i k j / N} / sqrt(N).
inline DenseUnitary dft_matrix(std::size_t dim) {
  DenseUnitary f(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      f.at(r, c) = std::polar(scale, kTau * static_cast<double>(r * c % dim) /
                                         static_cast<double>(dim));
    }
  }
  return f;
}

namespace detail {

// Maps a signed frequency index into [0, N).
inline std::size_t wrap_index(long long k, std::size_t dim) {
  long long m = k % static_cast<long long>(dim);
  if (m < 0) m += static_cast<long long>(dim);
  return static_cast<std::size_t>(m);
}

// Converts a frequency-domain basis (columns psi-hat) to the spatial-domain
// BasisMatrix: psi = F^dagger psi-hat columnwise.
inline DenseUnitary to_spatial(const DenseUnitary& freq_columns) {
  return mat_mul(dagger(dft_matrix(freq_columns.dim)), freq_columns);
}

}  // namespace detail

// Frequency-sharp Gabor atoms: characteristic windows on the paired frequency
// bands [jB, (j+1)B) and [-(j+1)B, -jB), modulated over 2B positions.
inline BasisMatrix sharp_gabor_basis(int n, int b) {
  if (n < 2 || b < 0 || b > n - 2) {
    throw InvalidParams("sharp_gabor_basis: need n >= 2 and 0 <= b <= n-2");
  }
  const std::size_t dim = pow2(n);
  const long long block = pow2(b);
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(block));
  DenseUnitary freq(dim);
  for (long long j = 0; j < static_cast<long long>(dim) / (2 * block); ++j) {
    for (long long p = 0; p < 2 * block; ++p) {
      const std::size_t col = static_cast<std::size_t>(2 * block * j + p);
      auto put = [&](long long k) {
        const double phase = kTau * static_cast<double>(p) * static_cast<double>(k) /
                             (2.0 * static_cast<double>(block));
        freq.at(detail::wrap_index(k, dim), col) = std::polar(scale, phase);
      };
      for (long long k = j * block; k < (j + 1) * block; ++k) put(k);
      for (long long k = -(j + 1) * block; k < -j * block; ++k) put(k);
    }
  }
  BasisMatrix out;
  out.kind = TransformKind::GaborSharp;
  out.n = n;
  out.b = b;
  out.matrix = detail::to_spatial(freq);
  return out;
}

// Periodized window: the bump g summed over the three nearest periods of
// length pi*N/B (farther periods cannot intersect the support of g).
inline double g_periodized(const BumpWindow& w, double x, double period) {
  return eval_g(w, x - period) + eval_g(w, x) + eval_g(w, x + period);
}

// Blended Gabor atoms: two smoothly windowed bumps with the quadratic-phase
// correction, periodized in frequency.
inline BasisMatrix blended_gabor_basis(int n, int b, const BetaProfile& beta) {
  if (b < 1 || b > n - 2 || n - b < 3) {
    throw InvalidParams("blended_gabor_basis: need 1 <= b <= n-2 and n-b >= 3");
  }
  const std::size_t dim = pow2(n);
  const double block = static_cast<double>(pow2(b));
  const double period = std::numbers::pi * static_cast<double>(dim) / block;
  const double scale = 1.0 / std::sqrt(2.0 * block);
  const BumpWindow w{beta};
  DenseUnitary freq(dim);
  const long long half = static_cast<long long>(dim) / 2;
  for (long long j = 0; j < static_cast<long long>(dim / pow2(b)) / 2; ++j) {
    for (long long p = 0; p < 2 * static_cast<long long>(pow2(b)); ++p) {
      const std::size_t col = static_cast<std::size_t>(2 * pow2(b) * j + p);
      for (long long k = -half; k < half; ++k) {
        const double km = (static_cast<double>(k) - static_cast<double>(j) * block) / block;
        const double kp = (static_cast<double>(k) + static_cast<double>(j) * block) / block;
        const double bump_m = g_periodized(w, std::numbers::pi * (km - 0.5), period);
        const double bump_p = g_periodized(w, std::numbers::pi * (kp + 0.5), period);
        if (bump_m == 0.0 && bump_p == 0.0) continue;
        const Complex lobe_m = std::polar(bump_m, 0.5 * std::numbers::pi * (0.5 - km));
        const Complex lobe_p = std::polar(bump_p, 0.5 * std::numbers::pi * (-0.5 - kp));
        const Complex mod = std::polar(scale, kTau * static_cast<double>(p) *
                                                  static_cast<double>(k) / (2.0 * block));
        freq.at(detail::wrap_index(k, dim), col) += mod * (lobe_m + lobe_p);
      }
    }
  }
  BasisMatrix out;
  out.kind = TransformKind::GaborBlended;
  out.n = n;
  out.b = b;
  out.beta = beta;
  out.matrix = detail::to_spatial(freq);
  return out;
}

// Shannon wavelets: characteristic windows on the dyadic bands
// [2^{n-j-1}, 2^{n-j}) and their negatives, plus the scaling slot at k = 0.
// Output ordering: level 1 block, level 2 block, ..., level n, scaling.
inline BasisMatrix shannon_basis(int n) {
  if (n < 2) throw InvalidParams("shannon_basis: n >= 2 required");
  const std::size_t dim = pow2(n);
  DenseUnitary freq(dim);
  std::size_t col = 0;
  for (int j = 1; j <= n; ++j) {
    const long long width = pow2(n - j);  // 2^{n-j}
    const double scale = 1.0 / std::sqrt(static_cast<double>(width));
    for (long long p = 0; p < width; ++p, ++col) {
      auto put = [&](long long k) {
        const double phase =
            kTau * static_cast<double>(p) * static_cast<double>(k) / static_cast<double>(width);
        freq.at(detail::wrap_index(k, dim), col) = std::polar(scale, phase);
      };
      if (width >= 2) {
        for (long long k = width / 2; k < width; ++k) put(k);
      }
      // j = n has width 1 and collapses to the single index k = -1.
      for (long long k = -width; k < -width / 2; ++k) put(k);
    }
  }
  freq.at(0, col) = Complex{1.0, 0.0};  // scaling function
  BasisMatrix out;
  out.kind = TransformKind::Shannon;
  out.n = n;
  out.matrix = detail::to_spatial(freq);
  return out;
}

// Mother-wavelet Fourier profile for the smooth (Meyer-style) wavelet, with
// the printed phase e^{i pi/4 - i omega/2} and conjugate symmetry for
// negative frequencies.
inline Complex psi_ms_hat(double omega, const BetaProfile& beta) {
  const BumpWindow w{beta};
  const double a = std::abs(omega);
  const double pi = std::numbers::pi;
  double mag = 0.0;
  if (a >= 2.0 * pi / 3.0 && a <= 4.0 * pi / 3.0) {
    mag = eval_g(w, 1.5 * a - 2.0 * pi);
  } else if (a > 4.0 * pi / 3.0 && a <= 8.0 * pi / 3.0) {
    mag = eval_g(w, 0.75 * a - pi);
  } else {
    return Complex{0.0, 0.0};
  }
  const Complex value = std::polar(mag, pi / 4.0 - a / 2.0);
  return omega >= 0.0 ? value : std::conj(value);
}

// Smooth wavelet atoms: samples of psi_ms_hat on the dyadic grid, with the
// q-periodization needed only at the widest level j = 1.
inline BasisMatrix meyer_basis(int n, const BetaProfile& beta) {
  if (n < 3) throw InvalidParams("meyer_basis: n >= 3 required");
  const std::size_t dim = pow2(n);
  DenseUnitary freq(dim);
  std::size_t col = 0;
  for (int j = 1; j <= n; ++j) {
    const long long width = pow2(n - j);
    const double scale = 1.0 / std::sqrt(static_cast<double>(width));
    const double stretch = kTau * static_cast<double>(pow2(j));  // 2^{j+1} pi
    for (long long p = 0; p < width; ++p, ++col) {
      const long long half = static_cast<long long>(dim) / 2;
      for (long long k = -half; k < half; ++k) {
        Complex sample{0.0, 0.0};
        const double ratio = static_cast<double>(k) / static_cast<double>(dim);
        if (j == 1) {
          for (int q = -1; q <= 1; ++q) {
            sample += psi_ms_hat(stretch * (ratio + static_cast<double>(q)), beta);
          }
        } else {
          sample = psi_ms_hat(stretch * ratio, beta);
        }
        if (sample == Complex{0.0, 0.0}) continue;
        const double phase =
            kTau * static_cast<double>(p) * static_cast<double>(k) / static_cast<double>(width);
        freq.at(detail::wrap_index(k, dim), col) += std::polar(scale, phase) * sample;
      }
    }
  }
  freq.at(0, col) = Complex{1.0, 0.0};  // scaling function
  BasisMatrix out;
  out.kind = TransformKind::Meyer;
  out.n = n;
  out.beta = beta;
  out.matrix = detail::to_spatial(freq);
  return out;
}

// Frequency-reallocation step of the blended Gabor transform, evaluated
// index by index from its defining equations. Residues q < B/2 of each block
// come from the integer-centered equation, the rest from the half-shifted one.
inline ComplexVector h_realloc_gabor(const ComplexVector& fhat, int n, int b,
                                     const BetaProfile& beta) {
  const std::size_t dim = pow2(n);
  if (fhat.size() != dim) throw InvalidParams("h_realloc_gabor: wrong input length");
  if (b < 1 || b > n - 2 || n - b < 3) throw InvalidParams("h_realloc_gabor: invalid params");
  const long long block = pow2(b);
  const double pi = std::numbers::pi;
  const BumpWindow w{beta};
  ComplexVector h(dim, Complex{0.0, 0.0});
  const long long j_count = static_cast<long long>(dim) / (2 * block);
  for (long long j = -j_count; j < j_count; ++j) {
    for (long long q = 0; q < block / 2; ++q) {
      const double qb = static_cast<double>(q) / static_cast<double>(block);
      {
        // h(jB + q): two bump-weighted pulls with half-phases.
        const double s1 = -pi / 2.0 + pi * qb;
        const double s2 = pi / 2.0 + pi * qb;
        const Complex val =
            fhat[detail::wrap_index(j * block + q, dim)] * std::polar(eval_g(w, s1), 0.5 * s1) +
            fhat[detail::wrap_index(-j * block + q, dim)] * std::polar(eval_g(w, s2), 0.5 * s2);
        h[detail::wrap_index(j * block + q, dim)] = val;
      }
      {
        // h((j + 1/2)B + q)
        const double s1 = pi * qb;
        const double s2 = -pi + pi * qb;
        const long long base = j * block + block / 2 + q;
        const Complex val =
            fhat[detail::wrap_index(base, dim)] * std::polar(eval_g(w, s1), 0.5 * s1) +
            fhat[detail::wrap_index(-(j + 1) * block - block / 2 + q, dim)] *
                std::polar(eval_g(w, s2), 0.5 * s2);
        h[detail::wrap_index(base, dim)] = val;
      }
    }
  }
  return h;
}

// Frequency-reallocation step of the smooth wavelet transform, evaluated from
// the four defining equations per level (only the two applicable ones at the
// widest level), plus h(0) = fhat(0).
inline ComplexVector h_realloc_wavelet(const ComplexVector& fhat, int n,
                                       const BetaProfile& beta) {
  const std::size_t dim = pow2(n);
  if (fhat.size() != dim) throw InvalidParams("h_realloc_wavelet: wrong input length");
  if (n < 3) throw InvalidParams("h_realloc_wavelet: n >= 3 required");
  const double pi = std::numbers::pi;
  const double size = static_cast<double>(dim);
  const BumpWindow w{beta};
  ComplexVector h(dim, Complex{0.0, 0.0});
  h[0] = fhat[0];
  for (int j = 1; j <= n; ++j) {
    const long long center = pow2(n - j);  // N / 2^j
    const long long limit =
        (static_cast<long long>(dim) + 3 * pow2(j) - 1) / (3 * pow2(j));  // ceil(N / (3 2^j))
    const double lvl = static_cast<double>(pow2(j));
    // At the widest level (j = 1) the +-N/2^j centers coincide mod N and only
    // the h(N/2 - q) and h(-N/2 + q) equations are adopted.
    for (long long q = 0; q < limit; ++q) {
      const double qd = static_cast<double>(q);
      const double half_step = pi * qd * (lvl / 2.0) / size;  // pi q 2^{j-1} / N
      const double full_step = pi * qd * lvl / size;          // pi q 2^j / N
      const double win = 3.0 * pi * qd * (lvl / 2.0) / size;  // 3 pi q 2^{j-1} / N
      const Complex fp = fhat[detail::wrap_index(center + q, dim)];
      const Complex fm = fhat[detail::wrap_index(-center + q, dim)];
      if (j >= 2) {
        // h(N/2^j + q)
        h[detail::wrap_index(center + q, dim)] =
            std::polar(eval_g(w, -pi / 2.0 + win), pi / 4.0 + half_step) * fp +
            std::polar(eval_g(w, pi / 2.0 + win), -pi / 4.0 + half_step) * fm;
      }
      // h(-N/2^j + q)
      h[detail::wrap_index(-center + q, dim)] =
          -std::polar(eval_g(w, pi / 2.0 + win), -pi / 4.0 + full_step) * fp -
          std::polar(eval_g(w, -pi / 2.0 + win), pi / 4.0 + full_step) * fm;
    }
    for (long long q = 1; q < limit; ++q) {
      const double qd = static_cast<double>(q);
      const double half_step = pi * qd * (lvl / 2.0) / size;
      const double full_step = pi * qd * lvl / size;
      const double win = 3.0 * pi * qd * (lvl / 2.0) / size;
      const Complex fp = fhat[detail::wrap_index(center - q, dim)];
      const Complex fm = fhat[detail::wrap_index(-center - q, dim)];
      // h(N/2^j - q)
      h[detail::wrap_index(center - q, dim)] =
          -std::polar(eval_g(w, pi / 2.0 - win), -pi / 4.0 - full_step) * fp -
          std::polar(eval_g(w, -pi / 2.0 - win), pi / 4.0 - full_step) * fm;
      if (j >= 2) {
        // h(-N/2^j - q)
        h[detail::wrap_index(-center - q, dim)] =
            std::polar(eval_g(w, -pi / 2.0 - win), pi / 4.0 - half_step) * fp +
            std::polar(eval_g(w, pi / 2.0 - win), -pi / 4.0 - half_step) * fm;
      }
    }
  }
  return h;
}

// Classical transform: a = Psi^dagger f with the inner product conjugating the
// basis vector (a_k = <f, psi_k>).
inline BasisMatrix reference_basis(TransformKind kind, const TransformParams& p) {
  switch (kind) {
    case TransformKind::GaborSharp: return sharp_gabor_basis(p.n, p.b);
    case TransformKind::GaborBlended: return blended_gabor_basis(p.n, p.b, p.beta);
    case TransformKind::Shannon: return shannon_basis(p.n);
    case TransformKind::Meyer: return meyer_basis(p.n, p.beta);
  }
  throw InvalidParams("reference_basis: unknown kind");
}

inline ComplexVector transform_reference(TransformKind kind, const TransformParams& p,
                                         const ComplexVector& f) {
  const BasisMatrix basis = reference_basis(kind, p);
  if (f.size() != basis.matrix.dim) throw InvalidParams("transform_reference: wrong input length");
  return wavepacket::apply(dagger(basis.matrix), f);
}

}  // namespace wavepacket
