#include "wavepacket/oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "test_util.hpp"

namespace {

using wavepacket::BasisMatrix;
using wavepacket::Complex;
using wavepacket::ComplexVector;
using wavepacket::DenseUnitary;
using wavepacket::TransformKind;
using wavepacket::TransformParams;

constexpr double kPi = std::numbers::pi;

ComplexVector freq_column(const BasisMatrix& basis, std::size_t col) {
  ComplexVector spatial(basis.matrix.dim);
  for (std::size_t r = 0; r < basis.matrix.dim; ++r) spatial[r] = basis.matrix.at(r, col);
  return wavepacket::apply(wavepacket::dft_matrix(basis.matrix.dim), spatial);
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc;
}

std::size_t wrap(long long k, std::size_t dim) {
  long long m = k % static_cast<long long>(dim);
  if (m < 0) m += static_cast<long long>(dim);
  return static_cast<std::size_t>(m);
}

TEST(Oracle, DftOfDimensionTwoIsHadamard) {
  const DenseUnitary f = wavepacket::dft_matrix(2);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LT(std::abs(f.at(0, 0) - Complex{s, 0.0}), 1e-15);
  EXPECT_LT(std::abs(f.at(1, 1) - Complex{-s, 0.0}), 1e-15);
}

TEST(Oracle, DftIsUnitaryAndOrderFour) {
  const DenseUnitary f = wavepacket::dft_matrix(16);
  EXPECT_LT(wavepacket::unitarity_defect(f), 1e-13);
  const DenseUnitary f2 = wavepacket::mat_mul(f, f);
  const DenseUnitary f4 = wavepacket::mat_mul(f2, f2);
  EXPECT_LT(wavepacket::max_abs_diff(f4, wavepacket::identity_matrix(16)), 1e-12);
}

TEST(Oracle, SharpBasisIsOrthonormal) {
  for (int n = 3; n <= 6; ++n) {
    for (int b = 0; b <= n - 2; ++b) {
      const BasisMatrix basis = wavepacket::sharp_gabor_basis(n, b);
      EXPECT_LT(wavepacket::unitarity_defect(basis.matrix), 1e-12) << "n=" << n << " b=" << b;
    }
  }
}

TEST(Oracle, SharpBasisFirstColumnWindow) {
  const int n = 5, b = 2;
  const BasisMatrix basis = wavepacket::sharp_gabor_basis(n, b);
  const ComplexVector hat = freq_column(basis, 0);
  const double expected = 1.0 / std::sqrt(8.0);
  for (std::size_t k = 0; k < 32; ++k) {
    const bool in_window = k < 4 || k >= 28;
    if (in_window) {
      EXPECT_LT(std::abs(hat[k] - Complex{expected, 0.0}), 1e-12) << k;
    } else {
      EXPECT_LT(std::abs(hat[k]), 1e-12) << k;
    }
  }
}

TEST(Oracle, SharpCoefficientsMatchWindowedSums) {
  const int n = 5, b = 1;
  const long long block = 2, dim = 32;
  auto rng = testutil::make_rng(51);
  const ComplexVector f = testutil::random_vector(32, rng);
  const ComplexVector fhat = wavepacket::apply(wavepacket::dft_matrix(32), f);
  TransformParams params;
  params.n = n;
  params.b = b;
  const ComplexVector a =
      wavepacket::transform_reference(TransformKind::GaborSharp, params, f);
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(block));
  for (long long j = 0; j < dim / (2 * block); ++j) {
    for (long long p = 0; p < 2 * block; ++p) {
      Complex sum{0.0, 0.0};
      auto add = [&](long long k) {
        sum += fhat[wrap(k, 32)] * std::polar(scale, -kPi * static_cast<double>(p * k) /
                                                         static_cast<double>(block));
      };
      for (long long k = j * block; k < (j + 1) * block; ++k) add(k);
      for (long long k = -(j + 1) * block; k < -j * block; ++k) add(k);
      EXPECT_LT(std::abs(a[static_cast<std::size_t>(2 * block * j + p)] - sum), 1e-12)
          << "j=" << j << " p=" << p;
    }
  }
}

TEST(Oracle, BlendedBasisIsOrthonormal) {
  for (const auto& beta :
       {wavepacket::beta_linear(), wavepacket::beta_quadratic(), wavepacket::beta_deg7()}) {
    for (int n = 4; n <= 6; ++n) {
      for (int b = 1; b <= n - 3; ++b) {
        const BasisMatrix basis = wavepacket::blended_gabor_basis(n, b, beta);
        EXPECT_LT(wavepacket::unitarity_defect(basis.matrix), 1e-10)
            << beta.name << " n=" << n << " b=" << b;
      }
    }
  }
}

TEST(Oracle, BlendedAtomsHaveCompactSupport) {
  const int n = 6, b = 2;
  const long long block = 4, dim = 64;
  const BasisMatrix basis = wavepacket::blended_gabor_basis(n, b, wavepacket::beta_linear());
  for (long long j = 0; j < dim / (2 * block); ++j) {
    const ComplexVector hat = freq_column(basis, static_cast<std::size_t>(2 * block * j));
    for (long long k = -dim / 2; k < dim / 2; ++k) {
      const double kk = static_cast<double>(k);
      const double lo = (static_cast<double>(j) - 0.5) * static_cast<double>(block);
      const double hi = (static_cast<double>(j) + 1.5) * static_cast<double>(block);
      const bool inside = (kk > lo && kk < hi) || (-kk > lo && -kk < hi);
      if (!inside) {
        EXPECT_LT(std::abs(hat[wrap(k, 64)]), 1e-12) << "j=" << j << " k=" << k;
      }
    }
  }
}

TEST(Oracle, ShannonBasisOrthonormalAndOrdered) {
  const BasisMatrix basis = wavepacket::shannon_basis(2);
  EXPECT_LT(wavepacket::unitarity_defect(basis.matrix), 1e-13);
  // Column 0 in frequency domain: (f1 + f2)/sqrt(2) analyzer.
  const ComplexVector c0 = freq_column(basis, 0);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LT(std::abs(c0[1] - Complex{s, 0.0}), 1e-12);
  EXPECT_LT(std::abs(c0[2] - Complex{s, 0.0}), 1e-12);
  // Column 1 flips the sign at k=1.
  const ComplexVector c1 = freq_column(basis, 1);
  EXPECT_LT(std::abs(c1[1] - Complex{-s, 0.0}), 1e-12);
  EXPECT_LT(std::abs(c1[2] - Complex{s, 0.0}), 1e-12);
  // Narrowest wavelet sits at k=-1, scaling at k=0.
  const ComplexVector c2 = freq_column(basis, 2);
  EXPECT_LT(std::abs(c2[3] - Complex{1.0, 0.0}), 1e-12);
  const ComplexVector c3 = freq_column(basis, 3);
  EXPECT_LT(std::abs(c3[0] - Complex{1.0, 0.0}), 1e-12);
}

TEST(Oracle, ShannonLevelSupportsAreDisjoint) {
  const BasisMatrix basis = wavepacket::shannon_basis(4);
  EXPECT_LT(wavepacket::unitarity_defect(basis.matrix), 1e-12);
  // One column per level: supports must not overlap.
  const std::vector<std::size_t> level_start{0, 8, 12, 14};
  std::vector<std::vector<bool>> support;
  for (std::size_t c : level_start) {
    const ComplexVector hat = freq_column(basis, c);
    std::vector<bool> s(16, false);
    for (std::size_t k = 0; k < 16; ++k) s[k] = std::abs(hat[k]) > 1e-12;
    support.push_back(s);
  }
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      for (std::size_t k = 0; k < 16; ++k) {
        EXPECT_FALSE(support[a][k] && support[b][k]) << "levels " << a << "," << b << " k=" << k;
      }
    }
  }
}

TEST(Oracle, MotherWaveletProfileCases) {
  const auto beta = wavepacket::beta_linear();
  EXPECT_EQ(wavepacket::psi_ms_hat(0.1, beta), (Complex{0.0, 0.0}));
  EXPECT_EQ(wavepacket::psi_ms_hat(3.0 * kPi, beta), (Complex{0.0, 0.0}));
  // Continuity where the two branches meet.
  const Complex left = wavepacket::psi_ms_hat(4.0 * kPi / 3.0 - 1e-9, beta);
  const Complex right = wavepacket::psi_ms_hat(4.0 * kPi / 3.0 + 1e-9, beta);
  EXPECT_LT(std::abs(left - right), 1e-6);
  // Conjugate symmetry.
  const Complex pos = wavepacket::psi_ms_hat(2.2, beta);
  const Complex neg = wavepacket::psi_ms_hat(-2.2, beta);
  EXPECT_LT(std::abs(neg - std::conj(pos)), 1e-15);
  // At omega = 2 pi: -e^{i pi/4} / sqrt(2).
  const Complex at_two_pi = wavepacket::psi_ms_hat(2.0 * kPi, beta);
  EXPECT_LT(std::abs(at_two_pi - (-std::polar(1.0 / std::sqrt(2.0), kPi / 4.0))), 1e-12);
}

TEST(Oracle, MeyerBasisIsOrthonormal) {
  for (const auto& beta :
       {wavepacket::beta_linear(), wavepacket::beta_quadratic(), wavepacket::beta_deg7()}) {
    for (int n = 3; n <= 6; ++n) {
      const BasisMatrix basis = wavepacket::meyer_basis(n, beta);
      EXPECT_LT(wavepacket::unitarity_defect(basis.matrix), 1e-10) << beta.name << " n=" << n;
    }
  }
}

TEST(Oracle, MeyerNarrowestAndScalingColumns) {
  const int n = 4;
  const BasisMatrix basis = wavepacket::meyer_basis(n, wavepacket::beta_quadratic());
  const ComplexVector narrowest = freq_column(basis, 14);  // level n column
  const Complex expect_pos = -std::polar(1.0 / std::sqrt(2.0), kPi / 4.0);
  EXPECT_LT(std::abs(narrowest[1] - expect_pos), 1e-12);
  EXPECT_LT(std::abs(narrowest[15] - std::conj(expect_pos)), 1e-12);
  const ComplexVector scaling = freq_column(basis, 15);
  EXPECT_LT(std::abs(scaling[0] - Complex{1.0, 0.0}), 1e-12);
}

TEST(Oracle, GaborReallocationPreservesNorm) {
  auto rng = testutil::make_rng(52);
  const ComplexVector fhat = testutil::random_vector(64, rng);
  const ComplexVector h = wavepacket::h_realloc_gabor(fhat, 6, 2, wavepacket::beta_quadratic());
  EXPECT_NEAR(wavepacket::norm2(h), wavepacket::norm2(fhat), 1e-10);
}

TEST(Oracle, GaborReallocationImpulseResponse) {
  const int n = 5, b = 1;
  ComplexVector fhat(32, Complex{0.0, 0.0});
  fhat[6] = 1.0;  // j*B with j=3, B=2
  const ComplexVector h = wavepacket::h_realloc_gabor(fhat, n, b, wavepacket::beta_linear());
  for (std::size_t k = 0; k < 32; ++k) {
    if (k == 6 || k == 32 - 6) continue;
    EXPECT_LT(std::abs(h[k]), 1e-14) << k;
  }
  EXPECT_GT(std::abs(h[6]), 0.1);
  EXPECT_GT(std::abs(h[26]), 0.1);
}

TEST(Oracle, GaborPacketIdentityPerCoefficient) {
  // Windowed inverse-DFT sums of h reproduce every frequency-domain cross
  // inner product with the blended atoms.
  const int n = 6, b = 2;
  const long long block = 4, dim = 64;
  for (const auto& beta : {wavepacket::beta_linear(), wavepacket::beta_deg7()}) {
    auto rng = testutil::make_rng(53);
    const ComplexVector fhat = testutil::random_vector(64, rng);
    const ComplexVector h = wavepacket::h_realloc_gabor(fhat, n, b, beta);
    const BasisMatrix basis = wavepacket::blended_gabor_basis(n, b, beta);
    const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(block));
    for (long long j = 0; j < dim / (2 * block); ++j) {
      for (long long p = 0; p < 2 * block; ++p) {
        Complex lhs{0.0, 0.0};
        auto add = [&](long long k) {
          lhs += h[wrap(k, 64)] * std::polar(scale, -kPi * static_cast<double>(p * k) /
                                                        static_cast<double>(block));
        };
        for (long long k = j * block; k < (j + 1) * block; ++k) add(k);
        for (long long k = -(j + 1) * block; k < -j * block; ++k) add(k);
        const Complex rhs =
            inner(fhat, freq_column(basis, static_cast<std::size_t>(2 * block * j + p)));
        EXPECT_LT(std::abs(lhs - rhs), 1e-10) << beta.name << " j=" << j << " p=" << p;
      }
    }
  }
}

TEST(Oracle, WaveletReallocationBasics) {
  auto rng = testutil::make_rng(54);
  const ComplexVector fhat = testutil::random_vector(64, rng);
  const ComplexVector h = wavepacket::h_realloc_wavelet(fhat, 6, wavepacket::beta_linear());
  EXPECT_NEAR(wavepacket::norm2(h), wavepacket::norm2(fhat), 1e-10);
  EXPECT_LT(std::abs(h[0] - fhat[0]), 1e-15);
}

TEST(Oracle, WaveletReallocationIsLinear) {
  auto rng = testutil::make_rng(55);
  const auto beta = wavepacket::beta_quadratic();
  const ComplexVector f1 = testutil::random_vector(32, rng);
  const ComplexVector f2 = testutil::random_vector(32, rng);
  const Complex c1{0.3, -1.1}, c2{-0.8, 0.2};
  ComplexVector mix(32);
  for (std::size_t i = 0; i < 32; ++i) mix[i] = c1 * f1[i] + c2 * f2[i];
  const ComplexVector h1 = wavepacket::h_realloc_wavelet(f1, 5, beta);
  const ComplexVector h2 = wavepacket::h_realloc_wavelet(f2, 5, beta);
  const ComplexVector hmix = wavepacket::h_realloc_wavelet(mix, 5, beta);
  for (std::size_t i = 0; i < 32; ++i) {
    EXPECT_LT(std::abs(hmix[i] - (c1 * h1[i] + c2 * h2[i])), 1e-12);
  }
}

TEST(Oracle, WaveletPacketIdentityPerCoefficient) {
  // Windowed sums of h against the dyadic Shannon windows reproduce the inner
  // products with the smooth wavelet atoms, level by level.
  const int n = 5;
  const std::size_t dim = 32;
  for (const auto& beta : {wavepacket::beta_linear(), wavepacket::beta_deg7()}) {
    auto rng = testutil::make_rng(56);
    const ComplexVector fhat = testutil::random_vector(dim, rng);
    const ComplexVector h = wavepacket::h_realloc_wavelet(fhat, n, beta);
    const BasisMatrix basis = wavepacket::meyer_basis(n, beta);
    std::size_t col = 0;
    for (int j = 1; j <= n; ++j) {
      const long long width = wavepacket::pow2(n - j);
      const double scale = 1.0 / std::sqrt(static_cast<double>(width));
      for (long long p = 0; p < width; ++p, ++col) {
        Complex lhs{0.0, 0.0};
        auto add = [&](long long k) {
          lhs += h[wrap(k, dim)] *
                 std::polar(scale, -2.0 * kPi * static_cast<double>(p * k) /
                                       static_cast<double>(width));
        };
        if (width >= 2) {
          for (long long k = width / 2; k < width; ++k) add(k);
        }
        for (long long k = -width; k < -width / 2; ++k) add(k);
        const Complex rhs = inner(fhat, freq_column(basis, col));
        EXPECT_LT(std::abs(lhs - rhs), 1e-10) << beta.name << " j=" << j << " p=" << p;
      }
    }
  }
}

TEST(Oracle, ReferenceTransformInvertsOwnBasis) {
  TransformParams params;
  params.n = 5;
  params.b = 1;
  params.beta = wavepacket::beta_linear();
  for (const TransformKind kind :
       {TransformKind::GaborSharp, TransformKind::GaborBlended, TransformKind::Shannon,
        TransformKind::Meyer}) {
    const BasisMatrix basis = wavepacket::reference_basis(kind, params);
    for (std::size_t k : {std::size_t{0}, std::size_t{5}, std::size_t{31}}) {
      ComplexVector psi(32);
      for (std::size_t r = 0; r < 32; ++r) psi[r] = basis.matrix.at(r, k);
      const ComplexVector a = wavepacket::transform_reference(kind, params, psi);
      for (std::size_t i = 0; i < 32; ++i) {
        const Complex want = (i == k) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
        EXPECT_LT(std::abs(a[i] - want), 1e-10)
            << wavepacket::kind_name(kind) << " k=" << k << " i=" << i;
      }
    }
  }
}

TEST(Oracle, ReferenceTransformIsIsometric) {
  auto rng = testutil::make_rng(57);
  const ComplexVector f = testutil::random_vector(32, rng);
  TransformParams params;
  params.n = 5;
  params.b = 2;
  params.beta = wavepacket::beta_deg7();
  for (const TransformKind kind : {TransformKind::GaborSharp, TransformKind::Shannon,
                                   TransformKind::Meyer}) {
    const ComplexVector a = wavepacket::transform_reference(kind, params, f);
    EXPECT_NEAR(wavepacket::norm2(a), wavepacket::norm2(f), 1e-10)
        << wavepacket::kind_name(kind);
  }
}

TEST(Oracle, SpatialAndFrequencyInnerProductsAgree) {
  auto rng = testutil::make_rng(58);
  const ComplexVector f = testutil::random_vector(32, rng);
  const BasisMatrix basis = wavepacket::sharp_gabor_basis(5, 1);
  const ComplexVector fhat = wavepacket::apply(wavepacket::dft_matrix(32), f);
  for (std::size_t col : {std::size_t{0}, std::size_t{7}, std::size_t{20}}) {
    ComplexVector psi(32);
    for (std::size_t r = 0; r < 32; ++r) psi[r] = basis.matrix.at(r, col);
    const Complex space = inner(f, psi);
    const Complex freq = inner(fhat, freq_column(basis, col));
    EXPECT_LT(std::abs(space - freq), 1e-12);
  }
}

}  // namespace
