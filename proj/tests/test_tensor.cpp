#include "wavepacket/tensor.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace {

using wavepacket::Complex;
using wavepacket::ComplexVector;
using wavepacket::DenseUnitary;

DenseUnitary pauli_x() {
  DenseUnitary m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

DenseUnitary pauli_z() {
  DenseUnitary m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

DenseUnitary hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  DenseUnitary m(2);
  m.at(0, 0) = s;
  m.at(0, 1) = s;
  m.at(1, 0) = s;
  m.at(1, 1) = -s;
  return m;
}

TEST(Tensor, KronWithIdentityGivesIdentity) {
  const DenseUnitary i2 = wavepacket::identity_matrix(2);
  const DenseUnitary i4 = wavepacket::kron(i2, i2);
  EXPECT_EQ(i4.dim, 4u);
  EXPECT_NEAR(wavepacket::max_abs_diff(i4, wavepacket::identity_matrix(4)), 0.0, 0.0);
}

TEST(Tensor, KronFirstFactorActsOnHighBit) {
  const DenseUnitary u = wavepacket::kron(pauli_x(), wavepacket::identity_matrix(2));
  ComplexVector e0(4, Complex{0.0, 0.0});
  e0[0] = 1.0;
  const ComplexVector image = wavepacket::apply(u, e0);
  EXPECT_NEAR(std::abs(image[2] - Complex{1.0, 0.0}), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(image[0]), 0.0, 1e-15);
}

TEST(Tensor, KronIsAssociativeOnStructuredInputs) {
  const DenseUnitary x = pauli_x();
  const DenseUnitary z = pauli_z();
  const DenseUnitary i2 = wavepacket::identity_matrix(2);
  const DenseUnitary left = wavepacket::kron(wavepacket::kron(x, z), i2);
  const DenseUnitary right = wavepacket::kron(x, wavepacket::kron(z, i2));
  EXPECT_EQ(wavepacket::max_abs_diff(left, right), 0.0);
}

TEST(Tensor, KronOfHadamardsIsNotAFourierMatrix) {
  const DenseUnitary hh = wavepacket::kron(hadamard(), hadamard());
  // The 4-dim Fourier matrix has entry i/2 at (1,1); H (x) H is real.
  EXPECT_NEAR(hh.at(1, 1).imag(), 0.0, 1e-15);
  EXPECT_NEAR(hh.at(1, 1).real(), -0.5, 1e-15);
}

TEST(Tensor, DirectSumPlacesBlocks) {
  DenseUnitary one(1);
  one.at(0, 0) = 1.0;
  const DenseUnitary m = wavepacket::direct_sum(one, pauli_x());
  EXPECT_EQ(m.dim, 3u);
  EXPECT_EQ(m.at(0, 0), (Complex{1.0, 0.0}));
  EXPECT_EQ(m.at(1, 2), (Complex{1.0, 0.0}));
  EXPECT_EQ(m.at(2, 1), (Complex{1.0, 0.0}));
  EXPECT_EQ(m.at(1, 1), (Complex{0.0, 0.0}));
  EXPECT_EQ(m.at(0, 1), (Complex{0.0, 0.0}));
}

TEST(Tensor, DirectSumOfIdentitiesIsIdentity) {
  const DenseUnitary m =
      wavepacket::direct_sum(wavepacket::identity_matrix(2), wavepacket::identity_matrix(2));
  EXPECT_EQ(wavepacket::max_abs_diff(m, wavepacket::identity_matrix(4)), 0.0);
}

TEST(Tensor, DaggerIsConjugateTranspose) {
  DenseUnitary m(2);
  m.at(0, 1) = Complex{0.0, 1.0};
  m.at(1, 0) = Complex{2.0, -3.0};
  const DenseUnitary d = wavepacket::dagger(m);
  EXPECT_EQ(d.at(1, 0), (Complex{0.0, -1.0}));
  EXPECT_EQ(d.at(0, 1), (Complex{2.0, 3.0}));
}

TEST(Tensor, DaggerIsAnInvolution) {
  auto rng = testutil::make_rng(11);
  const DenseUnitary u = testutil::random_unitary(8, rng);
  EXPECT_EQ(wavepacket::max_abs_diff(wavepacket::dagger(wavepacket::dagger(u)), u), 0.0);
}

TEST(Tensor, UnitarityDefectZeroForIdentity) {
  EXPECT_EQ(wavepacket::unitarity_defect(wavepacket::identity_matrix(8)), 0.0);
}

TEST(Tensor, UnitarityDefectDetectsScaledMatrix) {
  DenseUnitary m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = 2.0;
  EXPECT_NEAR(wavepacket::unitarity_defect(m), 3.0, 1e-15);
}

TEST(Tensor, UnitarityDefectSmallForRandomUnitary) {
  auto rng = testutil::make_rng(12);
  const DenseUnitary u = testutil::random_unitary(32, rng);
  EXPECT_LT(wavepacket::unitarity_defect(u), 1e-12);
}

TEST(Tensor, ApplyMatchesMatrixAction) {
  ComplexVector e0(2, Complex{0.0, 0.0});
  e0[0] = 1.0;
  const ComplexVector image = wavepacket::apply(pauli_x(), e0);
  EXPECT_EQ(image[0], (Complex{0.0, 0.0}));
  EXPECT_EQ(image[1], (Complex{1.0, 0.0}));
}

TEST(Tensor, ApplyRejectsDimensionMismatch) {
  ComplexVector v(3, Complex{0.0, 0.0});
  EXPECT_THROW(wavepacket::apply(pauli_x(), v), wavepacket::InvalidParams);
}

TEST(Tensor, UnitaryApplicationPreservesNorm) {
  auto rng = testutil::make_rng(13);
  const DenseUnitary u = testutil::random_unitary(16, rng);
  const ComplexVector v = testutil::random_vector(16, rng);
  const ComplexVector w = wavepacket::apply(u, v);
  EXPECT_NEAR(wavepacket::norm2(w), wavepacket::norm2(v), 1e-12);
}

TEST(Tensor, AdjointUndoesApplication) {
  auto rng = testutil::make_rng(14);
  const DenseUnitary u = testutil::random_unitary(16, rng);
  const ComplexVector v = testutil::random_vector(16, rng);
  const ComplexVector round = wavepacket::apply(wavepacket::dagger(u), wavepacket::apply(u, v));
  EXPECT_LT(wavepacket::max_abs_diff(round, v), 1e-12);
}

TEST(Tensor, MatMulComposesActions) {
  auto rng = testutil::make_rng(15);
  const DenseUnitary a = testutil::random_unitary(8, rng);
  const DenseUnitary b = testutil::random_unitary(8, rng);
  const ComplexVector v = testutil::random_vector(8, rng);
  const ComplexVector via_product = wavepacket::apply(wavepacket::mat_mul(a, b), v);
  const ComplexVector via_chain = wavepacket::apply(a, wavepacket::apply(b, v));
  EXPECT_LT(wavepacket::max_abs_diff(via_product, via_chain), 1e-12);
}

}  // namespace
