#include "wavepacket/qft.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "test_util.hpp"
#include "wavepacket/tensor.hpp"

namespace {

using wavepacket::Circuit;
using wavepacket::Complex;
using wavepacket::ComplexVector;
using wavepacket::DenseUnitary;

// Direct positive-exponent Fourier matrix, built index by index.
DenseUnitary fourier_matrix(std::size_t dim) {
  DenseUnitary f(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const double phase =
          2.0 * std::numbers::pi * static_cast<double>(r * c % dim) / static_cast<double>(dim);
      f.at(r, c) = std::polar(scale, phase);
    }
  }
  return f;
}

TEST(Qft, OneQubitIsHadamard) {
  const DenseUnitary u = wavepacket::circuit_to_unitary(wavepacket::qft_circuit(1));
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(u.at(0, 0) - Complex{s, 0.0}), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(u.at(1, 1) - Complex{-s, 0.0}), 0.0, 1e-14);
}

TEST(Qft, TwoQubitEntryHasPositiveExponent) {
  const DenseUnitary u = wavepacket::circuit_to_unitary(wavepacket::qft_circuit(2));
  EXPECT_NEAR(std::abs(u.at(1, 1) - Complex{0.0, 0.5}), 0.0, 1e-14);
}

TEST(Qft, MatchesFourierMatrixUpToEightQubits) {
  for (int m = 1; m <= 8; ++m) {
    const DenseUnitary u = wavepacket::circuit_to_unitary(wavepacket::qft_circuit(m));
    EXPECT_LT(wavepacket::max_abs_diff(u, fourier_matrix(wavepacket::pow2(m))), 1e-12)
        << "m=" << m;
  }
}

TEST(Qft, InverseUndoesForward) {
  for (int m = 1; m <= 6; ++m) {
    Circuit round = wavepacket::qft_circuit(m);
    const Circuit inv = wavepacket::iqft_circuit(m);
    round.gates.insert(round.gates.end(), inv.gates.begin(), inv.gates.end());
    const DenseUnitary u = wavepacket::circuit_to_unitary(round);
    EXPECT_LT(
        wavepacket::max_abs_diff(u, wavepacket::identity_matrix(wavepacket::pow2(m))), 1e-12)
        << "m=" << m;
  }
}

TEST(Qft, InverseOfUniformIsGroundState) {
  const int m = 5;
  const std::size_t dim = wavepacket::pow2(m);
  ComplexVector uniform(dim, Complex{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
  const ComplexVector out = wavepacket::apply_circuit(wavepacket::iqft_circuit(m), uniform);
  EXPECT_NEAR(std::abs(out[0] - Complex{1.0, 0.0}), 0.0, 1e-12);
  for (std::size_t k = 1; k < dim; ++k) EXPECT_NEAR(std::abs(out[k]), 0.0, 1e-12);
}

TEST(Qft, GateCountsAreTextbook) {
  for (int m = 1; m <= 9; ++m) {
    const Circuit c = wavepacket::qft_circuit(m);
    std::size_t hadamards = 0, phases = 0, swaps = 0;
    for (const auto& g : c.gates) {
      switch (g.kind) {
        case wavepacket::GateKind::H: ++hadamards; break;
        case wavepacket::GateKind::Controlled: ++phases; break;
        case wavepacket::GateKind::Swap: ++swaps; break;
        default: FAIL() << "unexpected gate kind";
      }
    }
    EXPECT_EQ(hadamards, static_cast<std::size_t>(m));
    EXPECT_EQ(phases, static_cast<std::size_t>(m * (m - 1) / 2));
    EXPECT_EQ(swaps, static_cast<std::size_t>(m / 2));
  }
}

TEST(Qft, UnitarityDefectTinyAtTenQubits) {
  const DenseUnitary u = wavepacket::circuit_to_unitary(wavepacket::qft_circuit(10));
  EXPECT_LT(wavepacket::unitarity_defect(u), 1e-12);
}

TEST(Qft, StatevectorPathMatchesDensePath) {
  auto rng = testutil::make_rng(31);
  const int m = 9;
  const ComplexVector v = testutil::random_vector(wavepacket::pow2(m), rng);
  const ComplexVector via_state = wavepacket::apply_circuit(wavepacket::qft_circuit(m), v);
  const ComplexVector via_matrix = wavepacket::apply(fourier_matrix(wavepacket::pow2(m)), v);
  EXPECT_LT(wavepacket::max_abs_diff(via_state, via_matrix), 1e-11);
}

TEST(Qft, RejectsOutOfRangeSizes) {
  EXPECT_THROW(wavepacket::qft_circuit(0), wavepacket::InvalidParams);
  EXPECT_THROW(wavepacket::qft_circuit(27), wavepacket::InvalidParams);
}

}  // namespace
