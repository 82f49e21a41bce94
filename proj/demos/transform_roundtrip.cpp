// Runs every transform kind forward and inverse on one random signal and
// reports the reconstruction residual plus the largest coefficient.
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "wavepacket/gabor.hpp"
#include "wavepacket/wavelet.hpp"

using namespace wavepacket;

int main() {
  const int n = 6;
  std::mt19937_64 rng(42);
  std::normal_distribution<double> gauss;
  ComplexVector f(pow2(n));
  for (Complex& z : f) z = Complex(gauss(rng), gauss(rng));
  const double scale = 1.0 / norm2(f);
  for (Complex& z : f) z *= scale;

  struct Case {
    const char* label;
    Circuit circuit;
  };
  const std::vector<Case> cases = {
      {"gabor-sharp", sharp_gabor_circuit({n, default_b(n), beta_linear()})},
      {"gabor-blended", blended_gabor_circuit({n, default_b(n), beta_linear()})},
      {"shannon", shannon_circuit(n)},
      {"meyer", meyer_circuit(n, beta_quadratic())},
  };

  std::printf("round trip on a unit-norm random signal, n=%d\n", n);
  for (const Case& c : cases) {
    const ComplexVector coeffs = apply_circuit(c.circuit, f);
    const ComplexVector back = apply_circuit(adjoint(c.circuit), coeffs);
    double residual = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      residual = std::max(residual, std::abs(back[i] - f[i]));
    }
    double peak = 0.0;
    std::size_t peak_slot = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (std::abs(coeffs[i]) > peak) {
        peak = std::abs(coeffs[i]);
        peak_slot = i;
      }
    }
    std::printf("  %-14s residual=%.3e coefficient-norm=%.12f peak=|a[%2zu]|=%.4f\n",
                c.label, residual, norm2(coeffs), peak_slot, peak);
  }
  return 0;
}
