#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace wavepacket {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

struct WavepacketError : std::runtime_error {
  explicit WavepacketError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionTooLarge : WavepacketError {
  using WavepacketError::WavepacketError;
};
struct AncillaLeakage : WavepacketError {
  using WavepacketError::WavepacketError;
};
struct NotAPermutation : WavepacketError {
  using WavepacketError::WavepacketError;
};
struct TooLarge : WavepacketError {
  using WavepacketError::WavepacketError;
};
struct DomainError : WavepacketError {
  using WavepacketError::WavepacketError;
};
struct InvalidParams : WavepacketError {
  using WavepacketError::WavepacketError;
};

// Dense row-major complex matrix. "Unitary" is a usage contract checked by
// unitarity_defect, not enforced by the container.
struct DenseUnitary {
  std::size_t dim = 0;
  ComplexVector entries;  // dim*dim, row-major

  DenseUnitary() = default;
  explicit DenseUnitary(std::size_t d) : dim(d), entries(d * d) {}

  Complex& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
};

enum class TransformKind { GaborSharp, GaborBlended, Shannon, Meyer };

inline std::string kind_name(TransformKind k) {
  switch (k) {
    case TransformKind::GaborSharp: return "gabor-sharp";
    case TransformKind::GaborBlended: return "gabor-blended";
    case TransformKind::Shannon: return "shannon";
    case TransformKind::Meyer: return "meyer";
  }
  throw InvalidParams("unknown transform kind");
}

inline TransformKind parse_kind(const std::string& s) {
  if (s == "gabor-sharp") return TransformKind::GaborSharp;
  if (s == "gabor-blended") return TransformKind::GaborBlended;
  if (s == "shannon") return TransformKind::Shannon;
  if (s == "meyer") return TransformKind::Meyer;
  throw InvalidParams("unknown transform kind: " + s);
}

// How window/reallocation diagonals enter a circuit: as dense block gates
// (mirroring the reference block structure) or expanded into Rz cascades.
enum class DiagMode { CustomBlocks, Synthesized };

inline std::size_t pow2(int m) { return std::size_t{1} << m; }

// Runs chunk(begin, end) over [0, total) on up to hardware_concurrency threads.
// Chunk bodies must not throw; report failures via captured state instead.
inline void parallel_for(std::size_t total,
                         const std::function<void(std::size_t, std::size_t)>& chunk) {
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > total) workers = total > 0 ? total : 1;
  if (workers <= 1) {
    chunk(0, total);
    return;
  }
  std::size_t step = (total + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t b = w * step;
    std::size_t e = b + step < total ? b + step : total;
    if (b >= e) break;
    pool.emplace_back(chunk, b, e);
  }
  for (auto& t : pool) t.join();
}

}  // namespace wavepacket
