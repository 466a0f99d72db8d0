#pragma once

#include "entkit/states.hpp"

#include <cstdint>

namespace entkit {

/// Deterministic random generator (splitmix64 core). Self-contained so that
/// artifacts are byte-identical across standard libraries for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal (Box-Muller).
  double normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  /// Derive an independent stream keyed by (current seed, stream index).
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

 private:
  std::uint64_t state_;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0;
};

/// Haar-random unitary of the given dimension (QR of a Ginibre matrix with
/// the standard phase fix).
Matrix random_unitary(Rng& rng, int dim);

/// Haar-random pure state on n qubits.
PureState random_pure_state(Rng& rng, int n_qubits, Bipartition cut);

/// Random full-rank mixed state (Wishart: G G^dag normalized).
DensityMatrix random_density(Rng& rng, int n_qubits, Bipartition cut);

/// Random single-qubit pure state as a 2-vector.
Eigen::Vector2cd random_qubit_vector(Rng& rng);

}  // namespace entkit
