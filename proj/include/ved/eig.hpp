#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "ved/sparse.hpp"

namespace ved {

struct LanczosOptions {
  int k = 1;                          // number of lowest eigenpairs
  double tol = 1e-10;                 // residual <= tol * norm_estimate
  std::uint64_t seed = 1;             // start-vector PRNG seed
  double degeneracy_threshold = 1e-8; // energy gap below which levels group
  int max_subspace = 500;             // Krylov block cap (0 = auto)
  int max_matvecs = 200'000;
  std::size_t dense_cutoff = 128;     // use the dense solver below this dim
};

struct EigenSolution {
  std::vector<double> energies;           // ascending
  std::vector<Eigen::VectorXcd> vectors;  // orthonormal, one per energy
  std::vector<double> residuals;          // ||H v - E v||
  std::vector<std::vector<int>> degeneracy_groups;
  long matvecs = 0;
  int restarts = 0;
};

class EigNotConverged : public std::runtime_error {
 public:
  EigNotConverged(const std::string& what, EigenSolution partial)
      : std::runtime_error(what), partial(std::move(partial)) {}
  EigenSolution partial;
};

// Maximal groups of consecutive indices whose energy gaps stay below
// threshold; energies must be ascending.
std::vector<std::vector<int>> degeneracy_split(std::span<const double> energies,
                                               double threshold);

// The k lowest eigenpairs of a Hermitian operator. Thick-restart Lanczos
// with full reorthogonalization and locking of converged pairs; dense
// fallback for small dimensions. Deterministic for a fixed seed.
EigenSolution lowest(const LinearOp& op, const LanczosOptions& opts);

// Full spectrum via dense diagonalization (small dims only).
EigenSolution dense_all(const LinearOp& op, bool with_vectors = true,
                        double degeneracy_threshold = 1e-8);

// Dense matrix of an arbitrary operator, via unit-vector applies unless
// the operator is an explicit SparseHermitian.
Eigen::MatrixXcd dense_of(const LinearOp& op);

// Solves with growing k until the ground degeneracy group is strictly
// inside the computed window, so the returned group is complete.
EigenSolution ground_manifold(const LinearOp& op, LanczosOptions opts,
                              int max_group = 8);

}  // namespace ved
