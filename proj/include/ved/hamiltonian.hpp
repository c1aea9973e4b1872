#pragma once

#include <memory>
#include <span>

#include "ved/fock.hpp"
#include "ved/lattice.hpp"
#include "ved/sparse.hpp"

namespace ved {

// Diagonal couplings of the fixed-N sector Hamiltonian. v acts on the
// site pairs of the bond list independently of the bond strengths.
struct InteractionTerms {
  double u = 0.0;
  double v = 0.0;
  double mu = 0.0;
};

// Sparse matrix of
//   H = -sum_b s_b (e^{i A_b} a^dag_from a_to + h.c.)
//       + u sum_r n(n-1) + v sum_b n_from n_to - mu sum_r n
// over `basis`. Bond sites must be local indices into the basis.
SparseHermitian build_on_bonds(std::span<const Bond> bonds,
                               const InteractionTerms& terms,
                               const FockBasis& basis);

SparseHermitian build_hamiltonian(const LatticeSpec& spec,
                                  const FockBasis& basis);

// Eq.-(1) Hamiltonian with J_pin = 0: the pin sites carry no hopping.
SparseHermitian build_unpinned(const LatticeSpec& spec,
                               const FockBasis& basis);

// Matrix-free equivalent of build_on_bonds, for dimensions whose explicit
// matrix would exceed the memory budget. The bonds/basis spans must
// outlive the operator.
std::unique_ptr<LinearOp> make_matrix_free(std::span<const Bond> bonds,
                                           const InteractionTerms& terms,
                                           const FockBasis& basis);

inline constexpr std::size_t kDefaultMatrixBudget = 2ull << 30;

// Explicit matrix when the entry-count bound fits in memory_budget_bytes,
// matrix-free fallback otherwise.
std::unique_ptr<LinearOp> make_operator(
    std::span<const Bond> bonds, const InteractionTerms& terms,
    const FockBasis& basis,
    std::size_t memory_budget_bytes = kDefaultMatrixBudget);

}  // namespace ved
