#include "ved/hamiltonian.hpp"

#include <cmath>
#include <complex>

namespace ved {

namespace {

double diagonal_element(std::span<const Bond> bonds,
                        const InteractionTerms& terms, const FockBasis& basis,
                        std::uint64_t state) {
  double diag = 0.0;
  if (terms.u != 0.0 || terms.mu != 0.0) {
    for (int s = 0; s < basis.n_sites(); ++s) {
      const double n = basis.occ(state, s);
      diag += terms.u * n * (n - 1.0) - terms.mu * n;
    }
  }
  if (terms.v != 0.0) {
    for (const Bond& b : bonds)
      diag += terms.v * basis.occ(state, b.from) * basis.occ(state, b.to);
  }
  return diag;
}

// Emits every matrix entry of column `r` (equivalently row, H is
// Hermitian) in a fixed bond order.
template <typename Emit>
void fill_column(std::span<const Bond> bonds, const InteractionTerms& terms,
                 const FockBasis& basis, std::size_t r, Emit&& emit) {
  const std::uint64_t state = basis.state(r);
  const cplx i_unit{0.0, 1.0};
  for (const Bond& b : bonds) {
    if (b.strength == 0.0) continue;
    const cplx forward = -b.strength * std::exp(i_unit * b.phase);
    // -s e^{iA} a^dag_from a_to
    if (auto hop = apply_hop(basis, state, b.from, b.to))
      emit(basis.rank(hop->state), forward * hop->amplitude);
    // -s e^{-iA} a^dag_to a_from
    if (auto hop = apply_hop(basis, state, b.to, b.from))
      emit(basis.rank(hop->state), std::conj(forward) * hop->amplitude);
  }
  const double diag = diagonal_element(bonds, terms, basis, state);
  if (diag != 0.0) emit(r, diag);
}

}  // namespace

SparseHermitian build_on_bonds(std::span<const Bond> bonds,
                               const InteractionTerms& terms,
                               const FockBasis& basis) {
  std::vector<SparseHermitian::Entry> entries;
  // bound: two hop targets per bond plus the diagonal
  entries.reserve(basis.dim() * (2 * bonds.size() + 1) / 2);
  for (std::size_t r = 0; r < basis.dim(); ++r) {
    fill_column(bonds, terms, basis, r, [&](std::size_t c, cplx v) {
      entries.push_back({static_cast<std::uint32_t>(c),
                         static_cast<std::uint32_t>(r), v});
    });
  }
  return SparseHermitian::from_entries(basis.dim(), std::move(entries));
}

SparseHermitian build_hamiltonian(const LatticeSpec& spec,
                                  const FockBasis& basis) {
  const auto bonds = build_bonds(spec);
  return build_on_bonds(bonds, {spec.u, spec.v, spec.mu}, basis);
}

SparseHermitian build_unpinned(const LatticeSpec& spec,
                               const FockBasis& basis) {
  const auto bonds = build_unpinned_bonds(spec);
  return build_on_bonds(bonds, {spec.u, spec.v, spec.mu}, basis);
}

std::unique_ptr<LinearOp> make_matrix_free(std::span<const Bond> bonds,
                                           const InteractionTerms& terms,
                                           const FockBasis& basis) {
  // Gershgorin-style bound: every hop amplitude is at most
  // sqrt(n_max (n_max+1)) and each bond contributes twice per row.
  const double hop_amp = std::sqrt(static_cast<double>(basis.n_max()) *
                                   (basis.n_max() + 1));
  double off = 0.0;
  for (const Bond& b : bonds) off += 2.0 * std::abs(b.strength) * hop_amp;
  const double n = basis.n_particles();
  const double diag = std::abs(terms.u) * n * (n - 1.0) +
                      std::abs(terms.mu) * n +
                      std::abs(terms.v) * n * basis.n_max() * 4.0;
  // fill_column yields <c|H|r>; a row walk needs <r|H|c> = conj of it,
  // and both share the same sparsity pattern.
  auto fill = [bonds, terms, &basis](
                  std::size_t r, const std::function<void(std::size_t, cplx)>& emit) {
    fill_column(bonds, terms, basis, r,
                [&](std::size_t c, cplx v) { emit(c, std::conj(v)); });
  };
  return std::make_unique<CallbackOp>(basis.dim(), std::move(fill), off + diag);
}

std::unique_ptr<LinearOp> make_operator(std::span<const Bond> bonds,
                                        const InteractionTerms& terms,
                                        const FockBasis& basis,
                                        std::size_t memory_budget_bytes) {
  // 20 bytes per stored entry (value + column) plus row pointers
  const std::size_t entry_bound = basis.dim() * (2 * bonds.size() + 1);
  const std::size_t bytes = entry_bound * 20 + (basis.dim() + 1) * 8;
  if (bytes <= memory_budget_bytes)
    return std::make_unique<SparseHermitian>(
        build_on_bonds(bonds, terms, basis));
  return make_matrix_free(bonds, terms, basis);
}

}  // namespace ved
