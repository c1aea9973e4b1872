// scratch -- remaining borderline anchors
#include <cstdio>

#include "ved/eig.hpp"
#include "ved/fock.hpp"
#include "ved/hamiltonian.hpp"
#include "ved/observables.hpp"

using namespace ved;

int main() {
  FockBasis basis(16, 8, 1);

  std::printf("== gaps bracketing the phase jumps (j_pin=0.6) ==\n");
  for (double nphi : {0.73, 0.74, 1.93, 1.94, 2.06, 2.07, 2.94, 2.95}) {
    LatticeSpec s;
    s.n_phi = nphi;
    s.j_pin = 0.6;
    auto h = build_hamiltonian(s, basis);
    LanczosOptions o;
    o.k = 2;
    auto sol = lowest(h, o);
    StateGroup g(sol.vectors.data(), 1);
    const cplx corr = correlation(basis, g, 15, 5);
    std::printf("nphi=%.2f gap=%.6f |c|=%.4f\n", nphi,
                sol.energies[1] - sol.energies[0], std::abs(corr));
  }

  std::printf("== fine j_pin scan across the EoF drop (n_phi=2) ==\n");
  for (double jp = 0.840; jp < 0.8501; jp += 0.002) {
    LatticeSpec s;
    s.n_phi = 2.0;
    s.j_pin = jp;
    auto h = build_hamiltonian(s, basis);
    LanczosOptions o;
    o.k = 2;
    auto sol = ground_manifold(h, o);
    const int gsize = static_cast<int>(sol.degeneracy_groups[0].size());
    StateGroup g(sol.vectors.data(), gsize);
    auto rdm = two_site_rdm(basis, g, 15, 5);
    std::printf("jpin=%.3f mult=%d gap=%.3e EoF=%.6f\n", jp, gsize,
                sol.energies[1] - sol.energies[0],
                entanglement_of_formation(rdm));
  }

  std::printf("== H0 at n_phi=0 ==\n");
  {
    LatticeSpec s;
    s.n_phi = 0.0;
    s.j_pin = 0.0;
    auto h = build_unpinned(s, basis);
    LanczosOptions o;
    o.k = 8;
    auto sol = lowest(h, o);
    for (int i = 0; i < 8; ++i) std::printf(" %.5f", sol.energies[i]);
    std::printf("\n");
  }

  std::printf("== manifold-averaged correlator at n_phi=1.0, j_pin=0.6 ==\n");
  {
    LatticeSpec s;
    s.n_phi = 1.0;
    s.j_pin = 0.6;
    auto h = build_hamiltonian(s, basis);
    LanczosOptions o;
    o.k = 2;
    auto sol = ground_manifold(h, o);
    const int gsize = static_cast<int>(sol.degeneracy_groups[0].size());
    StateGroup g(sol.vectors.data(), gsize);
    const cplx corr = correlation(basis, g, 15, 5);
    auto res = phase_law_residual(corr, 1.0);
    std::printf("mult=%d |c|=%.6f arg=%.6f law=%.3e\n", gsize, std::abs(corr),
                std::arg(corr), res ? *res : -1.0);
  }

  std::printf("== exact peak values at (2.0, 0.6) ==\n");
  {
    LatticeSpec s;
    s.n_phi = 2.0;
    s.j_pin = 0.6;
    auto h = build_hamiltonian(s, basis);
    LanczosOptions o;
    o.k = 2;
    auto sol = lowest(h, o);
    StateGroup g(sol.vectors.data(), 1);
    auto rdm = two_site_rdm(basis, g, 15, 5);
    const cplx corr = correlation(basis, g, 15, 5);
    const double ov = state_overlap(rdm, std::arg(corr));
    std::printf("|c|=%.6f EoF=%.6f overlap=%.6f sqrt=%.6f\n", std::abs(corr),
                entanglement_of_formation(rdm), ov, std::sqrt(ov));
  }
  return 0;
}
