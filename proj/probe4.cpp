// scratch -- H0 gaps, law scan near 1.0, Fig.4 anchors
#include <cstdio>

#include "ved/eig.hpp"
#include "ved/fock.hpp"
#include "ved/hamiltonian.hpp"
#include "ved/observables.hpp"

using namespace ved;

int main() {
  FockBasis basis(16, 8, 1);
  {  // H0 (j_pin = 0) low levels for the four quoted fluxes
    for (double nphi : {0.5, 1.0, 2.0, 3.0}) {
      LatticeSpec s;
      s.n_phi = nphi;
      s.j_pin = 0.0;
      auto h = build_unpinned(s, basis);
      LanczosOptions o;
      o.k = 8;
      auto sol = lowest(h, o);
      std::printf("H0 nphi=%.1f:", nphi);
      for (int i = 0; i < 8; ++i) std::printf(" %.5f", sol.energies[i]);
      std::printf("\n  gaps from E0:");
      for (int i = 1; i < 8; ++i)
        std::printf(" %.4f", sol.energies[i] - sol.energies[0]);
      std::printf("\n");
    }
  }
  {  // law scan around n_phi = 1
    for (double nphi : {0.90, 0.95, 0.99, 1.00, 1.01, 1.05, 1.10}) {
      LatticeSpec s;
      s.n_phi = nphi;
      s.j_pin = 0.6;
      auto h = build_hamiltonian(s, basis);
      LanczosOptions o;
      o.k = 3;
      auto sol = lowest(h, o);
      StateGroup g(sol.vectors.data(), 1);
      const cplx corr = correlation(basis, g, s.pin_sites[0], s.pin_sites[1]);
      auto res = phase_law_residual(corr, nphi);
      std::printf("nphi=%.3f |c|=%.4f arg=%+.6f law=%.3e gap=%.4f gap2=%.4f\n",
                  nphi, std::abs(corr), std::arg(corr), res ? *res : -1.0,
                  sol.energies[1] - sol.energies[0],
                  sol.energies[2] - sol.energies[1]);
    }
  }
  {  // Fig. 4 anchors: EoF at j_pin = 0.01 for several fluxes
    for (double nphi : {0.0, 0.5, 1.5, 2.5, 3.0}) {
      LatticeSpec s;
      s.n_phi = nphi;
      s.j_pin = 0.01;
      auto h = build_hamiltonian(s, basis);
      LanczosOptions o;
      o.k = 2;
      auto sol = ground_manifold(h, o);
      const int gsize = static_cast<int>(sol.degeneracy_groups[0].size());
      StateGroup g(sol.vectors.data(), gsize);
      auto rdm = two_site_rdm(basis, g, s.pin_sites[0], s.pin_sites[1]);
      std::printf("jpin=0.01 nphi=%.1f: mult=%d gap=%.2e EoF=%.4f\n", nphi,
                  gsize, sol.energies[gsize % sol.energies.size()] - sol.energies[0],
                  entanglement_of_formation(rdm));
    }
  }
  {  // Fig. 4 EoF drop scan at n_phi = 2
    for (double jp : {0.70, 0.80, 0.83, 0.84, 0.85, 0.86, 0.88, 0.90, 1.00}) {
      LatticeSpec s;
      s.n_phi = 2.0;
      s.j_pin = jp;
      auto h = build_hamiltonian(s, basis);
      LanczosOptions o;
      o.k = 2;
      auto sol = ground_manifold(h, o);
      const int gsize = static_cast<int>(sol.degeneracy_groups[0].size());
      StateGroup g(sol.vectors.data(), gsize);
      auto rdm = two_site_rdm(basis, g, s.pin_sites[0], s.pin_sites[1]);
      std::printf("nphi=2 jpin=%.2f: mult=%d EoF=%.5f\n", jp, gsize,
                  entanglement_of_formation(rdm));
    }
  }
  return 0;
}
