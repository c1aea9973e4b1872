// scratch -- localize the model mismatch
#include <cstdio>

#include "ved/eig.hpp"
#include "ved/fock.hpp"
#include "ved/hamiltonian.hpp"
#include "ved/observables.hpp"

using namespace ved;

static void levels(const char* tag, const LatticeSpec& spec, int k,
                   bool unpinned = false) {
  FockBasis basis(spec.n_sites(), spec.n_particles, spec.n_max);
  auto h = unpinned ? build_unpinned(spec, basis) : build_hamiltonian(spec, basis);
  LanczosOptions opts;
  opts.k = k;
  auto sol = lowest(h, opts);
  std::printf("%s:", tag);
  for (int i = 0; i < k; ++i) std::printf(" %.6f", sol.energies[i]);
  std::printf("\n");
  if (!unpinned) {
    StateGroup g(sol.vectors.data(), 1);
    const cplx corr =
        correlation(basis, g, spec.pin_sites[0], spec.pin_sites[1]);
    std::printf("   corr = |%.4f| arg %.4f\n", std::abs(corr), std::arg(corr));
  }
}

int main() {
  {  // H0 structure at n_phi = 0.5: expect doublet + gaps 0.28, 1.91
    LatticeSpec s;
    s.n_phi = 0.5;
    s.j_pin = 0.0;
    levels("H0 nphi=0.5 (j_pin=0)", s, 6);
  }
  {  // bond audit at n_phi = 2
    LatticeSpec s;
    s.n_phi = 2.0;
    s.j_pin = 0.6;
    auto bonds = build_bonds(s);
    int pin_bonds = 0;
    for (const auto& b : bonds)
      if (b.strength == 0.6) ++pin_bonds;
    std::printf("pin bonds: %d\n", pin_bonds);
    for (const auto& b : bonds) {
      auto [fx, fy] = s.site_xy(b.from);
      auto [tx, ty] = s.site_xy(b.to);
      std::printf("  (%d,%d)->(%d,%d) phase %+.4f s %.1f\n", fx, fy, tx, ty,
                  b.phase, b.strength);
    }
  }
  {  // pinned spectra: default pins vs translated pins vs diagonal-neighbor pins
    LatticeSpec s;
    s.n_phi = 2.0;
    s.j_pin = 0.6;
    levels("pins (1,2),(3,0)", s, 5);
    s.pin_sites = {12, 6};  // (0,3),(2,1) antipodal
    levels("pins (0,3),(2,1)", s, 5);
    s.pin_sites = {9, 6};  // (1,2),(2,1) diagonal neighbors
    levels("pins (1,2),(2,1)", s, 5);
  }
  {  // zero-field uniform reference
    LatticeSpec s;
    s.n_phi = 0.0;
    s.j_pin = 1.0;
    levels("uniform nphi=0", s, 3);
  }
  {  // nphi=1 uniform: paper expects doubly degenerate ground (vortex spin)
    LatticeSpec s;
    s.n_phi = 1.0;
    s.j_pin = 1.0;
    levels("uniform nphi=1", s, 4);
  }
  return 0;
}
