// scratch -- pin-pair physics scan at odd flux + jump locations
#include <cstdio>
#include <vector>

#include "ved/eig.hpp"
#include "ved/fock.hpp"
#include "ved/hamiltonian.hpp"
#include "ved/observables.hpp"

using namespace ved;

int main() {
  FockBasis basis(16, 8, 1);

  std::printf("== all antipodal pairs at nphi=3, j_pin=0.01: EoF; and H0(0.5) gaps ==\n");
  for (int site = 0; site < 8; ++site) {
    LatticeSpec s;
    const auto [x, y] = s.site_xy(site);
    const int partner = s.site_index(x + 2, y + 2);
    s.pin_sites = {partner, site};  // keep the (15,5)-style order
    s.n_phi = 3.0;
    s.j_pin = 0.01;
    auto h = build_hamiltonian(s, basis);
    LanczosOptions o;
    o.k = 2;
    auto sol = ground_manifold(h, o);
    const int gsize = static_cast<int>(sol.degeneracy_groups[0].size());
    StateGroup g(sol.vectors.data(), gsize);
    auto rdm = two_site_rdm(basis, g, s.pin_sites[0], s.pin_sites[1]);
    const double eof3 = entanglement_of_formation(rdm);

    LatticeSpec s0 = s;
    s0.n_phi = 0.5;
    s0.j_pin = 0.0;
    auto h0 = build_unpinned(s0, basis);
    LanczosOptions o0;
    o0.k = 6;
    auto sol0 = lowest(h0, o0);
    std::printf(
        "pins(%2d,%2d): EoF(3,0.01)=%.4f mult=%d | H0(0.5): %.4f %.4f %.4f %.4f %.4f %.4f\n",
        partner, site, eof3, gsize, sol0.energies[0], sol0.energies[1],
        sol0.energies[2], sol0.energies[3], sol0.energies[4], sol0.energies[5]);
  }

  std::printf("== law + EoF at nphi=3.0, j_pin=0.6, pins (15,5) ==\n");
  {
    LatticeSpec s;
    s.n_phi = 3.0;
    s.j_pin = 0.6;
    auto h = build_hamiltonian(s, basis);
    LanczosOptions o;
    o.k = 2;
    auto sol = ground_manifold(h, o);
    const int gsize = static_cast<int>(sol.degeneracy_groups[0].size());
    StateGroup g(sol.vectors.data(), gsize);
    const cplx corr = correlation(basis, g, 15, 5);
    auto rdm = two_site_rdm(basis, g, 15, 5);
    std::printf("mult=%d |c|=%.4f arg=%.4f EoF=%.4f\n", gsize, std::abs(corr),
                std::arg(corr), entanglement_of_formation(rdm));
  }

  std::printf("== arg sweep for jump locations, pins (15,5), j_pin=0.6 ==\n");
  {
    double prev_arg = 0.0;
    bool have_prev = false;
    for (int i = 60; i <= 310; ++i) {
      const double nphi = 0.01 * i;
      LatticeSpec s;
      s.n_phi = nphi;
      s.j_pin = 0.6;
      auto h = build_hamiltonian(s, basis);
      LanczosOptions o;
      o.k = 2;
      auto sol = lowest(h, o);
      StateGroup g(sol.vectors.data(), 1);
      const cplx corr = correlation(basis, g, 15, 5);
      const double arg = std::arg(corr);
      if (have_prev) {
        const double darg =
            std::remainder(arg - prev_arg - 0.005 * std::numbers::pi, 2 * std::numbers::pi);
        if (std::abs(darg) > 0.5 * std::numbers::pi)
          std::printf("jump between %.2f and %.2f (|c|=%.4f, gap=%.2e)\n",
                      nphi - 0.01, nphi, std::abs(corr),
                      sol.energies[1] - sol.energies[0]);
      }
      prev_arg = arg;
      have_prev = true;
    }
  }
  return 0;
}
