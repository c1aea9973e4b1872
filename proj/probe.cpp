// scratch anchor probe -- not part of the build
#include <chrono>
#include <cstdio>

#include "ved/eig.hpp"
#include "ved/fock.hpp"
#include "ved/hamiltonian.hpp"
#include "ved/observables.hpp"
#include "ved/spinfit.hpp"

using namespace ved;

int main() {
  auto t0 = std::chrono::steady_clock::now();
  LatticeSpec spec;
  spec.n_phi = 2.0;
  spec.j_pin = 0.6;
  FockBasis basis(spec.n_sites(), spec.n_particles, spec.n_max);
  std::printf("dim = %zu\n", basis.dim());

  auto h = build_hamiltonian(spec, basis);
  std::printf("nnz = %zu, herm defect = %.2e, inf norm = %.3f\n", h.nnz(),
              h.hermiticity_defect(), h.inf_norm());

  LanczosOptions opts;
  opts.k = 5;
  auto sol = lowest(h, opts);
  auto t1 = std::chrono::steady_clock::now();
  std::printf("solve: %.2f s, matvecs = %ld, restarts = %d\n",
              std::chrono::duration<double>(t1 - t0).count(), sol.matvecs,
              sol.restarts);
  for (int i = 0; i < 5; ++i)
    std::printf("E%d = %.10f  (res %.2e)\n", i, sol.energies[i],
                sol.residuals[i]);

  const auto& g = sol.vectors;
  StateGroup ground(g.data(), 1);
  const cplx corr = correlation(basis, ground, spec.pin_sites[0], spec.pin_sites[1]);
  std::printf("corr = %.6f + %.6fi, |corr| = %.6f, arg = %.6f\n", corr.real(),
              corr.imag(), std::abs(corr), std::arg(corr));
  auto res = phase_law_residual(corr, spec.n_phi);
  std::printf("phase law residual = %.3e\n", res ? *res : -1.0);

  auto rdm = two_site_rdm(basis, ground, spec.pin_sites[0], spec.pin_sites[1]);
  std::printf("rdm diag: %.4f %.4f %.4f %.4f   y=|%.4f| trace err %.1e\n",
              rdm.rho(0, 0).real(), rdm.rho(1, 1).real(), rdm.rho(2, 2).real(),
              rdm.rho(3, 3).real(), std::abs(rdm.rho(1, 2)),
              rdm.trace_error());
  const double C = concurrence(rdm);
  const double E = entanglement_of_formation(rdm);
  const double overlap = state_overlap(rdm, std::arg(corr));
  std::printf("C = %.6f, EoF = %.6f, overlap = %.6f, sqrt = %.6f\n", C, E,
              overlap, std::sqrt(overlap));

  std::array<double, 4> levels = {sol.energies[0], sol.energies[1],
                                  sol.energies[2], sol.energies[3]};
  auto fit = fit_spin_model(levels);
  std::printf("spin fit: f_xx_abs = %.6f, f_zz = %.6f, c = %.4f, resid = %.2e\n",
              fit.f_xx_abs, fit.f_zz, fit.c, fit.residual);

  // phase-law slope probe at a couple of fluxes
  for (double nphi : {1.0, 1.3}) {
    LatticeSpec s2 = spec;
    s2.n_phi = nphi;
    auto h2 = build_hamiltonian(s2, basis);
    LanczosOptions o2;
    o2.k = 2;
    auto sol2 = lowest(h2, o2);
    StateGroup g2(sol2.vectors.data(), 1);
    const cplx c2 = correlation(basis, g2, s2.pin_sites[0], s2.pin_sites[1]);
    auto r2 = phase_law_residual(c2, nphi);
    std::printf("nphi=%.2f  |corr|=%.4f arg=%.4f  law-residual=%.3e  gap=%.4f\n",
                nphi, std::abs(c2), std::arg(c2), r2 ? *r2 : -1.0,
                sol2.energies[1] - sol2.energies[0]);
  }

  // background vorticity at j_pin=0.1, n_phi=2
  {
    LatticeSpec s3 = spec;
    s3.j_pin = 0.1;
    auto h3 = build_hamiltonian(s3, basis);
    LanczosOptions o3;
    o3.k = 2;
    auto sol3 = ground_manifold(h3, o3);
    const int gsize = static_cast<int>(sol3.degeneracy_groups[0].size());
    StateGroup g3(sol3.vectors.data(), gsize);
    auto map = vorticity_map(s3, basis, g3);
    double total = 0.0;
    for (double v : map.raw) total += v;
    std::printf("j_pin=0.1: ground multiplicity %d, raw sum = %.2e, background = %.5f\n",
                gsize, total, background_vorticity(map, s3));
    std::printf("analytic = %.5f\n", analytic_background(1.0 / 16, 0.5, 2.0));
  }

  auto t2 = std::chrono::steady_clock::now();
  std::printf("total: %.2f s\n", std::chrono::duration<double>(t2 - t0).count());
  return 0;
}
