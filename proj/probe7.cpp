// scratch -- perturbation anchors
#include <cstdio>

#include "ved/perturb.hpp"

using namespace ved;

int main() {
  LatticeSpec s;
  s.n_phi = 0.5;
  s.j_pin = 1e-2;

  auto h0 = h0_structure(s);
  std::printf("h0(0.5): E=%.6f mult=%d gaps=(%.4f, %.4f)\n", h0.e_ground,
              h0.ground_multiplicity, h0.gap_first, h0.gap_second);

  auto b = effective_hamiltonian(s, 1);
  std::printf("R = (%.4f, %.4f, %.4f, %.4f) x 1e-4 J, multiplets=%d\n",
              b.r0 * 1e4, b.rx * 1e4, b.ry * 1e4, b.rz * 1e4,
              b.n_intermediate_used);
  std::printf("theta=%.6f phi=%.6f (defined=%d)\n", b.theta, b.phi,
              b.angles_defined);

  auto cmp = compare_with_exact(s, 1);
  std::printf("exact: theta=%.4f phi=%.4f | pert: theta=%.4f phi=%.4f\n",
              cmp.theta_exact, cmp.phi_exact, cmp.theta_pert, cmp.phi_pert);
  std::printf("E_exact=%.8f E_pert=%.8f weight=%.6f\n", cmp.e_exact,
              cmp.e_pert, cmp.doublet_weight);

  {  // n_phi = 2: degeneracy not lifted at second order
    LatticeSpec s2 = s;
    s2.n_phi = 2.0;
    auto b2 = effective_hamiltonian(s2, 1);
    std::printf("nphi=2: R1 = %.3e, R0 = %.3e, defined=%d\n", b2.r1, b2.r0,
                b2.angles_defined);
  }

  {  // scaling: R ~ j_pin^2
    LatticeSpec s3 = s;
    s3.j_pin = 2e-2;
    auto b3 = effective_hamiltonian(s3, 1);
    std::printf("scaling (2x j_pin): r0 ratio = %.4f, rx ratio = %.4f\n",
                b3.r0 / b.r0, b3.rx / b.rx);
  }
  return 0;
}
