#pragma once

#include <array>
#include <span>
#include <vector>

#include "ved/lattice.hpp"

namespace ved {

// Coherent-state vortex configuration: the phase at site r is
// sum_k charge_k * theta(r - center_k) with theta the minimal-image
// angle on the torus. Centers live at plaquette centers (half-integer
// coordinates) so the singularity never lands on a site.
struct VortexAnsatz {
  std::vector<std::array<double, 2>> centers;
  std::vector<int> charges;
  std::vector<double> density;  // per site; empty = uniform 1/2

  void validate(int n_sites) const;
};

// H^cl = -2 sum_b s_b sqrt(rho rho') cos(phi - phi' - A)
//        + U sum rho^2 + V sum_b rho rho' - mu sum rho
double classical_energy(const LatticeSpec& spec, const VortexAnsatz& ansatz);

// Pinning correction H^cl_delta: the same cosine sum restricted to
// pin-incident bonds with strength J_delta = j_pin - j.
double pinning_energy_delta(const LatticeSpec& spec,
                            const VortexAnsatz& ansatz);

struct PinningProfilePoint {
  std::array<double, 2> position;
  double h_delta;
};

// H^cl_delta for a single unit vortex moved along `path`.
std::vector<PinningProfilePoint> pinning_energy_profile(
    const LatticeSpec& spec, std::span<const std::array<double, 2>> path);

}  // namespace ved
