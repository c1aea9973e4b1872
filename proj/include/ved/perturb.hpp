#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "ved/eig.hpp"
#include "ved/fock.hpp"
#include "ved/lattice.hpp"

namespace ved {

// Degenerate perturbation theory in J_pin around H0 (the lattice with all
// pin-incident hopping removed). H0 factorizes into a 14-site "rest"
// problem times the pin occupancies, so its levels are labeled by the
// rest-sector boson count m and the pin pattern.

struct H0Level {
  double energy = 0.0;
  int m_rest = 0;        // bosons on the non-pin sites
  int pin_n1 = 0;        // occupation of pin_sites[0]
  int pin_n2 = 0;
  int sector_index = 0;  // which eigenstate of the m_rest sector
};

struct H0Structure {
  std::vector<H0Level> levels;       // ascending
  std::vector<std::vector<int>> multiplets;  // degeneracy groups
  double e_ground = 0.0;
  int ground_multiplicity = 0;
  // consecutive multiplet gaps: E(1st excited) - E0, E(2nd) - E(1st)
  double gap_first = 0.0;
  double gap_second = 0.0;
};

// Effective 2x2 Hamiltonian on the ground doublet
// {|1~> = |Psi_rest>|10>, |0~> = |Psi_rest>|01>}, written as
// H_eff = -(R0 I + Rx sx + Ry sy + Rz sz).
struct BlochEffective {
  double r0 = 0.0, rx = 0.0, ry = 0.0, rz = 0.0;
  double r1 = 0.0;       // |(Rx, Ry, Rz)|
  double e_ground0 = 0.0;  // unperturbed doublet energy E_D
  bool angles_defined = false;  // false when R1 ~ 0 (degeneracy not lifted)
  double theta = 0.0;    // arccos(Rz/R1)
  double phi = 0.0;      // atan2(Ry, Rx)
  int n_intermediate_used = 0;  // multiplets entering the sum
};

struct ExactComparison {
  double theta_exact = 0.0, phi_exact = 0.0;
  double theta_pert = 0.0, phi_pert = 0.0;
  double e_exact = 0.0;
  double e_pert = 0.0;   // E_D - R0 - R1
  double doublet_weight = 0.0;  // |alpha|^2 + |beta|^2 of the exact ground
};

// Lowest H0 multiplets from the rest sectors m in {N-2, N-1, N}.
// Requires v = 0 (the nearest-neighbor term couples pins to the rest).
H0Structure h0_structure(const LatticeSpec& spec,
                         const LanczosOptions& opts = {},
                         int levels_per_sector = 6);

// Second-order effective Hamiltonian over the lowest `n_intermediate`
// excited multiplets of the m = N, N-2 intermediate sectors;
// n_intermediate < 0 includes every state of both sectors (dense path).
BlochEffective effective_hamiltonian(const LatticeSpec& spec,
                                     int n_intermediate,
                                     const LanczosOptions& opts = {});

// Bloch angles of the exact ground state projected on the H0 doublet
// versus the perturbative prediction.
ExactComparison compare_with_exact(const LatticeSpec& spec,
                                   int n_intermediate,
                                   const LanczosOptions& opts = {});

nlohmann::json to_json(const H0Structure& h0);
nlohmann::json to_json(const BlochEffective& b);
nlohmann::json to_json(const ExactComparison& c);

}  // namespace ved
