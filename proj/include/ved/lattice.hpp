#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace ved {

// Physical parameter set for the gauged Bose-Hubbard model on a square
// torus. All energies are in units of j (set j = 1 for the usual
// convention); hbar = lattice constant = boson charge = 1.
struct LatticeSpec {
  int nx = 4;
  int ny = 4;
  double n_phi = 0.0;   // total flux quanta through the torus
  double j = 1.0;       // hopping strength of unpinned bonds
  double j_pin = 1.0;   // hopping strength of bonds touching a pin site
  double u = 0.0;       // on-site interaction, U sum_r n(n-1)
  double v = 0.0;       // nearest-neighbor interaction
  double mu = 0.0;      // chemical potential
  int n_particles = 8;
  int n_max = 1;        // max occupancy per site; 1 = hard-core
  // Antipodal pair on the lattice diagonal, sites (3,3) and (1,1) on 4x4.
  // The Landau gauge holonomies make this placement (and its (2,2)
  // translate) the one whose reflection symmetry protects the
  // Arg<a1^dag a2> = (pi/2) N_phi + m pi law; the order fixes the slope
  // sign to +pi/2.
  std::array<int, 2> pin_sites = {15, 5};

  int n_sites() const { return nx * ny; }
  bool hard_core() const { return n_max == 1; }

  // Row-major site indexing, coordinates wrapped onto the torus.
  int site_index(int x, int y) const;
  std::array<int, 2> site_xy(int site) const;

  bool is_pin_site(int site) const {
    return site == pin_sites[0] || site == pin_sites[1];
  }

  // Throws std::invalid_argument on violated invariants.
  void validate() const;
};

nlohmann::json to_json(const LatticeSpec& spec);
LatticeSpec spec_from_json(const nlohmann::json& j);

// Directed hopping link carrying its Peierls phase. The Hamiltonian term
// for a bond is -strength * (e^{i phase} a^dag_from a_to + h.c.).
struct Bond {
  int from = 0;
  int to = 0;
  double phase = 0.0;     // radians
  double strength = 0.0;  // units of j
};

// One square plaquette, bonds listed counterclockwise starting from the
// bottom edge. sign = +1 when the bond is traversed from->to, -1 reversed.
struct Plaquette {
  int corner = 0;  // lower-left site
  std::array<int, 4> bonds{};
  std::array<int, 4> signs{};
};

// Landau-gauge bond list: 2*nx*ny bonds, indexed 2*site (+x direction)
// and 2*site+1 (+y direction). The phase of the y-bond at column x is
// 2*pi*n_phi*x/(nx*ny); x-bonds are phase-free except the wrap column
// nx-1 -> 0, which carries -2*pi*n_phi*y/ny.
std::vector<Bond> build_bonds(const LatticeSpec& spec);

// Same geometry with all pin-incident bond strengths set to zero.
std::vector<Bond> build_unpinned_bonds(const LatticeSpec& spec);

std::vector<Plaquette> build_plaquettes(const LatticeSpec& spec);

// Oriented phase sum around p: 2*pi times the flux through p in units
// of the flux quantum.
double plaquette_flux(std::span<const Bond> bonds, const Plaquette& p);

// A_{rr'} -> A_{rr'} + chi(to) - chi(from); plaquette fluxes invariant.
std::vector<Bond> gauge_transform(std::span<const Bond> bonds,
                                  std::span<const double> chi);

}  // namespace ved
