#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ved/fock.hpp"
#include "ved/lattice.hpp"
#include "ved/sparse.hpp"

namespace ved {

// All operations take the eigenstate(s) of a degeneracy group; with more
// than one state the group-averaged density matrix is measured, which is
// invariant under unitary remixing of the group.
using StateGroup = std::span<const Eigen::VectorXcd>;

// <a^dag_{s1} a_{s2}>
cplx correlation(const FockBasis& basis, StateGroup states, int s1, int s2);

// Expectation of i*s*(e^{iA} a^dag_from a_to - h.c.), units eJ/hbar.
double bond_current(const FockBasis& basis, StateGroup states, const Bond& b);

struct VorticityMap {
  int nx = 0, ny = 0;
  std::vector<double> raw;    // lattice curl per plaquette, by corner site
  double background = 0.0;
  bool subtracted = false;    // true once background has been filled in

  double value(int plaquette) const {
    return raw[static_cast<std::size_t>(plaquette)] -
           (subtracted ? background : 0.0);
  }
};

// Oriented loop sum of bond currents per plaquette (lattice curl, a = 1).
VorticityMap vorticity_map(const LatticeSpec& spec, const FockBasis& basis,
                           StateGroup states);

// Mean raw vorticity over plaquettes that do not touch a pin site.
double background_vorticity(const VorticityMap& map, const LatticeSpec& spec);

bool plaquette_touches_pin(const LatticeSpec& spec, int corner_site);

// Superfluid estimate -2*pi*p*n*n_phi*j of the background vorticity.
double analytic_background(double p, double n, double n_phi, double j = 1.0);

// Distance of Arg<a1^dag a2> from the nearest (pi/2)*n_phi + m*pi;
// nullopt when the correlator modulus is below 1e-6.
std::optional<double> phase_law_residual(cplx corr, double n_phi);

// 4x4 reduced state of two sites in basis |n_{s1} n_{s2}> = 00,01,10,11.
struct TwoSiteRDM {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();

  double trace_error() const { return std::abs(rho.trace().real() - 1.0); }
  // smallest eigenvalue; PSD within tolerance when >= -1e-10
  double min_eigenvalue() const;
};

// Partial trace onto (s1, s2); hard-core bases only.
TwoSiteRDM two_site_rdm(const FockBasis& basis, StateGroup states, int s1,
                        int s2);

// Wootters concurrence and entanglement of formation of a two-qubit state.
double concurrence(const TwoSiteRDM& rdm);
double entanglement_of_formation(const TwoSiteRDM& rdm);

// Overlap <Psi12| rho |Psi12> with |Psi12> = (|10> + e^{i phi}|01>)/sqrt2.
double state_overlap(const TwoSiteRDM& rdm, double phi);

// Uhlmann fidelity between rho and the pure target |Psi12>, i.e. the
// square root of state_overlap.
double fidelity(const TwoSiteRDM& rdm, double phi);

// --- readout protocol simulations -----------------------------------

struct ReadoutTrace {
  std::vector<double> times;      // units hbar/J
  std::vector<double> occupancy;  // <a^dag_1 a_1>_t
};

// Evolution of rho12 under H' = -(Omega a1^dag a2 + h.c.) + U sum n(n-1).
ReadoutTrace raman_trace(const TwoSiteRDM& rdm, cplx omega_eff, double u,
                         std::span<const double> times);

struct RamanSetting {
  ReadoutTrace trace;
  cplx omega_eff;
};

struct RamanFit {
  double r = 0.0;
  double phi_prime = 0.0;
  bool phi_defined = false;   // false when r sits below the noise floor
  bool identifiable = false;  // false when the theta' settings are rank
                              // deficient (fewer than two distinct mod pi)
  double rms = 0.0;
};

// Least-squares fit of 1/2 - r sin(2|Omega|t) sin(phi' + theta') across
// one or more Raman phase settings; two settings with distinct theta'
// (mod pi) identify both r and phi'.
RamanFit raman_fit(std::span<const RamanSetting> settings);

// |y| = sqrt(purity - sum x^2); radicand in [-1e-10, 0) clamps to 0,
// below that the inputs are inconsistent and a domain_error is thrown.
double tomography_offdiag(const std::array<double, 4>& x, double purity);

// Even/odd joint-parity projection of sites (1,1') for two copies of the
// two-site state, in site order (1, 1', 2, 2').
struct ParityProjection {
  Eigen::MatrixXcd even;  // 16x16 normalized post-measurement state
  Eigen::MatrixXcd odd;
  double p_even = 0.0;
  double p_odd = 0.0;
};

ParityProjection parity_projection(const TwoSiteRDM& a, const TwoSiteRDM& b);

}  // namespace ved
