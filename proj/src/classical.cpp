#include "ved/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace ved {

namespace {

double minimal_image(double d, int period) {
  return d - period * std::round(d / period);
}

double site_phase(const LatticeSpec& spec, const VortexAnsatz& ansatz, int x,
                  int y) {
  double phase = 0.0;
  for (std::size_t k = 0; k < ansatz.centers.size(); ++k) {
    const double dx = minimal_image(x - ansatz.centers[k][0], spec.nx);
    const double dy = minimal_image(y - ansatz.centers[k][1], spec.ny);
    phase += ansatz.charges[k] * std::atan2(dy, dx);
  }
  return phase;
}

double site_density(const VortexAnsatz& ansatz, int site) {
  return ansatz.density.empty()
             ? 0.5
             : ansatz.density[static_cast<std::size_t>(site)];
}

double cosine_sum(const LatticeSpec& spec, const VortexAnsatz& ansatz,
                  std::span<const Bond> bonds, bool pin_bonds_only) {
  std::vector<double> phases(static_cast<std::size_t>(spec.n_sites()));
  for (int y = 0; y < spec.ny; ++y)
    for (int x = 0; x < spec.nx; ++x)
      phases[static_cast<std::size_t>(spec.site_index(x, y))] =
          site_phase(spec, ansatz, x, y);

  double sum = 0.0;
  for (const Bond& b : bonds) {
    const bool pin_bond =
        spec.is_pin_site(b.from) || spec.is_pin_site(b.to);
    if (pin_bonds_only && !pin_bond) continue;
    const double amp = std::sqrt(site_density(ansatz, b.from) *
                                 site_density(ansatz, b.to));
    sum += amp * std::cos(phases[static_cast<std::size_t>(b.from)] -
                          phases[static_cast<std::size_t>(b.to)] - b.phase);
  }
  return sum;
}

}  // namespace

void VortexAnsatz::validate(int n_sites) const {
  if (centers.size() != charges.size())
    throw std::invalid_argument("ansatz: one charge per center required");
  for (int c : charges)
    if (c == 0) throw std::invalid_argument("ansatz: charges must be nonzero");
  if (!density.empty()) {
    if (static_cast<int>(density.size()) != n_sites)
      throw std::invalid_argument("ansatz: density must cover every site");
    for (double d : density)
      if (d < 0.0)
        throw std::invalid_argument("ansatz: densities must be >= 0");
  }
}

double classical_energy(const LatticeSpec& spec, const VortexAnsatz& ansatz) {
  ansatz.validate(spec.n_sites());
  const auto bonds = build_bonds(spec);

  double energy = 0.0;
  // hopping part carries the per-bond strength
  {
    std::vector<double> phases(static_cast<std::size_t>(spec.n_sites()));
    for (int y = 0; y < spec.ny; ++y)
      for (int x = 0; x < spec.nx; ++x)
        phases[static_cast<std::size_t>(spec.site_index(x, y))] =
            site_phase(spec, ansatz, x, y);
    for (const Bond& b : bonds) {
      const double amp = std::sqrt(site_density(ansatz, b.from) *
                                   site_density(ansatz, b.to));
      energy -= 2.0 * b.strength * amp *
                std::cos(phases[static_cast<std::size_t>(b.from)] -
                         phases[static_cast<std::size_t>(b.to)] - b.phase);
    }
  }
  for (int s = 0; s < spec.n_sites(); ++s) {
    const double rho = site_density(ansatz, s);
    energy += spec.u * rho * rho - spec.mu * rho;
  }
  for (const Bond& b : bonds)
    energy +=
        spec.v * site_density(ansatz, b.from) * site_density(ansatz, b.to);
  return energy;
}

double pinning_energy_delta(const LatticeSpec& spec,
                            const VortexAnsatz& ansatz) {
  ansatz.validate(spec.n_sites());
  const double j_delta = spec.j_pin - spec.j;
  const auto bonds = build_bonds(spec);
  return -2.0 * j_delta * cosine_sum(spec, ansatz, bonds, true);
}

std::vector<PinningProfilePoint> pinning_energy_profile(
    const LatticeSpec& spec, std::span<const std::array<double, 2>> path) {
  std::vector<PinningProfilePoint> profile;
  profile.reserve(path.size());
  for (const auto& pos : path) {
    VortexAnsatz ansatz;
    ansatz.centers = {pos};
    ansatz.charges = {1};
    profile.push_back({pos, pinning_energy_delta(spec, ansatz)});
  }
  return profile;
}

}  // namespace ved
