#include "ved/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ved {

namespace {
int wrap(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}
}  // namespace

int LatticeSpec::site_index(int x, int y) const {
  return wrap(x, nx) + nx * wrap(y, ny);
}

std::array<int, 2> LatticeSpec::site_xy(int site) const {
  return {site % nx, site / nx};
}

void LatticeSpec::validate() const {
  if (nx < 2 || ny < 2) throw std::invalid_argument("lattice: nx, ny must be >= 2");
  if (n_max < 1) throw std::invalid_argument("lattice: n_max must be >= 1");
  if (n_particles < 0 || n_particles > n_max * n_sites())
    throw std::invalid_argument("lattice: n_particles outside [0, n_max*n_sites]");
  if (!(j > 0.0)) throw std::invalid_argument("lattice: j must be positive");
  if (j_pin < 0.0) throw std::invalid_argument("lattice: j_pin must be >= 0");
  for (int p : pin_sites)
    if (p < 0 || p >= n_sites())
      throw std::invalid_argument("lattice: pin site out of range");
  if (pin_sites[0] == pin_sites[1])
    throw std::invalid_argument("lattice: pin sites must be distinct");
}

nlohmann::json to_json(const LatticeSpec& s) {
  return nlohmann::json{{"nx", s.nx},
                        {"ny", s.ny},
                        {"n_phi", s.n_phi},
                        {"j", s.j},
                        {"j_pin", s.j_pin},
                        {"u", s.u},
                        {"v", s.v},
                        {"mu", s.mu},
                        {"n_particles", s.n_particles},
                        {"n_max", s.n_max},
                        {"pin_sites", s.pin_sites}};
}

LatticeSpec spec_from_json(const nlohmann::json& j) {
  LatticeSpec s;
  s.nx = j.at("nx").get<int>();
  s.ny = j.at("ny").get<int>();
  s.n_phi = j.at("n_phi").get<double>();
  s.j = j.at("j").get<double>();
  s.j_pin = j.at("j_pin").get<double>();
  s.u = j.value("u", 0.0);
  s.v = j.value("v", 0.0);
  s.mu = j.value("mu", 0.0);
  s.n_particles = j.at("n_particles").get<int>();
  s.n_max = j.at("n_max").get<int>();
  auto pins = j.at("pin_sites");
  s.pin_sites = {pins.at(0).get<int>(), pins.at(1).get<int>()};
  s.validate();
  return s;
}

std::vector<Bond> build_bonds(const LatticeSpec& spec) {
  spec.validate();
  const double two_pi = 2.0 * std::numbers::pi;
  const double flux_per_plaquette = two_pi * spec.n_phi / (spec.nx * spec.ny);

  std::vector<Bond> bonds(2 * static_cast<std::size_t>(spec.n_sites()));
  for (int y = 0; y < spec.ny; ++y) {
    for (int x = 0; x < spec.nx; ++x) {
      const int s = spec.site_index(x, y);
      Bond bx;
      bx.from = s;
      bx.to = spec.site_index(x + 1, y);
      bx.phase = (x == spec.nx - 1) ? -two_pi * spec.n_phi * y / spec.ny : 0.0;
      Bond by;
      by.from = s;
      by.to = spec.site_index(x, y + 1);
      by.phase = flux_per_plaquette * x;
      for (Bond* b : {&bx, &by}) {
        b->strength = (spec.is_pin_site(b->from) || spec.is_pin_site(b->to))
                          ? spec.j_pin
                          : spec.j;
      }
      bonds[2 * static_cast<std::size_t>(s)] = bx;
      bonds[2 * static_cast<std::size_t>(s) + 1] = by;
    }
  }
  return bonds;
}

std::vector<Bond> build_unpinned_bonds(const LatticeSpec& spec) {
  auto bonds = build_bonds(spec);
  for (Bond& b : bonds)
    if (spec.is_pin_site(b.from) || spec.is_pin_site(b.to)) b.strength = 0.0;
  return bonds;
}

std::vector<Plaquette> build_plaquettes(const LatticeSpec& spec) {
  std::vector<Plaquette> plaqs(static_cast<std::size_t>(spec.n_sites()));
  for (int y = 0; y < spec.ny; ++y) {
    for (int x = 0; x < spec.nx; ++x) {
      const int s = spec.site_index(x, y);
      const int right = spec.site_index(x + 1, y);
      const int up = spec.site_index(x, y + 1);
      Plaquette& p = plaqs[static_cast<std::size_t>(s)];
      p.corner = s;
      // counterclockwise: bottom, right, top (reversed), left (reversed)
      p.bonds = {2 * s, 2 * right + 1, 2 * up, 2 * s + 1};
      p.signs = {+1, +1, -1, -1};
    }
  }
  return plaqs;
}

double plaquette_flux(std::span<const Bond> bonds, const Plaquette& p) {
  double flux = 0.0;
  for (int i = 0; i < 4; ++i)
    flux += p.signs[i] * bonds[static_cast<std::size_t>(p.bonds[i])].phase;
  return flux;
}

std::vector<Bond> gauge_transform(std::span<const Bond> bonds,
                                  std::span<const double> chi) {
  std::vector<Bond> out(bonds.begin(), bonds.end());
  for (Bond& b : out) {
    b.phase += chi[static_cast<std::size_t>(b.to)] -
               chi[static_cast<std::size_t>(b.from)];
  }
  return out;
}

}  // namespace ved
