#include "ved/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "ved/hamiltonian.hpp"
#include "ved/observables.hpp"

namespace ved {

namespace {

struct RestProblem {
  std::vector<int> rest_sites;       // global indices, ascending
  std::vector<int> global_to_local;  // -1 for pin sites
  std::vector<Bond> rest_bonds;      // local site indices
  std::vector<Bond> pin_bonds;       // global site indices
};

RestProblem split_lattice(const LatticeSpec& spec) {
  if (spec.n_max != 1)
    throw std::invalid_argument("perturb: hard-core bases only");
  if (spec.v != 0.0)
    throw std::invalid_argument(
        "perturb: v != 0 couples the pins to the rest and breaks the "
        "factorized H0");
  RestProblem rp;
  rp.global_to_local.assign(spec.n_sites(), -1);
  for (int s = 0; s < spec.n_sites(); ++s) {
    if (spec.is_pin_site(s)) continue;
    rp.global_to_local[s] = static_cast<int>(rp.rest_sites.size());
    rp.rest_sites.push_back(s);
  }
  for (const Bond& b : build_bonds(spec)) {
    const bool from_pin = spec.is_pin_site(b.from);
    const bool to_pin = spec.is_pin_site(b.to);
    if (from_pin && to_pin)
      throw std::invalid_argument("perturb: pin sites must not be adjacent");
    if (from_pin || to_pin) {
      rp.pin_bonds.push_back(b);
    } else {
      Bond local = b;
      local.from = rp.global_to_local[b.from];
      local.to = rp.global_to_local[b.to];
      rp.rest_bonds.push_back(local);
    }
  }
  return rp;
}

struct Sector {
  int m = 0;  // boson count on the rest sites
  FockBasis basis;
  EigenSolution sol;
};

Sector solve_sector(const LatticeSpec& spec, const RestProblem& rp, int m,
                    int k, const LanczosOptions& opts, bool all_states) {
  Sector sec{m, FockBasis(static_cast<int>(rp.rest_sites.size()), m, 1), {}};
  const SparseHermitian h = build_on_bonds(
      rp.rest_bonds, {spec.u, 0.0, spec.mu}, sec.basis);
  if (all_states || sec.basis.dim() <= opts.dense_cutoff ||
      static_cast<std::size_t>(k) + 2 >= sec.basis.dim()) {
    sec.sol = dense_all(h, true, opts.degeneracy_threshold);
  } else {
    LanczosOptions o = opts;
    o.k = k;
    sec.sol = lowest(h, o);
  }
  return sec;
}

// -mu times the boson count parked on the pins
double pin_shift(const LatticeSpec& spec, int pins_occupied) {
  return -spec.mu * pins_occupied;
}

// V pieces acting on |Psi_rest> x |pin pattern>. Moving the boson off
// pin p into the rest raises the rest sector; loading pin p lowers it.
Eigen::VectorXcd pin_transfer(const RestProblem& rp, const FockBasis& from,
                              const FockBasis& to, const Eigen::VectorXcd& psi,
                              int pin, bool lower_pin) {
  Eigen::VectorXcd out =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(to.dim()));
  for (const Bond& b : rp.pin_bonds) {
    if (b.from != pin && b.to != pin) continue;
    const int rest_global = (b.from == pin) ? b.to : b.from;
    const int r = rp.global_to_local[rest_global];
    if (r < 0) continue;  // bond to the other pin is excluded by split
    // the hopping term is -s (e^{iA} a^dag_from a_to + e^{-iA} a^dag_to a_from)
    cplx coeff;
    if (lower_pin)
      coeff = (b.from == pin) ? -b.strength * std::exp(cplx{0.0, -b.phase})
                              : -b.strength * std::exp(cplx{0.0, b.phase});
    else
      coeff = (b.from == pin) ? -b.strength * std::exp(cplx{0.0, b.phase})
                              : -b.strength * std::exp(cplx{0.0, -b.phase});
    for (std::size_t i = 0; i < from.dim(); ++i) {
      const cplx amp = psi[static_cast<Eigen::Index>(i)];
      if (amp == cplx{0.0, 0.0}) continue;
      const auto hop = lower_pin ? apply_raise(from, from.state(i), r)
                                 : apply_lower(from, from.state(i), r);
      if (!hop) continue;
      out[static_cast<Eigen::Index>(to.rank(hop->state))] +=
          coeff * hop->amplitude * amp;
    }
  }
  return out;
}

struct IntermediateLevel {
  double energy;      // including the pin mu-shift
  const Sector* sec;
  int index;
};

}  // namespace

H0Structure h0_structure(const LatticeSpec& spec, const LanczosOptions& opts,
                         int levels_per_sector) {
  spec.validate();
  const RestProblem rp = split_lattice(spec);
  const int n = spec.n_particles;

  H0Structure out;
  for (int pins_occ = 0; pins_occ <= 2; ++pins_occ) {
    const int m = n - pins_occ;
    if (m < 0 || m > static_cast<int>(rp.rest_sites.size())) continue;
    const Sector sec =
        solve_sector(spec, rp, m, levels_per_sector, opts, false);
    const double shift = pin_shift(spec, pins_occ);
    for (std::size_t i = 0; i < sec.sol.energies.size(); ++i) {
      const double e = sec.sol.energies[i] + shift;
      if (pins_occ == 1) {
        out.levels.push_back({e, m, 1, 0, static_cast<int>(i)});
        out.levels.push_back({e, m, 0, 1, static_cast<int>(i)});
      } else {
        const int occ = pins_occ / 2;
        out.levels.push_back({e, m, occ, occ, static_cast<int>(i)});
      }
    }
  }
  std::sort(out.levels.begin(), out.levels.end(),
            [](const H0Level& a, const H0Level& b) { return a.energy < b.energy; });

  std::vector<double> energies;
  energies.reserve(out.levels.size());
  for (const auto& l : out.levels) energies.push_back(l.energy);
  out.multiplets = degeneracy_split(energies, opts.degeneracy_threshold);

  out.e_ground = out.levels.front().energy;
  out.ground_multiplicity = static_cast<int>(out.multiplets.front().size());
  if (out.multiplets.size() >= 2)
    out.gap_first =
        out.levels[static_cast<std::size_t>(out.multiplets[1].front())].energy -
        out.e_ground;
  if (out.multiplets.size() >= 3)
    out.gap_second =
        out.levels[static_cast<std::size_t>(out.multiplets[2].front())].energy -
        out.levels[static_cast<std::size_t>(out.multiplets[1].front())].energy;
  return out;
}

BlochEffective effective_hamiltonian(const LatticeSpec& spec,
                                     int n_intermediate,
                                     const LanczosOptions& opts) {
  spec.validate();
  const RestProblem rp = split_lattice(spec);
  const int n = spec.n_particles;
  const int n_rest = static_cast<int>(rp.rest_sites.size());
  if (n - 1 < 0 || n - 1 > n_rest)
    throw std::invalid_argument("perturb: no valid ground doublet sector");

  // ground doublet: unique rest ground at m = N - 1, pins |10> and |01>
  const Sector sec7 = solve_sector(spec, rp, n - 1, 2, opts, false);
  if (sec7.sol.degeneracy_groups.front().size() != 1)
    throw std::runtime_error(
        "perturb: rest-sector ground is degenerate; the doublet basis is "
        "ambiguous");
  const Eigen::VectorXcd& psi = sec7.sol.vectors.front();
  const double e_doublet = sec7.sol.energies.front() + pin_shift(spec, 1);

  const bool all = n_intermediate < 0;
  const int k_each = all ? 0 : std::max(6, 2 * n_intermediate + 4);
  std::vector<Sector> inter;
  if (n <= n_rest) inter.push_back(solve_sector(spec, rp, n, k_each, opts, all));
  if (n - 2 >= 0)
    inter.push_back(solve_sector(spec, rp, n - 2, k_each, opts, all));

  std::vector<IntermediateLevel> levels;
  for (const Sector& sec : inter) {
    const int pins_occ = n - sec.m;
    for (std::size_t i = 0; i < sec.sol.energies.size(); ++i)
      levels.push_back(
          {sec.sol.energies[i] + pin_shift(spec, pins_occ), &sec,
           static_cast<int>(i)});
  }
  std::sort(levels.begin(), levels.end(),
            [](const IntermediateLevel& a, const IntermediateLevel& b) {
              return a.energy < b.energy;
            });

  std::size_t n_used = levels.size();
  int multiplets_used = 0;
  if (!all) {
    std::vector<double> energies;
    energies.reserve(levels.size());
    for (const auto& l : levels) energies.push_back(l.energy);
    const auto groups = degeneracy_split(energies, opts.degeneracy_threshold);
    if (static_cast<int>(groups.size()) < n_intermediate + 1 && k_each > 0)
      throw std::runtime_error(
          "perturb: not enough intermediate multiplets resolved; raise "
          "levels_per_sector");
    n_used = 0;
    for (int g = 0; g < n_intermediate; ++g) n_used += groups[g].size();
    multiplets_used = n_intermediate;
  } else {
    std::vector<double> energies;
    for (const auto& l : levels) energies.push_back(l.energy);
    multiplets_used = static_cast<int>(
        degeneracy_split(energies, opts.degeneracy_threshold).size());
  }

  // V|1~> and V|0~| components in each intermediate sector
  const int p1 = spec.pin_sites[0], p2 = spec.pin_sites[1];
  std::vector<Eigen::VectorXcd> w1(inter.size()), w0(inter.size());
  for (std::size_t s = 0; s < inter.size(); ++s) {
    const Sector& sec = inter[s];
    if (sec.m == n) {  // pins emptied: the occupied pin lost its boson
      w1[s] = pin_transfer(rp, sec7.basis, sec.basis, psi, p1, true);
      w0[s] = pin_transfer(rp, sec7.basis, sec.basis, psi, p2, true);
    } else {  // pins filled: the empty pin gained a boson
      w1[s] = pin_transfer(rp, sec7.basis, sec.basis, psi, p2, false);
      w0[s] = pin_transfer(rp, sec7.basis, sec.basis, psi, p1, false);
    }
  }

  Eigen::Matrix2cd h_eff = Eigen::Matrix2cd::Zero();
  for (std::size_t idx = 0; idx < n_used; ++idx) {
    const IntermediateLevel& lev = levels[idx];
    const double denom = lev.energy - e_doublet;
    if (denom <= 0.0)
      throw std::runtime_error(
          "perturb: intermediate level at or below the doublet");
    const std::size_t s = static_cast<std::size_t>(lev.sec - inter.data());
    const Eigen::VectorXcd& k_vec = lev.sec->sol.vectors[
        static_cast<std::size_t>(lev.index)];
    const cplx u1 = k_vec.dot(w1[s]);  // <k|V|1~>
    const cplx u0 = k_vec.dot(w0[s]);
    h_eff(0, 0) -= std::norm(u1) / denom;
    h_eff(1, 1) -= std::norm(u0) / denom;
    h_eff(0, 1) -= std::conj(u1) * u0 / denom;
  }
  h_eff(1, 0) = std::conj(h_eff(0, 1));

  BlochEffective out;
  out.e_ground0 = e_doublet;
  out.n_intermediate_used = multiplets_used;
  out.r0 = -0.5 * (h_eff(0, 0).real() + h_eff(1, 1).real());
  out.rz = -0.5 * (h_eff(0, 0).real() - h_eff(1, 1).real());
  out.rx = -h_eff(0, 1).real();
  out.ry = h_eff(0, 1).imag();
  out.r1 = std::sqrt(out.rx * out.rx + out.ry * out.ry + out.rz * out.rz);
  out.angles_defined = out.r1 > 1e-12 * std::max(1.0, std::abs(out.r0));
  if (out.angles_defined) {
    out.theta = std::acos(std::clamp(out.rz / out.r1, -1.0, 1.0));
    out.phi = std::atan2(out.ry, out.rx);
  }
  return out;
}

ExactComparison compare_with_exact(const LatticeSpec& spec,
                                   int n_intermediate,
                                   const LanczosOptions& opts) {
  const BlochEffective bloch = effective_hamiltonian(spec, n_intermediate, opts);

  const RestProblem rp = split_lattice(spec);
  const Sector sec7 = solve_sector(spec, rp, spec.n_particles - 1, 2, opts, false);
  const Eigen::VectorXcd& psi = sec7.sol.vectors.front();

  FockBasis full(spec.n_sites(), spec.n_particles, spec.n_max);
  const SparseHermitian h = build_hamiltonian(spec, full);
  LanczosOptions o = opts;
  o.k = std::max(o.k, 2);
  const EigenSolution sol = lowest(h, o);
  const Eigen::VectorXcd& ground = sol.vectors.front();

  // project the exact ground on |Psi_rest>|10> and |Psi_rest>|01>
  auto embed_amp = [&](int n_p1, int n_p2) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < sec7.basis.dim(); ++i) {
      const std::uint64_t rest_state = sec7.basis.state(i);
      std::uint64_t g = 0;
      for (int r = 0; r < sec7.basis.n_sites(); ++r)
        g = full.with_occ(g, rp.rest_sites[static_cast<std::size_t>(r)],
                          sec7.basis.occ(rest_state, r));
      g = full.with_occ(g, spec.pin_sites[0], n_p1);
      g = full.with_occ(g, spec.pin_sites[1], n_p2);
      acc += std::conj(psi[static_cast<Eigen::Index>(i)]) *
             ground[static_cast<Eigen::Index>(full.rank(g))];
    }
    return acc;
  };
  const cplx alpha = embed_amp(1, 0);
  const cplx beta = embed_amp(0, 1);

  ExactComparison out;
  out.theta_pert = bloch.theta;
  out.phi_pert = bloch.phi;
  out.e_pert = bloch.e_ground0 - bloch.r0 - bloch.r1;
  out.e_exact = sol.energies.front();
  out.theta_exact = 2.0 * std::atan2(std::abs(beta), std::abs(alpha));
  out.phi_exact = std::arg(beta * std::conj(alpha));
  out.doublet_weight = std::norm(alpha) + std::norm(beta);
  return out;
}

nlohmann::json to_json(const H0Structure& h0) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : h0.levels)
    levels.push_back({{"energy", l.energy},
                      {"m_rest", l.m_rest},
                      {"pin_n1", l.pin_n1},
                      {"pin_n2", l.pin_n2},
                      {"sector_index", l.sector_index}});
  return nlohmann::json{{"e_ground", h0.e_ground},
                        {"ground_multiplicity", h0.ground_multiplicity},
                        {"gap_first", h0.gap_first},
                        {"gap_second", h0.gap_second},
                        {"levels", levels}};
}

nlohmann::json to_json(const BlochEffective& b) {
  nlohmann::json j{{"r0", b.r0},
                   {"rx", b.rx},
                   {"ry", b.ry},
                   {"rz", b.rz},
                   {"r1", b.r1},
                   {"e_ground0", b.e_ground0},
                   {"n_intermediate_used", b.n_intermediate_used},
                   {"angles_defined", b.angles_defined}};
  if (b.angles_defined) {
    j["theta"] = b.theta;
    j["phi"] = b.phi;
  } else {
    j["theta"] = nullptr;
    j["phi"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const ExactComparison& c) {
  return nlohmann::json{{"theta_exact", c.theta_exact},
                        {"phi_exact", c.phi_exact},
                        {"theta_pert", c.theta_pert},
                        {"phi_pert", c.phi_pert},
                        {"e_exact", c.e_exact},
                        {"e_pert", c.e_pert},
                        {"doublet_weight", c.doublet_weight}};
}

}  // namespace ved
