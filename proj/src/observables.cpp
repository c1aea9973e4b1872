#include "ved/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ved {

namespace {

cplx single_state_correlation(const FockBasis& basis,
                              const Eigen::VectorXcd& state, int s1, int s2) {
  // <psi| a^dag_{s1} a_{s2} |psi>
  cplx acc = 0.0;
  if (s1 == s2) {
    for (std::size_t i = 0; i < basis.dim(); ++i)
      acc += static_cast<double>(basis.occ(basis.state(i), s1)) *
             std::norm(state[static_cast<Eigen::Index>(i)]);
    return acc;
  }
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const auto hop = apply_hop(basis, basis.state(i), s1, s2);
    if (!hop) continue;
    const std::size_t j = basis.rank(hop->state);
    acc += std::conj(state[static_cast<Eigen::Index>(j)]) * hop->amplitude *
           state[static_cast<Eigen::Index>(i)];
  }
  return acc;
}

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

void check_rdm(const TwoSiteRDM& rdm) {
  if (rdm.trace_error() > 1e-8)
    throw std::domain_error("rdm: trace deviates from 1");
  if (rdm.min_eigenvalue() < -1e-8)
    throw std::domain_error("rdm: not positive semidefinite");
}

}  // namespace

cplx correlation(const FockBasis& basis, StateGroup states, int s1, int s2) {
  cplx acc = 0.0;
  for (const auto& psi : states)
    acc += single_state_correlation(basis, psi, s1, s2);
  return acc / static_cast<double>(states.size());
}

double bond_current(const FockBasis& basis, StateGroup states, const Bond& b) {
  const cplx corr = correlation(basis, states, b.from, b.to);
  const cplx phase = std::exp(cplx{0.0, b.phase});
  return -2.0 * b.strength * std::imag(phase * corr);
}

VorticityMap vorticity_map(const LatticeSpec& spec, const FockBasis& basis,
                           StateGroup states) {
  const auto bonds = build_bonds(spec);
  const auto plaqs = build_plaquettes(spec);
  std::vector<double> currents(bonds.size());
  for (std::size_t i = 0; i < bonds.size(); ++i)
    currents[i] = bond_current(basis, states, bonds[i]);

  VorticityMap map;
  map.nx = spec.nx;
  map.ny = spec.ny;
  map.raw.resize(plaqs.size());
  for (std::size_t p = 0; p < plaqs.size(); ++p) {
    double curl = 0.0;
    for (int e = 0; e < 4; ++e)
      curl += plaqs[p].signs[e] *
              currents[static_cast<std::size_t>(plaqs[p].bonds[e])];
    map.raw[p] = curl;  // a = 1
  }
  return map;
}

bool plaquette_touches_pin(const LatticeSpec& spec, int corner_site) {
  const auto [x, y] = spec.site_xy(corner_site);
  for (int dy = 0; dy <= 1; ++dy)
    for (int dx = 0; dx <= 1; ++dx)
      if (spec.is_pin_site(spec.site_index(x + dx, y + dy))) return true;
  return false;
}

double background_vorticity(const VorticityMap& map, const LatticeSpec& spec) {
  double sum = 0.0;
  int count = 0;
  for (int p = 0; p < spec.n_sites(); ++p) {
    if (plaquette_touches_pin(spec, p)) continue;
    sum += map.raw[static_cast<std::size_t>(p)];
    ++count;
  }
  if (count == 0)
    throw std::invalid_argument("background: every plaquette touches a pin");
  return sum / count;
}

double analytic_background(double p, double n, double n_phi, double j) {
  return -2.0 * std::numbers::pi * p * n * n_phi * j;
}

std::optional<double> phase_law_residual(cplx corr, double n_phi) {
  if (std::abs(corr) < 1e-6) return std::nullopt;
  const double delta =
      std::arg(corr) - 0.5 * std::numbers::pi * n_phi;
  return std::abs(std::remainder(delta, std::numbers::pi));
}

double TwoSiteRDM::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

TwoSiteRDM two_site_rdm(const FockBasis& basis, StateGroup states, int s1,
                        int s2) {
  if (basis.n_max() != 1)
    throw std::invalid_argument(
        "two_site_rdm: defined for hard-core bases only");

  struct Item {
    std::uint64_t rest;
    int cls;  // 2*n_{s1} + n_{s2}
    cplx amp;
  };

  TwoSiteRDM rdm;
  std::vector<Item> items(basis.dim());
  for (const auto& psi : states) {
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      const std::uint64_t s = basis.state(i);
      const int cls = 2 * basis.occ(s, s1) + basis.occ(s, s2);
      const std::uint64_t rest =
          basis.with_occ(basis.with_occ(s, s1, 0), s2, 0);
      items[i] = {rest, cls, psi[static_cast<Eigen::Index>(i)]};
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      return a.rest != b.rest ? a.rest < b.rest : a.cls < b.cls;
    });
    std::size_t lo = 0;
    while (lo < items.size()) {
      std::size_t hi = lo;
      while (hi < items.size() && items[hi].rest == items[lo].rest) ++hi;
      for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = lo; j < hi; ++j)
          rdm.rho(items[i].cls, items[j].cls) +=
              items[i].amp * std::conj(items[j].amp);
      lo = hi;
    }
  }
  rdm.rho /= static_cast<double>(states.size());
  return rdm;
}

double concurrence(const TwoSiteRDM& rdm) {
  check_rdm(rdm);
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4cd m = rdm.rho * yy * rdm.rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(m, false);
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i)
    lambda[static_cast<std::size_t>(i)] =
        std::sqrt(std::max(0.0, es.eigenvalues()[i].real()));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double entanglement_of_formation(const TwoSiteRDM& rdm) {
  const double c = concurrence(rdm);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double state_overlap(const TwoSiteRDM& rdm, double phi) {
  // |Psi12> = (|10> + e^{i phi} |01>)/sqrt2, indices 2 and 1
  const cplx e = std::exp(cplx{0.0, phi});
  const cplx val = 0.5 * (rdm.rho(2, 2) + rdm.rho(1, 1) + e * rdm.rho(2, 1) +
                          std::conj(e) * rdm.rho(1, 2));
  return std::max(0.0, val.real());
}

double fidelity(const TwoSiteRDM& rdm, double phi) {
  return std::sqrt(state_overlap(rdm, phi));
}

ReadoutTrace raman_trace(const TwoSiteRDM& rdm, cplx omega_eff, double u,
                         std::span<const double> times) {
  // H' on |n1 n2>: hopping inside the {|01>,|10>} block; the U term acts
  // on n(n-1) which vanishes for hard-core occupancies.
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(2, 1) = -omega_eff;
  h(1, 2) = -std::conj(omega_eff);
  (void)u;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
  const Eigen::Matrix4cd w = es.eigenvectors();
  const Eigen::Vector4d ev = es.eigenvalues();
  const Eigen::Matrix4cd rho0 = w.adjoint() * rdm.rho * w;

  ReadoutTrace trace;
  trace.times.assign(times.begin(), times.end());
  trace.occupancy.reserve(times.size());
  for (double t : times) {
    Eigen::Vector4cd phase;
    for (int i = 0; i < 4; ++i) phase[i] = std::exp(cplx{0.0, -ev[i] * t});
    const Eigen::Matrix4cd rho_t =
        w * (phase.asDiagonal() * rho0 * phase.conjugate().asDiagonal()) *
        w.adjoint();
    // n1 = diag(0, 0, 1, 1)
    trace.occupancy.push_back((rho_t(2, 2) + rho_t(3, 3)).real());
  }
  return trace;
}

RamanFit raman_fit(std::span<const RamanSetting> settings) {
  if (settings.empty())
    throw std::invalid_argument("raman_fit: no settings supplied");

  // Per setting, the trace is 1/2 - A sin(2|Omega| t) with
  // A = v cos(theta') + u sin(theta'), (u, v) = r (cos phi', sin phi').
  Eigen::MatrixXd design(settings.size(), 2);
  Eigen::VectorXd amps(settings.size());
  for (std::size_t k = 0; k < settings.size(); ++k) {
    const auto& s = settings[k];
    const double omega = std::abs(s.omega_eff);
    const double theta = std::arg(s.omega_eff);
    if (s.trace.times.size() != s.trace.occupancy.size() ||
        s.trace.times.size() < 4)
      throw std::invalid_argument("raman_fit: malformed trace");
    const double span = s.trace.times.back() - s.trace.times.front();
    if (omega <= 0.0 || span * 2.0 * omega < 2.0 * std::numbers::pi)
      throw std::invalid_argument(
          "raman_fit: trace must span at least one oscillation period");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < s.trace.times.size(); ++i) {
      const double basis = std::sin(2.0 * omega * s.trace.times[i]);
      num += (0.5 - s.trace.occupancy[i]) * basis;
      den += basis * basis;
    }
    amps[static_cast<Eigen::Index>(k)] = den > 0.0 ? num / den : 0.0;
    design(static_cast<Eigen::Index>(k), 0) = std::sin(theta);
    design(static_cast<Eigen::Index>(k), 1) = std::cos(theta);
  }

  const auto svd =
      design.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV);
  RamanFit fit;
  const auto& sv = svd.singularValues();
  fit.identifiable = sv.size() >= 2 && sv.minCoeff() > 1e-9 * (1.0 + sv.maxCoeff());
  const Eigen::Vector2d uv = svd.solve(amps);
  fit.r = uv.norm();
  fit.phi_defined = fit.r > 1e-12 && fit.identifiable;
  fit.phi_prime = fit.phi_defined ? std::atan2(uv[1], uv[0]) : 0.0;

  double ss = 0.0;
  std::size_t n = 0;
  for (std::size_t k = 0; k < settings.size(); ++k) {
    const auto& s = settings[k];
    const double omega = std::abs(s.omega_eff);
    const double theta = std::arg(s.omega_eff);
    const double a = uv[1] * std::cos(theta) + uv[0] * std::sin(theta);
    for (std::size_t i = 0; i < s.trace.times.size(); ++i) {
      const double model = 0.5 - a * std::sin(2.0 * omega * s.trace.times[i]);
      const double d = model - s.trace.occupancy[i];
      ss += d * d;
      ++n;
    }
  }
  fit.rms = n > 0 ? std::sqrt(ss / static_cast<double>(n)) : 0.0;
  return fit;
}

double tomography_offdiag(const std::array<double, 4>& x, double purity) {
  double sum = 0.0, sum_sq = 0.0;
  for (double xi : x) {
    sum += xi;
    sum_sq += xi * xi;
  }
  if (std::abs(sum - 1.0) > 1e-8)
    throw std::invalid_argument("tomography: probabilities must sum to 1");
  const double radicand = purity - sum_sq;
  if (radicand < -1e-10)
    throw std::domain_error("tomography: purity inconsistent with diagonal");
  return std::sqrt(std::max(0.0, radicand));
}

ParityProjection parity_projection(const TwoSiteRDM& a, const TwoSiteRDM& b) {
  // joint state on (1, 2) x (1', 2') reordered to (1, 1', 2, 2'),
  // index = 8 n1 + 4 n1' + 2 n2 + n2'
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(16, 16);
  auto idx = [](int n1, int n1p, int n2, int n2p) {
    return 8 * n1 + 4 * n1p + 2 * n2 + n2p;
  };
  for (int n1 = 0; n1 < 2; ++n1)
    for (int n2 = 0; n2 < 2; ++n2)
      for (int m1 = 0; m1 < 2; ++m1)
        for (int m2 = 0; m2 < 2; ++m2)
          for (int p1 = 0; p1 < 2; ++p1)
            for (int p2 = 0; p2 < 2; ++p2)
              for (int q1 = 0; q1 < 2; ++q1)
                for (int q2 = 0; q2 < 2; ++q2)
                  rho(idx(n1, p1, n2, p2), idx(m1, q1, m2, q2)) =
                      a.rho(2 * n1 + n2, 2 * m1 + m2) *
                      b.rho(2 * p1 + p2, 2 * q1 + q2);

  ParityProjection out;
  out.even = Eigen::MatrixXcd::Zero(16, 16);
  out.odd = Eigen::MatrixXcd::Zero(16, 16);
  auto parity_even = [](int index) {
    return ((index >> 3 & 1) + (index >> 2 & 1)) % 2 == 0;
  };
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      if (parity_even(i) && parity_even(j)) out.even(i, j) = rho(i, j);
      if (!parity_even(i) && !parity_even(j)) out.odd(i, j) = rho(i, j);
    }
  out.p_even = out.even.trace().real();
  out.p_odd = out.odd.trace().real();
  if (out.p_even > 1e-15) out.even /= out.p_even;
  if (out.p_odd > 1e-15) out.odd /= out.p_odd;
  return out;
}

}  // namespace ved
