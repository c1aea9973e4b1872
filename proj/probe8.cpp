// scratch -- dissect the perturbative sum
#include <cstdio>

#include "ved/eig.hpp"
#include "ved/fock.hpp"
#include "ved/hamiltonian.hpp"
#include "ved/perturb.hpp"

using namespace ved;
using Eigen::VectorXcd;

int main() {
  LatticeSpec s;
  s.n_phi = 0.5;
  s.j_pin = 1e-2;

  // rebuild the internals by hand
  std::vector<int> rest;
  std::vector<int> g2l(16, -1);
  for (int q = 0; q < 16; ++q)
    if (!s.is_pin_site(q)) {
      g2l[q] = (int)rest.size();
      rest.push_back(q);
    }
  std::vector<Bond> rb, pb;
  for (const Bond& b : build_bonds(s)) {
    const bool fp = s.is_pin_site(b.from), tp = s.is_pin_site(b.to);
    if (fp || tp) {
      pb.push_back(b);
    } else {
      Bond l = b;
      l.from = g2l[b.from];
      l.to = g2l[b.to];
      rb.push_back(l);
    }
  }
  FockBasis b7(14, 7, 1), b8(14, 8, 1), b6(14, 6, 1);
  auto h7 = build_on_bonds(rb, {}, b7);
  auto h8 = build_on_bonds(rb, {}, b8);
  auto h6 = build_on_bonds(rb, {}, b6);
  LanczosOptions o;
  o.k = 4;
  auto s7 = lowest(h7, o), s8 = lowest(h8, o), s6 = lowest(h6, o);
  std::printf("E7 = %.6f %.6f | E8 = %.6f %.6f | E6 = %.6f %.6f\n",
              s7.energies[0], s7.energies[1], s8.energies[0], s8.energies[1],
              s6.energies[0], s6.energies[1]);
  const VectorXcd& psi = s7.vectors[0];

  auto transfer = [&](const FockBasis& from, const FockBasis& to,
                      const VectorXcd& v, int pin, bool lower) {
    VectorXcd out = VectorXcd::Zero((Eigen::Index)to.dim());
    for (const Bond& b : pb) {
      if (b.from != pin && b.to != pin) continue;
      const int r = g2l[b.from == pin ? b.to : b.from];
      cplx coeff;
      if (lower)
        coeff = (b.from == pin) ? -b.strength * std::exp(cplx{0, -b.phase})
                                : -b.strength * std::exp(cplx{0, b.phase});
      else
        coeff = (b.from == pin) ? -b.strength * std::exp(cplx{0, b.phase})
                                : -b.strength * std::exp(cplx{0, -b.phase});
      for (std::size_t i = 0; i < from.dim(); ++i) {
        const auto hop = lower ? apply_raise(from, from.state(i), r)
                               : apply_lower(from, from.state(i), r);
        if (!hop) continue;
        out[(Eigen::Index)to.rank(hop->state)] +=
            coeff * hop->amplitude * v[(Eigen::Index)i];
      }
    }
    return out;
  };

  const int p1 = s.pin_sites[0], p2 = s.pin_sites[1];
  VectorXcd w1_8 = transfer(b7, b8, psi, p1, true);   // <8|V|1~>
  VectorXcd w0_8 = transfer(b7, b8, psi, p2, true);   // <8|V|0~>
  VectorXcd w1_6 = transfer(b7, b6, psi, p2, false);  // <6|V|1~>
  VectorXcd w0_6 = transfer(b7, b6, psi, p1, false);  // <6|V|0~>

  const double delta = s8.energies[0] - s7.energies[0];
  const cplx u1 = s8.vectors[0].dot(w1_8), u0 = s8.vectors[0].dot(w0_8);
  const cplx v1 = s6.vectors[0].dot(w1_6), v0 = s6.vectors[0].dot(w0_6);
  std::printf("delta = %.6f\n", delta);
  std::printf("m8: |u1| = %.6e, |u0| = %.6e\n", std::abs(u1), std::abs(u0));
  std::printf("m6: |v1| = %.6e, |v0| = %.6e\n", std::abs(v1), std::abs(v0));

  auto bloch = [&](cplx h00, cplx h01, cplx h11, const char* tag) {
    const double r0 = -0.5 * (h00.real() + h11.real());
    const double rz = -0.5 * (h00.real() - h11.real());
    const double rx = -h01.real(), ry = h01.imag();
    std::printf("%s: R = (%.4f, %.4f, %.4f, %.4f) 1e-4, phi = %.4f\n", tag,
                r0 * 1e4, rx * 1e4, ry * 1e4, rz * 1e4, std::atan2(ry, rx));
  };
  // m8 ground only
  bloch(-std::norm(u1) / delta, -std::conj(u1) * u0 / delta,
        -std::norm(u0) / delta, "m8 only");
  // m6 ground only
  bloch(-std::norm(v1) / delta, -std::conj(v1) * v0 / delta,
        -std::norm(v0) / delta, "m6 only");
  // both
  bloch(-(std::norm(u1) + std::norm(v1)) / delta,
        -(std::conj(u1) * u0 + std::conj(v1) * v0) / delta,
        -(std::norm(u0) + std::norm(v0)) / delta, "both");

  // more multiplets via the module
  for (int n : {1, 2, 3, 4, 6}) {
    auto b = effective_hamiltonian(s, n);
    std::printf("n_int=%d: R=(%.4f, %.4f, %.4f, %.4f) 1e-4 phi=%.4f theta=%.4f\n",
                n, b.r0 * 1e4, b.rx * 1e4, b.ry * 1e4, b.rz * 1e4, b.phi,
                b.theta);
  }
  return 0;
}
