#include "ved/fock.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace ved {

FockBasis::FockBasis(int n_sites, int n_particles, int n_max,
                     std::size_t dim_limit)
    : n_sites_(n_sites), n_particles_(n_particles), n_max_(n_max) {
  if (n_sites < 1) throw std::invalid_argument("fock: n_sites must be >= 1");
  if (n_max < 1) throw std::invalid_argument("fock: n_max must be >= 1");
  if (n_particles < 0 || n_particles > n_max * n_sites)
    throw std::invalid_argument("fock: n_particles outside [0, n_max*n_sites]");

  bits_ = std::bit_width(static_cast<unsigned>(n_max_));
  mask_ = (std::uint64_t{1} << bits_) - 1;
  if (bits_ * n_sites_ > 64)
    throw CapacityError("fock: state does not fit in 64 bits (n_sites=" +
                        std::to_string(n_sites_) +
                        ", n_max=" + std::to_string(n_max_) + ")");

  counts_.assign(n_sites_ + 1,
                 std::vector<std::uint64_t>(n_particles_ + 1, 0));
  counts_[n_sites_][0] = 1;
  for (int s = n_sites_ - 1; s >= 0; --s) {
    for (int n = 0; n <= n_particles_; ++n) {
      std::uint64_t c = 0;
      for (int k = 0; k <= n_max_ && k <= n; ++k) c += counts_[s + 1][n - k];
      counts_[s][n] = c;
    }
  }

  const std::uint64_t dim = counts_[0][n_particles_];
  if (dim > dim_limit)
    throw CapacityError("fock: basis dimension " + std::to_string(dim) +
                        " exceeds limit " + std::to_string(dim_limit));

  states_.reserve(dim);
  std::uint64_t state = 0;
  // iterative lexicographic enumeration via per-site occupation counters
  std::vector<int> occ(n_sites_, 0);
  int site = 0, remaining = n_particles_;
  // emit(state) whenever a full assignment is reached
  while (true) {
    if (site == n_sites_) {
      states_.push_back(state);
      // backtrack to the last site whose occupation can still grow
      --site;
      while (site >= 0) {
        remaining += occ[site];
        state = with_occ(state, site, 0);
        if (occ[site] < n_max_ && remaining > occ[site]) break;
        occ[site] = 0;
        --site;
      }
      if (site < 0) break;
      ++occ[site];
      state = with_occ(state, site, occ[site]);
      remaining -= occ[site];
      ++site;
      continue;
    }
    // descend: smallest admissible occupation of `site` given the suffix
    int n0 = remaining - n_max_ * (n_sites_ - 1 - site);
    if (n0 < 0) n0 = 0;
    occ[site] = n0;
    state = with_occ(state, site, n0);
    remaining -= n0;
    ++site;
  }
}

std::size_t FockBasis::rank(std::uint64_t state) const {
  std::size_t r = 0;
  int remaining = n_particles_;
  for (int s = 0; s < n_sites_ && remaining > 0; ++s) {
    const int n = occ(state, s);
    for (int k = 0; k < n; ++k) r += counts_[s + 1][remaining - k];
    remaining -= n;
  }
  return r;
}

std::vector<int> FockBasis::occupations(std::uint64_t state) const {
  std::vector<int> out(n_sites_);
  for (int s = 0; s < n_sites_; ++s) out[s] = occ(state, s);
  return out;
}

std::uint64_t FockBasis::pack(std::span<const int> occupations) const {
  std::uint64_t state = 0;
  for (int s = 0; s < n_sites_; ++s) state = with_occ(state, s, occupations[s]);
  return state;
}

std::optional<HopResult> apply_hop(const FockBasis& basis, std::uint64_t state,
                                   int i, int j) {
  const int nj = basis.occ(state, j);
  if (nj == 0) return std::nullopt;
  const int ni = basis.occ(state, i);
  if (ni == basis.n_max()) return std::nullopt;
  std::uint64_t out = basis.with_occ(state, j, nj - 1);
  out = basis.with_occ(out, i, ni + 1);
  return HopResult{out, std::sqrt(static_cast<double>(nj) * (ni + 1))};
}

std::optional<HopResult> apply_raise(const FockBasis& basis,
                                     std::uint64_t state, int site) {
  const int n = basis.occ(state, site);
  if (n == basis.n_max()) return std::nullopt;
  return HopResult{basis.with_occ(state, site, n + 1),
                   std::sqrt(static_cast<double>(n + 1))};
}

std::optional<HopResult> apply_lower(const FockBasis& basis,
                                     std::uint64_t state, int site) {
  const int n = basis.occ(state, site);
  if (n == 0) return std::nullopt;
  return HopResult{basis.with_occ(state, site, n - 1),
                   std::sqrt(static_cast<double>(n))};
}

}  // namespace ved
