#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ved {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Occupation-number basis of a fixed total-particle sector, ordered
// lexicographically in (n_0, n_1, ..., n_{sites-1}). States are packed
// into 64-bit words, site 0 in the lowest bits; ranking uses memoized
// suffix counts (the combinatorial number system when n_max = 1).
class FockBasis {
 public:
  FockBasis(int n_sites, int n_particles, int n_max,
            std::size_t dim_limit = kDefaultDimLimit);

  static constexpr std::size_t kDefaultDimLimit = 4'000'000;

  int n_sites() const { return n_sites_; }
  int n_particles() const { return n_particles_; }
  int n_max() const { return n_max_; }
  std::size_t dim() const { return states_.size(); }
  std::uint64_t state(std::size_t index) const { return states_[index]; }
  std::span<const std::uint64_t> states() const { return states_; }

  int occ(std::uint64_t state, int site) const {
    return static_cast<int>((state >> (bits_ * site)) & mask_);
  }
  std::uint64_t with_occ(std::uint64_t state, int site, int n) const {
    const int shift = bits_ * site;
    return (state & ~(mask_ << shift)) |
           (static_cast<std::uint64_t>(n) << shift);
  }

  std::size_t rank(std::uint64_t state) const;
  std::vector<int> occupations(std::uint64_t state) const;
  std::uint64_t pack(std::span<const int> occupations) const;

 private:
  int n_sites_;
  int n_particles_;
  int n_max_;
  int bits_;
  std::uint64_t mask_;
  std::vector<std::uint64_t> states_;
  // counts_[s][n] = number of states of sites s..n_sites-1 holding n bosons
  std::vector<std::vector<std::uint64_t>> counts_;
};

struct HopResult {
  std::uint64_t state;
  double amplitude;
};

// a^dag_i a_j on a basis state; null when n_j = 0 or n_i = n_max.
std::optional<HopResult> apply_hop(const FockBasis& basis,
                                   std::uint64_t state, int i, int j);

// a^dag_site; null when n_site = n_max. The result lives in the basis
// with one more particle.
std::optional<HopResult> apply_raise(const FockBasis& basis,
                                     std::uint64_t state, int site);

// a_site; null when n_site = 0. The result lives in the basis with one
// fewer particle.
std::optional<HopResult> apply_lower(const FockBasis& basis,
                                     std::uint64_t state, int site);

}  // namespace ved
