#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace xxzbell {

// One n-bit spin configuration. Site j (1-based) lives in bit j-1; a set bit
// is a flipped (S^z = -1/2) spin.
using Config = std::uint32_t;

inline constexpr int kMinSites = 3;
inline constexpr int kMaxSites = 12;

// Throws DomainError unless kMinSites <= n <= kMaxSites.
void require_ed_sites(int n);

std::uint64_t binomial(int n, int k);

// Fixed-magnetization subspace: all n-bit configurations with exactly k set
// bits, in strictly ascending integer order.
class SectorBasis {
 public:
  SectorBasis(int n, int k);

  int sites() const noexcept { return n_; }
  int excitations() const noexcept { return k_; }
  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<Config>& states() const noexcept { return states_; }
  Config operator[](std::size_t i) const { return states_[i]; }

  // Position of `state` in states(); combinatorial number system, O(n).
  std::size_t rank(Config state) const;

 private:
  int n_;
  int k_;
  std::vector<Config> states_;
};

inline SectorBasis enumerate_sector(int n, int k) { return SectorBasis(n, k); }

// Periodic nearest-neighbour bonds (1,2),...,(n-1,n),(n,1), 1-based.
std::vector<std::pair<int, int>> neighbor_pairs(int n);

}  // namespace xxzbell
