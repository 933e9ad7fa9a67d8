#include "xxzbell/sector_basis.hpp"

#include <bit>
#include <string>

#include "xxzbell/errors.hpp"

namespace xxzbell {

void require_ed_sites(int n) {
  if (n < kMinSites || n > kMaxSites) {
    throw DomainError("site count n=" + std::to_string(n) + " outside [" +
                      std::to_string(kMinSites) + ", " +
                      std::to_string(kMaxSites) + "]");
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / i;
  }
  return result;
}

SectorBasis::SectorBasis(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > 31) {
    throw DomainError("site count n=" + std::to_string(n) + " unsupported");
  }
  if (k < 0 || k > n) {
    throw DomainError("excitation number k=" + std::to_string(k) +
                      " outside [0, n] for n=" + std::to_string(n));
  }
  states_.reserve(binomial(n, k));
  if (k == 0) {
    states_.push_back(0);
    return;
  }
  // Gosper's hack: next larger integer with the same popcount.
  const Config limit = Config{1} << n;
  Config v = (Config{1} << k) - 1;
  while (v < limit) {
    states_.push_back(v);
    const Config t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
}

std::size_t SectorBasis::rank(Config state) const {
  if (std::popcount(state) != k_ || (n_ < 32 && (state >> n_) != 0)) {
    throw DomainError("configuration " + std::to_string(state) +
                      " does not belong to sector k=" + std::to_string(k_) +
                      " of n=" + std::to_string(n_));
  }
  std::size_t r = 0;
  int i = 1;
  for (int pos = 0; pos < n_; ++pos) {
    if ((state >> pos) & 1U) {
      r += binomial(pos, i);
      ++i;
    }
  }
  return r;
}

std::vector<std::pair<int, int>> neighbor_pairs(int n) {
  if (n < kMinSites) {
    throw DomainError("periodic chain needs n >= 3, got n=" +
                      std::to_string(n));
  }
  std::vector<std::pair<int, int>> bonds;
  bonds.reserve(n);
  for (int j = 1; j <= n; ++j) bonds.emplace_back(j, j % n + 1);
  return bonds;
}

}  // namespace xxzbell
