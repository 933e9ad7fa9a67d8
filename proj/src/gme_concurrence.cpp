#include "xxzbell/gme_concurrence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "xxzbell/errors.hpp"

namespace xxzbell {

namespace {

std::vector<int> sites_of(std::uint32_t mask, int n) {
  std::vector<int> sites;
  for (int j = 0; j < n; ++j) {
    if ((mask >> j) & 1U) sites.push_back(j + 1);
  }
  return sites;
}

void check_part(const Bipartition& part, int n) {
  const std::uint32_t m = part.mask();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  if (m == 0 || (m & ~full) != 0 || m == full) {
    throw DomainError("bipartition is not a nonempty proper subset of " +
                      std::to_string(n) + " sites");
  }
}

// Bit positions of alpha (rows) and of its complement (columns).
struct Split {
  std::vector<int> row_sites;
  std::vector<int> col_sites;
};

Split split_for(const Bipartition& part, int n) {
  Split s;
  const std::uint32_t m = part.mask();
  for (int j = 0; j < n; ++j) {
    ((m >> j) & 1U ? s.row_sites : s.col_sites).push_back(j);
  }
  // Contract over the larger side so A A^T stays the smaller square.
  if (s.row_sites.size() > s.col_sites.size()) std::swap(s.row_sites, s.col_sites);
  return s;
}

std::uint32_t gather(Config c, const std::vector<int>& sites) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    out |= ((c >> sites[i]) & 1U) << i;
  }
  return out;
}

// Sum of squares of A A^T where A is rows x cols (row-major); `couple`
// restricts which row pairs are evaluated (others are known zero).
template <class Couple>
double gram_frobenius_sq(const std::vector<double>& a, std::size_t rows,
                         std::size_t cols, Couple couple) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = i; k < rows; ++k) {
      if (!couple(i, k)) continue;
      double dot = 0.0;
      for (std::size_t j = 0; j < cols; ++j) dot += a[i * cols + j] * a[k * cols + j];
      sum += (i == k ? 1.0 : 2.0) * dot * dot;
    }
  }
  return sum;
}

}  // namespace

std::uint32_t Bipartition::mask() const {
  std::uint32_t m = 0;
  for (int site : alpha) m |= std::uint32_t{1} << (site - 1);
  return m;
}

Bipartition canonical_bipartition(int n, std::uint32_t alpha_mask) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  alpha_mask &= full;
  if (alpha_mask == 0 || alpha_mask == full) {
    throw DomainError("bipartition is not a nonempty proper subset");
  }
  const std::uint32_t comp = full & ~alpha_mask;
  const int wa = std::popcount(alpha_mask);
  const int wc = std::popcount(comp);
  std::uint32_t pick = alpha_mask;
  if (wc < wa) {
    pick = comp;
  } else if (wc == wa && sites_of(comp, n) < sites_of(alpha_mask, n)) {
    pick = comp;
  }
  return Bipartition{sites_of(pick, n), true};
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 2 || n > 20) {
    throw DomainError("bipartitions need 2 <= n <= 20, got n=" + std::to_string(n));
  }
  std::vector<Bipartition> out;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (int m = 1; m <= n / 2; ++m) {
    std::vector<Bipartition> level;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      if (std::popcount(mask) != m) continue;
      Bipartition c = canonical_bipartition(n, mask);
      if (c.mask() == mask) level.push_back(std::move(c));
    }
    std::sort(level.begin(), level.end(),
              [](const Bipartition& x, const Bipartition& y) { return x.alpha < y.alpha; });
    for (auto& p : level) out.push_back(std::move(p));
  }
  return out;
}

double reduced_purity_dense(std::span<const double> amplitudes, int n,
                            const Bipartition& part) {
  if (amplitudes.size() != (std::size_t{1} << n)) {
    throw DomainError("dense state length does not match 2^n");
  }
  check_part(part, n);
  const Split s = split_for(part, n);
  const std::size_t rows = std::size_t{1} << s.row_sites.size();
  const std::size_t cols = std::size_t{1} << s.col_sites.size();
  std::vector<double> a(rows * cols, 0.0);
  for (std::size_t c = 0; c < amplitudes.size(); ++c) {
    const auto cfg = static_cast<Config>(c);
    a[gather(cfg, s.row_sites) * cols + gather(cfg, s.col_sites)] = amplitudes[c];
  }
  return gram_frobenius_sq(a, rows, cols, [](std::size_t, std::size_t) { return true; });
}

double reduced_purity(const SectorState& s, const Bipartition& part) {
  const int n = s.sites();
  check_part(part, n);
  const Split sp = split_for(part, n);
  const std::size_t rows = std::size_t{1} << sp.row_sites.size();
  const std::size_t cols = std::size_t{1} << sp.col_sites.size();
  std::vector<double> a(rows * cols, 0.0);
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    const Config c = s.basis[i];
    a[gather(c, sp.row_sites) * cols + gather(c, sp.col_sites)] = s.amplitudes[i];
  }
  return gram_frobenius_sq(a, rows, cols, [](std::size_t i, std::size_t k) {
    return std::popcount(i) == std::popcount(k);
  });
}

ConcurrenceResult gme_concurrence(const SectorState& s) {
  const int n = s.sites();
  ConcurrenceResult out;
  double lowest = 2.0;
  for (Bipartition& part : enumerate_bipartitions(n)) {
    const double entropy = std::clamp(1.0 - reduced_purity(s, part), 0.0, 1.0);
    lowest = std::min(lowest, entropy);
    out.per_partition.push_back({std::move(part), entropy});
  }
  const PartitionEntropy* pick = nullptr;
  for (const auto& e : out.per_partition) {
    if (e.linear_entropy > lowest + 1e-12) continue;
    if (pick == nullptr || e.part.alpha < pick->part.alpha) pick = &e;
  }
  out.minimizing_partition = pick->part;
  out.value = std::sqrt(lowest);
  return out;
}

}  // namespace xxzbell
