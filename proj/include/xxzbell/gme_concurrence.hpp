#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xxzbell/state.hpp"

namespace xxzbell {

// Split of the sites into alpha and its complement. Sites are 1-based.
struct Bipartition {
  std::vector<int> alpha;  // ascending
  bool canonical = false;

  std::uint32_t mask() const;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Canonical representative of {alpha, complement}: the smaller side, and for
// equal halves the one that is lexicographically smaller (contains site 1).
Bipartition canonical_bipartition(int n, std::uint32_t alpha_mask);

// All 2^(n-1) - 1 canonical bipartitions, ordered by |alpha| then
// lexicographically.
std::vector<Bipartition> enumerate_bipartitions(int n);

// Tr(rho_alpha^2) via the block structure of a fixed-weight state: only rows
// of A A^T with equal local weight on alpha can couple.
double reduced_purity(const SectorState& s, const Bipartition& part);

// Tr(rho_alpha^2) for an arbitrary real state given over all 2^n
// configurations.
double reduced_purity_dense(std::span<const double> amplitudes, int n,
                            const Bipartition& part);

struct PartitionEntropy {
  Bipartition part;
  double linear_entropy = 0.0;  // 1 - Tr(rho_alpha^2)
};

struct ConcurrenceResult {
  double value = 0.0;
  Bipartition minimizing_partition;
  std::vector<PartitionEntropy> per_partition;
};

// sqrt of the minimum linear entropy over all bipartitions. Entropies within
// 1e-12 of the minimum count as tied; the lexicographically smallest alpha
// among them is reported.
ConcurrenceResult gme_concurrence(const SectorState& s);

}  // namespace xxzbell
