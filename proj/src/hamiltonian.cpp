#include "xxzbell/hamiltonian.hpp"

#include <atomic>
#include <iostream>
#include <string>

#include "xxzbell/errors.hpp"

namespace xxzbell {

namespace {

std::atomic<bool> regime_warning_issued{false};

// Configuration reached by exchanging the spins on a bond, or the input
// itself when both spins agree.
Config flip_flop(Config state, int site_a, int site_b) {
  const Config mask = (Config{1} << (site_a - 1)) | (Config{1} << (site_b - 1));
  const Config pair = state & mask;
  if (pair == 0 || pair == mask) return state;
  return state ^ mask;
}

}  // namespace

void validate(const ChainParams& p) {
  require_ed_sites(p.n);
  if (p.jz != 1.0) {
    throw DomainError("jz must be 1 (energy unit), got " +
                      std::to_string(p.jz));
  }
}

ChainParams ChainParams::make(int n, double jx, double b) {
  ChainParams p{n, jx, 1.0, b};
  validate(p);
  if (!p.in_ferromagnetic_regime() && !regime_warning_issued.exchange(true)) {
    std::cerr << "warning: jx=" << jx
              << " lies outside the ferromagnetic regime jx > jz > 0\n";
  }
  return p;
}

double diagonal_energy(Config state, const ChainParams& p) {
  double zz = 0.0;
  double field = 0.0;
  for (int j = 0; j < p.n; ++j) {
    const int next = (j + 1) % p.n;
    const double sj = ((state >> j) & 1U) ? -1.0 : 1.0;
    const double sn = ((state >> next) & 1U) ? -1.0 : 1.0;
    zz += sj * sn;
    field += sj;
  }
  return -p.jz * zz / 4.0 + p.b * field / 2.0;
}

SectorMatrix build_sector(const ChainParams& p, int k) {
  validate(p);
  SectorBasis basis(p.n, k);
  DenseMatrix m(basis.size());
  const auto bonds = neighbor_pairs(p.n);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const Config s = basis[r];
    m(r, r) = diagonal_energy(s, p);
    for (const auto& [a, b] : bonds) {
      const Config t = flip_flop(s, a, b);
      if (t == s) continue;
      const std::size_t c = basis.rank(t);
      // Each unordered pair is visited from both ends; write once from the
      // lower index so both triangles hold the identical value.
      if (c > r) {
        m(r, c) = -p.jx / 2.0;
        m(c, r) = -p.jx / 2.0;
      }
    }
  }
  return SectorMatrix{std::move(basis), std::move(m)};
}

DenseMatrix build_full(const ChainParams& p) {
  validate(p);
  if (p.n > kMaxFullSites) {
    throw CapabilityError("full Hilbert-space matrix limited to n <= " +
                          std::to_string(kMaxFullSites) + ", got n=" +
                          std::to_string(p.n));
  }
  const std::size_t dim = std::size_t{1} << p.n;
  DenseMatrix m(dim);
  const auto bonds = neighbor_pairs(p.n);
  for (std::size_t s = 0; s < dim; ++s) {
    const auto cs = static_cast<Config>(s);
    m(s, s) = diagonal_energy(cs, p);
    for (const auto& [a, b] : bonds) {
      const Config t = flip_flop(cs, a, b);
      if (t != cs) m(s, t) = -p.jx / 2.0;
    }
  }
  return m;
}

}  // namespace xxzbell
