#pragma once

#include "xxzbell/dense_matrix.hpp"
#include "xxzbell/sector_basis.hpp"

namespace xxzbell {

// One instance of the periodic XXZ ring in units of the z-exchange:
//   H = -jx sum (SxSx + SySy) - jz sum SzSz + b sum Sz,  jz == 1.
struct ChainParams {
  int n = 6;
  double jx = 2.0;
  double jz = 1.0;
  double b = 0.0;

  // Validates n and jz; prints a warning to stderr (once per process) when
  // jx > jz > 0 does not hold.
  static ChainParams make(int n, double jx, double b);

  bool in_ferromagnetic_regime() const noexcept { return jx > jz && jz > 0; }
  ChainParams with_field(double field) const {
    ChainParams p = *this;
    p.b = field;
    return p;
  }
  ChainParams with_exchange(double exchange) const {
    ChainParams p = *this;
    p.jx = exchange;
    return p;
  }
};

// Throws DomainError for n outside the exact-diagonalisation range or jz != 1.
void validate(const ChainParams& p);

// Hamiltonian block on one magnetization sector.
struct SectorMatrix {
  SectorBasis basis;
  DenseMatrix entries;
};

// Ising plus field part of H for a basis configuration of p.n sites.
double diagonal_energy(Config state, const ChainParams& p);

SectorMatrix build_sector(const ChainParams& p, int k);

inline constexpr int kMaxFullSites = 8;

// Whole 2^n matrix in the computational basis; n <= kMaxFullSites.
DenseMatrix build_full(const ChainParams& p);

}  // namespace xxzbell
