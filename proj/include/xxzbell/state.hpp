#pragma once

#include <vector>

#include "xxzbell/sector_basis.hpp"

namespace xxzbell {

// Real pure state supported on a single magnetization sector. amplitudes[i]
// multiplies basis[i].
struct SectorState {
  SectorBasis basis;
  std::vector<double> amplitudes;

  int sites() const noexcept { return basis.sites(); }
  int excitations() const noexcept { return basis.excitations(); }

  // Amplitudes over all 2^n configurations, indexed by Config.
  std::vector<double> to_dense() const;
};

// Uniform superposition of every weight-k configuration.
SectorState dicke_state(int n, int k);

// Cyclic relabelling j -> j + shift (mod n) of the sites.
SectorState rotate_sites(const SectorState& s, int shift);

}  // namespace xxzbell
