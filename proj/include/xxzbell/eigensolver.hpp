#pragma once

#include <utility>
#include <vector>

#include "xxzbell/hamiltonian.hpp"
#include "xxzbell/state.hpp"

namespace xxzbell {

struct SectorGround {
  double energy = 0.0;
  std::vector<double> vector;
  double residual = 0.0;  // ||H v - E v||_inf
};

// Lowest eigenpair of a symmetric sector block. The eigenvector is unit norm
// with its largest-magnitude component positive (first index on ties).
// Throws NumericalError if the residual exceeds 1e-10 * max(1, |E|).
SectorGround sector_ground(const DenseMatrix& m);
inline SectorGround sector_ground(const SectorMatrix& m) {
  return sector_ground(m.entries);
}

struct GroundState {
  SectorState state;
  double energy = 0.0;
  bool degenerate = false;
  double gap = 0.0;  // runner-up sector minimum minus energy

  int sites() const noexcept { return state.sites(); }
  int sector() const noexcept { return state.excitations(); }
};

// Relative energy window inside which two sector minima count as tied.
double degeneracy_tolerance(double energy);

// Zero-field sector ground states for one (n, jx). The field term commutes
// with the rest of H and shifts sector k by b (n/2 - k), so this one
// decomposition answers global_ground for every b.
class SectorGrounds {
 public:
  explicit SectorGrounds(const ChainParams& p);

  int sites() const noexcept { return n_; }
  double exchange() const noexcept { return jx_; }
  double sector_energy(int k, double b) const;
  GroundState ground_at(double b) const;
  int sector_at(double b) const;

 private:
  int n_;
  double jx_;
  std::vector<SectorBasis> bases_;
  std::vector<SectorGround> zero_field_;
};

GroundState global_ground(const ChainParams& p);

// (Jz - Jx, (n-3)(Jz - Jx)/(n-1)): field interval with a k = 1 ground state.
std::pair<double, double> sector_window_k1(const ChainParams& p);

// Bisection on the global ground-state sector between b_lo (sector k_left)
// and b_hi (sector k_right), to 1e-10 absolute.
double locate_boundary(const ChainParams& p, int k_left, int k_right,
                       double b_lo, double b_hi);

struct SectorBoundary {
  int k_left = 0;
  int k_right = 0;
  double b = 0.0;
};

// Every ground-sector change in [b_min, b_max]: a uniform pre-scan of
// scan_points fields, each change refined by bisection.
std::vector<SectorBoundary> find_boundaries(const ChainParams& p, double b_min,
                                            double b_max,
                                            int scan_points = 401);

}  // namespace xxzbell
