#include "xxzbell/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "xxzbell/errors.hpp"
#include "xxzbell/jacobi.hpp"

namespace xxzbell {

namespace {

double residual_inf(const DenseMatrix& m, const std::vector<double>& v,
                    double e) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto row = m.row(i);
    double acc = -e * v[i];
    for (std::size_t j = 0; j < m.dim(); ++j) acc += row[j] * v[j];
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

void fix_sign(std::vector<double>& v) {
  double largest = 0.0;
  for (double x : v) largest = std::max(largest, std::abs(x));
  // First index within rounding of the largest magnitude.
  const double cutoff = largest - 1e-12;
  for (double x : v) {
    if (std::abs(x) >= cutoff) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

}  // namespace

SectorGround sector_ground(const DenseMatrix& m) {
  if (m.dim() == 0) throw DomainError("empty sector matrix");
  if (!m.is_symmetric()) throw DomainError("sector matrix is not symmetric");

  const EigenSystem eig = jacobi_eigensystem(m);
  const auto lowest = static_cast<std::size_t>(
      std::min_element(eig.values.begin(), eig.values.end()) -
      eig.values.begin());

  SectorGround g;
  g.energy = eig.values[lowest];
  const auto row = eig.vectors.row(lowest);
  g.vector.assign(row.begin(), row.end());
  double norm = 0.0;
  for (double x : g.vector) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : g.vector) x /= norm;
  fix_sign(g.vector);

  g.residual = residual_inf(m, g.vector, g.energy);
  const double bound = 1e-10 * std::max(1.0, std::abs(g.energy));
  if (g.residual > bound) {
    std::ostringstream msg;
    msg << "Jacobi eigensolver residual " << g.residual << " exceeds "
        << bound << " after " << eig.sweeps << " sweeps";
    throw NumericalError(msg.str(), g.residual);
  }
  return g;
}

double degeneracy_tolerance(double energy) {
  return 1e-9 * std::max(1.0, std::abs(energy));
}

SectorGrounds::SectorGrounds(const ChainParams& p) : n_(p.n), jx_(p.jx) {
  validate(p);
  const ChainParams zero_field = p.with_field(0.0);
  bases_.reserve(n_ + 1);
  zero_field_.reserve(n_ + 1);
  for (int k = 0; k <= n_; ++k) {
    SectorMatrix m = build_sector(zero_field, k);
    zero_field_.push_back(sector_ground(m));
    bases_.push_back(std::move(m.basis));
  }
}

double SectorGrounds::sector_energy(int k, double b) const {
  return zero_field_.at(k).energy + b * (n_ / 2.0 - k);
}

int SectorGrounds::sector_at(double b) const {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= n_; ++k) best = std::min(best, sector_energy(k, b));
  const double tol = degeneracy_tolerance(best);
  for (int k = 0; k <= n_; ++k) {
    if (sector_energy(k, b) <= best + tol) return k;
  }
  return 0;
}

GroundState SectorGrounds::ground_at(double b) const {
  std::vector<double> energies(n_ + 1);
  for (int k = 0; k <= n_; ++k) energies[k] = sector_energy(k, b);
  const double best = *std::min_element(energies.begin(), energies.end());
  const double tol = degeneracy_tolerance(best);

  int chosen = -1;
  int ties = 0;
  for (int k = 0; k <= n_; ++k) {
    if (energies[k] <= best + tol) {
      if (chosen < 0) chosen = k;
      ++ties;
    }
  }
  double runner_up = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= n_; ++k) {
    if (k != chosen) runner_up = std::min(runner_up, energies[k]);
  }

  GroundState g{SectorState{bases_[chosen], zero_field_[chosen].vector},
                energies[chosen], ties > 1, runner_up - energies[chosen]};
  return g;
}

GroundState global_ground(const ChainParams& p) {
  return SectorGrounds(p).ground_at(p.b);
}

std::pair<double, double> sector_window_k1(const ChainParams& p) {
  if (!(p.jx > p.jz)) {
    throw DomainError("k=1 window requires jx > jz, got jx=" +
                      std::to_string(p.jx));
  }
  const double low = p.jz - p.jx;
  const double high = (p.n - 3) * (p.jz - p.jx) / (p.n - 1);
  return {low, high};
}

namespace {

double bisect(const SectorGrounds& grounds, int k_left, int k_right,
              double b_lo, double b_hi) {
  if (k_left == k_right) {
    throw BracketError("bracket endpoints share sector k=" +
                       std::to_string(k_left));
  }
  const int at_lo = grounds.sector_at(b_lo);
  const int at_hi = grounds.sector_at(b_hi);
  if (at_lo != k_left || at_hi != k_right) {
    std::ostringstream msg;
    msg << "bracket [" << b_lo << ", " << b_hi << "] has sectors (" << at_lo
        << ", " << at_hi << "), expected (" << k_left << ", " << k_right
        << ")";
    throw BracketError(msg.str());
  }
  double lo = b_lo;
  double hi = b_hi;
  for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (grounds.sector_at(mid) == k_left) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double locate_boundary(const ChainParams& p, int k_left, int k_right,
                       double b_lo, double b_hi) {
  return bisect(SectorGrounds(p), k_left, k_right, b_lo, b_hi);
}

std::vector<SectorBoundary> find_boundaries(const ChainParams& p, double b_min,
                                            double b_max, int scan_points) {
  if (!(b_min < b_max) || scan_points < 2) {
    throw DomainError("boundary scan needs b_min < b_max and >= 2 points");
  }
  const SectorGrounds grounds(p);
  std::vector<SectorBoundary> out;
  double prev_b = b_min;
  int prev_k = grounds.sector_at(prev_b);
  for (int i = 1; i < scan_points; ++i) {
    const double b =
        (i == scan_points - 1)
            ? b_max
            : b_min + (b_max - b_min) * i / (scan_points - 1);
    const int k = grounds.sector_at(b);
    if (k != prev_k) {
      out.push_back({prev_k, k, bisect(grounds, prev_k, k, prev_b, b)});
    }
    prev_b = b;
    prev_k = k;
  }
  return out;
}

}  // namespace xxzbell
