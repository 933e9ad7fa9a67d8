#include "xxzbell/state.hpp"

#include <cmath>

namespace xxzbell {

std::vector<double> SectorState::to_dense() const {
  std::vector<double> dense(std::size_t{1} << basis.sites(), 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    dense[basis[i]] = amplitudes[i];
  }
  return dense;
}

SectorState dicke_state(int n, int k) {
  SectorBasis basis(n, k);
  const double amp = 1.0 / std::sqrt(static_cast<double>(basis.size()));
  std::vector<double> amps(basis.size(), amp);
  return SectorState{std::move(basis), std::move(amps)};
}

SectorState rotate_sites(const SectorState& s, int shift) {
  const int n = s.sites();
  shift = ((shift % n) + n) % n;
  const Config mask = (Config{1} << n) - 1;
  SectorState out{s.basis, std::vector<double>(s.basis.size(), 0.0)};
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    const Config c = s.basis[i];
    const Config rotated = ((c << shift) | (c >> (n - shift))) & mask;
    out.amplitudes[s.basis.rank(rotated)] = s.amplitudes[i];
  }
  return out;
}

}  // namespace xxzbell
