#include <doctest.h>

#include <algorithm>

#include "../oracles/spin_oracle.hpp"
#include "xxzbell/eigensolver.hpp"
#include "xxzbell/errors.hpp"
#include "xxzbell/hamiltonian.hpp"
#include "xxzbell/jacobi.hpp"

using namespace xxzbell;
using doctest::Approx;

namespace {

std::vector<double> sorted_spectrum(const DenseMatrix& m) {
  auto values = jacobi_eigensystem(m).values;
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

TEST_CASE("diagonal_energy of simple configurations") {
  for (double b : {-1.3, 0.0, 0.7}) {
    const ChainParams p{3, 2.0, 1.0, b};
    CHECK(diagonal_energy(0b000, p) == Approx(-0.75 + 1.5 * b).epsilon(1e-15));
    CHECK(diagonal_energy(0b001, p) == Approx(0.25 + 0.5 * b).epsilon(1e-15));
    CHECK(diagonal_energy(0b111, p) == Approx(-0.75 - 1.5 * b).epsilon(1e-15));
  }
}

TEST_CASE("n=3 single-excitation block") {
  const double b = -0.8, jx = 2.0;
  const SectorMatrix m = build_sector({3, jx, 1.0, b}, 1);
  REQUIRE(m.entries.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const double expected = (i == j) ? 0.25 + b / 2 : -jx / 2;
      CHECK(m.entries(i, j) == Approx(expected).epsilon(1e-15));
    }
  }
}

TEST_CASE("k=0 block is a single diagonal entry") {
  for (int n = 3; n <= 12; ++n) {
    const ChainParams p{n, 2.5, 1.0, 0.3};
    const SectorMatrix m = build_sector(p, 0);
    REQUIRE(m.entries.dim() == 1);
    CHECK(m.entries(0, 0) == Approx(-n / 4.0 + n * 0.3 / 2).epsilon(1e-14));
  }
}

TEST_CASE("n=4 single excitation hops on a 4-cycle") {
  const SectorMatrix m = build_sector({4, 1.7, 1.0, 0.0}, 1);
  // Basis 0001, 0010, 0100, 1000: site j neighbours j+-1 modulo 4.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      const bool adjacent = (i + 1) % 4 == j || (j + 1) % 4 == i;
      CHECK(m.entries(i, j) == (adjacent ? -0.85 : 0.0));
    }
  }
}

TEST_CASE("sector blocks are exactly symmetric with entries 0 or -jx/2") {
  for (int n : {3, 6, 9}) {
    const ChainParams p{n, 2.3, 1.0, -0.4};
    for (int k = 0; k <= n; ++k) {
      const SectorMatrix m = build_sector(p, k);
      CHECK(m.entries.is_symmetric());
      for (std::size_t i = 0; i < m.entries.dim(); ++i) {
        CHECK(m.entries(i, i) == diagonal_energy(m.basis[i], p));
        for (std::size_t j = 0; j < m.entries.dim(); ++j) {
          if (i != j) CHECK((m.entries(i, j) == 0.0 || m.entries(i, j) == -1.15));
        }
      }
    }
  }
}

TEST_CASE("full matrix matches the Kronecker-product oracle and its blocks") {
  for (int n : {3, 4, 6}) {
    const ChainParams p{n, 2.0, 1.0, -0.35};
    const DenseMatrix full = build_full(p);
    const Eigen::MatrixXd ref = oracle::xxz_hamiltonian(n, p.jx, p.jz, p.b);
    for (std::size_t i = 0; i < full.dim(); ++i) {
      for (std::size_t j = 0; j < full.dim(); ++j) {
        CHECK(full(i, j) == Approx(ref(i, j)).epsilon(1e-14).scale(1.0));
      }
    }
    for (int k = 0; k <= n; ++k) {
      const SectorMatrix m = build_sector(p, k);
      for (std::size_t i = 0; i < m.basis.size(); ++i) {
        for (std::size_t j = 0; j < m.basis.size(); ++j) {
          CHECK(m.entries(i, j) == full(m.basis[i], m.basis[j]));
        }
      }
    }
  }
}

TEST_CASE("jx = 0 gives a diagonal full matrix") {
  const DenseMatrix full = build_full({3, 0.0, 1.0, 0.2});
  for (std::size_t i = 0; i < full.dim(); ++i)
    for (std::size_t j = 0; j < full.dim(); ++j)
      if (i != j) CHECK(full(i, j) == 0.0);
}

TEST_CASE("build_full refuses n > 8") {
  CHECK_THROWS_AS(build_full({9, 2.0, 1.0, 0.0}), CapabilityError);
  CHECK_NOTHROW(build_full({8, 2.0, 1.0, 0.0}));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_sector({6, 2.0, 1.0, 0.0}, 7), DomainError);
  CHECK_THROWS_AS(build_sector({6, 2.0, 0.5, 0.0}, 1), DomainError);
  CHECK_THROWS_AS(ChainParams::make(2, 2.0, 0.0), DomainError);
  CHECK_THROWS_AS(ChainParams::make(13, 2.0, 0.0), DomainError);
  const ChainParams boundary = ChainParams::make(6, 1.0, 0.0);  // warns only
  CHECK_FALSE(boundary.in_ferromagnetic_regime());
  CHECK(ChainParams::make(6, 2.0, 0.0).in_ferromagnetic_regime());
}

TEST_CASE("spin-flip symmetry: (b, k) and (-b, n-k) share a spectrum") {
  for (int n : {5, 6}) {
    for (int k = 0; k <= n; ++k) {
      const auto s1 = sorted_spectrum(build_sector({n, 1.8, 1.0, 0.45}, k).entries);
      const auto s2 = sorted_spectrum(build_sector({n, 1.8, 1.0, -0.45}, n - k).entries);
      REQUIRE(s1.size() == s2.size());
      for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i] == Approx(s2[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("translation invariance: rotated relabelling preserves the block") {
  const ChainParams p{7, 2.2, 1.0, -0.3};
  for (int k = 1; k < 7; ++k) {
    const SectorMatrix m = build_sector(p, k);
    const Config mask = (Config{1} << 7) - 1;
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
      const Config ri = ((m.basis[i] << 1) | (m.basis[i] >> 6)) & mask;
      for (std::size_t j = 0; j < m.basis.size(); ++j) {
        const Config rj = ((m.basis[j] << 1) | (m.basis[j] >> 6)) & mask;
        CHECK(m.entries(i, j) == m.entries(m.basis.rank(ri), m.basis.rank(rj)));
      }
    }
  }
}

TEST_CASE("field shifts the spectrum by b (n/2 - k) and leaves vectors alone") {
  const int n = 6;
  for (int k = 0; k <= n; ++k) {
    const SectorGround g0 = sector_ground(build_sector({n, 2.0, 1.0, 0.0}, k));
    const SectorGround g1 = sector_ground(build_sector({n, 2.0, 1.0, -0.7}, k));
    CHECK(g1.energy == Approx(g0.energy - 0.7 * (n / 2.0 - k)).epsilon(1e-12));
    for (std::size_t i = 0; i < g0.vector.size(); ++i) {
      CHECK(g1.vector[i] == Approx(g0.vector[i]).epsilon(1e-10).scale(1.0));
    }
  }
}
