#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "../oracles/spin_oracle.hpp"
#include "xxzbell/eigensolver.hpp"
#include "xxzbell/errors.hpp"
#include "xxzbell/gme_concurrence.hpp"

using namespace xxzbell;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

SectorState random_state(int n, int k, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  SectorState s{SectorBasis(n, k), {}};
  double norm = 0.0;
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    s.amplitudes.push_back(g(rng));
    norm += s.amplitudes.back() * s.amplitudes.back();
  }
  for (double& a : s.amplitudes) a /= std::sqrt(norm);
  return s;
}

std::uint32_t complement(int n, std::uint32_t mask) { return ((1u << n) - 1) & ~mask; }

}  // namespace

TEST_CASE("bipartition enumeration") {
  CHECK(enumerate_bipartitions(3).size() == 3);
  CHECK(enumerate_bipartitions(6).size() == 31);
  CHECK(enumerate_bipartitions(8).size() == 127);

  const auto parts = enumerate_bipartitions(6);
  CHECK(parts.front().alpha == std::vector<int>{1});
  CHECK(parts[5].alpha == std::vector<int>{6});
  CHECK(parts[6].alpha == std::vector<int>{1, 2});
  CHECK(parts.back().alpha == std::vector<int>{1, 5, 6});

  std::set<std::uint32_t> seen;
  for (const Bipartition& p : parts) {
    CHECK(p.canonical);
    CHECK(2 * p.alpha.size() <= 6);
    if (2 * p.alpha.size() == 6) CHECK(p.alpha.front() == 1);
    CHECK(seen.insert(p.mask()).second);
    CHECK(seen.count(complement(6, p.mask())) == 0);
  }
}

TEST_CASE("canonical_bipartition") {
  CHECK(canonical_bipartition(6, 0b000001).alpha == std::vector<int>{1});
  CHECK(canonical_bipartition(6, 0b111110).alpha == std::vector<int>{1});
  CHECK(canonical_bipartition(6, 0b111000).alpha == std::vector<int>{1, 2, 3});
  CHECK(canonical_bipartition(6, 0b000111).alpha == std::vector<int>{1, 2, 3});
  CHECK(canonical_bipartition(7, 0b1110000).alpha == std::vector<int>{5, 6, 7});
  CHECK_THROWS_AS(canonical_bipartition(6, 0), DomainError);
  CHECK_THROWS_AS(canonical_bipartition(6, 0b111111), DomainError);
}

TEST_CASE("purity agrees with an explicit partial trace") {
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const SectorState s = random_state(n, k, rng);
      const std::vector<double> dense = s.to_dense();
      for (const Bipartition& p : enumerate_bipartitions(n)) {
        const double expected = oracle::purity(oracle::reduced_density(dense, n, p.alpha));
        CHECK(close(reduced_purity(s, p), expected, 1e-12));
        CHECK(close(reduced_purity_dense(dense, n, p), expected, 1e-12));
      }
    }
  }
}

TEST_CASE("purity of a GHZ state is one half on every cut") {
  for (int n : {3, 6, 8}) {
    std::vector<double> ghz(std::size_t{1} << n, 0.0);
    ghz.front() = ghz.back() = 1.0 / std::sqrt(2.0);
    for (const Bipartition& p : enumerate_bipartitions(n))
      CHECK(close(reduced_purity_dense(ghz, n, p), 0.5, 1e-15));
  }
}

TEST_CASE("purity is complement symmetric and bounded") {
  std::mt19937_64 rng(13);
  for (int n : {5, 6, 8}) {
    const SectorState s = random_state(n, n / 2, rng);
    const std::vector<double> dense = s.to_dense();
    for (const Bipartition& p : enumerate_bipartitions(n)) {
      Bipartition other;
      for (int j = 1; j <= n; ++j)
        if (!(p.mask() >> (j - 1) & 1)) other.alpha.push_back(j);
      const double a = reduced_purity(s, p);
      CHECK(close(a, reduced_purity_dense(dense, n, other), 1e-12));
      const double local_dim = std::ldexp(1.0, static_cast<int>(p.alpha.size()));
      CHECK(a >= 1.0 / local_dim - 1e-12);
      CHECK(a <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("concurrence of the uniform single-excitation state") {
  for (int n = 4; n <= 9; ++n) {
    const ConcurrenceResult r = gme_concurrence(dicke_state(n, 1));
    CHECK(close(r.value, std::sqrt(2.0 * (n - 1)) / n, 1e-12));
    CHECK(r.minimizing_partition.alpha == std::vector<int>{1});
    CHECK(r.per_partition.size() == enumerate_bipartitions(n).size());
    for (const PartitionEntropy& e : r.per_partition) {
      const double m = static_cast<double>(e.part.alpha.size());
      CHECK(close(e.linear_entropy, 2.0 * m * (n - m) / (n * n), 1e-12));
    }
  }
  CHECK(close(gme_concurrence(dicke_state(6, 1)).value, std::sqrt(10.0) / 6.0, 1e-12));
  CHECK(close(gme_concurrence(dicke_state(8, 1)).value, std::sqrt(14.0) / 8.0, 1e-12));
}

TEST_CASE("concurrence of a product state vanishes") {
  const GroundState g = global_ground({6, 2.0, 1.0, -3.0});
  REQUIRE(g.sector() == 0);
  const ConcurrenceResult r = gme_concurrence(g.state);
  CHECK(r.value == 0.0);
  CHECK(r.minimizing_partition.alpha == std::vector<int>{1});
}

TEST_CASE("concurrence is translation invariant and within bounds") {
  std::mt19937_64 rng(19);
  for (int n : {5, 6, 7}) {
    const SectorState s = random_state(n, 2, rng);
    const double c = gme_concurrence(s).value;
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    for (int shift = 1; shift < n; ++shift)
      CHECK(close(gme_concurrence(rotate_sites(s, shift)).value, c, 1e-12));
  }
}

TEST_CASE("ground states in every sector have finite concurrence") {
  const ChainParams p{6, 2.0, 1.0, 0.0};
  const SectorGrounds grounds(p);
  const auto bounds = find_boundaries(p, -1.5, 1.5);
  REQUIRE(bounds.size() == 6);
  for (int k = 1; k < 6; ++k) {
    const GroundState g = grounds.ground_at(0.5 * (bounds[k - 1].b + bounds[k].b));
    REQUIRE(g.sector() == k);
    const double c = gme_concurrence(g.state).value;
    CHECK(c > 0.0);
    CHECK(c <= 1.0);
  }
}
