#include <doctest.h>

#include <bit>
#include <set>

#include "xxzbell/errors.hpp"
#include "xxzbell/sector_basis.hpp"

using namespace xxzbell;

TEST_CASE("enumerate_sector lists weight-k configurations in ascending order") {
  CHECK(enumerate_sector(4, 0).states() == std::vector<Config>{0b0000});
  CHECK(enumerate_sector(4, 2).states() ==
        std::vector<Config>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  CHECK(enumerate_sector(6, 3).size() == 20);
  CHECK(enumerate_sector(5, 5).states() == std::vector<Config>{0b11111});
}

TEST_CASE("enumerate_sector rejects k outside [0, n]") {
  CHECK_THROWS_AS(enumerate_sector(4, 5), DomainError);
  CHECK_THROWS_AS(enumerate_sector(4, -1), DomainError);
  CHECK_THROWS_WITH(enumerate_sector(4, 7), doctest::Contains("k=7"));
}

TEST_CASE("sector sizes sum to 2^n and every state has weight k") {
  for (int n = 3; n <= 12; ++n) {
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) {
      const SectorBasis basis(n, k);
      CHECK(basis.size() == binomial(n, k));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(std::popcount(basis[i]) == k);
        if (i > 0) CHECK(basis[i - 1] < basis[i]);
      }
      total += basis.size();
    }
    CHECK(total == (std::uint64_t{1} << n));
  }
}

TEST_CASE("rank inverts the enumeration") {
  const SectorBasis b42(4, 2);
  CHECK(b42.rank(0b0011) == 0);
  CHECK(b42.rank(0b1100) == 5);
  for (int n = 3; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const SectorBasis basis(n, k);
      for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis.rank(basis[i]) == i);
    }
  }
  CHECK_THROWS_AS(b42.rank(0b0111), DomainError);
  CHECK_THROWS_AS(b42.rank(0b10001), DomainError);
}

TEST_CASE("neighbor_pairs is the periodic ring") {
  using Bonds = std::vector<std::pair<int, int>>;
  CHECK(neighbor_pairs(3) == Bonds{{1, 2}, {2, 3}, {3, 1}});
  CHECK(neighbor_pairs(4) == Bonds{{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK_THROWS_AS(neighbor_pairs(2), DomainError);

  for (int n = 3; n <= 12; ++n) {
    const auto bonds = neighbor_pairs(n);
    REQUIRE(bonds.size() == static_cast<std::size_t>(n));
    std::vector<int> degree(n + 1, 0);
    for (auto [a, b] : bonds) {
      ++degree[a];
      ++degree[b];
    }
    for (int j = 1; j <= n; ++j) CHECK(degree[j] == 2);
    // Walking the bonds from site 1 visits every site once: a single cycle.
    std::set<int> seen;
    int site = 1;
    for (int step = 0; step < n; ++step) {
      seen.insert(site);
      site = bonds[site - 1].second;
    }
    CHECK(site == 1);
    CHECK(seen.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("exact-diagonalisation site range") {
  CHECK_NOTHROW(require_ed_sites(3));
  CHECK_NOTHROW(require_ed_sites(12));
  CHECK_THROWS_AS(require_ed_sites(2), DomainError);
  CHECK_THROWS_AS(require_ed_sites(13), DomainError);
}
