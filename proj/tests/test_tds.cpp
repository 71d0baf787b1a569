#include "doctest.h"

#include <stdexcept>

#include "oracle.hpp"
#include "rooktds/construct.hpp"
#include "rooktds/tds.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace rooktds;

namespace {

BitMatrix fig2() { return BitMatrix::from_rows({"0011", "0011", "1111"}); }

BitMatrix two_component_example() {
  return BitMatrix::from_rows(
      {"0000011", "0000011", "0000011", "0000011", "1111100"});
}

std::vector<int> random_permutation(std::mt19937 &rng, int size) {
  std::vector<int> p(static_cast<std::size_t>(size));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace

TEST_CASE("line sums") {
  auto s = line_sums(fig2());
  CHECK(s.rows == std::vector{2, 2, 4});
  CHECK(s.cols == std::vector{1, 1, 3, 3});

  s = line_sums(BitMatrix::ones(2, 3));
  CHECK(s.rows == std::vector{3, 3});
  CHECK(s.cols == std::vector{2, 2, 2});

  s = line_sums(BitMatrix::ones(1, 4));
  CHECK(s.rows == std::vector{4});
  CHECK(s.cols == std::vector{1, 1, 1, 1});
}

TEST_CASE("kappa") {
  CHECK(kappa(fig2(), 1, 1) == 3);
  CHECK(kappa(fig2(), 3, 4) == 5);
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      const auto all = BitMatrix::ones(n, m);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
          CHECK(kappa(all, i, j) == n + m - 2);
    }
  CHECK_THROWS_AS(kappa(fig2(), 0, 1), std::out_of_range);
  CHECK_THROWS_AS(kappa(fig2(), 4, 1), std::out_of_range);
  CHECK_THROWS_AS(kappa(fig2(), 1, 5), std::out_of_range);
}

TEST_CASE("is_ktds") {
  CHECK(is_ktds(fig2(), 3));
  CHECK_FALSE(is_ktds(fig2(), 4));
  CHECK(is_ktds(BitMatrix::ones(2, 3), 3));
  CHECK_FALSE(is_ktds(BitMatrix(2, 3), 1));
  CHECK_THROWS_AS(is_ktds(fig2(), 0), std::invalid_argument);
}

TEST_CASE("ones count") {
  CHECK(ones_count(fig2()) == 8);
  CHECK(ones_count(make_j_block(3, 2)) == 6);
  CHECK(ones_count(make_d_block(5)) == 10);
  CHECK(ones_count(BitMatrix(3, 3)) == 0);
}

TEST_CASE("components") {
  SUBCASE("4x2 block and 1x5 block") {
    const auto comps = components(two_component_example());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].row_indices == std::vector{1, 2, 3, 4});
    CHECK(comps[0].col_indices == std::vector{6, 7});
    CHECK(comps[0].ones == 8);
    CHECK(comps[1].row_indices == std::vector{5});
    CHECK(comps[1].col_indices == std::vector{1, 2, 3, 4, 5});
    CHECK(comps[1].ones == 5);
  }
  SUBCASE("block diagonal J(1,4) + J(3,2)") {
    const std::vector blocks{make_j_block(1, 4), make_j_block(3, 2)};
    const auto comps = components(compose_block_diagonal(blocks));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].ones == 4);
    CHECK(comps[1].ones == 6);
  }
  SUBCASE("all ones is one component") {
    const auto comps = components(BitMatrix::ones(3, 3));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].row_indices == std::vector{1, 2, 3});
    CHECK(comps[0].col_indices == std::vector{1, 2, 3});
  }
  SUBCASE("zero lines belong to no component") {
    const auto comps = components(BitMatrix::from_rows({"000", "010", "000"}));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].row_indices == std::vector{2});
    CHECK(comps[0].col_indices == std::vector{2});
    CHECK(components(BitMatrix(2, 2)).empty());
  }
  SUBCASE("links through a shared line even with ones in between") {
    const auto comps = components(BitMatrix::from_rows({"101", "001", "100"}));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].ones == 4);
  }
}

TEST_CASE("compose_block_diagonal") {
  const std::vector a{make_j_block(1, 4), make_j_block(3, 2)};
  const auto ma = compose_block_diagonal(a);
  CHECK(ma.rows() == 4);
  CHECK(ma.cols() == 6);
  CHECK(ones_count(ma) == 10);
  CHECK(is_ktds(ma, 3));

  const std::vector b{make_j_block(1, 4), make_j_block(1, 4)};
  const auto mb = compose_block_diagonal(b);
  CHECK(mb.rows() == 2);
  CHECK(mb.cols() == 8);
  CHECK(ones_count(mb) == 8);

  const std::vector c{make_d_block(5), make_j_block(1, 4)};
  const auto mc = compose_block_diagonal(c);
  CHECK(mc.rows() == 6);
  CHECK(mc.cols() == 7);
  CHECK(ones_count(mc) == 14);
  CHECK(is_ktds(mc, 3));

  CHECK_THROWS_AS(compose_block_diagonal(std::vector<BitMatrix>{}), std::invalid_argument);
}

TEST_CASE("kappa agrees with neighbour counting in the rook's graph") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = oracle::random_matrix(rng, 6, 7);
    for (int i = 1; i <= s.rows(); ++i)
      for (int j = 1; j <= s.cols(); ++j)
        REQUIRE(kappa(s, i, j) == oracle::neighbours_in_set(s, i, j));
    for (int k = 1; k <= 4; ++k)
      REQUIRE(is_ktds(s, k) == oracle::dominates(s, k));
  }
}

TEST_CASE("matrix properties on random inputs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = oracle::random_matrix(rng, 8, 8, trial % 2 ? 0.3 : 0.6);
    const auto sums = line_sums(s);
    const int ones = ones_count(s);
    CHECK(std::accumulate(sums.rows.begin(), sums.rows.end(), 0) == ones);
    CHECK(std::accumulate(sums.cols.begin(), sums.cols.end(), 0) == ones);

    const int mk = min_kappa(s);
    CHECK(mk >= 0);
    for (int i = 1; i <= s.rows(); ++i)
      for (int j = 1; j <= s.cols(); ++j)
        CHECK(kappa(s, i, j) <= s.rows() + s.cols() - 2);

    const auto rp = random_permutation(rng, s.rows());
    const auto cp = random_permutation(rng, s.cols());
    const auto p = s.permuted(rp, cp);
    CHECK(ones_count(p) == ones);
    for (int k = 1; k <= 4; ++k)
      CHECK(is_ktds(p, k) == is_ktds(s, k));

    const auto comps = components(s);
    int total = 0;
    std::vector<int> seen_rows, seen_cols;
    for (const auto &c : comps) {
      CHECK_FALSE(c.row_indices.empty());
      CHECK_FALSE(c.col_indices.empty());
      total += c.ones;
      seen_rows.insert(seen_rows.end(), c.row_indices.begin(), c.row_indices.end());
      seen_cols.insert(seen_cols.end(), c.col_indices.begin(), c.col_indices.end());
    }
    CHECK(total == ones);
    std::sort(seen_rows.begin(), seen_rows.end());
    std::sort(seen_cols.begin(), seen_cols.end());
    CHECK(std::adjacent_find(seen_rows.begin(), seen_rows.end()) == seen_rows.end());
    CHECK(std::adjacent_find(seen_cols.begin(), seen_cols.end()) == seen_cols.end());
  }
}

TEST_CASE("components of a kTDS without zero lines are kTDS") {
  // Dense random matrices; keep the ones that qualify.
  std::mt19937 rng(99);
  int qualifying = 0;
  for (int trial = 0; trial < 2000 && qualifying < 100; ++trial) {
    auto blocks = std::vector<BitMatrix>{};
    const int parts = 1 + trial % 3;
    for (int p = 0; p < parts; ++p)
      blocks.push_back(oracle::random_matrix(rng, 4, 4, 0.75));
    const auto s = compose_block_diagonal(blocks);
    const auto sums = line_sums(s);
    const bool zero_line = std::ranges::count(sums.rows, 0) > 0 || std::ranges::count(sums.cols, 0) > 0;
    for (int k = 1; k <= 3; ++k) {
      if (zero_line || !is_ktds(s, k))
        continue;
      ++qualifying;
      for (const auto &c : components(s))
        CHECK(is_ktds(component_submatrix(s, c), k));
    }
  }
  CHECK(qualifying >= 50);
}

TEST_CASE("compose then components recovers the blocks") {
  const std::vector<BitMatrix> blocks{build_component(CatalogKind::H45), make_d_block(6),
                                      make_j_block(1, 4), make_j_block(3, 2),
                                      build_component(CatalogKind::H44)};
  const auto s = compose_block_diagonal(blocks);
  const auto comps = components(s);
  REQUIRE(comps.size() == blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    CHECK(component_submatrix(s, comps[b]) == blocks[b]);
}
