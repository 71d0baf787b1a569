#include "rooktds/construct.hpp"

#include "rooktds/formulas.hpp"
#include "rooktds/tds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rooktds {

CatalogEntry catalog_entry(CatalogKind kind) {
  switch (kind) {
  case CatalogKind::J14:
    return {kind, 1, 4, 4};
  case CatalogKind::J15:
    return {kind, 1, 5, 5};
  case CatalogKind::J16:
    return {kind, 1, 6, 6};
  case CatalogKind::J23:
    return {kind, 2, 3, 6};
  case CatalogKind::J32:
    return {kind, 3, 2, 6};
  case CatalogKind::J42:
    return {kind, 4, 2, 8};
  case CatalogKind::J52:
    return {kind, 5, 2, 10};
  case CatalogKind::D53:
    return {kind, 5, 3, 10};
  case CatalogKind::D63:
    return {kind, 6, 3, 12};
  case CatalogKind::H44:
    return {kind, 4, 4, 10};
  case CatalogKind::H45:
    return {kind, 4, 5, 10};
  }
  throw std::invalid_argument("catalog_entry: unknown kind");
}

std::string_view to_string(CatalogKind kind) {
  switch (kind) {
  case CatalogKind::J14:
    return "J(1,4)";
  case CatalogKind::J15:
    return "J(1,5)";
  case CatalogKind::J16:
    return "J(1,6)";
  case CatalogKind::J23:
    return "J(2,3)";
  case CatalogKind::J32:
    return "J(3,2)";
  case CatalogKind::J42:
    return "J(4,2)";
  case CatalogKind::J52:
    return "J(5,2)";
  case CatalogKind::D53:
    return "D(5,3)";
  case CatalogKind::D63:
    return "D(6,3)";
  case CatalogKind::H44:
    return "H(4,4)";
  case CatalogKind::H45:
    return "H(4,5)";
  }
  return "?";
}

BitMatrix make_j_block(int x, int y) {
  if (x < 1 || y < 1 || x + y < 5)
    throw std::invalid_argument("J(" + std::to_string(x) + "," + std::to_string(y) +
                                "): requires x, y >= 1 and x + y >= 5");
  return BitMatrix::ones(x, y);
}

BitMatrix make_d_block(int x) {
  if (x < 5)
    throw std::invalid_argument("D(" + std::to_string(x) + ",3): requires x >= 5");
  BitMatrix d(x, 3);
  for (int i = 1; i <= x - 3; ++i) {
    d.set(i, 2);
    d.set(i, 3);
  }
  for (int i = x - 2; i <= x - 1; ++i) {
    d.set(i, 1);
    d.set(i, 3);
  }
  d.set(x, 1);
  d.set(x, 2);
  return d;
}

BitMatrix build_component(CatalogKind kind) {
  switch (kind) {
  case CatalogKind::D53:
    return make_d_block(5);
  case CatalogKind::D63:
    return make_d_block(6);
  case CatalogKind::H44:
    return BitMatrix::from_rows({"0011", "0011", "0011", "1111"});
  case CatalogKind::H45:
    return BitMatrix::from_rows({"00011", "00011", "00011", "11110"});
  default: {
    auto e = catalog_entry(kind);
    return make_j_block(e.rows, e.cols);
  }
  }
}

BitMatrix construct_last_k_columns(int n, int m) {
  if (n < 2 || m < 3)
    throw std::invalid_argument("construct_last_k_columns: requires n >= 2, m >= 3");
  BitMatrix out(n, m);
  for (int i = 1; i <= n; ++i)
    for (int j = m - 2; j <= m; ++j)
      out.set(i, j);
  return out;
}

int Decomposition::total_rows() const {
  int t = 0;
  for (auto kind : kAllCatalogKinds)
    t += count(kind) * catalog_entry(kind).rows;
  return t;
}

int Decomposition::total_cols() const {
  int t = 0;
  for (auto kind : kAllCatalogKinds)
    t += count(kind) * catalog_entry(kind).cols;
  return t;
}

int Decomposition::total_ones() const {
  int t = 0;
  for (auto kind : kAllCatalogKinds)
    t += count(kind) * catalog_entry(kind).ones;
  return t;
}

std::optional<Decomposition> decompose_counts(int n, int m, int target_ones) {
  if (n < 4 || m < n)
    throw std::invalid_argument("decompose_counts: requires m >= n >= 4");

  constexpr std::size_t kSpecials = kSpecialKinds.size();
  std::array<int, kSpecials> special{};
  while (true) {
    int rows = n, cols = m, ones = target_ones;
    for (std::size_t s = 0; s < kSpecials; ++s) {
      auto e = catalog_entry(kSpecialKinds[s]);
      rows -= special[s] * e.rows;
      cols -= special[s] * e.cols;
      ones -= special[s] * e.ones;
    }
    if (rows >= 0 && cols >= 0) {
      // a + 3b = rows, 4a + 2b = cols
      const int b10 = 4 * rows - cols;
      const int a10 = 3 * cols - 2 * rows;
      if (b10 >= 0 && a10 >= 0 && b10 % 10 == 0 && a10 % 10 == 0) {
        const int a = a10 / 10, b = b10 / 10;
        if (4 * a + 6 * b == ones) {
          Decomposition d;
          for (std::size_t s = 0; s < kSpecials; ++s)
            d.count(kSpecialKinds[s]) = special[s];
          d.count(CatalogKind::J14) = a;
          d.count(CatalogKind::J32) = b;
          return d;
        }
      }
    }

    std::size_t digit = 0;
    while (digit < kSpecials && special[digit] == kMaxSpecialCount)
      special[digit++] = 0;
    if (digit == kSpecials)
      return std::nullopt;
    ++special[digit];
  }
}

std::vector<CatalogEntry> placement_order(const Decomposition &d) {
  std::vector<CatalogEntry> out;
  for (auto kind : kAllCatalogKinds)
    for (int c = 0; c < d.count(kind); ++c)
      out.push_back(catalog_entry(kind));
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry &a, const CatalogEntry &b) {
    return a.rows > b.rows;
  });
  return out;
}

std::optional<BitMatrix> construct_min_3tds(int n, int m) {
  if (n > m) {
    auto t = construct_min_3tds(m, n);
    if (!t)
      return std::nullopt;
    return t->transposed();
  }

  const auto gamma = gamma_3t(n, m);
  if (!gamma.feasible())
    return std::nullopt;

  if (n == 1) {
    BitMatrix row(1, m);
    for (int j = m - 3; j <= m; ++j)
      row.set(1, j);
    return row;
  }
  if (n == 3 && m == 3)
    return BitMatrix::from_rows({"011", "111", "111"});
  if (n == 3 && m == 4)
    return BitMatrix::from_rows({"0011", "0011", "1111"});
  if (*gamma.value == 3 * n)
    return construct_last_k_columns(n, m);

  auto d = decompose_counts(n, m, *gamma.value);
  if (!d)
    throw std::logic_error("construct_min_3tds: no catalog decomposition for (" +
                           std::to_string(n) + "," + std::to_string(m) + ")");
  std::vector<BitMatrix> blocks;
  for (const auto &e : placement_order(*d))
    blocks.push_back(build_component(e.kind));
  return compose_block_diagonal(blocks);
}

} // namespace rooktds
