#pragma once

#include "rooktds/bit_matrix.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace rooktds {

/// Building blocks for minimum 3TDS matrices. J(x,y) is the x-by-y all-ones
/// block, D(x,3) the sparse x-by-3 block, H44/H45 single-component blocks
/// found in the small-case table.
enum class CatalogKind { J14, J15, J16, J23, J32, J42, J52, D53, D63, H44, H45 };

inline constexpr std::array kAllCatalogKinds{
    CatalogKind::J14, CatalogKind::J15, CatalogKind::J16, CatalogKind::J23,
    CatalogKind::J32, CatalogKind::J42, CatalogKind::J52, CatalogKind::D53,
    CatalogKind::D63, CatalogKind::H44, CatalogKind::H45};

/// Kinds whose multiplicity is searched; J14 and J32 counts are solved for.
inline constexpr std::array kSpecialKinds{
    CatalogKind::J15, CatalogKind::J16, CatalogKind::J23, CatalogKind::J42,
    CatalogKind::J52, CatalogKind::D53, CatalogKind::D63, CatalogKind::H44,
    CatalogKind::H45};

/// Upper limit on each special kind's count in decompose_counts.
inline constexpr int kMaxSpecialCount = 2;

struct CatalogEntry {
  CatalogKind kind;
  int rows;
  int cols;
  int ones;
};

CatalogEntry catalog_entry(CatalogKind kind);
std::string_view to_string(CatalogKind kind);

/// x-by-y all-ones block; requires x + y >= 5.
BitMatrix make_j_block(int x, int y);
/// D(x,3); requires x >= 5.
BitMatrix make_d_block(int x);
BitMatrix build_component(CatalogKind kind);

/// n x m matrix with ones exactly in the last three columns (3n ones).
BitMatrix construct_last_k_columns(int n, int m);

struct Decomposition {
  std::array<int, kAllCatalogKinds.size()> counts{};

  int count(CatalogKind kind) const { return counts[static_cast<std::size_t>(kind)]; }
  int &count(CatalogKind kind) { return counts[static_cast<std::size_t>(kind)]; }
  int total_rows() const;
  int total_cols() const;
  int total_ones() const;

  friend bool operator==(const Decomposition &, const Decomposition &) = default;
};

/// Finds catalog multiplicities whose block-diagonal composition is an n x m
/// matrix with target_ones ones. The nine special counts range over
/// 0..kMaxSpecialCount with J15 varying fastest; J14 and J32 counts follow from
///   a + 3b = n', 4a + 2b = m'.
/// Requires m >= n >= 4.
std::optional<Decomposition> decompose_counts(int n, int m, int target_ones);

/// Components of a decomposition in placement order: most rows first, ties by
/// catalog order.
std::vector<CatalogEntry> placement_order(const Decomposition &d);

/// Minimum 3TDS matrix of Kn□Km with exactly gamma_3t(n, m) ones, or nullopt
/// for the four pairs that admit no 3TDS.
std::optional<BitMatrix> construct_min_3tds(int n, int m);

} // namespace rooktds
