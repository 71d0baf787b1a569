#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rooktds {

/// Dense n x m (0,1)-matrix. Cell (i,j) is 1 when vertex (i,j) of Kn□Km is in
/// the dominating set. Indices are 1-based everywhere in the public API.
class BitMatrix {
public:
  BitMatrix(int rows, int cols);

  /// Builds a matrix from rows of '0'/'1' characters, e.g. {"0011", "1111"}.
  static BitMatrix from_rows(std::span<const std::string_view> rows);
  static BitMatrix from_rows(std::initializer_list<std::string_view> rows);
  static BitMatrix ones(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  bool at(int i, int j) const;
  void set(int i, int j, bool value = true);

  BitMatrix transposed() const;
  /// Rows/columns are taken in the given (1-based) order.
  BitMatrix submatrix(std::span<const int> row_indices,
                      std::span<const int> col_indices) const;
  /// result(i,j) = this(row_perm[i-1], col_perm[j-1]).
  BitMatrix permuted(std::span<const int> row_perm,
                     std::span<const int> col_perm) const;

  std::string row_string(int i) const;

  friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

private:
  std::size_t offset(int i, int j) const;

  int rows_;
  int cols_;
  std::vector<std::uint8_t> cells_;
};

} // namespace rooktds
