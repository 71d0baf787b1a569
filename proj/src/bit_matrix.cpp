#include "rooktds/bit_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace rooktds {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("BitMatrix dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

BitMatrix BitMatrix::from_rows(std::span<const std::string_view> rows) {
  if (rows.empty())
    throw std::invalid_argument("BitMatrix::from_rows: no rows");
  BitMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 1; i <= m.rows_; ++i) {
    const auto &r = rows[i - 1];
    if (static_cast<int>(r.size()) != m.cols_)
      throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    for (int j = 1; j <= m.cols_; ++j) {
      char c = r[j - 1];
      if (c != '0' && c != '1')
        throw std::invalid_argument("BitMatrix::from_rows: expected '0' or '1'");
      m.set(i, j, c == '1');
    }
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
}

BitMatrix BitMatrix::ones(int rows, int cols) {
  BitMatrix m(rows, cols);
  std::fill(m.cells_.begin(), m.cells_.end(), std::uint8_t{1});
  return m;
}

std::size_t BitMatrix::offset(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw std::out_of_range("BitMatrix index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(j - 1);
}

bool BitMatrix::at(int i, int j) const { return cells_[offset(i, j)] != 0; }

void BitMatrix::set(int i, int j, bool value) { cells_[offset(i, j)] = value ? 1 : 0; }

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j)
      t.set(j, i, at(i, j));
  return t;
}

BitMatrix BitMatrix::submatrix(std::span<const int> row_indices,
                               std::span<const int> col_indices) const {
  BitMatrix s(static_cast<int>(row_indices.size()), static_cast<int>(col_indices.size()));
  for (std::size_t a = 0; a < row_indices.size(); ++a)
    for (std::size_t b = 0; b < col_indices.size(); ++b)
      s.set(static_cast<int>(a) + 1, static_cast<int>(b) + 1,
            at(row_indices[a], col_indices[b]));
  return s;
}

BitMatrix BitMatrix::permuted(std::span<const int> row_perm,
                              std::span<const int> col_perm) const {
  if (static_cast<int>(row_perm.size()) != rows_ || static_cast<int>(col_perm.size()) != cols_)
    throw std::invalid_argument("BitMatrix::permuted: permutation size mismatch");
  return submatrix(row_perm, col_perm);
}

std::string BitMatrix::row_string(int i) const {
  std::string s;
  s.reserve(static_cast<std::size_t>(cols_));
  for (int j = 1; j <= cols_; ++j)
    s.push_back(at(i, j) ? '1' : '0');
  return s;
}

} // namespace rooktds
