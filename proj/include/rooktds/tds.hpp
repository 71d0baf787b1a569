#pragma once

#include "rooktds/bit_matrix.hpp"

#include <span>
#include <vector>

namespace rooktds {

struct LineSums {
  std::vector<int> rows; // rows[i-1] = ones in row i
  std::vector<int> cols; // cols[j-1] = ones in column j
};

/// One connected component of the graph on the ones of a matrix, where two
/// ones are linked when they share a row or a column.
struct ComponentReport {
  std::vector<int> row_indices; // sorted, 1-based
  std::vector<int> col_indices; // sorted, 1-based
  int ones = 0;

  friend bool operator==(const ComponentReport &, const ComponentReport &) = default;
};

LineSums line_sums(const BitMatrix &m);
int ones_count(const BitMatrix &m);

/// Number of ones in row i plus ones in column j, not counting (i,j) itself:
/// the number of neighbours of vertex (i,j) inside the set.
int kappa(const BitMatrix &m, int i, int j);

/// True iff every cell, zero or one, has kappa >= k, i.e. the ones form a
/// k-tuple total dominating set of the rook's graph.
bool is_ktds(const BitMatrix &m, int k);

/// Smallest kappa over all cells.
int min_kappa(const BitMatrix &m);

/// Components ordered by their smallest row index. All-zero rows and columns
/// belong to no component.
std::vector<ComponentReport> components(const BitMatrix &m);

BitMatrix component_submatrix(const BitMatrix &m, const ComponentReport &c);

/// Places the blocks along the main diagonal, zeros elsewhere.
BitMatrix compose_block_diagonal(std::span<const BitMatrix> blocks);

} // namespace rooktds
