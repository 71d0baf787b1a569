#include "rooktds/tds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rooktds {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(int size) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

} // namespace

LineSums line_sums(const BitMatrix &m) {
  LineSums s{std::vector<int>(static_cast<std::size_t>(m.rows()), 0),
             std::vector<int>(static_cast<std::size_t>(m.cols()), 0)};
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      if (m.at(i, j)) {
        ++s.rows[i - 1];
        ++s.cols[j - 1];
      }
  return s;
}

int ones_count(const BitMatrix &m) {
  auto s = line_sums(m);
  return std::accumulate(s.rows.begin(), s.rows.end(), 0);
}

int kappa(const BitMatrix &m, int i, int j) {
  if (i < 1 || i > m.rows() || j < 1 || j > m.cols())
    throw std::out_of_range("kappa: index out of range");
  int r = 0, c = 0;
  for (int b = 1; b <= m.cols(); ++b)
    r += m.at(i, b);
  for (int a = 1; a <= m.rows(); ++a)
    c += m.at(a, j);
  return r + c - 2 * static_cast<int>(m.at(i, j));
}

int min_kappa(const BitMatrix &m) {
  auto s = line_sums(m);
  int best = m.rows() + m.cols();
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      best = std::min(best, s.rows[i - 1] + s.cols[j - 1] - 2 * static_cast<int>(m.at(i, j)));
  return best;
}

bool is_ktds(const BitMatrix &m, int k) {
  if (k < 1)
    throw std::invalid_argument("is_ktds: k must be positive");
  return min_kappa(m) >= k;
}

std::vector<ComponentReport> components(const BitMatrix &m) {
  // Nodes 0..n-1 are rows, n..n+m-1 are columns; each one joins its two lines.
  const int n = m.rows();
  DisjointSets sets(n + m.cols());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m.cols(); ++j)
      if (m.at(i, j))
        sets.unite(i - 1, n + j - 1);

  std::map<int, ComponentReport> by_root;
  auto sums = line_sums(m);
  for (int i = 1; i <= n; ++i)
    if (sums.rows[i - 1] > 0) {
      auto &c = by_root[sets.find(i - 1)];
      c.row_indices.push_back(i);
      c.ones += sums.rows[i - 1];
    }
  for (int j = 1; j <= m.cols(); ++j)
    if (sums.cols[j - 1] > 0)
      by_root[sets.find(n + j - 1)].col_indices.push_back(j);

  std::vector<ComponentReport> out;
  out.reserve(by_root.size());
  for (auto &[root, c] : by_root)
    out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const ComponentReport &a, const ComponentReport &b) {
    return a.row_indices.front() < b.row_indices.front();
  });
  return out;
}

BitMatrix component_submatrix(const BitMatrix &m, const ComponentReport &c) {
  return m.submatrix(c.row_indices, c.col_indices);
}

BitMatrix compose_block_diagonal(std::span<const BitMatrix> blocks) {
  if (blocks.empty())
    throw std::invalid_argument("compose_block_diagonal: empty block list");
  int rows = 0, cols = 0;
  for (const auto &b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  BitMatrix out(rows, cols);
  int r0 = 0, c0 = 0;
  for (const auto &b : blocks) {
    for (int i = 1; i <= b.rows(); ++i)
      for (int j = 1; j <= b.cols(); ++j)
        if (b.at(i, j))
          out.set(r0 + i, c0 + j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

} // namespace rooktds
