#include "rooktds/solver.hpp"

#include "rooktds/tds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rooktds {

std::string_view to_string(SolveStatus s) {
  switch (s) {
  case SolveStatus::Optimal:
    return "optimal";
  case SolveStatus::NoSolution:
    return "no-solution";
  case SolveStatus::Aborted:
    return "aborted";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr int kMaxWidth = 20;
using ColumnCounts = std::array<int, kMaxWidth>;

class Budget {
public:
  explicit Budget(const SolverConfig &cfg) : node_budget_(cfg.node_budget) {
    if (cfg.time_budget)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*cfg.time_budget);
  }

  // Counts one node; false once a budget is exhausted.
  bool tick() {
    ++nodes_;
    if (exhausted_)
      return false;
    if (node_budget_ && nodes_ > *node_budget_)
      exhausted_ = true;
    else if (deadline_ && (nodes_ & 0xfffu) == 0 && Clock::now() > *deadline_)
      exhausted_ = true;
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  std::optional<std::uint64_t> node_budget_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

// Searches height x width matrices (width <= kMaxWidth) for a kTDS with as few
// ones as possible, at most `limit`. Row patterns are width-bit integers with
// bit (width - 1 - c) holding column c (0-based), so integer order is
// lexicographic order of the row strings.
class RowSearch {
public:
  RowSearch(int height, int width, int k, int lower_bound, Budget &budget)
      : height_(height), width_(width), k_(k), lower_bound_(lower_bound), budget_(budget),
        rows_(static_cast<std::size_t>(height), 0) {
    by_weight_.resize(static_cast<std::size_t>(width) + 1);
    const std::uint32_t count = 1u << width;
    for (std::uint32_t x = count; x-- > 0;)
      by_weight_[static_cast<std::size_t>(std::popcount(x))].push_back(x);
  }

  // Returns true if a solution with at most `limit` ones was found.
  bool run(int limit) {
    limit_ = limit;
    found_ = false;
    for (int p = 0; p <= width_ && !stop(); ++p) {
      const std::uint32_t first = p == 0 ? 0u : ((1u << p) - 1u) << (width_ - p);
      ColumnCounts cols{}, need{};
      place(first, p, cols, need);
      rows_[0] = first;
      if (feasible_child(cols, need, height_ - 1))
        descend(1, p, first, p, cols, need);
    }
    return found_;
  }

  int best_ones() const { return best_ones_; }
  const std::vector<std::uint32_t> &best_rows() const { return best_rows_; }

private:
  bool stop() const { return budget_.exhausted() || done_; }

  void place(std::uint32_t x, int weight, ColumnCounts &cols, ColumnCounts &need) const {
    for (int c = 0; c < width_; ++c) {
      const int bit = static_cast<int>((x >> (width_ - 1 - c)) & 1u);
      cols[c] += bit;
      need[c] = std::max(need[c], k_ - weight + 2 * bit);
    }
  }

  bool feasible_child(const ColumnCounts &cols, const ColumnCounts &need, int remaining) const {
    for (int c = 0; c < width_; ++c)
      if (need[c] - cols[c] > remaining)
        return false;
    return true;
  }

  void descend(int placed, int ones, std::uint32_t prev, int max_weight,
               const ColumnCounts &cols, const ColumnCounts &need) {
    if (!budget_.tick())
      return;
    const int remaining = height_ - placed;
    // An all-zero column forces k ones in every row; an all-zero row forces k
    // ones in every column.
    const int zero_col_floor = limit_ < k_ * height_ ? 1 : 0;
    const bool zero_row_allowed = limit_ >= k_ * width_;

    int deficit = 0;
    int min_col = height_;
    for (int c = 0; c < width_; ++c) {
      const int d = std::max(need[c], zero_col_floor) - cols[c];
      if (d > remaining)
        return;
      deficit += std::max(d, 0);
      min_col = std::min(min_col, cols[c]);
    }

    if (remaining == 0) {
      record(ones);
      return;
    }

    // Each later row i with a cell in column c has kappa <= w_i + cols[c] + remaining - 1.
    const int min_weight = std::max(zero_row_allowed ? 0 : 1, k_ + 1 - remaining - min_col);
    if (min_weight > max_weight || deficit > remaining * max_weight)
      return;
    if (ones + std::max(deficit, remaining * min_weight) > limit_)
      return;

    for (int w = min_weight; w <= max_weight; ++w) {
      if (ones + w + std::max(deficit - w, (remaining - 1) * min_weight) > limit_)
        break;
      const auto &bucket = by_weight_[static_cast<std::size_t>(w)];
      auto it = std::lower_bound(bucket.begin(), bucket.end(), prev, std::greater<>());
      for (; it != bucket.end(); ++it) {
        const std::uint32_t x = *it;
        ColumnCounts next_cols = cols, next_need = need;
        place(x, w, next_cols, next_need);
        if (!feasible_child(next_cols, next_need, remaining - 1))
          continue;
        rows_[static_cast<std::size_t>(placed)] = x;
        descend(placed + 1, ones + w, x, max_weight, next_cols, next_need);
        if (stop())
          return;
      }
    }
  }

  void record(int ones) {
    if (found_ && ones >= best_ones_)
      return;
    found_ = true;
    best_ones_ = ones;
    best_rows_ = rows_;
    limit_ = ones - 1;
    if (ones <= lower_bound_)
      done_ = true;
  }

  int height_;
  int width_;
  int k_;
  int lower_bound_;
  Budget &budget_;
  std::vector<std::vector<std::uint32_t>> by_weight_; // each bucket descending
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> best_rows_;
  int best_ones_ = 0;
  int limit_ = 0;
  bool found_ = false;
  bool done_ = false;
};

SolveReport solve_naive(int n, int m, int k, Budget &budget) {
  const int cells = n * m;
  if (cells > 40)
    throw std::invalid_argument("naive enumeration supports n*m <= 40");
  std::optional<std::uint64_t> best_mask;
  int best = cells + 1;
  std::vector<int> rs(static_cast<std::size_t>(n)), cs(static_cast<std::size_t>(m));
  const std::uint64_t total = std::uint64_t{1} << cells;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!budget.tick())
      break;
    const int ones = std::popcount(mask);
    if (ones >= best)
      continue;
    std::fill(rs.begin(), rs.end(), 0);
    std::fill(cs.begin(), cs.end(), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        if ((mask >> (i * m + j)) & 1u) {
          ++rs[i];
          ++cs[j];
        }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < m && ok; ++j)
        ok = rs[i] + cs[j] - 2 * static_cast<int>((mask >> (i * m + j)) & 1u) >= k;
    if (ok) {
      best = ones;
      best_mask = mask;
    }
  }

  SolveReport report;
  report.status = budget.exhausted() ? SolveStatus::Aborted
                  : best_mask        ? SolveStatus::Optimal
                                     : SolveStatus::NoSolution;
  if (best_mask) {
    BitMatrix w(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        w.set(i + 1, j + 1, ((*best_mask >> (i * m + j)) & 1u) != 0);
    report.value = best;
    report.witness = std::move(w);
  }
  return report;
}

} // namespace

SolveReport solve_min_ktds(int n, int m, int k, const SolverConfig &cfg) {
  if (n < 1 || m < 1 || k < 1)
    throw std::invalid_argument("solve_min_ktds: n, m, k must be positive");
  const auto start = Clock::now();
  Budget budget(cfg);
  SolveReport report;

  if (cfg.use_naive_enumeration) {
    report = solve_naive(n, m, k, budget);
  } else if (k > n + m - 2) {
    report.status = SolveStatus::NoSolution;
  } else {
    const int height = std::max(n, m), width = std::min(n, m);
    if (width > kMaxWidth)
      throw std::invalid_argument("solve_min_ktds: min(n, m) must be at most 20");
    const int lower_bound = (k == 3 && width >= 3) ? 2 * width + 2 : 0;
    RowSearch search(height, width, k, lower_bound, budget);

    // The all-ones matrix has kappa = n + m - 2 >= k everywhere.
    bool found = false;
    if (cfg.initial_upper_bound && *cfg.initial_upper_bound < n * m)
      found = search.run(*cfg.initial_upper_bound);
    if (!found && !budget.exhausted())
      found = search.run(n * m - 1);

    BitMatrix witness = BitMatrix::ones(n, m);
    int value = n * m;
    if (found) {
      BitMatrix inner(height, width);
      const auto &rows = search.best_rows();
      for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
          inner.set(r + 1, c + 1, ((rows[static_cast<std::size_t>(r)] >> (width - 1 - c)) & 1u) != 0);
      witness = n >= m ? inner : inner.transposed();
      value = search.best_ones();
    }
    report.status = budget.exhausted() ? SolveStatus::Aborted : SolveStatus::Optimal;
    report.value = value;
    report.witness = std::move(witness);
  }

  report.nodes_explored = budget.nodes();
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

} // namespace rooktds
