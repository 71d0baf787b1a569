#pragma once

#include "rooktds/bit_matrix.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

namespace rooktds {

enum class SolveStatus { Optimal, NoSolution, Aborted };

std::string_view to_string(SolveStatus s);

struct SolverConfig {
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::duration<double>> time_budget;
  /// Known achievable ones count (e.g. from construct_min_3tds). The search then
  /// only looks for matrices with at most this many ones.
  std::optional<int> initial_upper_bound;
  /// Exhaustive 2^(n*m) scan instead of branch-and-bound. Requires n*m <= 40.
  bool use_naive_enumeration = false;
};

struct SolveReport {
  SolveStatus status = SolveStatus::NoSolution;
  std::optional<int> value;
  std::optional<BitMatrix> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Exact minimum k-tuple total dominating set of Kn□Km.
///
/// Branch-and-bound over whole rows of the matrix whose rows are the longer
/// side (the kappa-bound is invariant under transposition). Symmetry breaking:
/// rows appear in nonincreasing binary order and the first row, which carries
/// the maximum row weight p, is fixed to ones in its first p columns. Pruning
/// uses only the per-column deficits implied by the placed rows, the minimum
/// weight any remaining row can have, the all-zero-line bound (a kTDS with an
/// all-zero row has at least k times the row length ones), and, for k = 3 with
/// min(n,m) >= 3, the lower bound 2 min(n,m) + 2 to stop early.
///
/// Throws std::invalid_argument when min(n,m) > 20, or, in naive mode, n*m > 40.
SolveReport solve_min_ktds(int n, int m, int k, const SolverConfig &cfg = {});

} // namespace rooktds
