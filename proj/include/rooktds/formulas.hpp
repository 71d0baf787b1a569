#pragma once

#include <optional>
#include <string_view>

namespace rooktds {

enum class Regime {
  NoSolution,
  SmallN,         // min(n,m) <= 3
  ThreeN,         // 3 * min(n,m), three full columns
  Residue,        // ceil((8n+3m)/5)
  ResiduePlusOne, // ceil((8n+3m)/5) + 1, residue 5 or 6
};

std::string_view to_string(Regime r);

struct GammaResult {
  std::optional<int> value; // empty iff regime == NoSolution
  Regime regime = Regime::NoSolution;

  bool feasible() const noexcept { return value.has_value(); }
  friend bool operator==(const GammaResult &, const GammaResult &) = default;
};

/// (2n - 3m) mod 10, in [0, 9].
int residue_k(int n, int m);

/// 3-tuple total domination number of Kn□Km. Symmetric in (n, m).
GammaResult gamma_3t(int n, int m);

/// Closed form for the square rook's graph Kn□Kn, n >= 3.
int gamma_3t_square(int n);

/// m >= this value puts (n, m) in the 3n regime.
int three_n_threshold(int n);

/// 2n + 2, valid for m >= n >= 3.
int lower_bound_2n2(int n);

/// Column-counting lower bound 3m - 2k - 4 floor(k/2) for a 3TDS matrix with
/// 2n + k ones and no all-zero lines. Raw expression; hypotheses are not checked.
int remark_bound(int m, int k);

struct KnBound {
  int value;
  bool equality; // k*n is exact: always when m >= k*n - 1, and for k = 3
                 // wherever the closed form gives 3n
};

/// Upper bound k*n on the k-tuple total domination number, m >= n >= 2, m >= k.
KnBound simple_upper_kn(int n, int m, int k);

} // namespace rooktds
