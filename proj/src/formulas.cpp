#include "rooktds/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rooktds {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

std::string_view to_string(Regime r) {
  switch (r) {
  case Regime::NoSolution:
    return "no-solution";
  case Regime::SmallN:
    return "small-n";
  case Regime::ThreeN:
    return "three-n";
  case Regime::Residue:
    return "residue";
  case Regime::ResiduePlusOne:
    return "residue-plus-one";
  }
  return "unknown";
}

int residue_k(int n, int m) { return (((2 * n - 3 * m) % 10) + 10) % 10; }

GammaResult gamma_3t(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("gamma_3t: n and m must be positive");
  if (n > m)
    std::swap(n, m);

  if ((n == 1 && m <= 3) || (n == 2 && m == 2))
    return {};
  if (n == 1)
    return {4, Regime::SmallN};
  if (n == 2)
    return {6, Regime::SmallN};
  if (n == 3)
    return {m <= 4 ? 8 : 9, Regime::SmallN};

  const int k = residue_k(n, m);
  const bool plus_one = (k == 5 || k == 6);
  const int residue_value = ceil_div(8 * n + 3 * m, 5) + (plus_one ? 1 : 0);
  if (3 * n <= residue_value)
    return {3 * n, Regime::ThreeN};
  return {residue_value, plus_one ? Regime::ResiduePlusOne : Regime::Residue};
}

int gamma_3t_square(int n) {
  if (n < 3)
    throw std::invalid_argument("gamma_3t_square: n must be at least 3");
  if (n == 3)
    return 8;
  const int r = n % 10;
  const int base = 2 * n + 2 * (n / 10);
  return r >= 4 ? base + 2 : base + ceil_div(r, 3);
}

int three_n_threshold(int n) { return (7 * n - 1) / 3 - 1; }

int lower_bound_2n2(int n) {
  if (n < 3)
    throw std::invalid_argument("lower_bound_2n2: n must be at least 3");
  return 2 * n + 2;
}

int remark_bound(int m, int k) { return 3 * m - 2 * k - 4 * (k / 2); }

KnBound simple_upper_kn(int n, int m, int k) {
  if (n < 2 || m < n || m < k || k < 1)
    throw std::invalid_argument("simple_upper_kn: requires m >= n >= 2, m >= k >= 1");
  bool exact = m >= k * n - 1;
  if (k == 3 && !exact)
    exact = gamma_3t(n, m).value == 3 * n;
  return {k * n, exact};
}

} // namespace rooktds
