#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rooktds {

/// One (n, m) cell of the value table. Optional fields are absent when the
/// pair has no 3TDS or the corresponding computation was not requested.
struct TableRow {
  int n = 0;
  int m = 0;
  std::optional<int> gamma;
  std::string regime;
  std::optional<int> construct_ones;
  std::optional<int> oracle_value;
};

/// Rows for 1 <= n <= max_n, n <= m <= max_m in (n, m) order. The exact solver
/// fills oracle_value for pairs with n*m <= oracle_limit.
std::vector<TableRow> build_table(int max_n, int max_m, int oracle_limit = 0);

std::string render_table_json(const std::vector<TableRow> &rows);
std::string render_table_csv(const std::vector<TableRow> &rows);

struct PropertyResult {
  std::string name;
  bool passed = true;
  long checked = 0;
  std::string counterexample; // first failure, empty when passed
};

struct CheckReport {
  std::vector<PropertyResult> properties;

  bool passed() const;
  const PropertyResult *find(const std::string &name) const;
};

/// Cross-checks closed forms, constructions and the exact solver over
/// 1 <= n <= n_max, n <= m <= m_max. Pairs with n*m <= oracle_limit are solved
/// exactly. Requires n_max <= m_max.
CheckReport run_consistency_check(int n_max, int m_max, int oracle_limit);

std::string render_check_report(const CheckReport &report);

} // namespace rooktds
