#include "rooktds/check.hpp"

#include "rooktds/construct.hpp"
#include "rooktds/formulas.hpp"
#include "rooktds/solver.hpp"
#include "rooktds/tds.hpp"

#include "json.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace rooktds {

namespace {

std::string pair_str(int n, int m) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

std::string opt_str(std::optional<int> v) { return v ? std::to_string(*v) : "none"; }

int gamma_value(int n, int m) { return gamma_3t(n, m).value.value_or(0); }

class PropertyRecorder {
public:
  explicit PropertyRecorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()> &describe) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  PropertyResult take() { return std::move(result_); }

private:
  PropertyResult result_;
};

std::optional<int> oracle_value(int n, int m, const std::optional<BitMatrix> &seed) {
  SolverConfig cfg;
  if (seed)
    cfg.initial_upper_bound = ones_count(*seed);
  auto report = solve_min_ktds(n, m, 3, cfg);
  if (report.status != SolveStatus::Optimal)
    return std::nullopt;
  return report.value;
}

} // namespace

std::vector<TableRow> build_table(int max_n, int max_m, int oracle_limit) {
  std::vector<TableRow> rows;
  for (int n = 1; n <= max_n; ++n)
    for (int m = n; m <= max_m; ++m) {
      TableRow row;
      row.n = n;
      row.m = m;
      const auto g = gamma_3t(n, m);
      row.gamma = g.value;
      row.regime = std::string(to_string(g.regime));
      const auto built = construct_min_3tds(n, m);
      if (built)
        row.construct_ones = ones_count(*built);
      if (n * m <= oracle_limit && g.feasible())
        row.oracle_value = oracle_value(n, m, built);
      rows.push_back(std::move(row));
    }
  return rows;
}

std::string render_table_json(const std::vector<TableRow> &rows) {
  auto opt = [](std::optional<int> v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json doc = nlohmann::json::array();
  for (const auto &r : rows)
    doc.push_back({{"n", r.n},
                   {"m", r.m},
                   {"gamma", opt(r.gamma)},
                   {"regime", r.regime},
                   {"construct_ones", opt(r.construct_ones)},
                   {"oracle_value", opt(r.oracle_value)}});
  return doc.dump(2) + "\n";
}

std::string render_table_csv(const std::vector<TableRow> &rows) {
  auto opt = [](std::optional<int> v) { return v ? std::to_string(*v) : std::string(); };
  std::string out = "n,m,gamma,regime,construct_ones,oracle_value\n";
  for (const auto &r : rows)
    out += std::to_string(r.n) + "," + std::to_string(r.m) + "," + opt(r.gamma) + "," +
           r.regime + "," + opt(r.construct_ones) + "," + opt(r.oracle_value) + "\n";
  return out;
}

bool CheckReport::passed() const {
  for (const auto &p : properties)
    if (!p.passed)
      return false;
  return true;
}

const PropertyResult *CheckReport::find(const std::string &name) const {
  for (const auto &p : properties)
    if (p.name == name)
      return &p;
  return nullptr;
}

CheckReport run_consistency_check(int n_max, int m_max, int oracle_limit) {
  if (n_max < 1 || m_max < n_max)
    throw std::invalid_argument("run_consistency_check: requires 1 <= n_max <= m_max");

  PropertyRecorder soundness("constructor-soundness");
  PropertyRecorder regimes("regime-consistency");
  PropertyRecorder symmetry("symmetry");
  PropertyRecorder lower("lower-bound-2n+2");
  PropertyRecorder upper("upper-bound-3n");
  PropertyRecorder three_rows("three-row-values");
  PropertyRecorder column_step("column-step");
  PropertyRecorder row_step("row-step");
  PropertyRecorder diagonal_step("diagonal-step");
  PropertyRecorder square("square-formula");
  PropertyRecorder oracle("oracle-agreement");

  for (int n = 1; n <= n_max; ++n)
    for (int m = n; m <= m_max; ++m) {
      const auto g = gamma_3t(n, m);
      const auto where = pair_str(n, m);

      const bool excluded = (n == 1 && m <= 3) || (n == 2 && m == 2);
      regimes.expect(excluded == !g.feasible() &&
                         (g.regime == Regime::NoSolution) == !g.feasible() &&
                         (g.regime != Regime::ThreeN || g.value == 3 * n),
                     [&] { return where + ": regime " + std::string(to_string(g.regime)) +
                                  " value " + opt_str(g.value); });
      symmetry.expect(gamma_3t(m, n) == g, [&] { return where; });

      const auto built = construct_min_3tds(n, m);
      soundness.expect(
          built.has_value() == g.feasible() &&
              (!built || (built->rows() == n && built->cols() == m && is_ktds(*built, 3) &&
                          ones_count(*built) == *g.value)),
          [&] { return where + ": gamma " + opt_str(g.value) + ", built " +
                       (built ? std::to_string(ones_count(*built)) + " ones, min kappa " +
                                    std::to_string(min_kappa(*built))
                              : std::string("nothing")); });

      if (n >= 2 && m >= 3) {
        const int v = g.value.value_or(0);
        upper.expect(v <= 3 * n && (m < 3 * n - 1 || v == 3 * n),
                     [&] { return where + ": gamma " + std::to_string(v); });
      }

      if (n == 3)
        three_rows.expect(g.value == (m <= 4 ? 8 : 9),
                          [&] { return where + ": gamma " + opt_str(g.value); });

      if (n >= 3) {
        const int v = *g.value;
        lower.expect(v >= 2 * n + 2, [&] { return where + ": gamma " + std::to_string(v); });

        const int right = gamma_value(n, m + 1);
        column_step.expect(v <= right && right <= v + 1, [&] {
          return where + " -> " + pair_str(n, m + 1) + ": " + std::to_string(v) + " -> " +
                 std::to_string(right);
        });

        if (m > n && v < 3 * n) {
          const int below = gamma_value(n + 1, m);
          row_step.expect(v <= below && below <= v + 2, [&] {
            return where + " -> " + pair_str(n + 1, m) + ": " + std::to_string(v) + " -> " +
                   std::to_string(below);
          });
        }

        const int diag = gamma_value(n + 1, m + 1);
        diagonal_step.expect(v + 2 <= diag && diag <= v + 3, [&] {
          return where + " -> " + pair_str(n + 1, m + 1) + ": " + std::to_string(v) + " -> " +
                 std::to_string(diag);
        });

        if (m == n)
          square.expect(gamma_3t_square(n) == v, [&] {
            return where + ": square formula " + std::to_string(gamma_3t_square(n)) +
                   ", general " + std::to_string(v);
          });
      }

      if (n * m <= oracle_limit) {
        SolverConfig cfg;
        if (built)
          cfg.initial_upper_bound = ones_count(*built);
        const auto report = solve_min_ktds(n, m, 3, cfg);
        bool ok;
        if (!g.feasible())
          ok = report.status == SolveStatus::NoSolution;
        else
          ok = report.status == SolveStatus::Optimal && report.value == g.value &&
               report.witness && is_ktds(*report.witness, 3) &&
               ones_count(*report.witness) == *report.value;
        oracle.expect(ok, [&] {
          return where + ": formula " + opt_str(g.value) + ", solver " +
                 std::string(to_string(report.status)) + " " + opt_str(report.value);
        });
      }
    }

  CheckReport report;
  for (auto *p : {&soundness, &regimes, &symmetry, &lower, &upper, &three_rows, &column_step,
                  &row_step, &diagonal_step, &square, &oracle})
    report.properties.push_back(p->take());
  return report;
}

std::string render_check_report(const CheckReport &report) {
  std::ostringstream out;
  for (const auto &p : report.properties) {
    out << (p.passed ? "PASS " : "FAIL ") << p.name << " (" << p.checked << " checks)";
    if (!p.passed)
      out << ": " << p.counterexample;
    out << "\n";
  }
  out << (report.passed() ? "all properties hold\n" : "property failures found\n");
  return out.str();
}

} // namespace rooktds
