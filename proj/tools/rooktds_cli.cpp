#include "rooktds/check.hpp"
#include "rooktds/construct.hpp"
#include "rooktds/formulas.hpp"
#include "rooktds/io.hpp"
#include "rooktds/solver.hpp"
#include "rooktds/tds.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

std::string component_line(const rooktds::ComponentReport &c) {
  std::ostringstream out;
  out << c.row_indices.size() << "x" << c.col_indices.size() << " ones=" << c.ones << " rows={";
  for (std::size_t i = 0; i < c.row_indices.size(); ++i)
    out << (i ? "," : "") << c.row_indices[i];
  out << "} cols={";
  for (std::size_t j = 0; j < c.col_indices.size(); ++j)
    out << (j ? "," : "") << c.col_indices[j];
  out << "}";
  return out.str();
}

int write_output(const std::string &text, const std::string &path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  file << text;
  return file ? 0 : kExitIo;
}

} // namespace

int main(int argc, char **argv) {
  using namespace rooktds;

  CLI::App app{"3-tuple total domination in rook's graphs Kn x Km"};
  app.require_subcommand(1);

  int n = 0, m = 0, k = 3;

  auto *gamma_cmd = app.add_subcommand("gamma", "Closed-form value and regime");
  gamma_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  gamma_cmd->add_option("m", m)->required()->check(CLI::PositiveNumber);

  std::string format = "grid", output;
  auto *construct_cmd = app.add_subcommand("construct", "Build a minimum 3TDS matrix");
  construct_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("m", m)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--format", format)->check(CLI::IsMember({"grid", "pbm", "json"}));
  construct_cmd->add_option("-o,--output", output, "Write to FILE instead of stdout");

  std::string input;
  auto *verify_cmd = app.add_subcommand("verify", "Check a grid-format matrix file");
  verify_cmd->add_option("file", input)->required();
  verify_cmd->add_option("--k", k)->check(CLI::PositiveNumber);

  double time_budget = 0;
  std::uint64_t node_budget = 0;
  bool seed_upper = false;
  auto *solve_cmd = app.add_subcommand("solve", "Exact branch-and-bound minimum");
  solve_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("m", m)->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--time-budget", time_budget, "Seconds")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--node-budget", node_budget)->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--seed-upper-bound", seed_upper,
                      "Start from the constructed matrix's ones count (k = 3 only)");

  int max_n = 0, max_m = 0, oracle_limit = 0;
  std::string table_format = "json";
  auto *table_cmd = app.add_subcommand("table", "Value table for 1 <= n <= m");
  table_cmd->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--max-m", max_m)->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));
  table_cmd->add_option("--oracle-limit", oracle_limit,
                        "Solve exactly when n*m <= CELLS (default 0: never)");

  auto *check_cmd = app.add_subcommand("check", "Consistency harness");
  check_cmd->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-m", max_m)->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("--oracle-limit", oracle_limit, "Solve exactly when n*m <= CELLS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitIo;
  }

  try {
    if (*gamma_cmd) {
      const auto g = gamma_3t(n, m);
      if (!g.feasible())
        std::cout << "no 3TDS exists\n";
      else
        std::cout << *g.value << " " << to_string(g.regime) << "\n";
      return 0;
    }

    if (*construct_cmd) {
      const auto built = construct_min_3tds(n, m);
      if (!built) {
        std::cout << "no 3TDS exists\n";
        return 0;
      }
      return write_output(render_matrix(*built, parse_matrix_format(format)), output);
    }

    if (*verify_cmd) {
      std::ifstream file(input, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot read " << input << "\n";
        return kExitIo;
      }
      std::ostringstream buffer;
      buffer << file.rdbuf();
      BitMatrix matrix(1, 1);
      try {
        matrix = parse_matrix_text(buffer.str());
      } catch (const ParseError &e) {
        std::cerr << input << ": " << e.what() << "\n";
        return kExitIo;
      }
      const bool ok = is_ktds(matrix, k);
      std::cout << "ktds(k=" << k << "): " << (ok ? "yes" : "no") << "\n";
      std::cout << "ones: " << ones_count(matrix) << "\n";
      std::cout << "min kappa: " << min_kappa(matrix) << "\n";
      const auto comps = components(matrix);
      std::cout << "components: " << comps.size() << "\n";
      for (const auto &c : comps)
        std::cout << "  " << component_line(c) << "\n";
      return ok ? 0 : kExitDomain;
    }

    if (*solve_cmd) {
      SolverConfig cfg;
      if (time_budget > 0)
        cfg.time_budget = std::chrono::duration<double>(time_budget);
      if (node_budget > 0)
        cfg.node_budget = node_budget;
      if (seed_upper && k == 3)
        if (auto built = construct_min_3tds(n, m))
          cfg.initial_upper_bound = ones_count(*built);
      const auto report = solve_min_ktds(n, m, k, cfg);
      std::cout << "status: " << to_string(report.status) << "\n";
      if (report.status == SolveStatus::NoSolution)
        std::cout << "no " << k << "TDS exists\n";
      if (report.value)
        std::cout << "value: " << *report.value << "\n";
      std::cout << "nodes: " << report.nodes_explored << "\n";
      if (report.witness)
        std::cout << render_matrix(*report.witness, MatrixFormat::Grid);
      return report.status == SolveStatus::Aborted ? kExitDomain : 0;
    }

    if (*table_cmd) {
      if (max_m < max_n) {
        std::cerr << "error: --max-m must be at least --max-n\n";
        return kExitDomain;
      }
      const auto rows = build_table(max_n, max_m, oracle_limit);
      std::cout << (table_format == "csv" ? render_table_csv(rows) : render_table_json(rows));
      return 0;
    }

    if (*check_cmd) {
      if (max_m < max_n) {
        std::cerr << "error: --max-m must be at least --max-n\n";
        return kExitDomain;
      }
      const auto report = run_consistency_check(max_n, max_m, oracle_limit);
      std::cout << render_check_report(report);
      return report.passed() ? 0 : kExitDomain;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
