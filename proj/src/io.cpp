#include "rooktds/io.hpp"

#include "json.hpp"

#include <charconv>
#include <vector>

namespace rooktds {

ParseError::ParseError(int line, int column, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : std::string()) +
                         ": " + what),
      line_(line), column_(column) {}

MatrixFormat parse_matrix_format(std::string_view name) {
  if (name == "grid")
    return MatrixFormat::Grid;
  if (name == "pbm")
    return MatrixFormat::Pbm;
  if (name == "json")
    return MatrixFormat::Json;
  throw std::invalid_argument("unknown matrix format '" + std::string(name) + "'");
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

int parse_dimension(std::string_view token, int column) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1)
    throw ParseError(1, column, "expected a positive integer, got '" + std::string(token) + "'");
  return value;
}

} // namespace

BitMatrix parse_matrix_text(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty())
    throw ParseError(1, 0, "empty input");

  const auto header = lines[0];
  const auto space = header.find(' ');
  if (space == std::string_view::npos)
    throw ParseError(1, 0, "header must be \"<rows> <cols>\"");
  const int n = parse_dimension(header.substr(0, space), 1);
  const int m = parse_dimension(header.substr(space + 1), static_cast<int>(space) + 2);

  if (static_cast<int>(lines.size()) - 1 < n)
    throw ParseError(static_cast<int>(lines.size()) + 1, 0,
                     "expected " + std::to_string(n) + " rows, got " +
                         std::to_string(lines.size() - 1));
  BitMatrix out(n, m);
  for (int i = 1; i <= n; ++i) {
    const auto row = lines[static_cast<std::size_t>(i)];
    const int line_no = i + 1;
    for (std::size_t c = 0; c < row.size() && static_cast<int>(c) < m; ++c) {
      if (row[c] != '0' && row[c] != '1')
        throw ParseError(line_no, static_cast<int>(c) + 1,
                         std::string("illegal character '") + row[c] + "'");
      out.set(i, static_cast<int>(c) + 1, row[c] == '1');
    }
    if (static_cast<int>(row.size()) != m)
      throw ParseError(line_no, 0,
                       "expected " + std::to_string(m) + " cells, got " +
                           std::to_string(row.size()));
  }
  for (std::size_t extra = static_cast<std::size_t>(n) + 1; extra < lines.size(); ++extra)
    if (!lines[extra].empty())
      throw ParseError(static_cast<int>(extra) + 1, 0, "unexpected content after last row");
  return out;
}

std::string render_matrix(const BitMatrix &m, MatrixFormat format) {
  std::string out;
  switch (format) {
  case MatrixFormat::Grid:
    out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (int i = 1; i <= m.rows(); ++i)
      out += m.row_string(i) + "\n";
    break;
  case MatrixFormat::Pbm:
    // P1 header carries width (columns) first.
    out = "P1\n" + std::to_string(m.cols()) + " " + std::to_string(m.rows()) + "\n";
    for (int i = 1; i <= m.rows(); ++i) {
      for (int j = 1; j <= m.cols(); ++j) {
        if (j > 1)
          out += ' ';
        out += m.at(i, j) ? '1' : '0';
      }
      out += '\n';
    }
    break;
  case MatrixFormat::Json: {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.rows(); ++i)
      rows.push_back(m.row_string(i));
    nlohmann::json doc = {{"n", m.rows()}, {"m", m.cols()}, {"rows", rows}};
    out = doc.dump() + "\n";
    break;
  }
  }
  return out;
}

} // namespace rooktds
