#pragma once

#include "rooktds/bit_matrix.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace rooktds {

/// Malformed matrix text. line and column are 1-based; column is 0 when the
/// problem concerns a whole line.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string &what);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

enum class MatrixFormat { Grid, Pbm, Json };

MatrixFormat parse_matrix_format(std::string_view name);

/// Grid text: a header "n m" followed by n lines of m '0'/'1' characters.
BitMatrix parse_matrix_text(std::string_view text);

std::string render_matrix(const BitMatrix &m, MatrixFormat format);

} // namespace rooktds
