#pragma once

// Small minimum 3TDS matrices for 2 <= n <= 11, n <= m <= 12, as printed in
// the published table of small cases (row strings, top to bottom).

#include <string_view>
#include <vector>

namespace rooktds::fixtures {

struct TableMatrix {
  int n;
  int m;
  std::vector<std::string_view> rows;
};

inline const std::vector<TableMatrix> &small_case_table() {
  static const std::vector<TableMatrix> table{
      {2, 3, {"111", "111"}},
      {2, 4, {"0111", "0111"}},
      {2, 5, {"00111", "00111"}},
      {2, 6, {"000111", "000111"}},
      {2, 7, {"0000111", "0000111"}},
      {2, 8, {"00000111", "00000111"}},
      {2, 9, {"000000111", "000000111"}},
      {2, 10, {"0000000111", "0000000111"}},
      {2, 11, {"00000000111", "00000000111"}},
      {2, 12, {"000000000111", "000000000111"}},
      {3, 3, {"011", "111", "111"}},
      {3, 4, {"0011", "0011", "1111"}},
      {3, 5, {"00111", "00111", "00111"}},
      {3, 6, {"000111", "000111", "000111"}},
      {3, 7, {"0000111", "0000111", "0000111"}},
      {3, 8, {"00000111", "00000111", "00000111"}},
      {3, 9, {"000000111", "000000111", "000000111"}},
      {3, 10, {"0000000111", "0000000111", "0000000111"}},
      {3, 11, {"00000000111", "00000000111", "00000000111"}},
      {3, 12, {"000000000111", "000000000111", "000000000111"}},
      {4, 4, {"0011", "0011", "0011", "1111"}},
      {4, 5, {"00011", "00011", "00011", "11110"}},
      {4, 6, {"000011", "000011", "000011", "111100"}},
      {4, 7, {"0000011", "0000011", "0000011", "1111100"}},
      {4, 8, {"00000111", "00000111", "00000111", "00000111"}},
      {4, 9, {"000000111", "000000111", "000000111", "000000111"}},
      {4, 10, {"0000000111", "0000000111", "0000000111", "0000000111"}},
      {4, 11, {"00000000111", "00000000111", "00000000111", "00000000111"}},
      {4, 12, {"000000000111", "000000000111", "000000000111", "000000000111"}},
      {5, 5, {"00011", "00011", "00011", "00011", "11110"}},
      {5, 6, {"000011", "000011", "000011", "000011", "111100"}},
      {5, 7, {"0000011", "0000011", "0000011", "0000011", "1111100"}},
      {5, 8, {"00000011", "00000011", "00000011", "00000011", "11111100"}},
      {5, 9, {"000000011", "000000011", "000000011", "000011110", "111100000"}},
      {5, 10, {"0000000011", "0000000011", "0000000011", "0000111100", "1111000000"}},
      {5, 11, {"00000000111", "00000000111", "00000000111", "00000000111", "00000000111"}},
      {5, 12, {"000000000111", "000000000111", "000000000111", "000000000111", "000000000111"}},
      {6, 6, {"000011", "000011", "000011", "000011", "000011", "111100"}},
      {6, 7, {"0000011", "0000011", "0000101", "0000101", "0000110", "1111000"}},
      {6, 8, {"00000011", "00000011", "00000101", "00000101", "00000110", "11111000"}},
      {6, 9, {"000000011", "000000011", "000000101", "000000101", "000000110", "111111000"}},
      {6, 10, {"0000000011", "0000000011", "0000000011", "0000000011", "0000111100", "1111000000"}},
      {6, 11, {"00000000011", "00000000011", "00000000011", "00000000011", "00000111100", "11111000000"}},
      {6, 12, {"000000000111", "000000000111", "000000000111", "000000000111", "000000000111", "000000000111"}},
      {7, 7, {"0000011", "0000011", "0000011", "0000101", "0000101", "0000110", "1111000"}},
      {7, 8, {"00000011", "00000011", "00000011", "00001100", "00001100", "00001100", "11110000"}},
      {7, 9, {"000000011", "000000011", "000000011", "000001100", "000001100", "000001100", "111110000"}},
      {7, 10, {"0000000011", "0000000011", "0000000011", "0000001100", "0000001100", "0000001100", "1111110000"}},
      {7, 11, {"00000000011", "00000000011", "00000000101", "00000000101", "00000000110", "00001111000", "11110000000"}},
      {7, 12, {"000000000011", "000000000011", "000000000101", "000000000101", "000000000110", "000001111000", "111110000000"}},
      {8, 8, {"00000011", "00000011", "00000011", "00000011", "00001100", "00001100", "00001100", "11110000"}},
      {8, 9, {"000000011", "000000011", "000000011", "000000011", "000001100", "000001100", "000001100", "111110000"}},
      {8, 10, {"0000000011", "0000000011", "0000000011", "0000000011", "0000001100", "0000001100", "0000001100", "1111110000"}},
      {8, 11, {"00000000011", "00000000011", "00000000011", "00000000101", "00000000101", "00000000110", "00001111000", "11110000000"}},
      {8, 12, {"000000000011", "000000000011", "000000000011", "000000001100", "000000001100", "000000001100", "000011110000", "111100000000"}},
      {9, 9, {"000000011", "000000011", "000000101", "000000101", "000000110", "000011000", "000011000", "000011000", "111100000"}},
      {9, 10, {"0000000011", "0000000011", "0000000101", "0000000101", "0000000110", "0000011000", "0000011000", "0000011000", "1111100000"}},
      {9, 11, {"00000000011", "00000000011", "00000000101", "00000000101", "00000000110", "00000011000", "00000011000", "00000011000", "11111100000"}},
      {9, 12, {"000000000011", "000000000011", "000000000011", "000000000011", "000000001100", "000000001100", "000000001100", "000011110000", "111100000000"}},
      {10, 10, {"0000000011", "0000000011", "0000000011", "0000001100", "0000001100", "0000001100", "0000110000", "0000110000", "0000110000", "1111000000"}},
      {10, 11, {"00000000011", "00000000011", "00000000011", "00000001100", "00000001100", "00000001100", "00000110000", "00000110000", "00000110000", "11111000000"}},
      {10, 12, {"000000000011", "000000000011", "000000000011", "000000001100", "000000001100", "000000001100", "000000110000", "000000110000", "000000110000", "111111000000"}},
      {11, 11, {"00000000011", "00000000011", "00000000011", "00000000011", "00000001100", "00000001100", "00000001100", "00000110000", "00000110000", "00000110000", "11111000000"}},
      {11, 12, {"000000000011", "000000000011", "000000000011", "000000000011", "000000001100", "000000001100", "000000001100", "000000110000", "000000110000", "000000110000", "111111000000"}},
  };
  return table;
}

} // namespace rooktds::fixtures
