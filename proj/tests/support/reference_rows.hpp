#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Symmetric s = t = 3 configurations of order 2, 4 <= n <= 8, with the
// plane lists kept verbatim and the expected automorphism group.
namespace reference_rows {

struct Row {
  std::string name;
  int n;
  std::vector<std::vector<int>> planes;
  std::string group;
  std::uint64_t group_order;
};

inline const std::vector<Row>& rows() {
  static const std::vector<Row> all = {
      {"4.1", 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, "S4", 24},
      {"5.1", 5, {{1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}}, "D5", 10},
      {"6.1", 6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}}, "D6", 12},
      {"6.2", 6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}}, "Z4", 4},
      {"6.3", 6, {{1, 2, 3}, {1, 2, 4}, {1, 5, 6}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}}, "Z2×A4", 24},
      {"7.1", 7, {{1, 4, 7}, {1, 5, 6}, {1, 6, 7}, {2, 3, 6}, {2, 3, 7}, {2, 4, 5}, {3, 4, 5}}, "Z2×Z2", 4},
      {"7.2", 7, {{1, 4, 7}, {1, 5, 7}, {1, 6, 7}, {2, 3, 5}, {2, 3, 6}, {2, 4, 6}, {3, 4, 5}}, "Z2×Z2", 4},
      {"7.3", 7, {{1, 5, 6}, {1, 5, 7}, {1, 6, 7}, {2, 3, 4}, {2, 3, 7}, {2, 4, 6}, {3, 4, 5}}, "S3", 6},
      {"7.4", 7, {{1, 4, 7}, {1, 5, 6}, {1, 6, 7}, {2, 3, 5}, {2, 3, 7}, {2, 4, 6}, {3, 4, 5}}, "Z2", 2},
      {"7.5", 7, {{1, 4, 6}, {1, 5, 7}, {1, 6, 7}, {2, 3, 5}, {2, 3, 7}, {2, 4, 6}, {3, 4, 5}}, "Z2", 2},
      {"7.6", 7, {{1, 3, 7}, {1, 4, 7}, {1, 5, 7}, {2, 3, 6}, {2, 4, 6}, {2, 5, 6}, {3, 4, 5}}, "D4×S3", 48},
      {"7.7", 7, {{1, 3, 6}, {1, 4, 7}, {1, 5, 7}, {2, 3, 7}, {2, 4, 6}, {2, 5, 6}, {3, 4, 5}}, "Z2×Z2×Z2", 8},
      {"7.8", 7, {{1, 3, 5}, {1, 4, 7}, {1, 6, 7}, {2, 3, 7}, {2, 4, 6}, {2, 5, 6}, {3, 4, 5}}, "Z3", 3},
      {"7.9", 7, {{1, 4, 5}, {1, 5, 7}, {1, 6, 7}, {2, 3, 4}, {2, 3, 6}, {2, 6, 7}, {3, 4, 5}}, "D7", 14},
      {"8.1", 8, {{1, 5, 8}, {1, 6, 8}, {1, 7, 8}, {2, 3, 7}, {2, 4, 7}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}}, "Z2×Z2×Z2", 8},
      {"8.2", 8, {{1, 5, 8}, {1, 6, 7}, {1, 7, 8}, {2, 3, 8}, {2, 4, 7}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}}, "Z2", 2},
      {"8.3", 8, {{1, 6, 7}, {1, 6, 8}, {1, 7, 8}, {2, 3, 8}, {2, 4, 5}, {2, 5, 7}, {3, 4, 5}, {3, 4, 6}}, "Z2", 2},
      {"8.4", 8, {{1, 5, 8}, {1, 6, 8}, {1, 7, 8}, {2, 3, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 5}, {3, 4, 6}}, "Z2", 2},
      {"8.5", 8, {{1, 5, 8}, {1, 6, 7}, {1, 7, 8}, {2, 3, 8}, {2, 4, 6}, {2, 5, 7}, {3, 4, 5}, {3, 4, 6}}, "trivial", 1},
      {"8.6", 8, {{1, 5, 7}, {1, 6, 8}, {1, 7, 8}, {2, 3, 8}, {2, 4, 6}, {2, 5, 7}, {3, 4, 5}, {3, 4, 6}}, "trivial", 1},
      {"8.7", 8, {{1, 5, 8}, {1, 6, 7}, {1, 6, 8}, {2, 3, 8}, {2, 4, 7}, {2, 5, 7}, {3, 4, 5}, {3, 4, 6}}, "trivial", 1},
      {"8.8", 8, {{1, 5, 6}, {1, 6, 8}, {1, 7, 8}, {2, 3, 8}, {2, 4, 7}, {2, 5, 7}, {3, 4, 5}, {3, 4, 6}}, "trivial", 1},
      {"8.9", 8, {{1, 5, 7}, {1, 6, 7}, {1, 6, 8}, {2, 3, 8}, {2, 4, 8}, {2, 5, 7}, {3, 4, 5}, {3, 4, 6}}, "Z2×Z2", 4},
      {"8.10", 8, {{1, 5, 6}, {1, 6, 7}, {1, 7, 8}, {2, 3, 8}, {2, 4, 8}, {2, 5, 7}, {3, 4, 5}, {3, 4, 6}}, "Z2", 2},
      {"8.11", 8, {{1, 4, 6}, {1, 6, 8}, {1, 7, 8}, {2, 3, 7}, {2, 5, 7}, {2, 5, 8}, {3, 4, 5}, {3, 4, 6}}, "Z2", 2},
      {"8.12", 8, {{1, 4, 7}, {1, 6, 7}, {1, 6, 8}, {2, 3, 8}, {2, 5, 7}, {2, 5, 8}, {3, 4, 5}, {3, 4, 6}}, "Z2", 2},
      {"8.13", 8, {{1, 4, 6}, {1, 6, 8}, {1, 7, 8}, {2, 3, 7}, {2, 5, 6}, {2, 5, 8}, {3, 4, 5}, {3, 4, 7}}, "Z2", 2},
      {"8.14", 8, {{1, 3, 8}, {1, 4, 8}, {1, 5, 8}, {2, 5, 6}, {2, 5, 7}, {2, 6, 7}, {3, 4, 6}, {3, 4, 7}}, "Z2×Z2×Z2", 8},
      {"8.15", 8, {{1, 4, 5}, {1, 5, 7}, {1, 6, 8}, {2, 3, 8}, {2, 5, 8}, {2, 6, 7}, {3, 4, 6}, {3, 4, 7}}, "trivial", 1},
      {"8.16", 8, {{1, 4, 5}, {1, 5, 6}, {1, 7, 8}, {2, 3, 8}, {2, 5, 7}, {2, 6, 8}, {3, 4, 6}, {3, 4, 7}}, "Z2×Z2", 4},
      {"8.17", 8, {{1, 3, 7}, {1, 4, 7}, {1, 5, 8}, {2, 5, 6}, {2, 5, 8}, {2, 6, 8}, {3, 4, 6}, {3, 4, 7}}, "D4", 8},
      {"8.18", 8, {{1, 3, 7}, {1, 4, 6}, {1, 5, 8}, {2, 5, 7}, {2, 5, 8}, {2, 6, 8}, {3, 4, 6}, {3, 4, 7}}, "Z2", 2},
      {"8.19", 8, {{1, 3, 4}, {1, 5, 8}, {1, 6, 7}, {2, 5, 7}, {2, 5, 8}, {2, 6, 8}, {3, 4, 6}, {3, 4, 7}}, "D6", 12},
      {"8.20", 8, {{1, 3, 4}, {1, 5, 6}, {1, 7, 8}, {2, 5, 7}, {2, 5, 8}, {2, 6, 8}, {3, 4, 6}, {3, 4, 7}}, "Z2×Z2", 4},
      {"8.21", 8, {{1, 3, 4}, {1, 5, 7}, {1, 5, 8}, {2, 5, 8}, {2, 6, 7}, {2, 6, 8}, {3, 4, 6}, {3, 4, 7}}, "Z2×Z2", 4},
      {"8.22", 8, {{1, 4, 6}, {1, 5, 7}, {1, 5, 8}, {2, 3, 8}, {2, 5, 7}, {2, 6, 7}, {3, 4, 6}, {3, 4, 8}}, "Z4", 4},
      {"8.23", 8, {{1, 3, 7}, {1, 4, 5}, {1, 7, 8}, {2, 4, 8}, {2, 5, 8}, {2, 6, 7}, {3, 4, 6}, {3, 5, 6}}, "Z2×Z2", 4},
      {"8.24", 8, {{1, 4, 8}, {1, 5, 7}, {1, 6, 8}, {2, 3, 8}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}, "Z2", 2},
      {"8.25", 8, {{1, 4, 5}, {1, 6, 8}, {1, 7, 8}, {2, 3, 8}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}, "D4", 8},
      {"8.26", 8, {{1, 4, 5}, {1, 5, 7}, {1, 6, 8}, {2, 3, 8}, {2, 4, 8}, {2, 6, 7}, {3, 4, 7}, {3, 5, 6}}, "Z2", 2},
      {"8.27", 8, {{1, 3, 5}, {1, 5, 7}, {1, 6, 8}, {2, 4, 6}, {2, 4, 8}, {2, 7, 8}, {3, 4, 7}, {3, 5, 6}}, "Z2×Z2", 4},
      {"8.28", 8, {{1, 2, 6}, {1, 4, 8}, {1, 6, 8}, {2, 5, 6}, {2, 5, 7}, {3, 4, 7}, {3, 4, 8}, {3, 5, 7}}, "D8", 16},
      {"8.29", 8, {{1, 3, 8}, {1, 4, 8}, {1, 7, 8}, {2, 3, 7}, {2, 4, 7}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}}, "Z2×D4", 16},
      {"8.30", 8, {{1, 3, 7}, {1, 4, 7}, {1, 6, 8}, {2, 3, 8}, {2, 4, 8}, {2, 5, 7}, {3, 5, 6}, {4, 5, 6}}, "Z2×Z2×S3", 24},
      {"8.31", 8, {{1, 2, 5}, {1, 2, 6}, {1, 7, 8}, {2, 7, 8}, {3, 4, 7}, {3, 4, 8}, {3, 5, 6}, {4, 5, 6}}, "((Z2×Z2×Z2):Z4):Z2", 64},
  };
  return all;
}

}  // namespace reference_rows
