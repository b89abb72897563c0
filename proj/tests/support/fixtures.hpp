#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hocfg/configuration.hpp"
#include "reference_rows.hpp"

namespace fixtures {

inline hocfg::Configuration row(const reference_rows::Row& r) { return hocfg::Configuration(2, r.n, r.planes); }

inline hocfg::Configuration row(const std::string& name) {
  for (const auto& r : reference_rows::rows()) {
    if (r.name == name) return row(r);
  }
  throw std::runtime_error("no row " + name);
}

inline hocfg::Configuration tetrahedron() {
  return hocfg::Configuration(2, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

// 12 points on the edges of a tetrahedron, four planes of six.
inline hocfg::Configuration twelve_point() {
  return hocfg::Configuration(
      2, 12, {{1, 2, 3, 7, 8, 9}, {3, 4, 5, 9, 10, 11}, {2, 5, 6, 8, 11, 12}, {1, 4, 6, 7, 10, 12}});
}

// Three spine lines {1,2}, {6,7}, {8,9}, each on three planes.
inline hocfg::Configuration three_spines() {
  return hocfg::Configuration(2, 9,
                              {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {3, 6, 7}, {4, 6, 7}, {5, 6, 7}, {3, 8, 9}, {4, 8, 9},
                               {5, 8, 9}});
}

inline hocfg::Configuration four_line() { return hocfg::Configuration(1, 6, {{1, 2, 3}, {1, 4, 5}, {3, 4, 6}, {2, 5, 6}}); }

inline hocfg::Configuration stacked_four_line_listed() {
  return hocfg::Configuration(
      2, 12, {{1, 7, 2, 8, 3, 9}, {1, 7, 4, 10, 5, 11}, {3, 9, 4, 10, 6, 12}, {2, 8, 5, 11, 6, 12}});
}

inline hocfg::Configuration square() { return hocfg::Configuration(1, 4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

inline hocfg::Configuration four_line_on_5_to_10() {
  return hocfg::Configuration(1, 6, {{1, 2, 3}, {1, 4, 5}, {2, 5, 6}, {3, 4, 6}});
}

inline hocfg::Configuration square_plus_four_line_listed() {
  return hocfg::Configuration(2, 10, {{1, 2, 5, 6, 7}, {2, 3, 5, 8, 9}, {3, 4, 6, 9, 10}, {1, 4, 7, 8, 10}});
}

inline hocfg::Configuration two_tetrahedra() {
  return hocfg::Configuration(2, 8,
                              {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {6, 7, 8}});
}

inline std::vector<int> random_relabeling(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Counts automorphisms by testing every permutation of the points.
inline std::uint64_t brute_automorphism_count(const hocfg::Configuration& c) {
  std::vector<int> perm(c.num_points());
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    if (c.relabeled(perm).planes() == c.planes()) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace fixtures
