#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hocfg/configuration.hpp"

namespace hocfg {

/// All 3-subsets of 1..n as an order-2 configuration; n >= 4.
Configuration complete_configuration(int n);

/// Order-1 n-gon with lines {i, i+1 mod n}; n >= 3.
Configuration polygon(int n);

/// The Fano plane as an order-1 configuration (lines 124, 235, ... , 713).
Configuration fano();

/// Exchanges points and planes: point j of the result is plane j of the
/// input, and each input point p becomes the plane of all planes through p.
/// Throws without_dual when s <= k and undefined when two points lie on
/// exactly the same planes (the dual would repeat a plane).
Configuration dual(const Configuration& config);

bool is_self_dual(const Configuration& config);

/// Replaces every point i of an order-1 configuration by the block
/// (i-1)d+1 .. id and every line by the union of its blocks. Any d+1 points
/// span at least two blocks, so the result is a configuration of order d
/// with profile (d*n, m, s, d*t).
Configuration simple_stack(const Configuration& config, int d);

/// Fuses line i of `a` with line pairing[i] of `b` (b's points shifted by
/// n_a). Requires equal line counts and equal point degrees. An empty
/// pairing pairs the lexicographically sorted line lists in order.
Configuration general_stack(const Configuration& a, const Configuration& b,
                            std::vector<std::size_t> pairing = {});

/// Pair (i, j) is encoded as (i-1)*n_b + j (row-major). Planes are products
/// of lines; the declared order is max(t_a, t_b).
Configuration cartesian_product(const Configuration& a, const Configuration& b);

/// A split of the points into two non-empty sides.
struct StackPartition {
  std::vector<int> first;
  std::vector<int> second;
};

struct DecomposeOptions {
  int max_points = 16;
};

/// Searches all bipartitions (the first side always holds point 1, ordered by
/// size and then lexicographically) for one whose plane traces on both sides
/// are valid order-1 configurations with one distinct line per plane.
std::optional<StackPartition> decompose_stack(const Configuration& config, const DecomposeOptions& options = {});

enum class RecipeKind { complete, polygon, fano, dual, simple_stack, general_stack, product };

/// Declarative description of a construction.
struct ConstructionRecipe {
  RecipeKind kind = RecipeKind::complete;
  int size = 0;  // n for complete/polygon
  int multiplicity = 2;
  std::vector<Configuration> operands;
  std::vector<std::size_t> pairing;
};

Configuration build(const ConstructionRecipe& recipe);

}  // namespace hocfg
