#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hocfg/configuration.hpp"

namespace hocfg {

/// The incidence parameters (n, m, s, t, k) of a configuration.
///
/// `s` is the common plane-degree of the points when the configuration is
/// regular and 0 otherwise.
struct IncidenceProfile {
  int n = 0;
  int m = 0;
  int s = 0;
  int t = 0;
  int k = 0;
  bool is_regular = false;
  bool is_order_exact = false;
  bool without_dual = false;

  bool operator==(const IncidenceProfile&) const = default;
};

std::string to_string(const IncidenceProfile& profile);

IncidenceProfile profile(const Configuration& config);

/// Checks the order-k axioms and returns the profile.
///
/// Throws Error with code axiom_violation (witness: the k+1 points, then the
/// two planes), irregular (witness: two points or planes of unequal degree),
/// plane_too_small (t <= k) or without_dual (s <= k and not allowed).
IncidenceProfile validate(const Configuration& config, bool allow_without_dual = false);

/// True iff some k distinct points lie on at least two planes.
bool is_order_exact(const Configuration& config);

struct IdentityCheck {
  std::string name;
  bool applicable = true;
  bool passed = false;
  std::string detail;
};

/// Evaluates n*s = m*t, k < n-1 and the lower bounds on m and n. The bounds
/// are marked not applicable for configurations without dual. Requires a
/// regular profile.
std::vector<IdentityCheck> check_counting_identities(const IncidenceProfile& profile);

/// Bipartite incidence graph. Black vertices are the points 1..n, white
/// vertices the planes 1..m in lexicographic order. Edges are (point, plane)
/// pairs, sorted by point then plane.
struct LeviGraph {
  int num_points = 0;
  int num_planes = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> black_degrees() const;
  std::vector<int> white_degrees() const;
};

LeviGraph levi_graph(const Configuration& config);

/// Rebuilds the configuration from an incidence graph.
Configuration from_levi_graph(const LeviGraph& graph, int order);

/// Graphviz rendering: points p1..pn filled black, planes e1..em white.
std::string to_dot(const LeviGraph& graph);

bool is_connected(const Configuration& config);

}  // namespace hocfg
