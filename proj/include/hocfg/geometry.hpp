#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hocfg/configuration.hpp"
#include "hocfg/core.hpp"

namespace hocfg {

struct Face {
  int rank = 0;  // -1 .. 3
  std::vector<int> points;
};

/// Ranked poset of an order-2 configuration: the empty face, the points,
/// the distinct pairwise plane intersections with at least two points, the
/// planes and the full point set. Faces are stored by rank, then
/// lexicographically; index 0 is the least face and the last index the
/// greatest.
struct Polytope {
  int num_points = 0;
  std::vector<Face> faces;
  std::vector<std::vector<int>> covers;  // covers[i]: faces covering face i

  std::vector<int> faces_of_rank(int rank) const;
  /// Strict order: lower rank and subset.
  bool less(int a, int b) const;
  int least() const { return 0; }
  int greatest() const { return static_cast<int>(faces.size()) - 1; }
};

Polytope build_polytope(const Configuration& config);

struct FlagViolation {
  std::vector<int> chain;  // face indices from least to greatest
};

struct SectionViolation {
  int lower = 0;
  int upper = 0;
  std::vector<std::vector<int>> components;  // proper faces per component
};

struct DiamondViolation {
  int lower = 0;
  int upper = 0;
  std::vector<int> between;  // faces of the middle rank; size != 2
};

struct PolytopeDiagnostics {
  bool has_least_and_greatest = false;
  bool flags_have_length_four = false;
  bool sections_connected = false;
  bool diamond = false;
  std::optional<FlagViolation> flag_witness;
  std::vector<SectionViolation> section_violations;
  std::vector<DiamondViolation> diamond_violations;
};

/// Checks the four rank-3 polytope conditions. Flags are maximal chains;
/// connectivity is checked for every section of rank at least 2.
PolytopeDiagnostics polytope_diagnostics(const Polytope& p);

std::string describe_face(const Polytope& p, int face);
std::string to_string(const Polytope& p, const PolytopeDiagnostics& d);

/// All non-empty subsets of every plane; requires t = 3. Sorted by size,
/// then lexicographically.
struct SimplicialRealization {
  std::vector<std::vector<int>> simplices;
  int dimension = 2;
  std::vector<int> counts_by_size() const;  // [vertices, edges, triangles]
};

SimplicialRealization simplicial_realization(const Configuration& config);

/// Distinct pairwise plane intersections with at least two points, sorted.
std::vector<std::vector<int>> derive_lines(const Configuration& config);

struct SuperconfigurationReport {
  bool is_superconfiguration = false;
  std::optional<IncidenceProfile> point_line;  // points vs derived lines
  std::optional<IncidenceProfile> line_plane;  // derived lines vs planes
  std::string reason;
};

/// True when both (points, derived lines) and (derived lines, planes) are
/// valid order-1 configurations with all degrees at least 2.
SuperconfigurationReport is_superconfiguration(const Configuration& config);

}  // namespace hocfg
