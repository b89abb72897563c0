#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hocfg {

/// A k-plane: strictly increasing 1-based point indices.
using Plane = std::vector<int>;

/// Points 1..n and a set of k-planes of one common cardinality.
///
/// The constructor normalizes (each plane sorted, plane list sorted
/// lexicographically) and enforces the structural invariants: order >= 1,
/// indices in range, no repeated point inside a plane, uniform plane size,
/// pairwise distinct planes and no isolated points. The incidence axioms
/// themselves (regularity, at most one plane through k+1 points) are checked
/// by validate() so that invalid inputs can still be inspected.
class Configuration {
 public:
  Configuration(int order, int num_points, std::vector<Plane> planes);

  int order() const noexcept { return order_; }
  int num_points() const noexcept { return num_points_; }
  int num_planes() const noexcept { return static_cast<int>(planes_.size()); }
  int plane_size() const noexcept { return static_cast<int>(planes_.front().size()); }
  const std::vector<Plane>& planes() const noexcept { return planes_; }

  /// Number of planes through each point; index 0 is point 1.
  std::vector<int> point_degrees() const;

  /// Applies a relabeling; relabeling[p - 1] is the new label of point p.
  Configuration relabeled(std::span<const int> relabeling) const;

  /// Same plane set declared at another order.
  Configuration with_order(int order) const;

  bool operator==(const Configuration&) const = default;

 private:
  int order_;
  int num_points_;
  std::vector<Plane> planes_;
};

/// Parses the v1 text format (`order k`, `points n`, then `plane ...` lines;
/// '#' starts a comment). Errors carry the 1-based line number.
Configuration parse_configuration(std::string_view text);

/// Emits the v1 text format, planes in lexicographic order.
std::string serialize(const Configuration& config);

Configuration read_configuration_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);
std::string read_text_file(const std::string& path);

namespace detail {

// Bitmask view of planes; requires n <= 64.
std::vector<std::uint64_t> plane_masks(const Configuration& config);
std::uint64_t to_mask(const Plane& plane);
Plane from_mask(std::uint64_t mask);

}  // namespace detail

}  // namespace hocfg
