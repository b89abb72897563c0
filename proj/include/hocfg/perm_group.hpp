#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hocfg {

/// Permutation of the points 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  /// images[p - 1] is the image of point p.
  explicit Permutation(std::vector<int> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Element order in the group.
  std::uint64_t order() const;

  /// Cycle notation, fixed points omitted: "(1 2 3)(4 5)"; identity is "()".
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Product applying `first` and then `second`.
Permutation compose(const Permutation& first, const Permutation& second);

/// Parses cycle notation such as "(1 2 3)(4 5)" on the points 1..degree.
Permutation parse_cycles(std::string_view text, int degree);

struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::uint64_t order = 1;

  /// True iff all generators commute pairwise.
  bool is_abelian() const;
};

struct GroupFingerprint {
  std::uint64_t order = 1;
  bool abelian = true;
  /// element order -> number of elements of that order
  std::map<std::uint64_t, std::uint64_t> element_orders;

  bool operator==(const GroupFingerprint&) const = default;
};

std::string to_string(const GroupFingerprint& fp);

/// Expands the group from its generators. Throws budget_exceeded when the
/// group has more than `max_elements` elements.
GroupFingerprint group_fingerprint(const PermGroup& group, std::uint64_t max_elements = 100000);

struct NamedGroup {
  std::string name;
  int degree;
  std::vector<std::string> generators;  // cycle notation
};

/// The groups that appear as automorphism groups of the symmetric s = 3
/// configurations with 4 <= n <= 8, each given by explicit generators.
const std::vector<NamedGroup>& named_groups();

/// Fingerprints of named_groups(), computed by expansion on first use.
const std::vector<std::pair<std::string, GroupFingerprint>>& named_group_fingerprints();

std::optional<std::string> match_named_group(const GroupFingerprint& fp);

}  // namespace hocfg
