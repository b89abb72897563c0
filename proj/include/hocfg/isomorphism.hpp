#pragma once

#include <cstdint>
#include <vector>

#include "hocfg/configuration.hpp"
#include "hocfg/perm_group.hpp"

namespace hocfg {

/// The lexicographically least sorted plane list over all relabelings of
/// the points, together with a relabeling that produces it.
struct CanonicalForm {
  std::vector<Plane> planes;
  /// relabeling[p - 1] is the canonical label of input point p.
  std::vector<int> relabeling;

  bool operator==(const CanonicalForm& other) const { return planes == other.planes; }
};

/// Branch-and-bound search over labelings, pruned by partial comparison
/// against the best labeling found so far and by automorphisms discovered
/// along the way. Agrees exactly with reference_canonical_form().
CanonicalForm canonical_form(const Configuration& config);

/// Exhaustive scan of all n! relabelings. Throws budget_exceeded for n > 10.
CanonicalForm reference_canonical_form(const Configuration& config);

/// The configuration rewritten in canonical labels.
Configuration canonical_configuration(const Configuration& config);

bool are_isomorphic(const Configuration& a, const Configuration& b);

struct AutomorphismOptions {
  std::uint64_t node_budget = 200'000'000;
};

/// Full stabilizer of the plane set in the symmetric group on the points,
/// as a strong generating set (stabilizer chain along base 1, 2, ..., n)
/// plus its exact order.
PermGroup automorphism_group(const Configuration& config, const AutomorphismOptions& options = {});

namespace detail {

// Orderly-generation test: true iff `masks`, sorted ascending by their point
// tuples, is already the lexicographically least relabeling of itself.
// Points need not all be covered.
bool is_lex_min(int num_points, int plane_size, const std::vector<std::uint64_t>& masks);

}  // namespace detail

}  // namespace hocfg
