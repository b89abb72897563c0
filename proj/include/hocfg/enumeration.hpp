#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hocfg/configuration.hpp"
#include "hocfg/core.hpp"

namespace hocfg {

struct EnumerationSpec {
  int n = 0;
  int s = 3;
  int t = 3;
  int k = 2;
  bool connected = true;
  bool order_exact = true;
  bool allow_without_dual = false;
  std::uint64_t node_budget = 500'000'000;
  double time_budget_seconds = 3600.0;
  int jobs = 1;
};

/// One isomorphism class, stored in canonical (lex-least) labeling.
struct CatalogRecord {
  std::vector<Plane> planes;
  IncidenceProfile profile;
  std::uint64_t aut_order = 1;
  bool aut_abelian = true;
  std::optional<std::string> aut_name;
  bool connected = true;

  Configuration configuration() const;
  bool operator==(const CatalogRecord&) const = default;
};

struct EnumerationResult {
  std::vector<CatalogRecord> records;  // ascending canonical form
  bool complete = true;                // false when a budget stopped the search
  std::uint64_t nodes = 0;
};

/// Fills in profile, automorphism data and connectivity for a canonical plane list.
CatalogRecord make_record(const Configuration& canonical);

/// Isomorph-free generation by canonical augmentation: planes are added in
/// increasing lexicographic order and a partial plane list survives only if
/// it is the lex-least relabeling of itself. Output is sorted by canonical
/// form and independent of `jobs`.
EnumerationResult enumerate_symmetric(const EnumerationSpec& spec);

/// Independent oracle: scans every m-subset of the t-subsets of 1..n,
/// applies the same filters and deduplicates with the exhaustive reference
/// canonical form. Limited to n <= 6.
EnumerationResult brute_force_enumerate(const EnumerationSpec& spec);

}  // namespace hocfg
