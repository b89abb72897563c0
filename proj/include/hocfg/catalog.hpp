#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hocfg/enumeration.hpp"

namespace hocfg {

/// JSON-lines catalog: one record per line with fields n, k, s, t, planes,
/// aut_order, aut_abelian, aut_name (null when unmatched), connected.
std::string catalog_to_string(const std::vector<CatalogRecord>& records);
std::vector<CatalogRecord> catalog_from_string(const std::string& text);

void write_catalog(const std::string& path, const std::vector<CatalogRecord>& records);
std::vector<CatalogRecord> read_catalog(const std::string& path);

}  // namespace hocfg
