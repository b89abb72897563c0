#include "hocfg/catalog.hpp"

#include <sstream>

#include "json.hpp"

#include "hocfg/error.hpp"

namespace hocfg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const CatalogRecord& r) {
  ordered_json j;
  j["n"] = r.profile.n;
  j["k"] = r.profile.k;
  j["s"] = r.profile.s;
  j["t"] = r.profile.t;
  j["planes"] = r.planes;
  j["aut_order"] = r.aut_order;
  j["aut_abelian"] = r.aut_abelian;
  j["aut_name"] = r.aut_name ? ordered_json(*r.aut_name) : ordered_json(nullptr);
  j["connected"] = r.connected;
  return j;
}

CatalogRecord from_json(const ordered_json& j) {
  if (!j.is_object()) throw std::runtime_error("record is not a JSON object");
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  Configuration config(k, n, j.at("planes").get<std::vector<Plane>>());
  CatalogRecord r;
  r.planes = config.planes();
  r.profile = profile(config);
  if (r.planes != j.at("planes").get<std::vector<Plane>>()) {
    throw std::runtime_error("planes are not in sorted canonical order");
  }
  if (r.profile.s != j.at("s").get<int>() || r.profile.t != j.at("t").get<int>()) {
    throw std::runtime_error("s/t disagree with the plane list");
  }
  r.aut_order = j.at("aut_order").get<std::uint64_t>();
  r.aut_abelian = j.at("aut_abelian").get<bool>();
  const auto& name = j.at("aut_name");
  if (!name.is_null()) r.aut_name = name.get<std::string>();
  r.connected = j.at("connected").get<bool>();
  return r;
}

}  // namespace

std::string catalog_to_string(const std::vector<CatalogRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::vector<CatalogRecord> catalog_from_string(const std::string& text) {
  std::vector<CatalogRecord> records;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(from_json(ordered_json::parse(line)));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::parse, "catalog record " + std::to_string(records.size()) + " (line " +
                                        std::to_string(line_no) + "): " + e.what());
    }
  }
  return records;
}

void write_catalog(const std::string& path, const std::vector<CatalogRecord>& records) {
  write_text_file(path, catalog_to_string(records));
}

std::vector<CatalogRecord> read_catalog(const std::string& path) {
  return catalog_from_string(read_text_file(path));
}

}  // namespace hocfg
