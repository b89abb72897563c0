#include "hocfg/configuration.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "hocfg/error.hpp"

namespace hocfg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "parse error";
    case ErrorCode::axiom_violation: return "axiom violation";
    case ErrorCode::irregular: return "irregular configuration";
    case ErrorCode::without_dual: return "configuration without dual";
    case ErrorCode::plane_too_small: return "plane too small for order";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::budget_exceeded: return "budget exceeded";
    case ErrorCode::undefined: return "undefined";
    case ErrorCode::io: return "i/o error";
  }
  return "unknown error";
}

namespace {

std::string format_plane(const Plane& plane) {
  std::string out = "{";
  for (std::size_t i = 0; i < plane.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(plane[i]);
  }
  return out + "}";
}

}  // namespace

Configuration::Configuration(int order, int num_points, std::vector<Plane> planes)
    : order_(order), num_points_(num_points), planes_(std::move(planes)) {
  if (order_ < 1) {
    throw Error(ErrorCode::invalid_argument, "order must be at least 1, got " + std::to_string(order_));
  }
  if (num_points_ < 1) {
    throw Error(ErrorCode::invalid_argument, "a configuration needs at least one point");
  }
  if (planes_.empty()) {
    throw Error(ErrorCode::invalid_argument, "a configuration needs at least one plane");
  }
  const std::size_t size = planes_.front().size();
  std::vector<int> degree(num_points_, 0);
  for (auto& plane : planes_) {
    std::sort(plane.begin(), plane.end());
    if (plane.size() != size) {
      throw Error(ErrorCode::invalid_argument,
                  "plane " + format_plane(plane) + " has " + std::to_string(plane.size()) +
                      " points, expected " + std::to_string(size),
                  {plane});
    }
    if (std::adjacent_find(plane.begin(), plane.end()) != plane.end()) {
      throw Error(ErrorCode::invalid_argument, "plane " + format_plane(plane) + " repeats a point", {plane});
    }
    for (int p : plane) {
      if (p < 1 || p > num_points_) {
        throw Error(ErrorCode::invalid_argument,
                    "point " + std::to_string(p) + " outside 1.." + std::to_string(num_points_), {plane});
      }
      ++degree[p - 1];
    }
  }
  std::sort(planes_.begin(), planes_.end());
  if (auto dup = std::adjacent_find(planes_.begin(), planes_.end()); dup != planes_.end()) {
    throw Error(ErrorCode::invalid_argument, "duplicate plane " + format_plane(*dup), {*dup});
  }
  for (int p = 0; p < num_points_; ++p) {
    if (degree[p] == 0) {
      throw Error(ErrorCode::invalid_argument, "point " + std::to_string(p + 1) + " lies in no plane", {{p + 1}});
    }
  }
}

std::vector<int> Configuration::point_degrees() const {
  std::vector<int> degree(num_points_, 0);
  for (const auto& plane : planes_) {
    for (int p : plane) ++degree[p - 1];
  }
  return degree;
}

Configuration Configuration::relabeled(std::span<const int> relabeling) const {
  if (static_cast<int>(relabeling.size()) != num_points_) {
    throw Error(ErrorCode::invalid_argument, "relabeling has wrong length");
  }
  std::vector<char> seen(num_points_ + 1, 0);
  for (int label : relabeling) {
    if (label < 1 || label > num_points_ || seen[label]) {
      throw Error(ErrorCode::invalid_argument, "relabeling is not a permutation of 1..n");
    }
    seen[label] = 1;
  }
  std::vector<Plane> planes;
  planes.reserve(planes_.size());
  for (const auto& plane : planes_) {
    Plane image;
    image.reserve(plane.size());
    for (int p : plane) image.push_back(relabeling[p - 1]);
    planes.push_back(std::move(image));
  }
  return Configuration(order_, num_points_, std::move(planes));
}

Configuration Configuration::with_order(int order) const {
  return Configuration(order, num_points_, planes_);
}

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

int parse_header(const Line& line, std::string_view keyword) {
  if (line.tokens.size() != 2 || line.tokens[0] != keyword) {
    fail(line.number, "expected '" + std::string(keyword) + " <integer>'");
  }
  return parse_int(line.tokens[1], line.number);
}

}  // namespace

Configuration parse_configuration(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.size() < 2) throw Error(ErrorCode::parse, "missing 'order' and 'points' header lines");
  const int order = parse_header(lines[0], "order");
  if (order < 1) fail(lines[0].number, "order must be at least 1");
  const int n = parse_header(lines[1], "points");
  if (n < 1) fail(lines[1].number, "points must be at least 1");

  std::vector<Plane> planes;
  std::map<Plane, int> first_seen;
  std::size_t size = 0;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "plane") fail(line.number, "unknown keyword '" + std::string(line.tokens[0]) + "'");
    if (line.tokens.size() < 2) fail(line.number, "plane has no points");
    Plane plane;
    for (std::size_t j = 1; j < line.tokens.size(); ++j) {
      int p = parse_int(line.tokens[j], line.number);
      if (p < 1 || p > n) {
        fail(line.number, "point index " + std::to_string(p) + " out of range 1.." + std::to_string(n));
      }
      plane.push_back(p);
    }
    std::sort(plane.begin(), plane.end());
    if (std::adjacent_find(plane.begin(), plane.end()) != plane.end()) {
      fail(line.number, "plane repeats a point");
    }
    if (planes.empty()) {
      size = plane.size();
    } else if (plane.size() != size) {
      fail(line.number, "plane cardinality " + std::to_string(plane.size()) + " differs from " + std::to_string(size));
    }
    if (auto [it, inserted] = first_seen.emplace(plane, line.number); !inserted) {
      fail(line.number, "duplicate plane " + format_plane(plane) + " (first on line " + std::to_string(it->second) + ")");
    }
    planes.push_back(std::move(plane));
  }
  if (planes.empty()) throw Error(ErrorCode::parse, "no planes");
  std::vector<char> used(n + 1, 0);
  for (const auto& plane : planes) {
    for (int p : plane) used[p] = 1;
  }
  for (int p = 1; p <= n; ++p) {
    if (!used[p]) throw Error(ErrorCode::parse, "point " + std::to_string(p) + " lies in no plane");
  }
  return Configuration(order, n, std::move(planes));
}

std::string serialize(const Configuration& config) {
  std::ostringstream out;
  out << "order " << config.order() << '\n' << "points " << config.num_points() << '\n';
  for (const auto& plane : config.planes()) {
    out << "plane";
    for (int p : plane) out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::io, "write to '" + path + "' failed");
}

Configuration read_configuration_file(const std::string& path) {
  return parse_configuration(read_text_file(path));
}

namespace detail {

std::uint64_t to_mask(const Plane& plane) {
  std::uint64_t mask = 0;
  for (int p : plane) mask |= std::uint64_t{1} << (p - 1);
  return mask;
}

Plane from_mask(std::uint64_t mask) {
  Plane plane;
  while (mask) {
    plane.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return plane;
}

std::vector<std::uint64_t> plane_masks(const Configuration& config) {
  if (config.num_points() > 64) {
    throw Error(ErrorCode::budget_exceeded, "operation supports at most 64 points");
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(config.planes().size());
  for (const auto& plane : config.planes()) masks.push_back(to_mask(plane));
  return masks;
}

}  // namespace detail

}  // namespace hocfg
