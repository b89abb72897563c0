#include "hocfg/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hocfg/error.hpp"

namespace hocfg {

namespace {

void require_order_two(const Configuration& config) {
  if (config.order() != 2) throw Error(ErrorCode::invalid_argument, "an order-2 configuration is required");
  validate(config, true);
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "}";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<int> Polytope::faces_of_rank(int rank) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].rank == rank) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool Polytope::less(int a, int b) const {
  const Face& fa = faces[a];
  const Face& fb = faces[b];
  return fa.rank < fb.rank && std::includes(fb.points.begin(), fb.points.end(), fa.points.begin(), fa.points.end());
}

std::vector<std::vector<int>> derive_lines(const Configuration& config) {
  require_order_two(config);
  std::set<std::vector<int>> lines;
  const auto& planes = config.planes();
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      auto common = intersect(planes[i], planes[j]);
      if (common.size() >= 2) lines.insert(std::move(common));
    }
  }
  return {lines.begin(), lines.end()};
}

Polytope build_polytope(const Configuration& config) {
  Polytope p;
  p.num_points = config.num_points();
  p.faces.push_back({-1, {}});
  for (int i = 1; i <= p.num_points; ++i) p.faces.push_back({0, {i}});
  for (auto& line : derive_lines(config)) p.faces.push_back({1, std::move(line)});
  for (const auto& plane : config.planes()) p.faces.push_back({2, plane});
  std::vector<int> all(p.num_points);
  std::iota(all.begin(), all.end(), 1);
  p.faces.push_back({3, std::move(all)});

  const int f = static_cast<int>(p.faces.size());
  p.covers.assign(f, {});
  for (int a = 0; a < f; ++a) {
    for (int b = 0; b < f; ++b) {
      if (!p.less(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < f && direct; ++c) {
        if (p.less(a, c) && p.less(c, b)) direct = false;
      }
      if (direct) p.covers[a].push_back(b);
    }
  }
  return p;
}

PolytopeDiagnostics polytope_diagnostics(const Polytope& p) {
  PolytopeDiagnostics d;
  const int f = static_cast<int>(p.faces.size());

  d.has_least_and_greatest = true;
  for (int i = 0; i < f; ++i) {
    if (i != p.least() && !p.less(p.least(), i)) d.has_least_and_greatest = false;
    if (i != p.greatest() && !p.less(i, p.greatest())) d.has_least_and_greatest = false;
  }

  // Every maximal chain is a path of covers from least to greatest, so all
  // flags have length 4 exactly when every cover raises the rank by one.
  std::vector<std::vector<int>> covered_by(f);
  for (int a = 0; a < f; ++a) {
    for (int b : p.covers[a]) covered_by[b].push_back(a);
  }
  d.flags_have_length_four = true;
  for (int a = 0; a < f && d.flags_have_length_four; ++a) {
    for (int b : p.covers[a]) {
      if (p.faces[b].rank - p.faces[a].rank == 1) continue;
      d.flags_have_length_four = false;
      std::vector<int> chain;
      for (int x = a;; x = covered_by[x].front()) {
        chain.push_back(x);
        if (covered_by[x].empty()) break;
      }
      std::reverse(chain.begin(), chain.end());
      for (int x = b;; x = p.covers[x].front()) {
        chain.push_back(x);
        if (p.covers[x].empty()) break;
      }
      d.flag_witness = FlagViolation{std::move(chain)};
      break;
    }
  }

  for (int lo = 0; lo < f; ++lo) {
    for (int hi = 0; hi < f; ++hi) {
      if (!p.less(lo, hi)) continue;
      const int gap = p.faces[hi].rank - p.faces[lo].rank;
      std::vector<int> inside;
      for (int h = 0; h < f; ++h) {
        if (p.less(lo, h) && p.less(h, hi)) inside.push_back(h);
      }
      if (gap == 2) {
        std::vector<int> middle;
        for (int h : inside) {
          if (p.faces[h].rank == p.faces[lo].rank + 1) middle.push_back(h);
        }
        if (middle.size() != 2) d.diamond_violations.push_back({lo, hi, std::move(middle)});
      }
      if (gap >= 3) {
        UnionFind uf(inside.size());
        for (std::size_t i = 0; i < inside.size(); ++i) {
          for (std::size_t j = i + 1; j < inside.size(); ++j) {
            if (p.less(inside[i], inside[j]) || p.less(inside[j], inside[i])) uf.unite(int(i), int(j));
          }
        }
        std::vector<std::vector<int>> components;
        std::vector<int> slot(inside.size(), -1);
        for (std::size_t i = 0; i < inside.size(); ++i) {
          const int root = uf.find(int(i));
          if (slot[root] < 0) {
            slot[root] = static_cast<int>(components.size());
            components.emplace_back();
          }
          components[slot[root]].push_back(inside[i]);
        }
        if (components.size() > 1) d.section_violations.push_back({lo, hi, std::move(components)});
      }
    }
  }
  d.sections_connected = d.section_violations.empty();
  d.diamond = d.diamond_violations.empty();
  return d;
}

std::string describe_face(const Polytope& p, int face) {
  if (face == p.least()) return "F-1";
  if (face == p.greatest()) return "F3";
  return join(p.faces[face].points);
}

std::string to_string(const Polytope& p, const PolytopeDiagnostics& d) {
  std::string out = "faces by rank:";
  for (int r = -1; r <= 3; ++r) out += " " + std::to_string(p.faces_of_rank(r).size());
  out += "\nrank-1 faces:";
  for (int i : p.faces_of_rank(1)) out += " " + describe_face(p, i);
  out += "\nleast and greatest face: ";
  out += d.has_least_and_greatest ? "pass" : "fail";
  out += "\nflags of length 4: ";
  if (d.flags_have_length_four) {
    out += "pass";
  } else {
    out += "fail, e.g.";
    for (std::size_t i = 0; i < d.flag_witness->chain.size(); ++i) {
      out += (i ? " < " : " ") + describe_face(p, d.flag_witness->chain[i]);
    }
  }
  out += "\nsections connected: ";
  if (d.sections_connected) {
    out += "pass";
  } else {
    const auto& v = d.section_violations.front();
    out += "fail, " + std::to_string(d.section_violations.size()) + " section(s), e.g. " + describe_face(p, v.upper) +
           "/" + describe_face(p, v.lower) + " has " + std::to_string(v.components.size()) + " components";
  }
  out += "\ndiamond condition: ";
  if (d.diamond) {
    out += "pass";
  } else {
    const auto& v = d.diamond_violations.front();
    out += "fail, " + std::to_string(d.diamond_violations.size()) + " pair(s), e.g. " + describe_face(p, v.lower) +
           " < " + describe_face(p, v.upper) + " with " + std::to_string(v.between.size()) + " faces between";
  }
  out += '\n';
  return out;
}

std::vector<int> SimplicialRealization::counts_by_size() const {
  std::vector<int> counts(3, 0);
  for (const auto& s : simplices) ++counts[s.size() - 1];
  return counts;
}

SimplicialRealization simplicial_realization(const Configuration& config) {
  if (config.plane_size() != 3) {
    throw Error(ErrorCode::invalid_argument,
                "simplicial realization needs planes of 3 points, got " + std::to_string(config.plane_size()));
  }
  std::set<std::vector<int>> all;
  for (const auto& plane : config.planes()) {
    for (unsigned mask = 1; mask < 8; ++mask) {
      std::vector<int> s;
      for (int i = 0; i < 3; ++i) {
        if (mask >> i & 1) s.push_back(plane[i]);
      }
      all.insert(std::move(s));
    }
  }
  SimplicialRealization r;
  r.simplices.assign(all.begin(), all.end());
  std::stable_sort(r.simplices.begin(), r.simplices.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return r;
}

namespace {

std::optional<IncidenceProfile> order_one_profile(int num_points, std::vector<Plane> lines, std::string& reason,
                                                  const std::string& what) {
  try {
    Configuration c(1, num_points, std::move(lines));
    return validate(c);
  } catch (const Error& e) {
    reason = what + ": " + e.what();
    return std::nullopt;
  }
}

}  // namespace

SuperconfigurationReport is_superconfiguration(const Configuration& config) {
  SuperconfigurationReport report;
  const auto lines = derive_lines(config);
  if (lines.empty()) {
    report.reason = "no two planes share two points";
    return report;
  }
  report.point_line = order_one_profile(config.num_points(), lines, report.reason, "points and lines");
  if (!report.point_line) return report;

  std::vector<Plane> contained;
  for (const auto& plane : config.planes()) {
    Plane inside;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      if (std::includes(plane.begin(), plane.end(), lines[l].begin(), lines[l].end())) {
        inside.push_back(static_cast<int>(l) + 1);
      }
    }
    contained.push_back(std::move(inside));
  }
  report.line_plane =
      order_one_profile(static_cast<int>(lines.size()), std::move(contained), report.reason, "lines and planes");
  report.is_superconfiguration = report.line_plane.has_value();
  return report;
}

}  // namespace hocfg
