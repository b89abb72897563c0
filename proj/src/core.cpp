#include "hocfg/core.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>

#include "hocfg/error.hpp"

namespace hocfg {

namespace {

Plane intersect(const Plane& a, const Plane& b) {
  Plane out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string to_string(const IncidenceProfile& p) {
  std::ostringstream out;
  out << "n=" << p.n << " m=" << p.m << " s=" << p.s << " t=" << p.t << " k=" << p.k
      << " regular=" << (p.is_regular ? "yes" : "no") << " order_exact=" << (p.is_order_exact ? "yes" : "no")
      << " without_dual=" << (p.without_dual ? "yes" : "no");
  return out.str();
}

bool is_order_exact(const Configuration& config) {
  const auto& planes = config.planes();
  const auto k = static_cast<std::size_t>(config.order());
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      if (intersect(planes[i], planes[j]).size() >= k) return true;
    }
  }
  return false;
}

IncidenceProfile profile(const Configuration& config) {
  IncidenceProfile p;
  p.n = config.num_points();
  p.m = config.num_planes();
  p.t = config.plane_size();
  p.k = config.order();
  const auto degrees = config.point_degrees();
  p.is_regular = std::all_of(degrees.begin(), degrees.end(), [&](int d) { return d == degrees.front(); });
  p.s = p.is_regular ? degrees.front() : 0;
  p.without_dual = p.is_regular && p.s <= p.k;
  p.is_order_exact = is_order_exact(config);
  return p;
}

IncidenceProfile validate(const Configuration& config, bool allow_without_dual) {
  const auto& planes = config.planes();
  const auto k = static_cast<std::size_t>(config.order());
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      Plane common = intersect(planes[i], planes[j]);
      if (common.size() > k) {
        common.resize(k + 1);
        std::ostringstream msg;
        msg << "points {";
        for (std::size_t q = 0; q < common.size(); ++q) msg << (q ? "," : "") << common[q];
        msg << "} lie in two planes (plane " << i + 1 << " and plane " << j + 1 << ")";
        throw Error(ErrorCode::axiom_violation, msg.str(), {common, planes[i], planes[j]});
      }
    }
  }
  IncidenceProfile p = profile(config);
  if (!p.is_regular) {
    const auto degrees = config.point_degrees();
    auto other = std::find_if(degrees.begin(), degrees.end(), [&](int d) { return d != degrees.front(); });
    const int q = static_cast<int>(other - degrees.begin()) + 1;
    throw Error(ErrorCode::irregular,
                "point 1 lies on " + std::to_string(degrees.front()) + " planes but point " + std::to_string(q) +
                    " lies on " + std::to_string(*other),
                {{1}, {q}});
  }
  if (p.t <= p.k) {
    throw Error(ErrorCode::plane_too_small,
                "planes have " + std::to_string(p.t) + " points, need at least " + std::to_string(p.k + 1));
  }
  if (p.without_dual && !allow_without_dual) {
    throw Error(ErrorCode::without_dual, "each point lies on " + std::to_string(p.s) + " <= k = " +
                                             std::to_string(p.k) + " planes (configuration without dual)");
  }
  return p;
}

std::vector<IdentityCheck> check_counting_identities(const IncidenceProfile& p) {
  if (!p.is_regular) throw Error(ErrorCode::irregular, "counting identities need a regular profile");
  std::vector<IdentityCheck> checks;
  auto add = [&](std::string name, bool applicable, bool passed, std::string detail) {
    checks.push_back({std::move(name), applicable, applicable && passed, std::move(detail)});
  };
  const long long n = p.n, m = p.m, s = p.s, t = p.t, k = p.k;
  add("n*s = m*t", true, n * s == m * t, std::to_string(n * s) + (n * s == m * t ? " = " : " != ") + std::to_string(m * t));
  add("k < n-1", true, k < n - 1, std::to_string(k) + " < " + std::to_string(n - 1));
  // m >= 1 + t(s-1)/k and n >= 1 + s(t-1)/k, cleared of the division.
  add("m >= 1 + t(s-1)/k", !p.without_dual, k * (m - 1) >= t * (s - 1),
      std::to_string(k * (m - 1)) + " >= " + std::to_string(t * (s - 1)) + " (scaled by k)");
  add("n >= 1 + s(t-1)/k", !p.without_dual, k * (n - 1) >= s * (t - 1),
      std::to_string(k * (n - 1)) + " >= " + std::to_string(s * (t - 1)) + " (scaled by k)");
  return checks;
}

std::vector<int> LeviGraph::black_degrees() const {
  std::vector<int> d(num_points, 0);
  for (auto [p, e] : edges) ++d[p - 1];
  return d;
}

std::vector<int> LeviGraph::white_degrees() const {
  std::vector<int> d(num_planes, 0);
  for (auto [p, e] : edges) ++d[e - 1];
  return d;
}

LeviGraph levi_graph(const Configuration& config) {
  LeviGraph g;
  g.num_points = config.num_points();
  g.num_planes = config.num_planes();
  const auto& planes = config.planes();
  for (int e = 0; e < g.num_planes; ++e) {
    for (int p : planes[e]) g.edges.emplace_back(p, e + 1);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Configuration from_levi_graph(const LeviGraph& graph, int order) {
  std::vector<Plane> planes(graph.num_planes);
  for (auto [p, e] : graph.edges) {
    if (e < 1 || e > graph.num_planes || p < 1 || p > graph.num_points) {
      throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
    }
    planes[e - 1].push_back(p);
  }
  return Configuration(order, graph.num_points, std::move(planes));
}

std::string to_dot(const LeviGraph& graph) {
  std::ostringstream out;
  out << "graph levi {\n";
  out << "  node [shape=circle, style=filled, fixedsize=true, width=0.4, fontsize=10];\n";
  for (int p = 1; p <= graph.num_points; ++p) {
    out << "  p" << p << " [label=\"" << p << "\", fillcolor=black, fontcolor=white];\n";
  }
  for (int e = 1; e <= graph.num_planes; ++e) {
    out << "  e" << e << " [label=\"e" << e << "\", fillcolor=white, fontcolor=black];\n";
  }
  for (auto [p, e] : graph.edges) out << "  p" << p << " -- e" << e << ";\n";
  out << "}\n";
  return out.str();
}

bool is_connected(const Configuration& config) {
  const int n = config.num_points();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& plane : config.planes()) {
    for (std::size_t i = 1; i < plane.size(); ++i) parent[find(plane[i] - 1)] = find(plane[0] - 1);
  }
  const int root = find(0);
  for (int p = 1; p < n; ++p) {
    if (find(p) != root) return false;
  }
  return true;
}

}  // namespace hocfg
