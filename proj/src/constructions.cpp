#include "hocfg/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hocfg/core.hpp"
#include "hocfg/error.hpp"
#include "hocfg/isomorphism.hpp"

namespace hocfg {

Configuration complete_configuration(int n) {
  if (n < 4) throw Error(ErrorCode::invalid_argument, "complete configuration needs n >= 4");
  std::vector<Plane> planes;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) planes.push_back({a, b, c});
    }
  }
  return Configuration(2, n, std::move(planes));
}

Configuration polygon(int n) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "polygon needs n >= 3");
  std::vector<Plane> lines;
  for (int i = 1; i <= n; ++i) lines.push_back({i, i % n + 1});
  return Configuration(1, n, std::move(lines));
}

Configuration fano() {
  return Configuration(1, 7, {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}});
}

Configuration dual(const Configuration& config) {
  const IncidenceProfile p = profile(config);
  if (!p.is_regular) throw Error(ErrorCode::irregular, "dual needs a regular configuration");
  if (p.s <= p.k) {
    throw Error(ErrorCode::without_dual, "each point lies on only " + std::to_string(p.s) +
                                             " planes; the dual would have planes of size <= k");
  }
  std::vector<Plane> stars(config.num_points());
  const auto& planes = config.planes();
  for (std::size_t e = 0; e < planes.size(); ++e) {
    for (int point : planes[e]) stars[point - 1].push_back(static_cast<int>(e) + 1);
  }
  std::map<Plane, int> seen;
  for (int point = 1; point <= config.num_points(); ++point) {
    if (auto [it, inserted] = seen.emplace(stars[point - 1], point); !inserted) {
      throw Error(ErrorCode::undefined,
                  "points " + std::to_string(it->second) + " and " + std::to_string(point) +
                      " lie on the same planes; the dual would repeat a plane",
                  {{it->second, point}});
    }
  }
  return Configuration(config.order(), config.num_planes(), std::move(stars));
}

bool is_self_dual(const Configuration& config) {
  Configuration d = dual(config);
  return are_isomorphic(config, d);
}

Configuration simple_stack(const Configuration& config, int d) {
  if (config.order() != 1) throw Error(ErrorCode::invalid_argument, "simple stacking needs an order-1 configuration");
  if (d < 2) throw Error(ErrorCode::invalid_argument, "stacking multiplicity must be at least 2");
  validate(config);
  std::vector<Plane> planes;
  for (const auto& line : config.planes()) {
    Plane plane;
    for (int p : line) {
      for (int j = 1; j <= d; ++j) plane.push_back((p - 1) * d + j);
    }
    planes.push_back(std::move(plane));
  }
  Configuration result(d, config.num_points() * d, std::move(planes));
  validate(result, true);
  return result;
}

Configuration general_stack(const Configuration& a, const Configuration& b, std::vector<std::size_t> pairing) {
  if (a.order() != 1 || b.order() != 1) {
    throw Error(ErrorCode::invalid_argument, "general stacking needs two order-1 configurations");
  }
  const IncidenceProfile pa = validate(a);
  const IncidenceProfile pb = validate(b);
  if (pa.m != pb.m) {
    throw Error(ErrorCode::invalid_argument,
                "line counts differ (" + std::to_string(pa.m) + " vs " + std::to_string(pb.m) + ")");
  }
  if (pa.s != pb.s) {
    throw Error(ErrorCode::invalid_argument,
                "point degrees differ (" + std::to_string(pa.s) + " vs " + std::to_string(pb.s) + ")");
  }
  const auto m = static_cast<std::size_t>(pa.m);
  if (pairing.empty()) {
    pairing.resize(m);
    std::iota(pairing.begin(), pairing.end(), std::size_t{0});
  }
  if (pairing.size() != m) throw Error(ErrorCode::invalid_argument, "pairing must list one b-line per a-line");
  std::vector<char> hit(m, 0);
  for (auto j : pairing) {
    if (j >= m || hit[j]) throw Error(ErrorCode::invalid_argument, "pairing is not a bijection");
    hit[j] = 1;
  }
  std::vector<Plane> planes;
  for (std::size_t i = 0; i < m; ++i) {
    Plane plane = a.planes()[i];
    for (int p : b.planes()[pairing[i]]) plane.push_back(p + a.num_points());
    planes.push_back(std::move(plane));
  }
  Configuration result(2, a.num_points() + b.num_points(), std::move(planes));
  validate(result, true);
  return result;
}

Configuration cartesian_product(const Configuration& a, const Configuration& b) {
  if (a.order() != 1 || b.order() != 1) {
    throw Error(ErrorCode::invalid_argument, "cartesian product needs two order-1 configurations");
  }
  validate(a);
  validate(b);
  const int nb = b.num_points();
  std::vector<Plane> planes;
  for (const auto& la : a.planes()) {
    for (const auto& lb : b.planes()) {
      Plane plane;
      for (int i : la) {
        for (int j : lb) plane.push_back((i - 1) * nb + j);
      }
      planes.push_back(std::move(plane));
    }
  }
  Configuration result(std::max(a.plane_size(), b.plane_size()), a.num_points() * nb, std::move(planes));
  validate(result, true);
  return result;
}

namespace {

bool traces_form_configuration(const Configuration& config, const std::vector<int>& side) {
  std::vector<int> label(config.num_points() + 1, 0);
  for (std::size_t i = 0; i < side.size(); ++i) label[side[i]] = static_cast<int>(i) + 1;
  std::vector<Plane> lines;
  for (const auto& plane : config.planes()) {
    Plane trace;
    for (int p : plane) {
      if (label[p]) trace.push_back(label[p]);
    }
    if (trace.size() < 2) return false;
    lines.push_back(std::move(trace));
  }
  try {
    validate(Configuration(1, static_cast<int>(side.size()), std::move(lines)));
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace

std::optional<StackPartition> decompose_stack(const Configuration& config, const DecomposeOptions& options) {
  const int n = config.num_points();
  if (n > options.max_points) {
    throw Error(ErrorCode::budget_exceeded, "exhaustive bipartition search is capped at " +
                                                std::to_string(options.max_points) + " points");
  }
  for (int size = 2; size <= n - 2; ++size) {
    // Choose size-1 companions for point 1 in lexicographic order.
    std::vector<char> pick(n - 1, 0);
    std::fill(pick.begin(), pick.begin() + (size - 1), 1);
    do {
      StackPartition split;
      split.first.push_back(1);
      for (int i = 0; i < n - 1; ++i) (pick[i] ? split.first : split.second).push_back(i + 2);
      if (traces_form_configuration(config, split.first) && traces_form_configuration(config, split.second)) {
        return split;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

Configuration build(const ConstructionRecipe& recipe) {
  auto need = [&](std::size_t arity) {
    if (recipe.operands.size() != arity) {
      throw Error(ErrorCode::invalid_argument, "construction expects " + std::to_string(arity) + " operand(s)");
    }
  };
  switch (recipe.kind) {
    case RecipeKind::complete: need(0); return complete_configuration(recipe.size);
    case RecipeKind::polygon: need(0); return polygon(recipe.size);
    case RecipeKind::fano: need(0); return fano();
    case RecipeKind::dual: need(1); return dual(recipe.operands[0]);
    case RecipeKind::simple_stack: need(1); return simple_stack(recipe.operands[0], recipe.multiplicity);
    case RecipeKind::general_stack: need(2); return general_stack(recipe.operands[0], recipe.operands[1], recipe.pairing);
    case RecipeKind::product: need(2); return cartesian_product(recipe.operands[0], recipe.operands[1]);
  }
  throw Error(ErrorCode::invalid_argument, "unknown construction");
}

}  // namespace hocfg
