#include "hocfg/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "hocfg/core.hpp"
#include "hocfg/error.hpp"

namespace hocfg {

namespace {

// A plane under a (partial) labeling, packed one byte per position so that
// integer order equals lexicographic tuple order. Unlabeled positions hold
// kInf, which sorts after every label.
using Key = unsigned __int128;
constexpr unsigned kInf = 0xFF;
constexpr int kMaxPlaneSize = 16;
constexpr int kMaxPoints = 64;

int shift_of(int t, int pos) { return 8 * (t - 1 - pos); }

Key all_inf(int t) {
  Key key = 0;
  for (int pos = 0; pos < t; ++pos) key |= Key{kInf} << shift_of(t, pos);
  return key;
}

bool is_complete(Key key) { return static_cast<unsigned>(key & 0xFF) != kInf; }

// Labels above `depth` are not yet known at that depth.
Key truncate(Key key, int t, int depth) {
  for (int pos = 0; pos < t; ++pos) {
    const int sh = shift_of(t, pos);
    const unsigned byte = static_cast<unsigned>((key >> sh) & 0xFF);
    if (byte == kInf) return key;
    if (static_cast<int>(byte) > depth) {
      const Key mask_low = sh + 8 >= 128 ? ~Key{0} : (Key{1} << (sh + 8)) - 1;
      return (key & ~mask_low) | (all_inf(t) & mask_low);
    }
  }
  return key;
}

Plane decode(Key key, int t) {
  Plane plane(t);
  for (int pos = 0; pos < t; ++pos) plane[pos] = static_cast<int>((key >> shift_of(t, pos)) & 0xFF);
  return plane;
}

void check_limits(int n, int t) {
  if (n > kMaxPoints) throw Error(ErrorCode::budget_exceeded, "canonical labeling supports at most 64 points");
  if (t > kMaxPlaneSize) throw Error(ErrorCode::budget_exceeded, "canonical labeling supports planes of at most 16 points");
}

std::vector<Key> sorted_keys(const std::vector<std::uint64_t>& masks, int t, const std::vector<int>& label_of) {
  std::vector<Key> keys;
  keys.reserve(masks.size());
  for (auto mask : masks) {
    std::vector<int> labels;
    for (auto m = mask; m; m &= m - 1) labels.push_back(label_of[std::countr_zero(m)]);
    std::sort(labels.begin(), labels.end());
    Key key = 0;
    for (int pos = 0; pos < t; ++pos) key |= Key(static_cast<unsigned>(labels[pos])) << shift_of(t, pos);
    keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

enum class Cmp { less, greater, undecided, equal };

// Depth-first search over labelings that assigns labels 1, 2, ... in order.
// At depth j every plane is known up to its labels <= j; the sorted list of
// these truncated tuples decides the comparison with the incumbent whenever
// all earlier tuples are equal and complete.
class LexMinSearch {
 public:
  LexMinSearch(int n, int t, std::vector<std::uint64_t> masks, bool check_only)
      : n_(n), t_(t), masks_(std::move(masks)), check_only_(check_only) {
    check_limits(n_, t_);
    planes_of_.resize(n_);
    for (std::size_t e = 0; e < masks_.size(); ++e) {
      for (auto m = masks_[e]; m; m &= m - 1) planes_of_[std::countr_zero(m)].push_back(static_cast<int>(e));
    }
    keys_.assign(masks_.size(), all_inf(t_));
    fill_.assign(masks_.size(), 0);
    label_of_.assign(n_, 0);
    if (check_only_) {
      best_label_.resize(n_);
      std::iota(best_label_.begin(), best_label_.end(), 1);
      best_keys_ = sorted_keys(masks_, t_, best_label_);
    }
  }

  void run() { descend(0); }

  bool found_smaller() const { return found_smaller_; }
  const std::vector<Key>& best_keys() const { return best_keys_; }
  const std::vector<int>& best_label() const { return best_label_; }

 private:
  Cmp compare(const std::vector<Key>& current, int depth) const {
    if (best_keys_.empty()) return Cmp::undecided;
    for (std::size_t k = 0; k < current.size(); ++k) {
      const Key bound = truncate(best_keys_[k], t_, depth);
      if (current[k] == bound) {
        if (!is_complete(current[k])) return Cmp::undecided;
        continue;
      }
      return current[k] < bound ? Cmp::less : Cmp::greater;
    }
    return Cmp::equal;
  }

  void record_automorphism() {
    std::vector<int> point_with_label(n_ + 1);
    for (int q = 0; q < n_; ++q) point_with_label[best_label_[q]] = q;
    std::vector<int> g(n_);
    bool identity = true;
    for (int p = 0; p < n_; ++p) {
      g[p] = point_with_label[label_of_[p]];
      identity = identity && g[p] == p;
    }
    if (!identity) autos_.push_back(std::move(g));
  }

  // Orbit representative of every point under the discovered automorphisms
  // that fix the current prefix pointwise.
  std::vector<int> orbit_roots() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : autos_) {
      bool fixes = std::all_of(sequence_.begin(), sequence_.end(), [&](int p) { return g[p] == p; });
      if (!fixes) continue;
      for (int p = 0; p < n_; ++p) parent[find(p)] = find(g[p]);
    }
    std::vector<int> roots(n_);
    for (int p = 0; p < n_; ++p) roots[p] = find(p);
    return roots;
  }

  void assign(int point, int label) {
    label_of_[point] = label;
    sequence_.push_back(point);
    for (int e : planes_of_[point]) {
      keys_[e] &= ~(Key{0xFF} << shift_of(t_, fill_[e]));
      keys_[e] |= Key(static_cast<unsigned>(label)) << shift_of(t_, fill_[e]);
      ++fill_[e];
    }
  }

  void unassign(int point) {
    for (int e : planes_of_[point]) {
      --fill_[e];
      keys_[e] |= Key{kInf} << shift_of(t_, fill_[e]);
    }
    sequence_.pop_back();
    label_of_[point] = 0;
  }

  void descend(int depth) {
    std::vector<Key> current = keys_;
    std::sort(current.begin(), current.end());
    const Cmp cmp = compare(current, depth);
    if (cmp == Cmp::greater) return;
    if (cmp == Cmp::less && check_only_) {
      found_smaller_ = true;
      return;
    }
    if (depth == n_) {
      if (cmp == Cmp::equal) {
        record_automorphism();
      } else {
        best_keys_ = std::move(current);
        best_label_ = label_of_;
      }
      return;
    }
    std::vector<int> explored;
    std::size_t autos_seen = static_cast<std::size_t>(-1);
    std::vector<int> roots;
    for (int c = 0; c < n_; ++c) {
      if (label_of_[c] != 0) continue;
      if (autos_seen != autos_.size()) {
        roots = orbit_roots();
        autos_seen = autos_.size();
      }
      if (std::any_of(explored.begin(), explored.end(), [&](int e) { return roots[e] == roots[c]; })) continue;
      assign(c, depth + 1);
      descend(depth + 1);
      unassign(c);
      if (found_smaller_) return;
      explored.push_back(c);
    }
  }

  int n_;
  int t_;
  std::vector<std::uint64_t> masks_;
  bool check_only_;
  std::vector<std::vector<int>> planes_of_;
  std::vector<Key> keys_;
  std::vector<int> fill_;
  std::vector<int> label_of_;
  std::vector<int> sequence_;
  std::vector<Key> best_keys_;
  std::vector<int> best_label_;
  std::vector<std::vector<int>> autos_;
  bool found_smaller_ = false;
};

CanonicalForm make_form(const std::vector<Key>& keys, const std::vector<int>& labels, int t) {
  CanonicalForm form;
  form.relabeling = labels;
  for (Key key : keys) form.planes.push_back(decode(key, t));
  return form;
}

}  // namespace

CanonicalForm canonical_form(const Configuration& config) {
  const int n = config.num_points();
  const int t = config.plane_size();
  LexMinSearch search(n, t, detail::plane_masks(config), false);
  search.run();
  return make_form(search.best_keys(), search.best_label(), t);
}

CanonicalForm reference_canonical_form(const Configuration& config) {
  const int n = config.num_points();
  const int t = config.plane_size();
  if (n > 10) throw Error(ErrorCode::budget_exceeded, "reference canonical form is limited to 10 points");
  check_limits(n, t);
  const auto masks = detail::plane_masks(config);
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<Key> best;
  std::vector<int> best_labels;
  do {
    auto keys = sorted_keys(masks, t, labels);
    if (best.empty() || keys < best) {
      best = std::move(keys);
      best_labels = labels;
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return make_form(best, best_labels, t);
}

Configuration canonical_configuration(const Configuration& config) {
  return Configuration(config.order(), config.num_points(), canonical_form(config).planes);
}

bool are_isomorphic(const Configuration& a, const Configuration& b) {
  if (a.order() != b.order() || a.num_points() != b.num_points() || a.num_planes() != b.num_planes() ||
      a.plane_size() != b.plane_size()) {
    return false;
  }
  auto da = a.point_degrees();
  auto db = b.point_degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a).planes == canonical_form(b).planes;
}

namespace detail {

bool is_lex_min(int num_points, int plane_size, const std::vector<std::uint64_t>& masks) {
  LexMinSearch search(num_points, plane_size, masks, true);
  search.run();
  return !search.found_smaller();
}

}  // namespace detail

namespace {

// Backtracking search for plane-set automorphisms extending a prescribed
// prefix. Points are mapped in index order; a plane is checked as soon as
// its largest point receives an image, and pairwise co-occurrence counts
// must be preserved.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Configuration& config, std::uint64_t budget)
      : n_(config.num_points()), masks_(detail::plane_masks(config)), budget_(budget) {
    plane_set_ = masks_;
    std::sort(plane_set_.begin(), plane_set_.end());
    degree_ = config.point_degrees();
    co_.assign(static_cast<std::size_t>(n_) * n_, 0);
    completes_at_.resize(n_);
    for (auto mask : masks_) {
      for (auto a = mask; a; a &= a - 1) {
        for (auto b = mask; b; b &= b - 1) ++co_[std::countr_zero(a) * n_ + std::countr_zero(b)];
      }
      completes_at_[63 - std::countl_zero(mask)].push_back(mask);
    }
    image_.assign(n_, -1);
    used_.assign(n_, 0);
  }

  // Searches for an automorphism fixing 0..base-1 and sending base to target.
  std::optional<Permutation> find(int base, int target) {
    std::fill(image_.begin(), image_.end(), -1);
    std::fill(used_.begin(), used_.end(), 0);
    for (int p = 0; p < base; ++p) {
      if (!try_assign(p, p)) return std::nullopt;
    }
    if (!try_assign(base, target)) return std::nullopt;
    if (!extend(base + 1)) return std::nullopt;
    std::vector<int> images(n_);
    for (int p = 0; p < n_; ++p) images[p] = image_[p] + 1;
    return Permutation(std::move(images));
  }

 private:
  bool try_assign(int p, int q) {
    if (used_[q] || degree_[p] != degree_[q]) return false;
    for (int r = 0; r < p; ++r) {
      if (co_[p * n_ + r] != co_[q * n_ + image_[r]]) return false;
    }
    image_[p] = q;
    used_[q] = 1;
    for (auto mask : completes_at_[p]) {
      std::uint64_t img = 0;
      for (auto m = mask; m; m &= m - 1) img |= std::uint64_t{1} << image_[std::countr_zero(m)];
      if (!std::binary_search(plane_set_.begin(), plane_set_.end(), img)) {
        image_[p] = -1;
        used_[q] = 0;
        return false;
      }
    }
    return true;
  }

  bool extend(int p) {
    if (p == n_) return true;
    if (++nodes_ > budget_) throw Error(ErrorCode::budget_exceeded, "automorphism search exceeded its node budget");
    for (int q = 0; q < n_; ++q) {
      if (!try_assign(p, q)) continue;
      if (extend(p + 1)) return true;
      image_[p] = -1;
      used_[q] = 0;
    }
    return false;
  }

  int n_;
  std::vector<std::uint64_t> masks_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> plane_set_;
  std::vector<int> degree_;
  std::vector<int> co_;
  std::vector<std::vector<std::uint64_t>> completes_at_;
  std::vector<int> image_;
  std::vector<char> used_;
};

}  // namespace

PermGroup automorphism_group(const Configuration& config, const AutomorphismOptions& options) {
  const int n = config.num_points();
  AutomorphismSearch search(config, options.node_budget);
  PermGroup group;
  group.degree = n;
  group.order = 1;
  // Level i holds the stabilizer of points 1..i; levels are filled from the
  // deepest up so that every generator found at a deeper level is available
  // when computing the orbit of the base point at a shallower one.
  for (int base = n - 1; base >= 0; --base) {
    auto orbit_of_base = [&] {
      std::vector<char> in(n, 0);
      std::vector<int> queue{base};
      in[base] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : group.generators) {
          int y = g(queue[head] + 1) - 1;
          if (!in[y]) {
            in[y] = 1;
            queue.push_back(y);
          }
        }
      }
      return in;
    };
    auto in_orbit = orbit_of_base();
    for (int target = base + 1; target < n; ++target) {
      if (in_orbit[target]) continue;
      if (auto g = search.find(base, target)) {
        group.generators.push_back(std::move(*g));
        in_orbit = orbit_of_base();
      }
    }
    const auto size = static_cast<std::uint64_t>(std::count(in_orbit.begin(), in_orbit.end(), 1));
    if (__builtin_mul_overflow(group.order, size, &group.order)) {
      throw Error(ErrorCode::budget_exceeded, "automorphism group order overflows 64 bits");
    }
  }
  return group;
}

}  // namespace hocfg
