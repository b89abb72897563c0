#include "hocfg/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "hocfg/error.hpp"
#include "hocfg/isomorphism.hpp"
#include "hocfg/perm_group.hpp"

namespace hocfg {

Configuration CatalogRecord::configuration() const {
  return Configuration(profile.k, profile.n, planes);
}

CatalogRecord make_record(const Configuration& canonical) {
  CatalogRecord record;
  record.planes = canonical.planes();
  record.profile = profile(canonical);
  const PermGroup group = automorphism_group(canonical);
  record.aut_order = group.order;
  record.aut_abelian = group.is_abelian();
  if (group.order <= 100000) record.aut_name = match_named_group(group_fingerprint(group));
  record.connected = is_connected(canonical);
  return record;
}

namespace {

void check_spec(const EnumerationSpec& spec) {
  if (spec.n < 1 || spec.n > 64) throw Error(ErrorCode::invalid_argument, "n must lie in 1..64");
  if (spec.k < 1) throw Error(ErrorCode::invalid_argument, "order must be at least 1");
  if (spec.t < spec.k + 1) throw Error(ErrorCode::invalid_argument, "planes need at least k+1 points");
  if (spec.t > spec.n) throw Error(ErrorCode::invalid_argument, "planes cannot exceed n points");
  if (spec.s < 1) throw Error(ErrorCode::invalid_argument, "s must be at least 1");
  if (spec.s <= spec.k && !spec.allow_without_dual) {
    throw Error(ErrorCode::invalid_argument, "s <= k requires allowing configurations without dual");
  }
  if ((spec.n * spec.s) % spec.t != 0) throw Error(ErrorCode::invalid_argument, "n*s must be divisible by t");
}

// All t-subsets of 0..n-1 as masks, in lexicographic order of their tuples.
std::vector<std::uint64_t> lex_subsets(int n, int t) {
  std::vector<std::uint64_t> out;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool passes_filters(const EnumerationSpec& spec, const Configuration& config) {
  if (spec.order_exact && !is_order_exact(config)) return false;
  if (spec.connected && !is_connected(config)) return false;
  return true;
}

Configuration from_masks(const EnumerationSpec& spec, const std::vector<std::uint64_t>& masks) {
  std::vector<Plane> planes;
  planes.reserve(masks.size());
  for (auto mask : masks) planes.push_back(detail::from_mask(mask));
  return Configuration(spec.k, spec.n, std::move(planes));
}

struct BudgetExhausted {};

class OrderlyGenerator {
 public:
  OrderlyGenerator(const EnumerationSpec& spec, std::atomic<std::uint64_t>& nodes,
                   std::chrono::steady_clock::time_point deadline)
      : spec_(spec), m_(spec.n * spec.s / spec.t), candidates_(lex_subsets(spec.n, spec.t)), nodes_(nodes),
        deadline_(deadline), degree_(spec.n, 0) {}

  int num_planes() const { return m_; }
  const std::vector<std::uint64_t>& candidates() const { return candidates_; }

  // Tries to push candidate `c`; returns false if it breaks a constraint or
  // the resulting partial list is not canonical.
  bool push(std::size_t c) {
    const std::uint64_t mask = candidates_[c];
    for (auto m = mask; m; m &= m - 1) {
      if (degree_[std::countr_zero(m)] >= spec_.s) return false;
    }
    for (auto chosen : chosen_) {
      if (std::popcount(chosen & mask) > spec_.k) return false;
    }
    chosen_.push_back(mask);
    if (!detail::is_lex_min(spec_.n, spec_.t, chosen_)) {
      chosen_.pop_back();
      return false;
    }
    for (auto m = mask; m; m &= m - 1) ++degree_[std::countr_zero(m)];
    return true;
  }

  void pop() {
    for (auto m = chosen_.back(); m; m &= m - 1) --degree_[std::countr_zero(m)];
    chosen_.pop_back();
  }

  // Lowest point of candidate c, used to require that every smaller point is
  // already saturated (later planes can no longer reach it).
  bool smaller_points_saturated(std::size_t c) const {
    const int low = std::countr_zero(candidates_[c]);
    for (int p = 0; p < low; ++p) {
      if (degree_[p] != spec_.s) return false;
    }
    return true;
  }

  void extend(std::size_t start, std::vector<std::vector<std::uint64_t>>& out) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= spec_.node_budget) throw BudgetExhausted{};
    if ((nodes_.load(std::memory_order_relaxed) & 0x3FF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExhausted{};
    }
    if (static_cast<int>(chosen_.size()) == m_) {
      if (std::all_of(degree_.begin(), degree_.end(), [&](int d) { return d == spec_.s; })) out.push_back(chosen_);
      return;
    }
    for (std::size_t c = start; c < candidates_.size(); ++c) {
      if (!smaller_points_saturated(c)) break;
      if (!push(c)) continue;
      extend(c + 1, out);
      pop();
    }
  }

 private:
  const EnumerationSpec& spec_;
  int m_;
  std::vector<std::uint64_t> candidates_;
  std::atomic<std::uint64_t>& nodes_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<int> degree_;
  std::vector<std::uint64_t> chosen_;
};

EnumerationResult finish(const EnumerationSpec& spec, std::vector<std::vector<std::uint64_t>> found, bool complete,
                         std::uint64_t nodes) {
  EnumerationResult result;
  result.complete = complete;
  result.nodes = nodes;
  std::set<std::vector<Plane>> seen;
  for (const auto& masks : found) {
    Configuration config = from_masks(spec, masks);
    if (!passes_filters(spec, config)) continue;
    if (!seen.insert(config.planes()).second) continue;
    result.records.push_back(make_record(config));
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const CatalogRecord& a, const CatalogRecord& b) { return a.planes < b.planes; });
  return result;
}

}  // namespace

EnumerationResult enumerate_symmetric(const EnumerationSpec& spec) {
  check_spec(spec);
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(spec.time_budget_seconds));
  std::atomic<std::uint64_t> nodes{0};

  // The lex-least first plane is always {1..t}; the subtrees below each
  // admissible second plane are independent units of work.
  OrderlyGenerator root(spec, nodes, deadline);
  std::vector<std::vector<std::uint64_t>> found;
  if (root.num_planes() == 1) {
    if (root.push(0)) root.extend(1, found);
    return finish(spec, std::move(found), true, nodes.load());
  }
  std::vector<std::size_t> seconds;
  if (root.push(0)) {
    for (std::size_t c = 1; c < root.candidates().size(); ++c) {
      if (!root.smaller_points_saturated(c)) break;
      if (root.push(c)) {
        seconds.push_back(c);
        root.pop();
      }
    }
  }

  const int jobs = std::max(1, spec.jobs);
  std::vector<std::vector<std::vector<std::uint64_t>>> per_task(seconds.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> exhausted{false};
  auto worker = [&] {
    OrderlyGenerator gen(spec, nodes, deadline);
    for (std::size_t i = next++; i < seconds.size() && !exhausted; i = next++) {
      if (!gen.push(0) || !gen.push(seconds[i])) continue;
      try {
        gen.extend(seconds[i] + 1, per_task[i]);
      } catch (const BudgetExhausted&) {
        exhausted = true;
        return;
      }
      gen.pop();
      gen.pop();
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  for (auto& task : per_task) {
    for (auto& masks : task) found.push_back(std::move(masks));
  }
  return finish(spec, std::move(found), !exhausted, nodes.load());
}

EnumerationResult brute_force_enumerate(const EnumerationSpec& spec) {
  check_spec(spec);
  if (spec.n > 6) throw Error(ErrorCode::budget_exceeded, "brute-force enumeration is limited to n <= 6");
  const int m = spec.n * spec.s / spec.t;
  const auto candidates = lex_subsets(spec.n, spec.t);
  const int total = static_cast<int>(candidates.size());
  EnumerationResult result;
  if (m > total) return result;

  std::set<std::vector<Plane>> seen;
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i;
  for (;;) {
    ++result.nodes;
    std::vector<int> degree(spec.n, 0);
    for (int i : pick) {
      for (auto b = candidates[i]; b; b &= b - 1) ++degree[std::countr_zero(b)];
    }
    bool ok = std::all_of(degree.begin(), degree.end(), [&](int d) { return d == spec.s; });
    for (int a = 0; ok && a < m; ++a) {
      for (int b = a + 1; ok && b < m; ++b) ok = std::popcount(candidates[pick[a]] & candidates[pick[b]]) <= spec.k;
    }
    if (ok) {
      std::vector<Plane> planes;
      for (int i : pick) planes.push_back(detail::from_mask(candidates[i]));
      Configuration config(spec.k, spec.n, std::move(planes));
      if (passes_filters(spec, config)) {
        Configuration canonical(spec.k, spec.n, reference_canonical_form(config).planes);
        if (seen.insert(canonical.planes()).second) result.records.push_back(make_record(canonical));
      }
    }
    int i = m - 1;
    while (i >= 0 && pick[i] == total - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const CatalogRecord& a, const CatalogRecord& b) { return a.planes < b.planes; });
  return result;
}

}  // namespace hocfg
