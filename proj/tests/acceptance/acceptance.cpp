// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is the number of failing criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hocfg/constructions.hpp"
#include "hocfg/core.hpp"
#include "hocfg/enumeration.hpp"
#include "hocfg/error.hpp"
#include "hocfg/geometry.hpp"
#include "hocfg/isomorphism.hpp"
#include "hocfg/perm_group.hpp"
#include "hocfg/realize.hpp"

#include "../support/fixtures.hpp"

using namespace hocfg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure notes for one criterion.
struct Check {
  std::ostringstream notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    " << what << "\n";
    }
  }
  void info(const std::string& what) { notes << "    " << what << "\n"; }
};

EnumerationSpec spec_for(int n) {
  EnumerationSpec spec;
  spec.n = n;
  return spec;
}

// Enumerations are shared between criteria.
const EnumerationResult& catalog(int n) {
  static std::map<int, EnumerationResult> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_symmetric(spec_for(n))).first;
  return it->second;
}

std::map<int, std::size_t> rows_per_n() {
  std::map<int, std::size_t> out;
  for (const auto& r : reference_rows::rows()) ++out[r.n];
  return out;
}

bool contains_class(const EnumerationResult& r, const Configuration& c) {
  const auto form = canonical_form(c).planes;
  for (const auto& rec : r.records) {
    if (rec.planes == form) return true;
  }
  return false;
}

std::set<std::vector<Plane>> forms(const EnumerationResult& r) {
  std::set<std::vector<Plane>> out;
  for (const auto& rec : r.records) out.insert(rec.planes);
  return out;
}

void class_counts(Check& c) {
  const auto start = Clock::now();
  for (const auto& [n, expected] : rows_per_n()) {
    const auto& r = catalog(n);
    std::ostringstream line;
    line << "n=" << n << ": " << r.records.size() << " classes, reference lists " << expected;
    c.info(line.str());
    c.expect(r.complete, "n=" + std::to_string(n) + ": search incomplete");
    c.expect(r.records.size() == expected, "n=" + std::to_string(n) + ": count mismatch");
    for (const auto& rec : r.records) {
      bool listed = false;
      for (const auto& row : reference_rows::rows()) {
        listed = listed || (row.n == n && canonical_form(fixtures::row(row)).planes == rec.planes);
      }
      if (!listed) {
        std::string planes;
        for (const auto& pl : rec.planes) {
          planes += ' ';
          for (int x : pl) planes += std::to_string(x);
        }
        c.info("n=" + std::to_string(n) + ": class not in the reference list:" + planes + " (aut order " +
               std::to_string(rec.aut_order) + ")");
      }
    }
  }
  const double t = seconds_since(start);
  c.info("time " + std::to_string(t) + " s");
  c.expect(t < 60.0, "over 60 s");
}

void group_orders(Check& c) {
  std::map<std::string, GroupFingerprint> named;
  for (const auto& g : named_groups()) {
    PermGroup pg;
    pg.degree = g.degree;
    for (const auto& gen : g.generators) pg.generators.push_back(parse_cycles(gen, g.degree));
    pg.order = 0;
    named[g.name] = group_fingerprint(pg);
  }
  for (const auto& r : reference_rows::rows()) {
    const auto group = automorphism_group(fixtures::row(r));
    const auto fp = group_fingerprint(group);
    auto it = named.find(r.group);
    if (it == named.end()) {
      c.expect(false, r.name + ": no generators for " + r.group);
      continue;
    }
    c.expect(it->second.order == r.group_order, r.name + ": generated " + r.group + " has wrong order");
    c.expect(group.order == r.group_order,
             r.name + ": order " + std::to_string(group.order) + ", expected " + std::to_string(r.group_order));
    c.expect(group.is_abelian() == it->second.abelian, r.name + ": abelian flag differs");
    c.expect(fp == it->second, r.name + ": element orders differ from " + r.group);
  }
}

void row_completeness(Check& c) {
  const auto& rows = reference_rows::rows();
  for (const auto& r : rows) {
    const auto form = canonical_form(fixtures::row(r)).planes;
    int hits = 0;
    for (const auto& rec : catalog(r.n).records) hits += rec.planes == form;
    c.expect(hits == 1, r.name + ": matches " + std::to_string(hits) + " records");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].n != rows[j].n) continue;
      c.expect(!are_isomorphic(fixtures::row(rows[i]), fixtures::row(rows[j])),
               rows[i].name + " and " + rows[j].name + " are isomorphic");
    }
  }
}

void oracle_equivalence(Check& c) {
  const auto start = Clock::now();
  for (int n : {4, 5, 6}) {
    const auto slow = brute_force_enumerate(spec_for(n));
    c.info("n=" + std::to_string(n) + ": " + std::to_string(slow.records.size()) + " classes from both");
    c.expect(forms(slow) == forms(catalog(n)), "n=" + std::to_string(n) + ": canonical-form sets differ");
  }
  c.expect(seconds_since(start) < 300.0, "over 5 minutes");
}

void construction_arithmetic(Check& c) {
  auto has = [](const IncidenceProfile& p, int n, int m, int s, int t) {
    return p.n == n && p.m == m && p.s == s && p.t == t;
  };
  const auto stacked = simple_stack(fixtures::four_line(), 2);
  c.expect(are_isomorphic(stacked, fixtures::stacked_four_line_listed()), "stacked four-line differs");
  c.expect(has(validate(stacked, true), 12, 4, 2, 6), "stacked four-line profile");
  const auto g = general_stack(fixtures::square(), fixtures::four_line_on_5_to_10(), {0, 3, 1, 2});
  c.expect(has(validate(g, true), 10, 4, 2, 5), "general stack profile");
  c.expect(are_isomorphic(g, fixtures::square_plus_four_line_listed()), "general stack plane set");
  const Configuration triangle(1, 3, {{1, 2}, {2, 3}, {1, 3}});
  const auto prod = cartesian_product(triangle, triangle);
  c.expect(prod.order() == 2, "product order");
  c.expect(has(validate(prod), 9, 9, 4, 4), "product profile");
}

void duality(Check& c) {
  c.expect(are_isomorphic(dual(fixtures::tetrahedron()), fixtures::tetrahedron()), "tetrahedron not self-dual");
  int defined = 0;
  for (const auto& r : reference_rows::rows()) {
    const auto cfg = fixtures::row(r);
    try {
      const auto d = dual(cfg);
      ++defined;
      c.expect(are_isomorphic(dual(d), cfg), r.name + ": double dual differs");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::undefined) c.expect(false, r.name + ": " + e.what());
      else c.info(r.name + ": dual undefined (" + e.what() + ")");
    }
  }
  c.info(std::to_string(defined) + " rows with a dual");
}

void filter_sensitivity(Check& c) {
  auto spec = spec_for(7);
  spec.order_exact = false;
  const auto loose = enumerate_symmetric(spec);
  const auto fano2 = fano().with_order(2);
  c.expect(loose.records.size() == catalog(7).records.size() + 1, "n=7 without order-exactness: not one extra class");
  c.expect(contains_class(loose, fano2) && !contains_class(catalog(7), fano2), "extra n=7 class is not the Fano plane");

  auto spec8 = spec_for(8);
  spec8.connected = false;
  const auto disc = enumerate_symmetric(spec8);
  c.expect(contains_class(disc, fixtures::two_tetrahedra()), "two tetrahedra missing");
  c.expect(!contains_class(catalog(8), fixtures::two_tetrahedra()), "two tetrahedra in the connected catalog");
}

void realization(Check& c) {
  const std::vector<std::pair<std::string, Configuration>> positives = {
      {"tetrahedron", fixtures::tetrahedron()},
      {"twelve-point", fixtures::twelve_point()},
      {"three spines", fixtures::three_spines()}};
  for (const auto& [name, cfg] : positives) {
    const auto start = Clock::now();
    const auto r = realize(cfg);
    const double t = seconds_since(start);
    if (!r.embedding) {
      c.expect(false, name + ": inconclusive");
      continue;
    }
    const auto rep = verify_embedding(cfg, *r.embedding);
    std::ostringstream line;
    line << name << ": restart " << r.restart << ", residual " << rep.max_residual << ", margins "
         << rep.min_distance << " / " << rep.min_noncollinearity << " / " << rep.min_plane_distinctness << ", " << t
         << " s";
    c.info(line.str());
    c.expect(rep.certified && rep.max_residual < 1e-8, name + ": not re-verified");
    c.expect(t < 30.0, name + ": over 30 s");
  }
  const auto start = Clock::now();
  const auto fano_stack = realize(simple_stack(fano(), 2));
  std::ostringstream line;
  line << "stacked Fano: " << (fano_stack.embedding ? "embedding found" : "inconclusive") << " after "
       << fano_stack.restarts_run << " restarts, best objective " << fano_stack.best_objective << ", "
       << seconds_since(start) << " s";
  c.info(line.str());
  c.expect(!fano_stack.embedding, "stacked Fano unexpectedly realized");
}

void superconfigurations(Check& c) {
  c.expect(is_superconfiguration(fixtures::tetrahedron()).is_superconfiguration, "tetrahedron");
  c.expect(is_superconfiguration(complete_configuration(5)).is_superconfiguration, "complete(5)");
  c.expect(!is_superconfiguration(simple_stack(polygon(3), 2)).is_superconfiguration, "stacked triangle");
}

void property_suites(Check& c) {
  std::mt19937_64 rng(2024);
  for (const auto& r : reference_rows::rows()) {
    const auto cfg = fixtures::row(r);
    const auto form = canonical_form(cfg).planes;
    for (int i = 0; i < 100; ++i) {
      const auto moved = cfg.relabeled(fixtures::random_relabeling(cfg.num_points(), rng));
      if (canonical_form(moved).planes != form) {
        c.expect(false, r.name + ": canonical form changed under relabeling");
        break;
      }
    }
  }
  for (int n = 4; n <= 8; ++n) {
    for (const auto& rec : catalog(n).records) {
      const auto cfg = rec.configuration();
      const auto p = validate(cfg);
      for (const auto& check : check_counting_identities(p)) {
        c.expect(check.applicable && check.passed, "record " + serialize(cfg) + ": " + check.name);
      }
      const auto levi = levi_graph(cfg);
      std::vector<int> black(levi.num_points + 1, 0), white(levi.num_planes + 1, 0);
      for (auto [pt, pl] : levi.edges) {
        ++black[pt];
        ++white[pl];
      }
      bool degrees = levi.edges.size() == static_cast<std::size_t>(p.n * p.s) &&
                     levi.edges.size() == static_cast<std::size_t>(p.m * p.t);
      for (int i = 1; i <= levi.num_points; ++i) degrees = degrees && black[i] == p.s;
      for (int j = 1; j <= levi.num_planes; ++j) degrees = degrees && white[j] == p.t;
      c.expect(degrees, "Levi degrees wrong for n=" + std::to_string(n));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"class counts", class_counts},
      {"group orders", group_orders},
      {"row completeness", row_completeness},
      {"oracle equivalence", oracle_equivalence},
      {"construction arithmetic", construction_arithmetic},
      {"duality", duality},
      {"filter sensitivity", filter_sensitivity},
      {"realization certificates", realization},
      {"superconfiguration", superconfigurations},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << "\n"
              << check.notes.str() << std::flush;
    failures += !check.ok;
  }
  std::cout << failures << " of " << criteria.size() << " criteria failed\n";
  return failures;
}
