#include "hocfg/hocfg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "hocfg/catalog.hpp"
#include "hocfg/constructions.hpp"
#include "hocfg/core.hpp"
#include "hocfg/enumeration.hpp"
#include "hocfg/error.hpp"
#include "hocfg/geometry.hpp"
#include "hocfg/isomorphism.hpp"
#include "hocfg/perm_group.hpp"
#include "hocfg/realize.hpp"

struct hocfg_config {
  hocfg::Configuration value;
};
struct hocfg_group {
  hocfg::PermGroup value;
};
struct hocfg_catalog {
  hocfg::EnumerationResult value;
};
struct hocfg_embedding {
  hocfg::Embedding value;
};

namespace {

thread_local std::string last_error;

hocfg_status status_of(hocfg::ErrorCode code) {
  using hocfg::ErrorCode;
  switch (code) {
    case ErrorCode::parse: return HOCFG_ERR_PARSE;
    case ErrorCode::axiom_violation: return HOCFG_ERR_AXIOM;
    case ErrorCode::irregular: return HOCFG_ERR_IRREGULAR;
    case ErrorCode::without_dual: return HOCFG_ERR_WITHOUT_DUAL;
    case ErrorCode::plane_too_small: return HOCFG_ERR_PLANE_TOO_SMALL;
    case ErrorCode::invalid_argument: return HOCFG_ERR_INVALID_ARGUMENT;
    case ErrorCode::budget_exceeded: return HOCFG_ERR_BUDGET;
    case ErrorCode::undefined: return HOCFG_ERR_UNDEFINED;
    case ErrorCode::io: return HOCFG_ERR_IO;
  }
  return HOCFG_ERR_INTERNAL;
}

template <class F>
hocfg_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const hocfg::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HOCFG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HOCFG_ERR_INTERNAL;
  }
}

hocfg_status null_pointer() {
  last_error = "null pointer argument";
  return HOCFG_ERR_NULL_POINTER;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hocfg_config* wrap(hocfg::Configuration c) { return new hocfg_config{std::move(c)}; }

void fill_profile(const hocfg::IncidenceProfile& p, hocfg_profile* out) {
  *out = {p.n, p.m, p.s, p.t, p.k, p.is_regular, p.is_order_exact, p.without_dual};
}

hocfg::EnumerationSpec to_spec(const hocfg_enum_spec& s) {
  hocfg::EnumerationSpec spec;
  spec.n = s.n;
  spec.s = s.s;
  spec.t = s.t;
  spec.k = s.k;
  spec.connected = s.connected != 0;
  spec.order_exact = s.order_exact != 0;
  spec.allow_without_dual = s.allow_without_dual != 0;
  spec.node_budget = s.node_budget;
  spec.time_budget_seconds = s.time_budget_seconds;
  spec.jobs = s.jobs;
  return spec;
}

}  // namespace

extern "C" {

const char* hocfg_version(void) { return "1.0.0"; }

const char* hocfg_status_name(hocfg_status status) {
  switch (status) {
    case HOCFG_OK: return "ok";
    case HOCFG_ERR_PARSE: return "parse";
    case HOCFG_ERR_AXIOM: return "axiom_violation";
    case HOCFG_ERR_IRREGULAR: return "irregular";
    case HOCFG_ERR_WITHOUT_DUAL: return "without_dual";
    case HOCFG_ERR_PLANE_TOO_SMALL: return "plane_too_small";
    case HOCFG_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case HOCFG_ERR_BUDGET: return "budget_exceeded";
    case HOCFG_ERR_UNDEFINED: return "undefined";
    case HOCFG_ERR_INCONCLUSIVE: return "inconclusive";
    case HOCFG_ERR_IO: return "io";
    case HOCFG_ERR_NULL_POINTER: return "null_pointer";
    case HOCFG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* hocfg_last_error(void) { return last_error.c_str(); }

void hocfg_string_free(char* s) { std::free(s); }

hocfg_status hocfg_config_create(int order, int num_points, const int* plane_points, size_t num_planes,
                                 size_t plane_size, hocfg_config** out) {
  if (!out || (!plane_points && num_planes != 0 && plane_size != 0)) return null_pointer();
  return guard([&] {
    std::vector<hocfg::Plane> planes(num_planes);
    for (size_t i = 0; i < num_planes; ++i) {
      planes[i].assign(plane_points + i * plane_size, plane_points + (i + 1) * plane_size);
    }
    *out = wrap(hocfg::Configuration(order, num_points, std::move(planes)));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_config_parse(const char* text, hocfg_config** out) {
  if (!text || !out) return null_pointer();
  return guard([&] {
    *out = wrap(hocfg::parse_configuration(text));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_config_read_file(const char* path, hocfg_config** out) {
  if (!path || !out) return null_pointer();
  return guard([&] {
    *out = wrap(hocfg::read_configuration_file(path));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_config_serialize(const hocfg_config* c, char** out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    *out = copy_string(hocfg::serialize(c->value));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_config_write_file(const hocfg_config* c, const char* path) {
  if (!c || !path) return null_pointer();
  return guard([&] {
    hocfg::write_text_file(path, hocfg::serialize(c->value));
    return HOCFG_OK;
  });
}

void hocfg_config_free(hocfg_config* c) { delete c; }

int hocfg_config_order(const hocfg_config* c) { return c ? c->value.order() : 0; }
int hocfg_config_num_points(const hocfg_config* c) { return c ? c->value.num_points() : 0; }
int hocfg_config_num_planes(const hocfg_config* c) { return c ? c->value.num_planes() : 0; }
int hocfg_config_plane_size(const hocfg_config* c) { return c ? c->value.plane_size() : 0; }

hocfg_status hocfg_config_planes(const hocfg_config* c, int* out) {
  if (!c || !out) return null_pointer();
  for (const auto& plane : c->value.planes()) {
    for (int p : plane) *out++ = p;
  }
  return HOCFG_OK;
}

hocfg_status hocfg_config_relabel(const hocfg_config* c, const int* relabeling, hocfg_config** out) {
  if (!c || !relabeling || !out) return null_pointer();
  return guard([&] {
    *out = wrap(c->value.relabeled(std::span<const int>(relabeling, c->value.num_points())));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_config_with_order(const hocfg_config* c, int order, hocfg_config** out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    *out = wrap(c->value.with_order(order));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_profile_of(const hocfg_config* c, hocfg_profile* out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    fill_profile(hocfg::profile(c->value), out);
    return HOCFG_OK;
  });
}

hocfg_status hocfg_validate(const hocfg_config* c, int allow_without_dual, hocfg_profile* out) {
  if (!c) return null_pointer();
  return guard([&] {
    const auto p = hocfg::validate(c->value, allow_without_dual != 0);
    if (out) fill_profile(p, out);
    return HOCFG_OK;
  });
}

hocfg_status hocfg_profile_string(const hocfg_profile* p, char** out) {
  if (!p || !out) return null_pointer();
  return guard([&] {
    hocfg::IncidenceProfile q;
    q.n = p->n;
    q.m = p->m;
    q.s = p->s;
    q.t = p->t;
    q.k = p->k;
    q.is_regular = p->is_regular != 0;
    q.is_order_exact = p->is_order_exact != 0;
    q.without_dual = p->without_dual != 0;
    *out = copy_string(hocfg::to_string(q));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_counting_report(const hocfg_config* c, int* all_passed, char** out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    bool ok = true;
    std::string text;
    for (const auto& check : hocfg::check_counting_identities(hocfg::profile(c->value))) {
      text += check.name + ": " + (!check.applicable ? "n/a" : check.passed ? "pass" : "FAIL");
      if (!check.detail.empty()) text += " (" + check.detail + ")";
      text += '\n';
      ok = ok && (!check.applicable || check.passed);
    }
    if (all_passed) *all_passed = ok;
    *out = copy_string(text);
    return HOCFG_OK;
  });
}

hocfg_status hocfg_is_order_exact(const hocfg_config* c, int* out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    *out = hocfg::is_order_exact(c->value);
    return HOCFG_OK;
  });
}

hocfg_status hocfg_is_connected(const hocfg_config* c, int* out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    *out = hocfg::is_connected(c->value);
    return HOCFG_OK;
  });
}

hocfg_status hocfg_levi_dot(const hocfg_config* c, char** out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    *out = copy_string(hocfg::to_dot(hocfg::levi_graph(c->value)));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_canonical(const hocfg_config* c, hocfg_config** out, int* relabeling) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    const auto form = hocfg::canonical_form(c->value);
    *out = wrap(hocfg::Configuration(c->value.order(), c->value.num_points(), form.planes));
    if (relabeling) std::copy(form.relabeling.begin(), form.relabeling.end(), relabeling);
    return HOCFG_OK;
  });
}

hocfg_status hocfg_are_isomorphic(const hocfg_config* a, const hocfg_config* b, int* out) {
  if (!a || !b || !out) return null_pointer();
  return guard([&] {
    *out = hocfg::are_isomorphic(a->value, b->value);
    return HOCFG_OK;
  });
}

hocfg_status hocfg_automorphisms(const hocfg_config* c, hocfg_group** out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    *out = new hocfg_group{hocfg::automorphism_group(c->value)};
    return HOCFG_OK;
  });
}

void hocfg_group_free(hocfg_group* g) { delete g; }
uint64_t hocfg_group_order(const hocfg_group* g) { return g ? g->value.order : 0; }
int hocfg_group_is_abelian(const hocfg_group* g) { return g ? g->value.is_abelian() : 0; }
size_t hocfg_group_num_generators(const hocfg_group* g) { return g ? g->value.generators.size() : 0; }

hocfg_status hocfg_group_generator(const hocfg_group* g, size_t index, char** cycles) {
  if (!g || !cycles) return null_pointer();
  if (index >= g->value.generators.size()) {
    last_error = "generator index out of range";
    return HOCFG_ERR_INVALID_ARGUMENT;
  }
  return guard([&] {
    *cycles = copy_string(g->value.generators[index].cycles());
    return HOCFG_OK;
  });
}

hocfg_status hocfg_group_name(const hocfg_group* g, char** name) {
  if (!g || !name) return null_pointer();
  return guard([&] {
    const auto match = hocfg::match_named_group(hocfg::group_fingerprint(g->value));
    *name = match ? copy_string(*match) : nullptr;
    return HOCFG_OK;
  });
}

hocfg_status hocfg_group_fingerprint(const hocfg_group* g, char** out) {
  if (!g || !out) return null_pointer();
  return guard([&] {
    *out = copy_string(hocfg::to_string(hocfg::group_fingerprint(g->value)));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_complete(int n, hocfg_config** out) {
  if (!out) return null_pointer();
  return guard([&] {
    *out = wrap(hocfg::complete_configuration(n));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_polygon(int n, hocfg_config** out) {
  if (!out) return null_pointer();
  return guard([&] {
    *out = wrap(hocfg::polygon(n));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_fano(hocfg_config** out) {
  if (!out) return null_pointer();
  return guard([&] {
    *out = wrap(hocfg::fano());
    return HOCFG_OK;
  });
}

hocfg_status hocfg_dual(const hocfg_config* c, hocfg_config** out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    *out = wrap(hocfg::dual(c->value));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_is_self_dual(const hocfg_config* c, int* out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    *out = hocfg::is_self_dual(c->value);
    return HOCFG_OK;
  });
}

hocfg_status hocfg_simple_stack(const hocfg_config* c, int multiplicity, hocfg_config** out) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    *out = wrap(hocfg::simple_stack(c->value, multiplicity));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_general_stack(const hocfg_config* a, const hocfg_config* b, const size_t* pairing,
                                 size_t pairing_len, hocfg_config** out) {
  if (!a || !b || !out || (!pairing && pairing_len)) return null_pointer();
  return guard([&] {
    std::vector<std::size_t> p;
    if (pairing) p.assign(pairing, pairing + pairing_len);
    *out = wrap(hocfg::general_stack(a->value, b->value, std::move(p)));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_product(const hocfg_config* a, const hocfg_config* b, hocfg_config** out) {
  if (!a || !b || !out) return null_pointer();
  return guard([&] {
    *out = wrap(hocfg::cartesian_product(a->value, b->value));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_decompose_stack(const hocfg_config* c, int max_points, int* found, int* side) {
  if (!c || !found) return null_pointer();
  return guard([&] {
    hocfg::DecomposeOptions options;
    if (max_points > 0) options.max_points = max_points;
    const auto split = hocfg::decompose_stack(c->value, options);
    *found = split.has_value();
    if (split && side) {
      for (int p : split->first) side[p - 1] = 1;
      for (int p : split->second) side[p - 1] = 2;
    }
    return HOCFG_OK;
  });
}

void hocfg_enum_spec_default(hocfg_enum_spec* spec) {
  if (!spec) return;
  const hocfg::EnumerationSpec d;
  *spec = {d.n,          d.s, d.t, d.k, d.connected, d.order_exact, d.allow_without_dual, d.node_budget,
           d.time_budget_seconds, d.jobs};
}

hocfg_status hocfg_enumerate(const hocfg_enum_spec* spec, hocfg_catalog** out) {
  if (!spec || !out) return null_pointer();
  return guard([&] {
    *out = new hocfg_catalog{hocfg::enumerate_symmetric(to_spec(*spec))};
    return HOCFG_OK;
  });
}

hocfg_status hocfg_brute_enumerate(const hocfg_enum_spec* spec, hocfg_catalog** out) {
  if (!spec || !out) return null_pointer();
  return guard([&] {
    *out = new hocfg_catalog{hocfg::brute_force_enumerate(to_spec(*spec))};
    return HOCFG_OK;
  });
}

hocfg_status hocfg_catalog_read(const char* path, hocfg_catalog** out) {
  if (!path || !out) return null_pointer();
  return guard([&] {
    *out = new hocfg_catalog{{hocfg::read_catalog(path), true, 0}};
    return HOCFG_OK;
  });
}

hocfg_status hocfg_catalog_parse(const char* text, hocfg_catalog** out) {
  if (!text || !out) return null_pointer();
  return guard([&] {
    *out = new hocfg_catalog{{hocfg::catalog_from_string(text), true, 0}};
    return HOCFG_OK;
  });
}

hocfg_status hocfg_catalog_write(const hocfg_catalog* cat, const char* path) {
  if (!cat || !path) return null_pointer();
  return guard([&] {
    hocfg::write_catalog(path, cat->value.records);
    return HOCFG_OK;
  });
}

hocfg_status hocfg_catalog_serialize(const hocfg_catalog* cat, char** out) {
  if (!cat || !out) return null_pointer();
  return guard([&] {
    *out = copy_string(hocfg::catalog_to_string(cat->value.records));
    return HOCFG_OK;
  });
}

void hocfg_catalog_free(hocfg_catalog* cat) { delete cat; }
size_t hocfg_catalog_size(const hocfg_catalog* cat) { return cat ? cat->value.records.size() : 0; }
int hocfg_catalog_complete(const hocfg_catalog* cat) { return cat ? cat->value.complete : 0; }
uint64_t hocfg_catalog_nodes(const hocfg_catalog* cat) { return cat ? cat->value.nodes : 0; }

hocfg_status hocfg_catalog_record(const hocfg_catalog* cat, size_t index, hocfg_config** out) {
  if (!cat || !out) return null_pointer();
  if (index >= cat->value.records.size()) {
    last_error = "record index out of range";
    return HOCFG_ERR_INVALID_ARGUMENT;
  }
  return guard([&] {
    *out = wrap(cat->value.records[index].configuration());
    return HOCFG_OK;
  });
}

uint64_t hocfg_catalog_aut_order(const hocfg_catalog* cat, size_t index) {
  if (!cat || index >= cat->value.records.size()) return 0;
  return cat->value.records[index].aut_order;
}

hocfg_status hocfg_polytope(const hocfg_config* c, hocfg_polytope_info* info, char** report) {
  if (!c) return null_pointer();
  return guard([&] {
    const auto p = hocfg::build_polytope(c->value);
    const auto d = hocfg::polytope_diagnostics(p);
    if (info) {
      for (int r = -1; r <= 3; ++r) info->faces_by_rank[r + 1] = p.faces_of_rank(r).size();
      info->has_least_and_greatest = d.has_least_and_greatest;
      info->flags_have_length_four = d.flags_have_length_four;
      info->sections_connected = d.sections_connected;
      info->diamond = d.diamond;
      info->diamond_violations = d.diamond_violations.size();
    }
    if (report) *report = copy_string(hocfg::to_string(p, d));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_simplicial_counts(const hocfg_config* c, size_t counts[3]) {
  if (!c || !counts) return null_pointer();
  return guard([&] {
    const auto sizes = hocfg::simplicial_realization(c->value).counts_by_size();
    for (int i = 0; i < 3; ++i) counts[i] = static_cast<size_t>(sizes[i]);
    return HOCFG_OK;
  });
}

hocfg_status hocfg_derive_lines(const hocfg_config* c, size_t* count, char** out) {
  if (!c) return null_pointer();
  return guard([&] {
    const auto lines = hocfg::derive_lines(c->value);
    if (count) *count = lines.size();
    if (out) {
      std::string text;
      for (const auto& line : lines) {
        for (std::size_t i = 0; i < line.size(); ++i) text += (i ? " " : "") + std::to_string(line[i]);
        text += '\n';
      }
      *out = copy_string(text);
    }
    return HOCFG_OK;
  });
}

hocfg_status hocfg_superconfiguration(const hocfg_config* c, int* is_super, char** report) {
  if (!c || !is_super) return null_pointer();
  return guard([&] {
    const auto r = hocfg::is_superconfiguration(c->value);
    *is_super = r.is_superconfiguration;
    if (report) {
      std::string text = r.is_superconfiguration ? "superconfiguration\n" : "not a superconfiguration\n";
      if (r.point_line) text += "points/lines: " + hocfg::to_string(*r.point_line) + "\n";
      if (r.line_plane) text += "lines/planes: " + hocfg::to_string(*r.line_plane) + "\n";
      if (!r.reason.empty()) text += "reason: " + r.reason + "\n";
      *report = copy_string(text);
    }
    return HOCFG_OK;
  });
}

void hocfg_realize_options_default(hocfg_realize_options* options) {
  if (!options) return;
  const hocfg::RealizeOptions d;
  *options = {d.restarts,         d.seed, d.tolerance, d.min_separation, d.min_noncollinear,
              d.max_iterations, d.jobs};
}

hocfg_status hocfg_realize(const hocfg_config* c, const hocfg_realize_options* options, hocfg_embedding** out,
                           int* restart) {
  if (!c || !out) return null_pointer();
  return guard([&] {
    hocfg::RealizeOptions o;
    if (options) {
      o.restarts = options->restarts;
      o.seed = options->seed;
      o.tolerance = options->tolerance;
      o.min_separation = options->min_separation;
      o.min_noncollinear = options->min_noncollinear;
      o.max_iterations = options->max_iterations;
      o.jobs = options->jobs;
    }
    auto result = hocfg::realize(c->value, o);
    if (restart) *restart = result.restart;
    *out = nullptr;
    if (!result.embedding) {
      std::ostringstream msg;
      msg << "no verified embedding after " << result.restarts_run << " restarts (best objective "
          << result.best_objective << "); this does not prove non-realizability";
      last_error = msg.str();
      return HOCFG_ERR_INCONCLUSIVE;
    }
    *out = new hocfg_embedding{std::move(*result.embedding)};
    return HOCFG_OK;
  });
}

hocfg_status hocfg_embedding_create(int num_points, const double* coords, hocfg_embedding** out) {
  if (!coords || !out) return null_pointer();
  if (num_points < 0) {
    last_error = "negative point count";
    return HOCFG_ERR_INVALID_ARGUMENT;
  }
  return guard([&] {
    hocfg::Embedding e;
    e.coords.resize(num_points);
    for (int i = 0; i < num_points; ++i) e.coords[i] = {coords[3 * i], coords[3 * i + 1], coords[3 * i + 2]};
    *out = new hocfg_embedding{std::move(e)};
    return HOCFG_OK;
  });
}

hocfg_status hocfg_embedding_parse(const char* text, int num_points, hocfg_embedding** out) {
  if (!text || !out) return null_pointer();
  return guard([&] {
    *out = new hocfg_embedding{hocfg::parse_embedding(text, num_points)};
    return HOCFG_OK;
  });
}

hocfg_status hocfg_embedding_read_file(const char* path, int num_points, hocfg_embedding** out) {
  if (!path || !out) return null_pointer();
  return guard([&] {
    *out = new hocfg_embedding{hocfg::read_embedding_file(path, num_points)};
    return HOCFG_OK;
  });
}

hocfg_status hocfg_embedding_serialize(const hocfg_embedding* e, char** out) {
  if (!e || !out) return null_pointer();
  return guard([&] {
    *out = copy_string(hocfg::serialize_embedding(e->value));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_embedding_write_file(const hocfg_embedding* e, const char* path) {
  if (!e || !path) return null_pointer();
  return guard([&] {
    hocfg::write_text_file(path, hocfg::serialize_embedding(e->value));
    return HOCFG_OK;
  });
}

hocfg_status hocfg_embedding_coords(const hocfg_embedding* e, double* out) {
  if (!e || !out) return null_pointer();
  for (const auto& c : e->value.coords) {
    for (double v : c) *out++ = v;
  }
  return HOCFG_OK;
}

int hocfg_embedding_num_points(const hocfg_embedding* e) { return e ? static_cast<int>(e->value.coords.size()) : 0; }

void hocfg_embedding_free(hocfg_embedding* e) { delete e; }

hocfg_status hocfg_verify(const hocfg_config* c, const hocfg_embedding* e, double tolerance, int* certified,
                          char** report) {
  if (!c || !e || !certified) return null_pointer();
  return guard([&] {
    const auto r = hocfg::verify_embedding(c->value, e->value, tolerance);
    *certified = r.certified;
    if (report) *report = copy_string(hocfg::to_string(r));
    return HOCFG_OK;
  });
}

}  // extern "C"
