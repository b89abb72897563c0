// Command-line front end. Talks to the library only through hocfg.h.
//
// Exit codes: 0 success, 1 domain outcome (invalid configuration,
// not isomorphic, inconclusive realization, ...), 2 usage, parse or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hocfg/hocfg.h"

namespace {

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(hocfg_status s) {
  switch (s) {
    case HOCFG_OK: return 0;
    case HOCFG_ERR_PARSE:
    case HOCFG_ERR_IO:
    case HOCFG_ERR_NULL_POINTER:
    case HOCFG_ERR_INTERNAL: return 2;
    default: return 1;
  }
}

void check(hocfg_status s) {
  if (s != HOCFG_OK) {
    throw Failure{exit_code_for(s), std::string(hocfg_status_name(s)) + ": " + hocfg_last_error()};
  }
}

struct ConfigDeleter {
  void operator()(hocfg_config* c) const { hocfg_config_free(c); }
};
struct GroupDeleter {
  void operator()(hocfg_group* g) const { hocfg_group_free(g); }
};
struct CatalogDeleter {
  void operator()(hocfg_catalog* c) const { hocfg_catalog_free(c); }
};
struct EmbeddingDeleter {
  void operator()(hocfg_embedding* e) const { hocfg_embedding_free(e); }
};
using ConfigPtr = std::unique_ptr<hocfg_config, ConfigDeleter>;
using GroupPtr = std::unique_ptr<hocfg_group, GroupDeleter>;
using CatalogPtr = std::unique_ptr<hocfg_catalog, CatalogDeleter>;
using EmbeddingPtr = std::unique_ptr<hocfg_embedding, EmbeddingDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  hocfg_string_free(s);
  return out;
}

ConfigPtr load(const std::string& path) {
  hocfg_config* c = nullptr;
  check(hocfg_config_read_file(path.c_str(), &c));
  return ConfigPtr(c);
}

template <class F>
ConfigPtr make(F&& f) {
  hocfg_config* c = nullptr;
  check(f(&c));
  return ConfigPtr(c);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{2, "io: cannot write '" + out_path + "'"};
}

void emit_config(const hocfg_config* c, const std::string& out_path) {
  char* text = nullptr;
  check(hocfg_config_serialize(c, &text));
  emit(take(text), out_path);
}

std::string profile_line(const hocfg_profile& p) {
  char* s = nullptr;
  check(hocfg_profile_string(&p, &s));
  return take(s);
}

std::vector<size_t> parse_pairing(const std::string& text) {
  std::vector<size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<size_t>(v - 1));
    } catch (const std::exception&) {
      throw Failure{2, "usage: pairing must be a comma-separated list of 1-based line indices"};
    }
  }
  return out;
}

ConfigPtr general_stack(const hocfg_config* a, const hocfg_config* b, const std::string& pairing) {
  const auto p = parse_pairing(pairing);
  return make([&](hocfg_config** out) {
    return hocfg_general_stack(a, b, p.empty() ? nullptr : p.data(), p.size(), out);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Configurations of order k: validation, constructions, canonical forms, enumeration, realization"};
  app.require_subcommand(1);
  std::string out_path;

  // validate
  std::string in_a, in_b;
  bool allow_without_dual = false;
  auto* validate = app.add_subcommand("validate", "check the incidence axioms");
  validate->add_option("file", in_a, "configuration file")->required();
  validate->add_flag("--allow-without-dual", allow_without_dual, "accept s <= k");

  auto* info = app.add_subcommand("info", "profile, order-exactness, connectivity and counting identities");
  info->add_option("file", in_a)->required();

  auto* canon = app.add_subcommand("canon", "print the canonical (lex-least) relabeling");
  canon->add_option("file", in_a)->required();
  canon->add_option("--out", out_path);

  auto* iso = app.add_subcommand("iso", "test two configurations for isomorphism");
  iso->add_option("a", in_a)->required();
  iso->add_option("b", in_b)->required();

  auto* aut = app.add_subcommand("aut", "automorphism group");
  aut->add_option("file", in_a)->required();

  auto* dual = app.add_subcommand("dual", "exchange points and planes");
  dual->add_option("file", in_a)->required();
  dual->add_option("--out", out_path);

  std::string kind, pairing;
  int size = 0, multiplicity = 2;
  auto* construct = app.add_subcommand("construct", "built-in constructions");
  construct->add_option("kind", kind, "complete|polygon|fano|dual|stack|gstack|product")
      ->required()
      ->check(CLI::IsMember({"complete", "polygon", "fano", "dual", "stack", "gstack", "product"}));
  construct->add_option("--n", size, "number of points for complete/polygon");
  construct->add_option("--d", multiplicity, "stacking multiplicity");
  construct->add_option("--a,--in", in_a, "first operand file");
  construct->add_option("--b", in_b, "second operand file");
  construct->add_option("--pairing", pairing, "gstack pairing, e.g. 2,1,3,4");
  construct->add_option("--out", out_path);

  auto* stack = app.add_subcommand("stack", "simple stacking of an order-1 configuration");
  stack->add_option("file", in_a)->required();
  stack->add_option("--d", multiplicity, "multiplicity")->capture_default_str();
  stack->add_option("--out", out_path);

  auto* gstack = app.add_subcommand("gstack", "general stacking of two order-1 configurations");
  gstack->add_option("a", in_a)->required();
  gstack->add_option("b", in_b)->required();
  gstack->add_option("--pairing", pairing, "b-line (1-based) paired with each a-line");
  gstack->add_option("--out", out_path);

  auto* product = app.add_subcommand("product", "cartesian product of two order-1 configurations");
  product->add_option("a", in_a)->required();
  product->add_option("b", in_b)->required();
  product->add_option("--out", out_path);

  hocfg_enum_spec spec;
  hocfg_enum_spec_default(&spec);
  bool allow_disconnected = false, allow_order_1 = false;
  auto* enumerate = app.add_subcommand("enumerate", "isomorph-free enumeration to a JSON-lines catalog");
  enumerate->add_option("--n", spec.n, "number of points")->required();
  enumerate->add_option("--s", spec.s)->capture_default_str();
  enumerate->add_option("--t", spec.t)->capture_default_str();
  enumerate->add_option("--order", spec.k)->capture_default_str();
  enumerate->add_flag("--allow-disconnected", allow_disconnected, "keep configurations with a disconnected Levi graph");
  enumerate->add_flag("--allow-order-1", allow_order_1, "keep configurations that are not order-exact");
  enumerate->add_flag("--allow-without-dual", allow_without_dual, "accept s <= order");
  enumerate->add_option("--jobs", spec.jobs)->capture_default_str();
  enumerate->add_option("--node-budget", spec.node_budget)->capture_default_str();
  enumerate->add_option("--time-budget", spec.time_budget_seconds, "seconds")->capture_default_str();
  enumerate->add_option("--out", out_path);

  auto* levi = app.add_subcommand("levi", "Levi graph in DOT");
  levi->add_option("file", in_a)->required();
  levi->add_option("--out", out_path);

  auto* polytope = app.add_subcommand("polytope", "generalized abstract polytope diagnostics");
  polytope->add_option("file", in_a)->required();

  hocfg_realize_options ropts;
  hocfg_realize_options_default(&ropts);
  auto* realize = app.add_subcommand("realize", "search for a flat embedding in 3-space");
  realize->add_option("--in", in_a)->required();
  realize->add_option("--seed", ropts.seed)->capture_default_str();
  realize->add_option("--restarts", ropts.restarts)->capture_default_str();
  realize->add_option("--tol", ropts.tolerance)->capture_default_str();
  realize->add_option("--max-iterations", ropts.max_iterations)->capture_default_str();
  realize->add_option("--jobs", ropts.jobs)->capture_default_str();
  realize->add_option("--out", out_path);

  double tolerance = ropts.tolerance;
  auto* verify = app.add_subcommand("verify", "independently check an embedding");
  verify->add_option("--in", in_a)->required();
  verify->add_option("--emb", in_b)->required();
  verify->add_option("--tol", tolerance)->capture_default_str();

  auto* super = app.add_subcommand("super", "superconfiguration test");
  super->add_option("file", in_a)->required();

  int max_points = 16;
  auto* decompose = app.add_subcommand("decompose", "search for a general-stack bipartition");
  decompose->add_option("file", in_a)->required();
  decompose->add_option("--max-points", max_points)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      auto c = load(in_a);
      hocfg_profile p;
      const hocfg_status s = hocfg_validate(c.get(), allow_without_dual, &p);
      if (s != HOCFG_OK) {
        std::cout << "invalid: " << hocfg_status_name(s) << ": " << hocfg_last_error() << '\n';
        return exit_code_for(s);
      }
      std::cout << "valid: " << profile_line(p) << '\n';
    } else if (*info) {
      auto c = load(in_a);
      hocfg_profile p;
      check(hocfg_profile_of(c.get(), &p));
      std::cout << "profile: " << profile_line(p) << '\n';
      int flag = 0;
      check(hocfg_is_connected(c.get(), &flag));
      std::cout << "connected: " << (flag ? "yes" : "no") << '\n';
      if (p.is_regular) {
        char* report = nullptr;
        int ok = 0;
        check(hocfg_counting_report(c.get(), &ok, &report));
        std::cout << take(report);
      }
    } else if (*canon) {
      auto c = load(in_a);
      auto k = make([&](hocfg_config** out) { return hocfg_canonical(c.get(), out, nullptr); });
      emit_config(k.get(), out_path);
    } else if (*iso) {
      auto a = load(in_a);
      auto b = load(in_b);
      int same = 0;
      check(hocfg_are_isomorphic(a.get(), b.get(), &same));
      std::cout << (same ? "isomorphic" : "not isomorphic") << '\n';
      return same ? 0 : 1;
    } else if (*aut) {
      auto c = load(in_a);
      hocfg_group* raw = nullptr;
      check(hocfg_automorphisms(c.get(), &raw));
      GroupPtr g(raw);
      std::cout << "order " << hocfg_group_order(g.get()) << '\n';
      std::cout << "abelian " << (hocfg_group_is_abelian(g.get()) ? "yes" : "no") << '\n';
      char* name = nullptr;
      const hocfg_status s = hocfg_group_name(g.get(), &name);
      if (s == HOCFG_OK) {
        std::cout << "name " << (name ? take(name) : std::string("unmatched")) << '\n';
      } else if (s != HOCFG_ERR_BUDGET) {
        check(s);
      }
      std::cout << "generators\n";
      for (size_t i = 0; i < hocfg_group_num_generators(g.get()); ++i) {
        char* cyc = nullptr;
        check(hocfg_group_generator(g.get(), i, &cyc));
        std::cout << "  " << take(cyc) << '\n';
      }
    } else if (*dual) {
      auto c = load(in_a);
      emit_config(make([&](hocfg_config** out) { return hocfg_dual(c.get(), out); }).get(), out_path);
    } else if (*construct) {
      ConfigPtr result;
      auto need = [&](const std::string& path, const char* flag) {
        if (path.empty()) throw Failure{2, "usage: construct " + kind + " needs " + flag};
        return load(path);
      };
      if (kind == "complete") {
        result = make([&](hocfg_config** out) { return hocfg_complete(size, out); });
      } else if (kind == "polygon") {
        result = make([&](hocfg_config** out) { return hocfg_polygon(size, out); });
      } else if (kind == "fano") {
        result = make([&](hocfg_config** out) { return hocfg_fano(out); });
      } else if (kind == "dual") {
        auto a = need(in_a, "--in");
        result = make([&](hocfg_config** out) { return hocfg_dual(a.get(), out); });
      } else if (kind == "stack") {
        auto a = need(in_a, "--in");
        result = make([&](hocfg_config** out) { return hocfg_simple_stack(a.get(), multiplicity, out); });
      } else if (kind == "gstack") {
        auto a = need(in_a, "--a");
        auto b = need(in_b, "--b");
        result = general_stack(a.get(), b.get(), pairing);
      } else {
        auto a = need(in_a, "--a");
        auto b = need(in_b, "--b");
        result = make([&](hocfg_config** out) { return hocfg_product(a.get(), b.get(), out); });
      }
      emit_config(result.get(), out_path);
    } else if (*stack) {
      auto c = load(in_a);
      emit_config(make([&](hocfg_config** out) { return hocfg_simple_stack(c.get(), multiplicity, out); }).get(),
                  out_path);
    } else if (*gstack) {
      auto a = load(in_a);
      auto b = load(in_b);
      emit_config(general_stack(a.get(), b.get(), pairing).get(), out_path);
    } else if (*product) {
      auto a = load(in_a);
      auto b = load(in_b);
      emit_config(make([&](hocfg_config** out) { return hocfg_product(a.get(), b.get(), out); }).get(), out_path);
    } else if (*enumerate) {
      spec.connected = !allow_disconnected;
      spec.order_exact = !allow_order_1;
      spec.allow_without_dual = allow_without_dual;
      hocfg_catalog* raw = nullptr;
      check(hocfg_enumerate(&spec, &raw));
      CatalogPtr cat(raw);
      char* text = nullptr;
      check(hocfg_catalog_serialize(cat.get(), &text));
      emit(take(text), out_path);
      std::cerr << hocfg_catalog_size(cat.get()) << " records";
      if (!hocfg_catalog_complete(cat.get())) {
        std::cerr << " (INCOMPLETE: search budget exhausted)\n";
        return 1;
      }
      std::cerr << '\n';
    } else if (*levi) {
      auto c = load(in_a);
      char* dot = nullptr;
      check(hocfg_levi_dot(c.get(), &dot));
      emit(take(dot), out_path);
    } else if (*polytope) {
      auto c = load(in_a);
      char* report = nullptr;
      hocfg_polytope_info pinfo;
      check(hocfg_polytope(c.get(), &pinfo, &report));
      std::cout << take(report);
      if (hocfg_config_plane_size(c.get()) == 3) {
        size_t counts[3];
        check(hocfg_simplicial_counts(c.get(), counts));
        std::cout << "simplicial complex: " << counts[0] << " vertices, " << counts[1] << " edges, " << counts[2]
                  << " triangles\n";
      }
    } else if (*realize) {
      auto c = load(in_a);
      hocfg_embedding* raw = nullptr;
      int restart = -1;
      const hocfg_status s = hocfg_realize(c.get(), &ropts, &raw, &restart);
      if (s == HOCFG_ERR_INCONCLUSIVE) {
        std::cout << "inconclusive: " << hocfg_last_error() << '\n';
        return 1;
      }
      check(s);
      EmbeddingPtr e(raw);
      char* text = nullptr;
      check(hocfg_embedding_serialize(e.get(), &text));
      emit(take(text), out_path);
      if (!out_path.empty()) std::cout << "realized (restart " << restart << ")\n";
    } else if (*verify) {
      auto c = load(in_a);
      hocfg_embedding* raw = nullptr;
      check(hocfg_embedding_read_file(in_b.c_str(), hocfg_config_num_points(c.get()), &raw));
      EmbeddingPtr e(raw);
      int certified = 0;
      char* report = nullptr;
      check(hocfg_verify(c.get(), e.get(), tolerance, &certified, &report));
      std::cout << take(report);
      return certified ? 0 : 1;
    } else if (*super) {
      auto c = load(in_a);
      int flag = 0;
      char* report = nullptr;
      check(hocfg_superconfiguration(c.get(), &flag, &report));
      std::cout << take(report);
      return flag ? 0 : 1;
    } else if (*decompose) {
      auto c = load(in_a);
      const int n = hocfg_config_num_points(c.get());
      std::vector<int> side(n, 0);
      int found = 0;
      check(hocfg_decompose_stack(c.get(), max_points, &found, side.data()));
      if (!found) {
        std::cout << "no general-stack bipartition\n";
        return 1;
      }
      for (int part = 1; part <= 2; ++part) {
        std::cout << (part == 1 ? "first:" : "second:");
        for (int p = 1; p <= n; ++p) {
          if (side[p - 1] == part) std::cout << ' ' << p;
        }
        std::cout << '\n';
      }
    }
  } catch (const Failure& f) {
    std::cerr << "hocfg: " << f.message << '\n';
    return f.exit_code;
  }
  return 0;
}
