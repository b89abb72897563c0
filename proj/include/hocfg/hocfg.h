#ifndef HOCFG_H
#define HOCFG_H

/* C interface to the configuration library. All objects are opaque handles
 * released with their *_free function. Functions return a hocfg_status; on
 * failure hocfg_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * hocfg_string_free(). Points and planes are 1-based; planes are listed in
 * lexicographic order. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HOCFG_BUILDING)
#    define HOCFG_API __declspec(dllexport)
#  else
#    define HOCFG_API __declspec(dllimport)
#  endif
#else
#  define HOCFG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hocfg_status {
  HOCFG_OK = 0,
  HOCFG_ERR_PARSE = 1,
  HOCFG_ERR_AXIOM = 2,
  HOCFG_ERR_IRREGULAR = 3,
  HOCFG_ERR_WITHOUT_DUAL = 4,
  HOCFG_ERR_PLANE_TOO_SMALL = 5,
  HOCFG_ERR_INVALID_ARGUMENT = 6,
  HOCFG_ERR_BUDGET = 7,
  HOCFG_ERR_UNDEFINED = 8,
  HOCFG_ERR_INCONCLUSIVE = 9,
  HOCFG_ERR_IO = 10,
  HOCFG_ERR_NULL_POINTER = 11,
  HOCFG_ERR_INTERNAL = 12
} hocfg_status;

typedef struct hocfg_config hocfg_config;
typedef struct hocfg_group hocfg_group;
typedef struct hocfg_catalog hocfg_catalog;
typedef struct hocfg_embedding hocfg_embedding;

typedef struct hocfg_profile {
  int n;
  int m;
  int s; /* 0 when the point degrees differ */
  int t;
  int k;
  int is_regular;
  int is_order_exact;
  int without_dual;
} hocfg_profile;

HOCFG_API const char* hocfg_version(void);
HOCFG_API const char* hocfg_status_name(hocfg_status status);
HOCFG_API const char* hocfg_last_error(void);
HOCFG_API void hocfg_string_free(char* s);

/* ---- configurations */

/* plane_points holds num_planes * plane_size point indices, row by row. */
HOCFG_API hocfg_status hocfg_config_create(int order, int num_points, const int* plane_points, size_t num_planes,
                                           size_t plane_size, hocfg_config** out);
HOCFG_API hocfg_status hocfg_config_parse(const char* text, hocfg_config** out);
HOCFG_API hocfg_status hocfg_config_read_file(const char* path, hocfg_config** out);
HOCFG_API hocfg_status hocfg_config_serialize(const hocfg_config* c, char** out);
HOCFG_API hocfg_status hocfg_config_write_file(const hocfg_config* c, const char* path);
HOCFG_API void hocfg_config_free(hocfg_config* c);

HOCFG_API int hocfg_config_order(const hocfg_config* c);
HOCFG_API int hocfg_config_num_points(const hocfg_config* c);
HOCFG_API int hocfg_config_num_planes(const hocfg_config* c);
HOCFG_API int hocfg_config_plane_size(const hocfg_config* c);
/* Copies num_planes * plane_size indices into out. */
HOCFG_API hocfg_status hocfg_config_planes(const hocfg_config* c, int* out);
/* relabeling[p-1] is the new label of point p. */
HOCFG_API hocfg_status hocfg_config_relabel(const hocfg_config* c, const int* relabeling, hocfg_config** out);
HOCFG_API hocfg_status hocfg_config_with_order(const hocfg_config* c, int order, hocfg_config** out);

/* ---- axioms, invariants, Levi graph */

HOCFG_API hocfg_status hocfg_profile_of(const hocfg_config* c, hocfg_profile* out);
HOCFG_API hocfg_status hocfg_validate(const hocfg_config* c, int allow_without_dual, hocfg_profile* out);
HOCFG_API hocfg_status hocfg_profile_string(const hocfg_profile* p, char** out);
/* One line per identity: "<name>: pass|FAIL|n/a (<detail>)". */
HOCFG_API hocfg_status hocfg_counting_report(const hocfg_config* c, int* all_passed, char** out);
HOCFG_API hocfg_status hocfg_is_order_exact(const hocfg_config* c, int* out);
HOCFG_API hocfg_status hocfg_is_connected(const hocfg_config* c, int* out);
HOCFG_API hocfg_status hocfg_levi_dot(const hocfg_config* c, char** out);

/* ---- isomorphism and automorphisms */

/* relabeling may be NULL; otherwise it receives n entries. */
HOCFG_API hocfg_status hocfg_canonical(const hocfg_config* c, hocfg_config** out, int* relabeling);
HOCFG_API hocfg_status hocfg_are_isomorphic(const hocfg_config* a, const hocfg_config* b, int* out);
HOCFG_API hocfg_status hocfg_automorphisms(const hocfg_config* c, hocfg_group** out);
HOCFG_API void hocfg_group_free(hocfg_group* g);
HOCFG_API uint64_t hocfg_group_order(const hocfg_group* g);
HOCFG_API int hocfg_group_is_abelian(const hocfg_group* g);
HOCFG_API size_t hocfg_group_num_generators(const hocfg_group* g);
HOCFG_API hocfg_status hocfg_group_generator(const hocfg_group* g, size_t index, char** cycles);
/* *name is NULL when no listed group has the same fingerprint. */
HOCFG_API hocfg_status hocfg_group_name(const hocfg_group* g, char** name);
HOCFG_API hocfg_status hocfg_group_fingerprint(const hocfg_group* g, char** out);

/* ---- constructions */

HOCFG_API hocfg_status hocfg_complete(int n, hocfg_config** out);
HOCFG_API hocfg_status hocfg_polygon(int n, hocfg_config** out);
HOCFG_API hocfg_status hocfg_fano(hocfg_config** out);
HOCFG_API hocfg_status hocfg_dual(const hocfg_config* c, hocfg_config** out);
HOCFG_API hocfg_status hocfg_is_self_dual(const hocfg_config* c, int* out);
HOCFG_API hocfg_status hocfg_simple_stack(const hocfg_config* c, int multiplicity, hocfg_config** out);
/* pairing may be NULL (identity); otherwise pairing_len == number of lines. */
HOCFG_API hocfg_status hocfg_general_stack(const hocfg_config* a, const hocfg_config* b, const size_t* pairing,
                                           size_t pairing_len, hocfg_config** out);
HOCFG_API hocfg_status hocfg_product(const hocfg_config* a, const hocfg_config* b, hocfg_config** out);
/* side receives n entries (1 or 2) when *found is set. */
HOCFG_API hocfg_status hocfg_decompose_stack(const hocfg_config* c, int max_points, int* found, int* side);

/* ---- enumeration and catalogs */

typedef struct hocfg_enum_spec {
  int n;
  int s;
  int t;
  int k;
  int connected;
  int order_exact;
  int allow_without_dual;
  uint64_t node_budget;
  double time_budget_seconds;
  int jobs;
} hocfg_enum_spec;

HOCFG_API void hocfg_enum_spec_default(hocfg_enum_spec* spec);
/* A budget stop still returns HOCFG_OK; check hocfg_catalog_complete. */
HOCFG_API hocfg_status hocfg_enumerate(const hocfg_enum_spec* spec, hocfg_catalog** out);
HOCFG_API hocfg_status hocfg_brute_enumerate(const hocfg_enum_spec* spec, hocfg_catalog** out);
HOCFG_API hocfg_status hocfg_catalog_read(const char* path, hocfg_catalog** out);
HOCFG_API hocfg_status hocfg_catalog_parse(const char* text, hocfg_catalog** out);
HOCFG_API hocfg_status hocfg_catalog_write(const hocfg_catalog* cat, const char* path);
HOCFG_API hocfg_status hocfg_catalog_serialize(const hocfg_catalog* cat, char** out);
HOCFG_API void hocfg_catalog_free(hocfg_catalog* cat);
HOCFG_API size_t hocfg_catalog_size(const hocfg_catalog* cat);
HOCFG_API int hocfg_catalog_complete(const hocfg_catalog* cat);
HOCFG_API uint64_t hocfg_catalog_nodes(const hocfg_catalog* cat);
HOCFG_API hocfg_status hocfg_catalog_record(const hocfg_catalog* cat, size_t index, hocfg_config** out);
HOCFG_API uint64_t hocfg_catalog_aut_order(const hocfg_catalog* cat, size_t index);

/* ---- geometry */

typedef struct hocfg_polytope_info {
  size_t faces_by_rank[5]; /* ranks -1 .. 3 */
  int has_least_and_greatest;
  int flags_have_length_four;
  int sections_connected;
  int diamond;
  size_t diamond_violations;
} hocfg_polytope_info;

HOCFG_API hocfg_status hocfg_polytope(const hocfg_config* c, hocfg_polytope_info* info, char** report);
/* counts[0..2]: vertices, edges, triangles. */
HOCFG_API hocfg_status hocfg_simplicial_counts(const hocfg_config* c, size_t counts[3]);
/* One line per derived line, points separated by spaces. */
HOCFG_API hocfg_status hocfg_derive_lines(const hocfg_config* c, size_t* count, char** out);
HOCFG_API hocfg_status hocfg_superconfiguration(const hocfg_config* c, int* is_super, char** report);

typedef struct hocfg_realize_options {
  int restarts;
  uint64_t seed;
  double tolerance;
  double min_separation;
  double min_noncollinear;
  int max_iterations;
  int jobs;
} hocfg_realize_options;

HOCFG_API void hocfg_realize_options_default(hocfg_realize_options* options);
/* Returns HOCFG_ERR_INCONCLUSIVE (and *out = NULL) when no restart produced a
 * verified embedding; restart may be NULL. */
HOCFG_API hocfg_status hocfg_realize(const hocfg_config* c, const hocfg_realize_options* options,
                                     hocfg_embedding** out, int* restart);
HOCFG_API hocfg_status hocfg_embedding_create(int num_points, const double* coords, hocfg_embedding** out);
HOCFG_API hocfg_status hocfg_embedding_parse(const char* text, int num_points, hocfg_embedding** out);
HOCFG_API hocfg_status hocfg_embedding_read_file(const char* path, int num_points, hocfg_embedding** out);
HOCFG_API hocfg_status hocfg_embedding_serialize(const hocfg_embedding* e, char** out);
HOCFG_API hocfg_status hocfg_embedding_write_file(const hocfg_embedding* e, const char* path);
HOCFG_API hocfg_status hocfg_embedding_coords(const hocfg_embedding* e, double* out);
HOCFG_API int hocfg_embedding_num_points(const hocfg_embedding* e);
HOCFG_API void hocfg_embedding_free(hocfg_embedding* e);
HOCFG_API hocfg_status hocfg_verify(const hocfg_config* c, const hocfg_embedding* e, double tolerance,
                                    int* certified, char** report);

#ifdef __cplusplus
}
#endif

#endif
