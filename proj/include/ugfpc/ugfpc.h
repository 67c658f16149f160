#pragma once

/* C interface to the unique-games gap construction and pebble-game library.
 *
 * Conventions: every fallible call returns a ugfpc_status; on failure the
 * message is available from ugfpc_last_error() (per thread, valid until the
 * next call on that thread). Strings returned through char** are owned by the
 * caller and released with ugfpc_free_string(). Handles are released with
 * their matching *_free function; passing NULL to a free function is a no-op.
 * Rationals travel as "num/den" strings, big integers as decimal strings. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(UGFPC_BUILDING_LIBRARY)
#define UGFPC_API __attribute__((visibility("default")))
#else
#define UGFPC_API
#endif

typedef enum ugfpc_status {
  UGFPC_OK = 0,
  UGFPC_ERR_INVALID_ARGUMENT = 1,
  UGFPC_ERR_PARSE = 2,
  UGFPC_ERR_IO = 3,
  UGFPC_ERR_DOMAIN = 4,
  UGFPC_ERR_BUDGET = 5,
  UGFPC_ERR_STATE = 6,
  UGFPC_ERR_ILLEGAL_MOVE = 7,
  UGFPC_ERR_NOT_FOUND = 8,
  UGFPC_ERR_INTERNAL = 9
} ugfpc_status;

UGFPC_API const char* ugfpc_version(void);
UGFPC_API const char* ugfpc_status_name(ugfpc_status status);
UGFPC_API const char* ugfpc_last_error(void);
UGFPC_API void ugfpc_free_string(char* s);

/* ---- instances (ug-group-v1 JSON) ---- */

typedef struct ugfpc_instance ugfpc_instance;

UGFPC_API ugfpc_status ugfpc_instance_parse(const char* json, ugfpc_instance** out);
UGFPC_API ugfpc_status ugfpc_instance_load(const char* path, ugfpc_instance** out);
/* fig2-u1, fig2-u2, fig3-u1, fig3-u2, optionally with a "-lifted" suffix. */
UGFPC_API ugfpc_status ugfpc_instance_preset(const char* name, ugfpc_instance** out);
UGFPC_API ugfpc_status ugfpc_instance_to_json(const ugfpc_instance* u, char** out_json);
UGFPC_API ugfpc_status ugfpc_instance_save(const ugfpc_instance* u, const char* path);
/* JSON array of violation messages (empty when valid). */
UGFPC_API ugfpc_status ugfpc_instance_validate(const ugfpc_instance* u, char** out_json);
UGFPC_API ugfpc_status ugfpc_instance_info(const ugfpc_instance* u, int* m, size_t* vertices, size_t* edges,
                                           size_t* constraints);
UGFPC_API ugfpc_status ugfpc_instance_lift(const ugfpc_instance* u, ugfpc_instance** out);
UGFPC_API void ugfpc_instance_free(ugfpc_instance* u);

/* {"opt":"p/q","witness":{...},"satisfied":n,"constraints":n}; budget 0 means
 * the default of 2^30 assignments. */
UGFPC_API ugfpc_status ugfpc_exact_opt(const ugfpc_instance* u, uint64_t budget, char** out_json);
/* {"satisfiable":true,"assignment":{...}} or a conflict certificate. */
UGFPC_API ugfpc_status ugfpc_satcheck(const ugfpc_instance* u, char** out_json);
/* Value of an assignment given as {"vertex":"bits",...}; "p/q". */
UGFPC_API ugfpc_status ugfpc_value(const ugfpc_instance* u, const char* assignment_json, char** out_rational);

/* ---- parameters ---- */

UGFPC_API ugfpc_status ugfpc_derive_params(const char* epsilon, const char* delta, int ell, char** out_json);
UGFPC_API ugfpc_status ugfpc_gapcheck(const char* alpha, char** out_json);
UGFPC_API ugfpc_status ugfpc_lemma53_gap(int d, int n, char** out_rational);
UGFPC_API ugfpc_status ugfpc_decay(int m, int ell, int d, int r, uint64_t trials, uint64_t seed, char** out_json);

/* ---- graphs (graph-v1 JSON) ---- */

typedef struct ugfpc_graph ugfpc_graph;

UGFPC_API ugfpc_status ugfpc_graph_preset(const char* name, ugfpc_graph** out);
UGFPC_API ugfpc_status ugfpc_graph_parse(const char* json, ugfpc_graph** out);
UGFPC_API ugfpc_status ugfpc_graph_load(const char* path, ugfpc_graph** out);
/* UGFPC_ERR_NOT_FOUND when no graph was found within max_tries. */
UGFPC_API ugfpc_status ugfpc_graph_random_regular(int n, int d, int min_girth, uint64_t seed, uint64_t max_tries,
                                                  ugfpc_graph** out);
UGFPC_API ugfpc_status ugfpc_graph_to_json(const ugfpc_graph* g, char** out_json);
/* -1 for forests. */
UGFPC_API ugfpc_status ugfpc_graph_girth(const ugfpc_graph* g, int* out);
UGFPC_API void ugfpc_graph_free(ugfpc_graph* g);

/* ---- gap construction ---- */

typedef struct ugfpc_construct_options {
  int m;
  int ell;
  int r;
  uint64_t seed;
  /* Optional (NULL / 0): with all three set, the report states whether the
   * override matches the derived parameters and girth bound. */
  const char* epsilon;
  const char* delta;
  int k;
} ugfpc_construct_options;

typedef struct ugfpc_construction ugfpc_construction;

UGFPC_API ugfpc_status ugfpc_construct(const ugfpc_graph* g, const ugfpc_construct_options* options,
                                       ugfpc_construction** out);
UGFPC_API ugfpc_status ugfpc_construction_report(const ugfpc_construction* c, char** out_json);
UGFPC_API ugfpc_status ugfpc_construction_write(const ugfpc_construction* c, const char* dir);
/* which: "u1", "u2", "u1tilde" or "u2tilde". */
UGFPC_API ugfpc_status ugfpc_construction_instance(const ugfpc_construction* c, const char* which,
                                                   ugfpc_instance** out);
UGFPC_API void ugfpc_construction_free(ugfpc_construction* c);

/* ---- pebble game ---- */

typedef struct ugfpc_play_options {
  int k;                  /* pebble pairs */
  const char* spoiler;    /* "random", "cycle" or "exhaustive" */
  const char* duplicator; /* "tree" or "identity" */
  int rounds;
  uint64_t seed;
  int depth;   /* exhaustive spoiler look-ahead */
  int r;       /* tree strategy segment threshold */
  int lift;    /* nonzero: play on the lifted instances */
  int lazy;    /* tree strategy: lazy evaluation */
  int repair;  /* tree strategy: local repair at pebbled neighbors */
  int matches; /* > 1: seeds seed, seed+1, ...; summary output */
} ugfpc_play_options;

/* Fills defaults: k 2, random spoiler, tree duplicator, 20 rounds, seed 0,
 * depth 4, r 2, lift on, lazy off, repair on, one match. */
UGFPC_API void ugfpc_play_options_init(ugfpc_play_options* options);
UGFPC_API ugfpc_status ugfpc_play(const ugfpc_instance* a, const ugfpc_instance* b,
                                  const ugfpc_play_options* options, char** out_json);
/* Exhaustive search for a forced Spoiler win within depth rounds from the
 * start position; uses k, duplicator, r, lift, lazy, repair from options. */
UGFPC_API ugfpc_status ugfpc_search(const ugfpc_instance* a, const ugfpc_instance* b,
                                    const ugfpc_play_options* options, char** out_json);

/* ---- interactive sessions ---- */

typedef struct ugfpc_service ugfpc_service;

UGFPC_API ugfpc_status ugfpc_service_create(ugfpc_service** out);
UGFPC_API ugfpc_status ugfpc_service_handle(ugfpc_service* s, const char* method, const char* path,
                                            const char* body, int* http_status, char** out_json);
/* Blocks serving HTTP until ugfpc_service_stop() is called from another
 * thread. UGFPC_ERR_IO when the address cannot be bound. */
UGFPC_API ugfpc_status ugfpc_service_listen(ugfpc_service* s, const char* host, int port);
UGFPC_API void ugfpc_service_stop(ugfpc_service* s);
UGFPC_API void ugfpc_service_free(ugfpc_service* s);

#ifdef __cplusplus
}
#endif
