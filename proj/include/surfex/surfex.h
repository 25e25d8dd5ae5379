#ifndef SURFEX_SURFEX_H
#define SURFEX_SURFEX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SURFEX_BUILDING_LIBRARY)
#define SURFEX_API __attribute__((visibility("default")))
#else
#define SURFEX_API
#endif

/* One status per library error code, in the same order, after SURFEX_OK. */
typedef enum surfex_status {
    SURFEX_OK = 0,
    SURFEX_ERR_MALFORMED_LINE,
    SURFEX_ERR_DEGENERATE_EDGE,
    SURFEX_ERR_DUPLICATE_EDGE,
    SURFEX_ERR_VERTEX_OUT_OF_RANGE,
    SURFEX_ERR_SAME_VERTEX,
    SURFEX_ERR_SELF_LOOP,
    SURFEX_ERR_EMPTY_COMPLEX,
    SURFEX_ERR_NOT_A_CLOSED_SURFACE,
    SURFEX_ERR_INCONSISTENT_CHI,
    SURFEX_ERR_TOO_SHORT,
    SURFEX_ERR_RANGE_VIOLATION,
    SURFEX_ERR_NOT_A_TOP_CYCLE,
    SURFEX_ERR_NOT_THREE_PARTITE,
    SURFEX_ERR_DISJOINTNESS_VIOLATION,
    SURFEX_ERR_SPHERE_MISSING_EDGE,
    SURFEX_ERR_NOT_A_SPHERE,
    SURFEX_ERR_TOO_LARGE_FOR_EXACT,
    SURFEX_ERR_NOT_NEIGHBORING,
    SURFEX_ERR_INVALID_WITNESS,
    SURFEX_ERR_COLORING_INCOMPLETE,
    SURFEX_ERR_NOT_DIVERSE,
    SURFEX_ERR_OVERFLOW,
    SURFEX_ERR_TOO_LARGE,
    SURFEX_ERR_EMPTY_RESULT,
    SURFEX_ERR_NOT_RAINBOW,
    SURFEX_ERR_MISSING_INTERPOLANT,
    SURFEX_ERR_CAP_EXCEEDED,
    SURFEX_ERR_INVALID_ARGUMENT,
    SURFEX_ERR_IO,
    SURFEX_ERR_INTERNAL
} surfex_status;

typedef struct surfex_hypergraph surfex_hypergraph;
typedef struct surfex_graph surfex_graph;

SURFEX_API const char* surfex_version(void);
SURFEX_API const char* surfex_status_name(surfex_status status);
/* Message of the last failure on the calling thread; "" when none. */
SURFEX_API const char* surfex_last_error(void);
SURFEX_API void surfex_string_free(char* s);

/* 3-uniform hypergraphs in the edge-list text format */
SURFEX_API surfex_status surfex_hypergraph_parse(const char* text, surfex_hypergraph** out);
SURFEX_API surfex_status surfex_hypergraph_load(const char* path, surfex_hypergraph** out);
SURFEX_API surfex_status surfex_hypergraph_from_triples(size_t n_vertices, const uint32_t* triples, size_t n_edges,
                                                       surfex_hypergraph** out);
SURFEX_API void surfex_hypergraph_free(surfex_hypergraph* h);
SURFEX_API size_t surfex_hypergraph_vertex_count(const surfex_hypergraph* h);
SURFEX_API size_t surfex_hypergraph_edge_count(const surfex_hypergraph* h);
/* Copies 3 * edge_count sorted vertex ids; SURFEX_ERR_RANGE_VIOLATION if capacity is short. */
SURFEX_API surfex_status surfex_hypergraph_edges(const surfex_hypergraph* h, uint32_t* out, size_t capacity);
SURFEX_API surfex_status surfex_hypergraph_serialize(const surfex_hypergraph* h, char** out);
SURFEX_API surfex_status surfex_hypergraph_save(const surfex_hypergraph* h, const char* path);

/* Simple graphs, one pair per line */
SURFEX_API surfex_status surfex_graph_parse(const char* text, surfex_graph** out);
SURFEX_API surfex_status surfex_graph_load(const char* path, surfex_graph** out);
SURFEX_API void surfex_graph_free(surfex_graph* g);

typedef enum surfex_surface_kind {
    SURFEX_ORIENTABLE = 0,
    SURFEX_NON_ORIENTABLE = 1,
    SURFEX_NOT_A_SURFACE = 2
} surfex_surface_kind;

typedef struct surfex_surface_class {
    surfex_surface_kind kind;
    int param;  /* genus, or cross-cap count */
    int has_chi;
    long long chi;
} surfex_surface_class;

SURFEX_API surfex_status surfex_classify(const surfex_hypergraph* h, surfex_surface_class* out);
/* Accepts sphere, torus, genus:g, crosscaps:k and the labels the classifier prints. */
SURFEX_API surfex_status surfex_parse_surface(const char* label, surfex_surface_class* out);

/* Reports as single JSON documents; free *json with surfex_string_free. */
SURFEX_API surfex_status surfex_classify_json(const surfex_hypergraph* h, char** json);
SURFEX_API surfex_status surfex_topcycle_json(const surfex_hypergraph* h, char** json);

typedef struct surfex_admissible_options {
    double p;
    double eps;
    int k;
    int exact;            /* 1: exact enumeration; 0: Monte-Carlo with `trials` */
    size_t trials;
    size_t exact_threshold;
    uint64_t seed;
    unsigned threads;
} surfex_admissible_options;

SURFEX_API void surfex_admissible_options_init(surfex_admissible_options* o);
SURFEX_API surfex_status surfex_admissible_json(const surfex_graph* g, const surfex_admissible_options* o, char** json);

SURFEX_API surfex_status surfex_rainbow_json(const surfex_hypergraph* h, size_t max_len, uint64_t seed, int* found,
                                             char** json);

typedef struct surfex_torus_options {
    size_t max_cycle_len;
    double p;
    double eps;
    int k;
    int r;
    uint64_t seed;
    size_t retries;
    size_t max_candidates;
    int skip_f;
    unsigned threads;
} surfex_torus_options;

SURFEX_API void surfex_torus_options_init(surfex_torus_options* o);
/* *ok is 1 on success, 0 when a stage failed (the JSON names the stage). */
SURFEX_API surfex_status surfex_find_torus_json(const surfex_hypergraph* h, const surfex_torus_options* o, int* ok,
                                                char** json);
SURFEX_API surfex_status surfex_find_genus_json(const surfex_hypergraph* h, int g, const surfex_torus_options* o,
                                                size_t retries, int* ok, char** json);

/* *out receives the generated hypergraph; the JSON is the report. */
SURFEX_API surfex_status surfex_lower_bound(size_t n, const surfex_surface_class* target, double c0, size_t v_max,
                                            uint64_t seed, unsigned threads, surfex_hypergraph** out, char** json);

SURFEX_API surfex_status surfex_glue_check_json(size_t n_max, const surfex_hypergraph* const* family_a, size_t n_a,
                                                const surfex_hypergraph* const* family_b, size_t n_b, int* all_hold,
                                                char** json);

SURFEX_API surfex_status surfex_hom_cycle(const surfex_graph* g, size_t len, unsigned threads, uint64_t* out);
SURFEX_API surfex_status surfex_hom_json(const surfex_graph* g, size_t len, unsigned threads, char** json);

#ifdef __cplusplus
}
#endif

#endif
