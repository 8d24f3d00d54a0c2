/*
 * C interface to the multi-layered social network library.
 *
 * Objects are opaque handles created by mlsn_*_create / build / read calls and
 * released with the matching mlsn_*_free. Every fallible call returns an
 * mlsn_status; on failure mlsn_last_error() describes the problem (the message
 * is per thread and valid until the next failing call on that thread).
 * Strings returned through char** are owned by the caller and released with
 * mlsn_string_free. Networks are immutable and may be shared across threads.
 */
#ifndef MLSN_H
#define MLSN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MLSN_BUILDING_LIBRARY)
#    define MLSN_API __declspec(dllexport)
#  else
#    define MLSN_API __declspec(dllimport)
#  endif
#else
#  define MLSN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mlsn_status {
  MLSN_OK = 0,
  MLSN_ERR_VALIDATION = 1,
  MLSN_ERR_DUPLICATE_EDGE = 2,
  MLSN_ERR_NORMALIZATION = 3,
  MLSN_ERR_NOT_FOUND = 4,
  MLSN_ERR_DEGENERATE_NETWORK = 5,
  MLSN_ERR_CONTRACT = 6,
  MLSN_ERR_PARSE = 7,
  MLSN_ERR_RANGE = 8,
  MLSN_ERR_DEGENERATE_FIT = 9,
  MLSN_ERR_INSUFFICIENT_DATA = 10,
  MLSN_ERR_INGESTION = 11,
  MLSN_ERR_INVALID_ARGUMENT = 12,
  MLSN_ERR_IO = 13,
  MLSN_ERR_INTERNAL = 14
} mlsn_status;

typedef enum mlsn_dedup_policy {
  MLSN_DEDUP_SUM = 0,
  MLSN_DEDUP_MAX = 1,
  MLSN_DEDUP_LAST = 2,
  MLSN_DEDUP_ERROR = 3
} mlsn_dedup_policy;

typedef enum mlsn_variant {
  MLSN_VARIANT_IN = 0,
  MLSN_VARIANT_OUT = 1,
  MLSN_VARIANT_IN_OUT_ANY = 2,
  MLSN_VARIANT_IN_OUT = 3,
  MLSN_VARIANT_ANY = 4
} mlsn_variant;

typedef enum mlsn_direction {
  MLSN_DIRECTION_BOTH = 0,
  MLSN_DIRECTION_IN = 1,
  MLSN_DIRECTION_OUT = 2
} mlsn_direction;

typedef enum mlsn_format { MLSN_FORMAT_CSV = 0, MLSN_FORMAT_JSON = 1 } mlsn_format;

typedef struct mlsn_events mlsn_events;
typedef struct mlsn_network mlsn_network;
typedef struct mlsn_node_set mlsn_node_set;

MLSN_API const char* mlsn_version(void);
MLSN_API const char* mlsn_last_error(void);
MLSN_API const char* mlsn_status_string(mlsn_status status);
MLSN_API void mlsn_string_free(char* s);

/* ---- events ------------------------------------------------------------ */

MLSN_API mlsn_status mlsn_events_create(mlsn_events** out);
/* CSV edge list; see the README for the column layout. */
MLSN_API mlsn_status mlsn_events_read_csv(const char* path, int has_header, mlsn_events** out);
/* weight < 0 is rejected; has_timestamp == 0 leaves the timestamp absent. */
MLSN_API mlsn_status mlsn_events_add(mlsn_events* events, const char* source, const char* target,
                                     const char* layer, double weight, int has_timestamp,
                                     int64_t timestamp);
MLSN_API size_t mlsn_events_size(const mlsn_events* events);
/* MLSN_ERR_INSUFFICIENT_DATA when no event carries a timestamp. */
MLSN_API mlsn_status mlsn_events_min_timestamp(const mlsn_events* events, int64_t* out);
MLSN_API void mlsn_events_free(mlsn_events* events);

/* ---- networks ---------------------------------------------------------- */

MLSN_API mlsn_status mlsn_network_build(const mlsn_events* events, mlsn_dedup_policy policy,
                                        mlsn_network** out);
MLSN_API mlsn_status mlsn_network_normalize(const mlsn_network* net, mlsn_network** out);
MLSN_API mlsn_status mlsn_network_layer_view(const mlsn_network* net, const char* layer,
                                             mlsn_network** out);
MLSN_API void mlsn_network_free(mlsn_network* net);

MLSN_API size_t mlsn_network_node_count(const mlsn_network* net);
MLSN_API size_t mlsn_network_layer_count(const mlsn_network* net);
MLSN_API size_t mlsn_network_edge_count(const mlsn_network* net);
/* Lexicographic order; NULL when the index is out of range. */
MLSN_API const char* mlsn_network_node_id(const mlsn_network* net, size_t index);
MLSN_API const char* mlsn_network_layer_id(const mlsn_network* net, size_t index);
/* w(source, target, layer), 0 for an absent edge. */
MLSN_API mlsn_status mlsn_network_weight(const mlsn_network* net, const char* source,
                                         const char* target, const char* layer, double* out);

/* ---- node sets ---------------------------------------------------------- */

MLSN_API size_t mlsn_node_set_size(const mlsn_node_set* set);
MLSN_API const char* mlsn_node_set_at(const mlsn_node_set* set, size_t index);
MLSN_API void mlsn_node_set_free(mlsn_node_set* set);

MLSN_API mlsn_status mlsn_neighbourhood(const mlsn_network* net, const char* node,
                                        const char* layer, mlsn_node_set** out);
MLSN_API mlsn_status mlsn_multilayer_neighbourhood(const mlsn_network* net, const char* node,
                                                   mlsn_variant variant, int alpha,
                                                   mlsn_node_set** out);

/* ---- measures ------------------------------------------------------------ */

MLSN_API mlsn_status mlsn_clcc(const mlsn_network* net, const char* node, int alpha,
                               mlsn_variant variant, double* out);
MLSN_API mlsn_status mlsn_cdc(const mlsn_network* net, const char* node, int alpha,
                              mlsn_direction direction, mlsn_variant variant, double* out);
/* version is 1, 2 or 3. */
MLSN_API mlsn_status mlsn_mdc(const mlsn_network* net, int version, const char* node,
                              mlsn_direction direction, double* out);
/* net must have exactly one layer. */
MLSN_API mlsn_status mlsn_degree_centrality(const mlsn_network* net, const char* node,
                                            mlsn_direction direction, int weighted, double* out);

typedef struct mlsn_measure_options {
  const char* metric; /* dc, idc, odc, clcc, cdc[-in|-out], mdc{1,2,3}[-in|-out] */
  int alpha;          /* 0 when not given */
  const char* layer;  /* NULL when not given; dc/idc/odc only */
  mlsn_variant variant;
  int weighted;       /* dc/idc/odc only */
} mlsn_measure_options;

MLSN_API void mlsn_measure_options_init(mlsn_measure_options* options);
/* 1 when the metric needs alpha, 0 when not, -1 for an unknown metric. */
MLSN_API int mlsn_metric_requires_alpha(const char* metric);
/* Writes one value per node (node order of the network) into values[0..capacity). */
MLSN_API mlsn_status mlsn_measure_values(const mlsn_network* net,
                                         const mlsn_measure_options* options, double* values,
                                         size_t capacity);

/* ---- statistics ---------------------------------------------------------- */

typedef struct mlsn_fit_result {
  double amplitude;        /* A */
  double decay;            /* t in A * exp(x / t) */
  double correlation_rate; /* Pearson r, observed vs fitted */
  size_t n_points;
  size_t excluded;         /* non-positive values dropped */
} mlsn_fit_result;

MLSN_API mlsn_status mlsn_fit_exp_decay(const double* values, size_t n, mlsn_fit_result* out);

/* ---- input helpers --------------------------------------------------------- */

/* Caller releases *values with mlsn_values_free. */
MLSN_API mlsn_status mlsn_read_values(const char* path, double** values, size_t* n);
MLSN_API void mlsn_values_free(double* values);
MLSN_API mlsn_status mlsn_read_roster(const char* path, mlsn_node_set** out);
MLSN_API mlsn_status mlsn_parse_timestamp(const char* text, int64_t* out);
MLSN_API mlsn_status mlsn_parse_duration(const char* text, int64_t* out);

/* ---- rendered reports ------------------------------------------------------ */

MLSN_API mlsn_status mlsn_render_neighbourhood(const mlsn_network* net, const char* node,
                                               mlsn_variant variant, int alpha, char** out);
MLSN_API mlsn_status mlsn_render_measure(const mlsn_network* net,
                                         const mlsn_measure_options* options, mlsn_format format,
                                         char** out);
MLSN_API mlsn_status mlsn_render_sweep(const mlsn_network* net, int max_alpha,
                                       mlsn_format format, char** out);

typedef struct mlsn_window_options {
  int64_t start;         /* epoch seconds */
  int64_t length;        /* seconds */
  int count;
  int max_alpha;         /* report columns alpha = 1..max_alpha */
  mlsn_variant variant;
  mlsn_dedup_policy dedup;
  const mlsn_node_set* roster; /* optional extra node universe */
} mlsn_window_options;

MLSN_API void mlsn_window_options_init(mlsn_window_options* options);
MLSN_API mlsn_status mlsn_render_windows(const mlsn_events* events,
                                         const mlsn_window_options* options, mlsn_format format,
                                         char** out);
/* n_edges == 0 selects the default edges. */
MLSN_API mlsn_status mlsn_render_histogram(const double* values, size_t n, const double* edges,
                                           size_t n_edges, mlsn_format format, char** out);
MLSN_API mlsn_status mlsn_render_fit(const double* values, size_t n, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MLSN_H */
