/* C interface to the qwiht library.
 *
 * Objects are opaque handles created by qw_*_create-style functions and
 * released with the matching qw_*_free. Every fallible call returns a
 * qw_status; on failure qw_last_error() describes the problem (thread-local,
 * valid until the next failing call on the same thread).
 *
 * Complex vectors and matrices are passed as interleaved doubles
 * (re0, im0, re1, im1, ...). Matrices are column-major.
 */
#ifndef QWIHT_H
#define QWIHT_H

#include <stddef.h>
#include <stdint.h>

#if defined(QW_BUILDING_LIBRARY)
#define QW_API __attribute__((visibility("default")))
#else
#define QW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qw_status {
  QW_OK = 0,
  QW_ERR_GENERIC = 1,
  QW_ERR_CONFIG = 2,
  QW_ERR_DEADBAND = 3,
  QW_ERR_INVARIANT = 4,
  QW_ERR_ARGUMENT = 5
} qw_status;

typedef struct qw_graph qw_graph;
typedef struct qw_coin qw_coin;
typedef struct qw_walk qw_walk;
typedef struct qw_decomposition qw_decomposition;
typedef struct qw_iht qw_iht;
typedef struct qw_output qw_output;

QW_API const char* qw_version(void);
QW_API const char* qw_last_error(void);
QW_API const char* qw_status_name(qw_status status);

/* Graphs. Symmetric-group generators are concatenated one-line permutations,
 * n entries each, 1-based. */
QW_API qw_status qw_graph_hypercube(int d, qw_graph** out);
QW_API qw_status qw_graph_symmetric(int n, const int* generators, size_t generator_count, qw_graph** out);
QW_API qw_status qw_graph_preset(const char* key, qw_graph** out);
QW_API size_t qw_graph_vertex_count(const qw_graph* graph);
QW_API size_t qw_graph_degree(const qw_graph* graph);
QW_API qw_status qw_graph_neighbor(const qw_graph* graph, size_t vertex, size_t label, size_t* out);
QW_API size_t qw_graph_default_final_vertex(const qw_graph* graph);
QW_API void qw_graph_free(qw_graph* graph);

/* Coins. */
QW_API qw_status qw_coin_grover(size_t d, qw_coin** out);
QW_API qw_status qw_coin_dft(size_t d, qw_coin** out);
QW_API qw_status qw_coin_random(size_t d, uint64_t seed, qw_coin** out);
QW_API qw_status qw_coin_custom(size_t d, const double* entries, qw_coin** out);
QW_API size_t qw_coin_dim(const qw_coin* coin);
/* Writes d*d interleaved complex entries; len is the buffer length in doubles. */
QW_API qw_status qw_coin_matrix(const qw_coin* coin, double* out, size_t len);
QW_API qw_status qw_coin_cps_count(const qw_coin* coin, double tol, size_t* out);
QW_API void qw_coin_free(qw_coin* coin);

/* Walk unitary on H_v (x) H_c, index v*d + j. */
QW_API qw_status qw_walk_build(const qw_graph* graph, const qw_coin* coin, qw_walk** out);
QW_API size_t qw_walk_size(const qw_walk* walk);
/* in and out hold n interleaved complex entries (2n doubles). */
QW_API qw_status qw_walk_apply(const qw_walk* walk, const double* in, double* out, size_t n);
QW_API void qw_walk_free(qw_walk* walk);

QW_API qw_status qw_decompose(const qw_walk* walk, double cluster_tol, qw_decomposition** out);
QW_API size_t qw_decomposition_cluster_count(const qw_decomposition* dec);
QW_API qw_status qw_decomposition_cluster(const qw_decomposition* dec, size_t index, double* phase,
                                          size_t* multiplicity);
QW_API void qw_decomposition_free(qw_decomposition* dec);

QW_API qw_status qw_iht_compute(const qw_decomposition* dec, const qw_graph* graph, const size_t* final_set,
                                size_t final_count, double rank_tol, qw_iht** out);
QW_API size_t qw_iht_total(const qw_iht* iht);
QW_API size_t qw_iht_row_count(const qw_iht* iht);
QW_API qw_status qw_iht_row(const qw_iht* iht, size_t index, size_t* count, size_t* dimension,
                            size_t* iht_dimension);
/* N x |V| column-major interleaved; len in doubles. */
QW_API qw_status qw_iht_basis(const qw_iht* iht, const double** data, size_t* len);
QW_API qw_status qw_iht_overlap(const qw_iht* iht, const double* psi, size_t n, double* out);
QW_API void qw_iht_free(qw_iht* iht);

/* Measured walk from psi (n interleaved entries, normalised). */
QW_API qw_status qw_simulate(const qw_walk* walk, const size_t* final_set, size_t final_count, const double* psi,
                             size_t n, size_t steps, double* survival, double* hitting_time);

/* Configuration-driven runs. */
typedef struct qw_overrides {
  int has_seed;
  uint64_t seed;
  int has_cluster_tol;
  double cluster_tol;
  int has_rank_tol;
  double rank_tol;
} qw_overrides;

QW_API qw_status qw_run_config(const char* text, const qw_overrides* overrides, qw_output** out);
/* target: "1".."7", "summary", "sweeps" or "all". Non-positive tolerances and a
 * zero trial count select the defaults. */
QW_API qw_status qw_reproduce(const char* target, uint64_t seed, double cluster_tol, double rank_tol,
                              size_t sweep_trials, qw_output** out);
QW_API const char* qw_output_text(const qw_output* output);
QW_API const char* qw_output_csv(const qw_output* output);
QW_API const char* qw_output_json(const qw_output* output);
QW_API size_t qw_output_file_count(const qw_output* output);
QW_API const char* qw_output_file_name(const qw_output* output, size_t index);
QW_API const char* qw_output_file_content(const qw_output* output, size_t index);
QW_API qw_status qw_output_write(const qw_output* output, const char* dir);
QW_API void qw_output_free(qw_output* output);

#ifdef __cplusplus
}
#endif

#endif
