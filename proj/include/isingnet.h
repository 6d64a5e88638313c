/* C API for the isingnet survey engine.
 *
 * Every function returns an isn_status; on failure isn_last_error() holds a
 * thread-local description of what went wrong. Handles and buffers returned
 * through out-parameters are owned by the caller and released with the
 * matching free function.
 */
#ifndef ISINGNET_H
#define ISINGNET_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isn_status {
    ISN_OK = 0,
    ISN_ERROR_INVALID_ARGUMENT = 1,
    ISN_ERROR_UNSUPPORTED_SIZE = 2,
    ISN_ERROR_NOT_FOUND = 3,
    ISN_ERROR_IO = 4,
    ISN_ERROR_NUMERIC = 5,
    ISN_ERROR_INTERNAL = 6
} isn_status;

const char* isn_status_name(isn_status status);

/* Message from the most recent failing call on this thread; never NULL. */
const char* isn_last_error(void);

void isn_buffer_free(void* buffer);
void isn_string_free(char* text);

/* ---- network sets -------------------------------------------------------
 * An ordered collection of interaction networks, either enumerated (one
 * representative per isomorphism class, ascending canonical form, ids
 * N<n>-<ordinal>) or loaded from a survey catalog.
 */
typedef struct isn_networks isn_networks;

isn_status isn_networks_enumerate(int n_spins, isn_networks** out);
isn_status isn_networks_from_catalog(const char* path, isn_networks** out);
void isn_networks_free(isn_networks* nets);

size_t isn_networks_count(const isn_networks* nets);
isn_status isn_networks_id(const isn_networks* nets, size_t index, char* buffer, size_t size);
isn_status isn_networks_find(const isn_networks* nets, const char* id, size_t* index);
isn_status isn_networks_spin_count(const isn_networks* nets, size_t index, int* n_spins);
isn_status isn_networks_edge_count(const isn_networks* nets, size_t index, size_t* count);
/* Fills (i, j, sign) triples; capacity counts triples. */
isn_status isn_networks_edges(const isn_networks* nets, size_t index, int* triples,
                              size_t capacity);

/* Connected-graph and interaction-network class counts for 3 <= n <= 7. */
isn_status isn_count_networks(int n_spins, unsigned long long* connected_graphs,
                              unsigned long long* interaction_networks);

/* One JSON object per line: {"id", "n", "edges": [[i, j, sign], ...]}.
 * path "-" writes to stdout. */
isn_status isn_enumerate_to_file(int n_spins, const char* path);

/* ---- per-network analysis ---------------------------------------------- */

typedef struct isn_metrics {
    double q_min;
    int nu;
    int degenerate;
    long long circuit_rank;
    long long unconstrained_pairs;
} isn_metrics;

isn_status isn_analyze(const isn_networks* nets, size_t index, double hx, isn_metrics* out);

/* Equienergy subgraph as JSON {"vertices", "edges", "c", "r"}. */
isn_status isn_landscape_json(const isn_networks* nets, size_t index, char** json_out);

/* ---- quench dynamics ----------------------------------------------------- */

typedef struct isn_dynamics_params {
    double hx;
    double tau;
    double dt;
} isn_dynamics_params;

isn_dynamics_params isn_dynamics_params_default(void);

#define ISN_INITIAL_CLOSEST 0
#define ISN_INITIAL_FURTHEST 1

isn_status isn_imbalance_trace(const isn_networks* nets, size_t index,
                               const isn_dynamics_params* params, int initial_state,
                               double** times, double** values, size_t* count);

isn_status isn_imbalance_spectrum(const isn_networks* nets, size_t index,
                                  const isn_dynamics_params* params, int initial_state,
                                  double** frequencies, double** amplitudes, size_t* count,
                                  double* peak_amplitude, double* peak_frequency);

/* ---- survey, statistics, plot data -------------------------------------- */

typedef struct isn_survey_options {
    double hx;
    double tau;
    double dt;
    int shard_index;
    int shard_count;
    int sample_stride;  /* keep every stride-th network by canonical ordinal */
    int skip_dynamics;
    int workers;        /* 0: ISINGNET_WORKERS env var, else hardware threads */
} isn_survey_options;

isn_survey_options isn_survey_options_default(void);

/* Writes (or resumes) the catalog under out_dir and returns its path. */
isn_status isn_run_survey(int n_spins, const isn_survey_options* options, const char* out_dir,
                          char** catalog_path_out);

/* Pearson correlation of two catalog columns with a p-value band, as JSON
 * {"x", "y", "count", "pearson_r", "p"}. */
isn_status isn_correlate(const char* catalog_path, const char* x_field, const char* y_field,
                         char** report_json_out);

/* Scatter and 64x64 density CSVs for fig2|fig3|fig4|fig5. "-" = stdout. */
isn_status isn_figure_data(const char* catalog_path, const char* figure,
                           const char* scatter_path, const char* density_path);

#ifdef __cplusplus
}
#endif

#endif /* ISINGNET_H */
