/* hypercover: space-efficient approximate max-coverage over sampled hypergraphs.
 *
 * C interface over the native core. All functions returning hc_status set a
 * thread-local message readable via hc_last_error() on failure; out-pointers
 * are written only on HC_OK. Handles are freed with their matching _free();
 * every handle must outlive the handles built on top of it (a graph outlives
 * its oracles, an oracle outlives nothing — results are self-contained).
 * Node ids crossing this boundary are the original input-file ids.
 */
#ifndef HYPERCOVER_H
#define HYPERCOVER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_INVALID_ARGUMENT = 1,
  HC_ERR_IO = 2,
  HC_ERR_PARSE = 3,
  HC_ERR_DOMAIN = 4,
  HC_ERR_SAMPLE_CAP = 5,
  HC_ERR_INTERNAL = 6
} hc_status;

const char* hc_status_name(hc_status s);
/* message from the most recent failing call on this thread ("" if none) */
const char* hc_last_error(void);

typedef struct hc_graph hc_graph;
typedef struct hc_hypergraph hc_hypergraph;
typedef struct hc_oracle hc_oracle;
typedef struct hc_result hc_result;
typedef struct hc_estimate hc_estimate;

/* ---- inputs ---------------------------------------------------------- */

/* edge list: "u v" or "u v p" per line, '#' comments; undirected input
 * materializes both arc directions */
hc_status hc_graph_load(const char* path, int directed, hc_graph** out);
/* model: "wc" (1/in-degree) or "tri" (seeded uniform over {.1,.01,.001});
 * directed graphs only */
hc_status hc_graph_assign_weights(hc_graph* g, const char* model, uint64_t seed);
uint32_t hc_graph_num_nodes(const hc_graph* g);
uint64_t hc_graph_num_arcs(const hc_graph* g);
void hc_graph_free(hc_graph* g);

/* one hyperedge per line: whitespace-separated node ids, '#' comments */
hc_status hc_hypergraph_load(const char* path, hc_hypergraph** out);
uint32_t hc_hypergraph_num_nodes(const hc_hypergraph* h);
uint64_t hc_hypergraph_num_edges(const hc_hypergraph* h);
void hc_hypergraph_free(hc_hypergraph* h);

/* ---- oracles ---------------------------------------------------------- */

hc_status hc_oracle_explicit(const hc_hypergraph* h, uint64_t seed, hc_oracle** out);
hc_status hc_oracle_domset(const hc_graph* g, uint32_t hops, uint64_t seed, hc_oracle** out);
hc_status hc_oracle_ris_ic(const hc_graph* g, uint64_t seed, hc_oracle** out);
hc_status hc_oracle_landmark(const hc_graph* g, uint64_t seed, hc_oracle** out);
uint32_t hc_oracle_num_nodes(const hc_oracle* o);
void hc_oracle_free(hc_oracle* o);

/* ---- runs -------------------------------------------------------------- */

typedef struct hc_run_options {
  const char* bound;      /* "req" | "topk" | "df2d"; NULL -> "req" */
  uint64_t max_samples;   /* 0 -> 10^9 */
  uint32_t workers;       /* prefetch threads; 0 -> 1 */
  int64_t z;              /* explicit threshold, hc_run_bca only */
  int retain_full_sketch; /* also run the full-retention greedy baseline */
} hc_run_options;

/* single run at the explicit threshold opt->z */
hc_status hc_run_bca(hc_oracle* o, uint32_t k, const hc_run_options* opt, hc_result** out);
/* single run at the derived threshold z* for (eps, delta) */
hc_status hc_run_bca_fixed(hc_oracle* o, uint32_t k, double eps, double delta,
                           const hc_run_options* opt, hc_result** out);
/* adaptive threshold ascent with early-exit certificate */
hc_status hc_run_dta(hc_oracle* o, uint32_t k, double eps, double delta,
                     const hc_run_options* opt, hc_result** out);
/* cost-aware adaptive run: ids/costs name nodes by original id (n_costs
 * entries); every other node costs default_cost */
hc_status hc_run_budgeted_dta(hc_oracle* o, const uint64_t* ids, const double* costs,
                              uint64_t n_costs, double default_cost, double budget, double eps,
                              double delta, const hc_run_options* opt, hc_result** out);

/* full-retention baselines on an explicit hypergraph */
hc_status hc_greedy_full(const hc_hypergraph* h, uint32_t k, hc_result** out);
hc_status hc_exact(const hc_hypergraph* h, uint32_t k, hc_result** out);

uint64_t hc_result_solution_size(const hc_result* r);
uint64_t hc_result_solution_node(const hc_result* r, uint64_t i); /* original id */
int64_t hc_result_d_s(const hc_result* r);
uint64_t hc_result_samples(const hc_result* r);
int64_t hc_result_z_used(const hc_result* r); /* 0 when not threshold-driven */
uint64_t hc_result_peak_elements(const hc_result* r);
uint64_t hc_result_full_elements(const hc_result* r);
double hc_result_wall_seconds(const hc_result* r);
int hc_result_has_certificate(const hc_result* r);
double hc_result_certificate_lb(const hc_result* r);
double hc_result_certificate_ub(const hc_result* r);
double hc_result_certificate_ratio(const hc_result* r);
/* full-retention comparison, present iff retain_full_sketch was set */
int hc_result_has_full_baseline(const hc_result* r);
uint64_t hc_result_full_greedy_size(const hc_result* r);
uint64_t hc_result_full_greedy_node(const hc_result* r, uint64_t i);
int64_t hc_result_full_greedy_coverage(const hc_result* r);
void hc_result_free(hc_result* r);

/* ---- coverage evaluation ------------------------------------------------ */

hc_status hc_estimate_coverage(hc_oracle* o, const uint64_t* ids, uint64_t n_ids, double eps,
                               double delta, uint64_t max_samples, uint32_t workers,
                               hc_estimate** out);
double hc_estimate_mean(const hc_estimate* e);
double hc_estimate_lb(const hc_estimate* e);
double hc_estimate_ub(const hc_estimate* e);
uint64_t hc_estimate_samples(const hc_estimate* e);
int hc_estimate_precision_met(const hc_estimate* e);
void hc_estimate_free(hc_estimate* e);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HYPERCOVER_H */
