/* Copyright 2026 The SC-MAD Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the SC-MAD shared library: simplicial complex data
 * augmentation via complexon mixup. Handles are opaque; every function
 * returns a status code and the last error message is retrievable per
 * thread via scmad_last_error(). */

#ifndef SCMAD_H
#define SCMAD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes (also used as CLI exit codes). */
#define SCMAD_OK 0
#define SCMAD_ERR_USAGE 1   /* invalid arguments or configuration */
#define SCMAD_ERR_DATA 2    /* malformed or inconsistent input data */
#define SCMAD_ERR_SOLVER 3  /* solver non-convergence */
#define SCMAD_ERR_BOUND 4   /* density bound violated */
#define SCMAD_ERR_INTERNAL 5

typedef struct scmad_config scmad_config;
typedef struct scmad_dataset scmad_dataset;
typedef struct scmad_complexon_set scmad_complexon_set;

const char* scmad_version(void);

/* Message for the most recent failure on the calling thread. */
const char* scmad_last_error(void);

/* --- Configuration (flat key=value text) ------------------------------ */

scmad_config* scmad_config_new(void);
void scmad_config_free(scmad_config* config);
/* File values merge under values already set explicitly. */
int scmad_config_load(scmad_config* config, const char* path);
int scmad_config_set(scmad_config* config, const char* key,
                     const char* value);

/* --- Labeled datasets (JSON-lines) ------------------------------------ */

int scmad_dataset_read(const char* path, scmad_dataset** out);
int scmad_dataset_write(const scmad_dataset* dataset, const char* path);
int scmad_dataset_size(const scmad_dataset* dataset, int* out);
void scmad_dataset_free(scmad_dataset* dataset);

/* Synthetic Vietoris-Rips task (circle vs figure eight). Keys:
 * n_per_class, points, eps (or auto), noise, target_edge_density,
 * max_dim. */
int scmad_synth_vr(const scmad_config* config, uint64_t seed,
                   scmad_dataset** out);

/* --- Complexon sets ---------------------------------------------------- */

/* One complexon JSON file per entry. */
int scmad_complexon_set_read(const char* const* paths, int count,
                             scmad_complexon_set** out);
/* Writes <dir>/<prefix><index>.json for every entry. */
int scmad_complexon_set_write(const scmad_complexon_set* set, const char* dir,
                              const char* prefix);
int scmad_complexon_set_size(const scmad_complexon_set* set, int* out);
void scmad_complexon_set_free(scmad_complexon_set* set);

/* Per-sample complexon estimation (keys: tau, h, grid). Labels carry
 * over from the dataset. */
int scmad_estimate(const scmad_dataset* dataset, const scmad_config* config,
                   scmad_complexon_set** out);

/* Mixup over a complexon set. Keys: data_scheme (linear|cvx),
 * label_scheme (linear|sigmoid|logit|cvx), epsilon, eps_fuse,
 * lambda_grid, solver_tol, max_iter, sharpness. Labels must be present
 * on the set for class weights and label mixing. Optionally writes the
 * clusterpath export JSON. */
int scmad_mixup(const scmad_complexon_set* set, const scmad_config* config,
                uint64_t seed, int count, const char* clusterpath_json_path,
                scmad_complexon_set** mixtures);

/* Samples count complexes per complexon into a JSON-lines dataset.
 * Keys: n_nodes (or auto = complexon resolution). */
int scmad_sample(const scmad_complexon_set* set, const scmad_config* config,
                 uint64_t seed, int n_nodes, int count_per_complexon,
                 scmad_dataset** out);

/* End-to-end augmentation: estimate, mixup, sample, label-mix; appends
 * count synthetic samples to a copy of the dataset. */
int scmad_augment(const scmad_dataset* dataset, const scmad_config* config,
                  uint64_t seed, int count, scmad_dataset** out);

/* Experiment grid; writes metrics CSV and a JSON summary. Keys: seeds,
 * split, t_prime, schemes (comma list of data:label pairs or "all"),
 * plus augmentation keys. */
int scmad_eval(const scmad_dataset* dataset, const scmad_config* config,
               const char* csv_path, const char* json_path);

/* Structural-preservation bound check over random mixtures of the set
 * and the standard motif bank. Returns SCMAD_ERR_BOUND on any violation.
 * Writes a JSON report when report_path is non-null. */
int scmad_check_bound(const scmad_complexon_set* set,
                      const scmad_config* config, uint64_t seed, int draws,
                      const char* report_path);

/* Homomorphism density table (motifs x complexes) as CSV. */
int scmad_homdensity(const scmad_dataset* dataset, const char* csv_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SCMAD_H */
