/* seedstab: seed-stability laboratory for a small sentiment classifier.
 *
 * C surface over the C++ core. One opaque run handle carries a full
 * experiment configuration; the five run operations mirror the CLI
 * subcommands and write their artifacts under the configured output
 * directory. The stateless kernels at the bottom expose the numeric
 * primitives (agreement, overlap, learning-rate schedules) directly.
 *
 * Every fallible call returns a seedstab_status; the run operations also
 * store a human-readable message retrievable with seedstab_run_error().
 */
#ifndef SEEDSTAB_H
#define SEEDSTAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Mirrors the CLI exit codes. */
typedef enum seedstab_status {
    SEEDSTAB_OK = 0,
    SEEDSTAB_ERR_CONFIG = 1,   /* bad config, usage, or field value */
    SEEDSTAB_ERR_DATA = 2,     /* unreadable or malformed input data */
    SEEDSTAB_ERR_TRAINING = 3, /* every training run in the sweep failed */
    SEEDSTAB_ERR_EVAL = 4,     /* missing models or incomplete evaluation */
    SEEDSTAB_ERR_INTERNAL = 5  /* numeric faults and everything unexpected */
} seedstab_status;

const char* seedstab_version(void);

/* ---------------- Run handle ---------------- */

typedef struct seedstab_run seedstab_run;

/* Handle with the default configuration (10 seeds, both variants,
 * synthetic data). Returns NULL only on allocation failure. */
seedstab_run* seedstab_run_new(void);

/* Handle from a JSON config document (the same schema the CLI reads).
 * Returns NULL on parse or validation failure; when err is non-NULL the
 * message is copied into it (truncated to err_len - 1, NUL-terminated). */
seedstab_run* seedstab_run_new_from_json(const char* config_json, char* err, size_t err_len);

void seedstab_run_free(seedstab_run* run);

/* Scalar override, applied on top of the handle's configuration.
 * Fields: "out_dir", "lexicon_dir", "parallelism", "variant"
 * (vanilla|swa|both), "seeds" (e.g. "0..9" or "0,1,5"). */
seedstab_status seedstab_run_set(seedstab_run* run, const char* field, const char* value);

/* Message from the most recent failed call on this handle; "" after a
 * success. The pointer stays valid until the next call on the handle. */
const char* seedstab_run_error(const seedstab_run* run);

/* Single-line JSON summary of the most recent successful pipeline stage
 * ("" before the first success). Same lifetime rule as run_error. */
const char* seedstab_run_last_summary(const seedstab_run* run);

/* Pipeline stages. Each validates the configuration, resolves the output
 * directory (falling back to $SEEDSTAB_OUT) and writes its artifacts. */
seedstab_status seedstab_run_prepare(seedstab_run* run);
seedstab_status seedstab_run_train(seedstab_run* run);
seedstab_status seedstab_run_eval(seedstab_run* run);
seedstab_status seedstab_run_report(seedstab_run* run);
seedstab_status seedstab_run_all(seedstab_run* run);

/* ---------------- Stateless kernels ---------------- */

/* Fleiss' kappa over an n_items x n_categories table of rating counts
 * (row-major); each row must sum to n_raters. *kappa receives the adjusted
 * statistic (unanimous tables report 1.0). The unadjusted value is undefined
 * when chance agreement reaches 1; *raw_defined reports whether *raw was
 * written. raw and raw_defined may be NULL. */
seedstab_status seedstab_fleiss_kappa(const int32_t* counts, size_t n_items, size_t n_categories,
                                      int32_t n_raters, double* kappa, double* raw,
                                      int* raw_defined);

/* Jaccard overlap |A intersect B| / |A union B| of two id arrays.
 * *defined is set to 0 (and *ratio left untouched) when both sets are
 * empty, else to 1. Duplicate ids within one array are collapsed. */
seedstab_status seedstab_overlap_ratio(const char* const* ids_a, size_t n_a,
                                       const char* const* ids_b, size_t n_b, double* ratio,
                                       int* defined);

/* Learning-rate schedules, exact at step 0, the warmup step, the cutoff
 * step and the final step. Invalid shapes (peak_lr <= 0, warmup_steps >=
 * total_steps, ...) yield NaN. */
double seedstab_lr_warmup_linear_decay(long step, long warmup_steps, long total_steps,
                                       double peak_lr);
double seedstab_lr_warmup_then_constant(long step, long warmup_steps, long total_steps,
                                        double peak_lr, long cutoff_step, double constant_lr);

#ifdef __cplusplus
}
#endif

#endif
