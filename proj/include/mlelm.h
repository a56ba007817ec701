/*
 * mlelm — multi-label classification with extreme learning machines.
 *
 * C API over the C++ core: opaque handles, integer status codes, and a
 * per-thread error message. Every function that can fail returns an
 * mlelm_status; on failure mlelm_last_error() describes what went wrong.
 * Handles are created by the library and released with the matching
 * *_free function. All matrices cross this boundary as row-major buffers.
 */
#ifndef MLELM_H
#define MLELM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mlelm_status {
    MLELM_OK = 0,
    MLELM_ERR_INVALID_ARGUMENT = 1, /* bad arguments, shape mismatches, bad config */
    MLELM_ERR_PARSE = 2,            /* malformed ARFF, XML, manifest or prediction files */
    MLELM_ERR_IO = 3,               /* filesystem failures */
    MLELM_ERR_NUMERIC = 4,          /* non-finite values, SVD non-convergence */
    MLELM_ERR_INTERNAL = 5
} mlelm_status;

typedef enum mlelm_activation {
    MLELM_ACT_SIGMOID = 0,
    MLELM_ACT_TANH = 1,
    MLELM_ACT_SINE = 2,
    MLELM_ACT_HARDLIMIT = 3
} mlelm_activation;

typedef enum mlelm_scaling {
    MLELM_SCALE_NONE = 0,
    MLELM_SCALE_MINMAX_01 = 1,
    MLELM_SCALE_STANDARDIZE = 2
} mlelm_scaling;

typedef struct mlelm_manifest mlelm_manifest;
typedef struct mlelm_dataset mlelm_dataset;
typedef struct mlelm_model mlelm_model;

/* Library version, e.g. "0.1.0". */
const char* mlelm_version(void);

/* Message for the most recent failure on the calling thread. Valid until
 * the next failing call on the same thread; never NULL. */
const char* mlelm_last_error(void);

/* --- dataset manifests --------------------------------------------------- */

mlelm_status mlelm_manifest_create(mlelm_manifest** out);
void mlelm_manifest_free(mlelm_manifest* manifest);

/* Manifest JSON (see README for the schema); relative paths in a file
 * resolve against the manifest's directory. */
mlelm_status mlelm_manifest_from_file(const char* path, mlelm_manifest** out);
mlelm_status mlelm_manifest_from_json(const char* json_text, mlelm_manifest** out);

mlelm_status mlelm_manifest_set_paths(mlelm_manifest* manifest, const char* train_path,
                                      const char* test_path);
/* Exactly one label designation is active; each setter replaces the last. */
mlelm_status mlelm_manifest_set_labels_trailing(mlelm_manifest* manifest, size_t count);
mlelm_status mlelm_manifest_set_labels_names(mlelm_manifest* manifest, const char* const* names,
                                             size_t count);
mlelm_status mlelm_manifest_set_labels_xml(mlelm_manifest* manifest, const char* xml_path);
mlelm_status mlelm_manifest_set_scaling(mlelm_manifest* manifest, mlelm_scaling mode);

/* --- datasets -------------------------------------------------------------- */

/* Loads the train/test pair described by the manifest. Imputation and
 * scaling parameters come from the training split only. */
mlelm_status mlelm_load_dataset(const mlelm_manifest* manifest, mlelm_dataset** train_out,
                                mlelm_dataset** test_out);
void mlelm_dataset_free(mlelm_dataset* dataset);

size_t mlelm_dataset_rows(const mlelm_dataset* dataset);
size_t mlelm_dataset_feature_count(const mlelm_dataset* dataset);
size_t mlelm_dataset_label_count(const mlelm_dataset* dataset);
/* NULL when the index is out of range. */
const char* mlelm_dataset_feature_name(const mlelm_dataset* dataset, size_t index);
const char* mlelm_dataset_label_name(const mlelm_dataset* dataset, size_t index);

/* out must hold rows * feature_count doubles (row-major). */
mlelm_status mlelm_dataset_copy_features(const mlelm_dataset* dataset, double* out);
/* out must hold rows * label_count bytes; 1 marks membership. */
mlelm_status mlelm_dataset_copy_labels(const mlelm_dataset* dataset, uint8_t* out);

typedef struct mlelm_stats {
    double cardinality; /* mean labels per instance */
    double density;     /* cardinality / label_count */
    size_t instance_count;
    size_t label_count;
} mlelm_stats;

mlelm_status mlelm_dataset_stats(const mlelm_dataset* dataset, mlelm_stats* out);

/* Writes the dataset's own labels in the prediction-file format, for use
 * as the truth side of mlelm_score_files. */
mlelm_status mlelm_dataset_write_truth(const mlelm_dataset* dataset, const char* path);

/* --- training and prediction ---------------------------------------------- */

typedef struct mlelm_train_options {
    size_t hidden_count;         /* required, >= 1 */
    mlelm_activation activation; /* default sigmoid */
    double init_low;             /* default -1.0 */
    double init_high;            /* default +1.0 */
    uint64_t seed;               /* default 0 */
    double rank_tolerance;       /* negative = automatic (default) */
} mlelm_train_options;

/* Fills every field with its default; hidden_count is left 0 and must be set. */
void mlelm_train_options_init(mlelm_train_options* options);

mlelm_status mlelm_train(const mlelm_dataset* dataset, const mlelm_train_options* options,
                         mlelm_model** out);
void mlelm_model_free(mlelm_model* model);

size_t mlelm_model_hidden_count(const mlelm_model* model);
size_t mlelm_model_feature_count(const mlelm_model* model);
size_t mlelm_model_label_count(const mlelm_model* model);
mlelm_activation mlelm_model_activation(const mlelm_model* model);
uint64_t mlelm_model_seed(const mlelm_model* model);
mlelm_status mlelm_model_init_range(const mlelm_model* model, double* low_out, double* high_out);

/* features: rows x cols row-major; cols must equal the model's feature
 * count. raw_out holds rows * label_count doubles. */
mlelm_status mlelm_predict_raw(const mlelm_model* model, const double* features, size_t rows,
                               size_t cols, double* raw_out);
/* flags_out holds rows * label_count bytes of 0/1 (threshold at zero,
 * with 0 mapping to 1). */
mlelm_status mlelm_predict_labels(const mlelm_model* model, const double* features, size_t rows,
                                  size_t cols, uint8_t* flags_out);
mlelm_status mlelm_predict_dataset(const mlelm_model* model, const mlelm_dataset* dataset,
                                   uint8_t* flags_out);

/* --- model files ------------------------------------------------------------ */

mlelm_status mlelm_model_save(const mlelm_model* model, const char* path);
mlelm_status mlelm_model_load(const char* path, mlelm_model** out);

/* --- evaluation ------------------------------------------------------------- */

typedef struct mlelm_metric_report {
    double hamming_loss;
    double accuracy;
    double precision;
    double recall;
    double f1;
    size_t instance_count;
    size_t label_count;
} mlelm_metric_report;

/* truth/predicted: rows * label_count bytes of 0/1 flags. */
mlelm_status mlelm_evaluate_flags(const uint8_t* truth, const uint8_t* predicted, size_t rows,
                                  size_t label_count, mlelm_metric_report* out);
/* Evaluates predicted flags against the dataset's own labels. */
mlelm_status mlelm_evaluate_dataset(const mlelm_dataset* dataset, const uint8_t* predicted,
                                    mlelm_metric_report* out);

/* --- prediction files --------------------------------------------------------- */

mlelm_status mlelm_predictions_write(const char* path, const uint8_t* flags, size_t rows,
                                     size_t label_count, const char* const* label_names);
/* Scores a predictions file against a truth file in the same format. */
mlelm_status mlelm_score_files(const char* truth_path, const char* predictions_path,
                               mlelm_metric_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MLELM_H */
