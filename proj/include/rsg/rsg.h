/* C interface to the research statement generation library.
 *
 * All functions return RSG_OK on success; on failure the thread-local
 * message from rsg_last_error() describes what went wrong. Handles are
 * opaque and must be released with their matching destroy function.
 */
#ifndef RSG_H
#define RSG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsg_status {
  RSG_OK = 0,
  RSG_ERR_IO = 1,
  RSG_ERR_FORMAT = 2,
  RSG_ERR_INVALID_ARGUMENT = 3,
  RSG_ERR_MISSING_ARTIFACT = 4,
  RSG_ERR_NUMERIC = 5,
  RSG_ERR_INTERNAL = 6,
} rsg_status;

/* Pipeline configuration: corpus path, output directory, model and
 * clustering parameters, scorer selection, MMR settings, seed. */
typedef struct rsg_config rsg_config;

rsg_status rsg_config_create(rsg_config** out);
void rsg_config_destroy(rsg_config* config);

/* Load a JSON config file; values already set are replaced. */
rsg_status rsg_config_load_file(rsg_config* config, const char* path);

/* Set a single value by dotted key, e.g. "corpus", "output_dir", "seed",
 * "topic.K", "ap.damping", "scorer.name", "mmr.word_limit". The value is
 * parsed according to the key's type. */
rsg_status rsg_config_set(rsg_config* config, const char* key, const char* value);

/* Run the full pipeline: ingest, train-topics, cluster, generate, and
 * evaluate when the corpus carries a reference statement. */
rsg_status rsg_run(const rsg_config* config);

/* Run one stage: "ingest", "train-topics", "cluster", "generate",
 * "evaluate", or "coverage". Stages communicate through files in the
 * configured output directory. */
rsg_status rsg_run_stage(const rsg_config* config, const char* stage);

/* ROUGE scores between two raw texts. variant is "1", "2", or "l".
 * Any of the three output pointers may be NULL. */
rsg_status rsg_rouge(const char* candidate, const char* reference, const char* variant,
                     double* precision, double* recall, double* f1);

/* Message for the most recent failure on this thread. Valid until the
 * next failing call. */
const char* rsg_last_error(void);

const char* rsg_version(void);

#ifdef __cplusplus
}
#endif

#endif /* RSG_H */
