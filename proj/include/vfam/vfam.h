/*
 * C interface to the vfam library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible function returns a vfam_status; on failure a message is
 * available from vfam_last_error() on the calling thread until the next
 * call. Strings returned through `char**` are heap allocated and must be
 * released with vfam_string_free().
 */
#ifndef VFAM_VFAM_H
#define VFAM_VFAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VFAM_BUILDING_LIBRARY)
#    define VFAM_API __declspec(dllexport)
#  else
#    define VFAM_API __declspec(dllimport)
#  endif
#else
#  define VFAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vfam_status {
  VFAM_OK = 0,
  VFAM_E_INVALID_ARGUMENT = 1,
  VFAM_E_DIMENSION_MISMATCH = 2,
  VFAM_E_PARSE = 3,
  VFAM_E_SCHEMA = 4,
  VFAM_E_CAP_EXCEEDED = 5,
  VFAM_E_DEGENERATE = 6,
  VFAM_E_IO = 7,
  VFAM_E_INTERNAL = 8,
  VFAM_E_NULL_ARGUMENT = 9
} vfam_status;

typedef enum vfam_format { VFAM_FORMAT_JSON = 0, VFAM_FORMAT_CSV = 1 } vfam_format;

typedef enum vfam_score {
  VFAM_SCORE_S = 0,
  VFAM_SCORE_S0 = 1,
  VFAM_SCORE_S0NT = 2,
  VFAM_SCORE_R0 = 3,
  VFAM_SCORE_R0NT = 4
} vfam_score;

typedef enum vfam_tie_break {
  VFAM_TIE_LEX = 0,
  VFAM_TIE_ZERO = 1,
  VFAM_TIE_RANDOM = 2
} vfam_tie_break;

typedef enum vfam_align_method {
  VFAM_ALIGN_GREEDY = 0,
  VFAM_ALIGN_ORACLE = 1
} vfam_align_method;

typedef struct vfam_run_config {
  uint64_t seed;
  vfam_format format;
  uint64_t cap;           /* minor / oracle enumeration cap */
  unsigned threads;       /* minor enumeration threads, 0 = all cores */
  vfam_tie_break tie_break;
  uint64_t trials;
  unsigned box_exponent;
  uint64_t max_species;
  int constraint;         /* append specialised constraints */
  int reduce;             /* drop ODEs of constraint pivot species */
  int fixed;              /* stored parameter values instead of random */
  vfam_score score;       /* perturb scan score */
  int strict;             /* perturb scan: require a strict maximum */
  uint64_t oracle_cap;    /* experiment: oracle baseline cap, 0 = off */
} vfam_run_config;

typedef struct vfam_model vfam_model;
typedef struct vfam_corpus vfam_corpus;

VFAM_API const char* vfam_version(void);
VFAM_API const char* vfam_last_error(void);
VFAM_API const char* vfam_status_name(vfam_status status);
VFAM_API void vfam_string_free(char* str);

/* Fills `cfg` with the library defaults. */
VFAM_API void vfam_run_config_init(vfam_run_config* cfg);

VFAM_API vfam_status vfam_model_load_file(const char* path, vfam_model** out);
VFAM_API vfam_status vfam_model_parse(const char* json, vfam_model** out);
VFAM_API void vfam_model_free(vfam_model* model);
VFAM_API vfam_status vfam_model_id(const vfam_model* model, char** out);
VFAM_API vfam_status vfam_model_n_species(const vfam_model* model, size_t* out);
/* Canonical JSON document; parses back to an identical model. */
VFAM_API vfam_status vfam_model_render(const vfam_model* model, char** out);

/*
 * Report on the model files at `paths`. Files that fail to load become
 * error entries naming the file; their number is stored in `n_errors`.
 */
VFAM_API vfam_status vfam_model_info_files(const char* const* paths, size_t count,
                                           vfam_format format, char** out,
                                           size_t* n_errors);

/* A corpus is an ordered list of named polynomial systems. */
VFAM_API vfam_status vfam_corpus_create(vfam_corpus** out);
VFAM_API void vfam_corpus_free(vfam_corpus* corpus);
VFAM_API vfam_status vfam_corpus_size(const vfam_corpus* corpus, size_t* out);
/*
 * Specialises `model` per cfg (seed derived from cfg->seed and the model
 * id). A failed specialisation is stored as an error entry and reported as
 * VFAM_OK; it shows up in every report built from the corpus.
 */
VFAM_API vfam_status vfam_corpus_add_model(vfam_corpus* corpus, const vfam_model* model,
                                           const vfam_run_config* cfg);
/* Parses a system file (one polynomial per line, optional `vars=N`). */
VFAM_API vfam_status vfam_corpus_add_system_text(vfam_corpus* corpus, const char* id,
                                                 const char* text);
/* Number of entries that hold an error instead of a system. */
VFAM_API vfam_status vfam_corpus_error_count(const vfam_corpus* corpus, size_t* out);

/*
 * Report builders. `n_fatal` (may be NULL) receives the number of entries
 * that failed for reasons other than a cap or a degenerate system.
 */
VFAM_API vfam_status vfam_report_specialise(const vfam_corpus* corpus,
                                            const vfam_run_config* cfg, char** out,
    size_t* n_fatal);
VFAM_API vfam_status vfam_report_scores(const vfam_corpus* corpus,
                                        const vfam_run_config* cfg, char** out,
    size_t* n_fatal);
VFAM_API vfam_status vfam_report_perturb_scan(const vfam_corpus* corpus,
                                              const vfam_run_config* cfg, char** out,
    size_t* n_fatal);
VFAM_API vfam_status vfam_report_align(const vfam_corpus* corpus, vfam_align_method method,
                                       const vfam_run_config* cfg, char** out,
    size_t* n_fatal);
VFAM_API vfam_status vfam_report_experiment(const vfam_corpus* corpus,
                                            const vfam_run_config* cfg, char** out,
    size_t* n_fatal);

/*
 * End-to-end batch run over `models`. `n_fatal` (optional) receives the
 * number of models that failed outside the skip policy.
 */
VFAM_API vfam_status vfam_pipeline(const vfam_model* const* models, size_t count,
                                   const vfam_run_config* cfg, char** out,
                                   size_t* n_fatal);

#ifdef __cplusplus
}
#endif

#endif /* VFAM_VFAM_H */
