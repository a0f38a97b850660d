#include "vfam/vfam.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "vfam/error.hpp"
#include "vfam/report.hpp"
#include "vfam/text.hpp"

struct vfam_model {
  vfam::ODEModel model;
};

struct vfam_corpus {
  std::vector<vfam::CorpusEntry> entries;
};

namespace {

thread_local std::string g_last_error;

vfam_status set_error(vfam_status status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

vfam_status to_status(vfam::ErrorCode code) {
  return static_cast<vfam_status>(static_cast<int>(code));
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
vfam_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return VFAM_OK;
  } catch (const vfam::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(VFAM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(VFAM_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

vfam::RunConfig to_config(const vfam_run_config* c) {
  vfam::RunConfig cfg;
  cfg.seed = c->seed;
  cfg.format = c->format == VFAM_FORMAT_CSV ? vfam::Format::kCsv : vfam::Format::kJson;
  cfg.cap = c->cap;
  cfg.threads = c->threads;
  switch (c->tie_break) {
    case VFAM_TIE_LEX: cfg.tie_break = vfam::TieBreak::kLex; break;
    case VFAM_TIE_ZERO: cfg.tie_break = vfam::TieBreak::kZero; break;
    case VFAM_TIE_RANDOM: cfg.tie_break = vfam::TieBreak::kRandom; break;
    default:
      throw vfam::Error(vfam::ErrorCode::kInvalidArgument, "unknown tie-break mode");
  }
  cfg.trials = c->trials;
  cfg.box_exponent = c->box_exponent;
  cfg.max_species = c->max_species;
  cfg.constraint = c->constraint != 0;
  cfg.reduce = c->reduce != 0;
  cfg.fixed = c->fixed != 0;
  if (c->score < VFAM_SCORE_S || c->score > VFAM_SCORE_R0NT) {
    throw vfam::Error(vfam::ErrorCode::kInvalidArgument, "unknown score");
  }
  cfg.score = vfam::kAllScores[c->score];
  cfg.strict = c->strict != 0;
  cfg.oracle_cap = c->oracle_cap;
  return cfg;
}

#define VFAM_REQUIRE(ptr)                                              \
  do {                                                                 \
    if (!(ptr)) return set_error(VFAM_E_NULL_ARGUMENT, #ptr " is NULL"); \
  } while (0)

}  // namespace

extern "C" {

const char* vfam_version(void) { return "0.1.0"; }

const char* vfam_last_error(void) { return g_last_error.c_str(); }

const char* vfam_status_name(vfam_status status) {
  switch (status) {
    case VFAM_OK: return "ok";
    case VFAM_E_NULL_ARGUMENT: return "null_argument";
    default:
      if (status >= VFAM_E_INVALID_ARGUMENT && status <= VFAM_E_INTERNAL) {
        return vfam::error_code_name(static_cast<vfam::ErrorCode>(status));
      }
      return "unknown";
  }
}

void vfam_string_free(char* str) { std::free(str); }

void vfam_run_config_init(vfam_run_config* cfg) {
  if (!cfg) return;
  const vfam::RunConfig d;
  cfg->seed = d.seed;
  cfg->format = VFAM_FORMAT_JSON;
  cfg->cap = d.cap;
  cfg->threads = d.threads;
  cfg->tie_break = VFAM_TIE_LEX;
  cfg->trials = d.trials;
  cfg->box_exponent = d.box_exponent;
  cfg->max_species = d.max_species;
  cfg->constraint = 0;
  cfg->reduce = 0;
  cfg->fixed = 0;
  cfg->score = VFAM_SCORE_S;
  cfg->strict = 0;
  cfg->oracle_cap = d.oracle_cap;
}

vfam_status vfam_model_load_file(const char* path, vfam_model** out) {
  VFAM_REQUIRE(path);
  VFAM_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new vfam_model{vfam::load_model_file(path)}; });
}

vfam_status vfam_model_parse(const char* json, vfam_model** out) {
  VFAM_REQUIRE(json);
  VFAM_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new vfam_model{vfam::parse_model(json)}; });
}

void vfam_model_free(vfam_model* model) { delete model; }

vfam_status vfam_model_id(const vfam_model* model, char** out) {
  VFAM_REQUIRE(model);
  VFAM_REQUIRE(out);
  return guarded([&] { *out = dup_string(model->model.id); });
}

vfam_status vfam_model_n_species(const vfam_model* model, size_t* out) {
  VFAM_REQUIRE(model);
  VFAM_REQUIRE(out);
  *out = model->model.n_species;
  return VFAM_OK;
}

vfam_status vfam_model_render(const vfam_model* model, char** out) {
  VFAM_REQUIRE(model);
  VFAM_REQUIRE(out);
  return guarded([&] { *out = dup_string(vfam::render_model(model->model)); });
}

vfam_status vfam_model_info_files(const char* const* paths, size_t count,
                                  vfam_format format, char** out, size_t* n_errors) {
  VFAM_REQUIRE(paths || count == 0);
  VFAM_REQUIRE(out);
  return guarded([&] {
    std::vector<vfam::ModelLoad> loads;
    std::size_t errors = 0;
    for (size_t i = 0; i < count; ++i) {
      vfam::ModelLoad l;
      l.source = paths[i] ? paths[i] : "";
      try {
        l.model = vfam::load_model_file(l.source);
      } catch (const vfam::Error& e) {
        l.error = std::string(vfam::error_code_name(e.code())) + ": " + e.what();
        ++errors;
      }
      loads.push_back(std::move(l));
    }
    *out = dup_string(vfam::model_info_report(
        loads, format == VFAM_FORMAT_CSV ? vfam::Format::kCsv : vfam::Format::kJson));
    if (n_errors) *n_errors = errors;
  });
}

vfam_status vfam_corpus_create(vfam_corpus** out) {
  VFAM_REQUIRE(out);
  return guarded([&] { *out = new vfam_corpus; });
}

void vfam_corpus_free(vfam_corpus* corpus) { delete corpus; }

vfam_status vfam_corpus_size(const vfam_corpus* corpus, size_t* out) {
  VFAM_REQUIRE(corpus);
  VFAM_REQUIRE(out);
  *out = corpus->entries.size();
  return VFAM_OK;
}

vfam_status vfam_corpus_add_model(vfam_corpus* corpus, const vfam_model* model,
                                  const vfam_run_config* cfg) {
  VFAM_REQUIRE(corpus);
  VFAM_REQUIRE(model);
  VFAM_REQUIRE(cfg);
  return guarded([&] {
    corpus->entries.push_back(vfam::specialise_entry(model->model, to_config(cfg)));
  });
}

vfam_status vfam_corpus_add_system_text(vfam_corpus* corpus, const char* id,
                                        const char* text) {
  VFAM_REQUIRE(corpus);
  VFAM_REQUIRE(id);
  VFAM_REQUIRE(text);
  return guarded([&] {
    vfam::CorpusEntry e;
    e.id = id;
    e.system = vfam::parse_system(text);
    corpus->entries.push_back(std::move(e));
  });
}

vfam_status vfam_corpus_error_count(const vfam_corpus* corpus, size_t* out) {
  VFAM_REQUIRE(corpus);
  VFAM_REQUIRE(out);
  *out = 0;
  for (const auto& e : corpus->entries) {
    if (!e.system) ++*out;
  }
  return VFAM_OK;
}

vfam_status vfam_report_specialise(const vfam_corpus* corpus,
                                   const vfam_run_config* cfg, char** out, size_t* n_fatal) {
  VFAM_REQUIRE(corpus);
  VFAM_REQUIRE(cfg);
  VFAM_REQUIRE(out);
  return guarded([&] {
    std::size_t fatal = 0;
    *out = dup_string(vfam::specialise_report(corpus->entries, to_config(cfg), &fatal));
    if (n_fatal) *n_fatal = fatal;
  });
}

vfam_status vfam_report_scores(const vfam_corpus* corpus, const vfam_run_config* cfg,
                               char** out, size_t* n_fatal) {
  VFAM_REQUIRE(corpus);
  VFAM_REQUIRE(cfg);
  VFAM_REQUIRE(out);
  return guarded([&] {
    std::size_t fatal = 0;
    *out = dup_string(vfam::scores_report(corpus->entries, to_config(cfg), &fatal));
    if (n_fatal) *n_fatal = fatal;
  });
}

vfam_status vfam_report_perturb_scan(const vfam_corpus* corpus,
                                     const vfam_run_config* cfg, char** out, size_t* n_fatal) {
  VFAM_REQUIRE(corpus);
  VFAM_REQUIRE(cfg);
  VFAM_REQUIRE(out);
  return guarded([&] {
    std::size_t fatal = 0;
    *out = dup_string(vfam::perturb_scan_report(corpus->entries, to_config(cfg), &fatal));
    if (n_fatal) *n_fatal = fatal;
  });
}

vfam_status vfam_report_align(const vfam_corpus* corpus, vfam_align_method method,
                              const vfam_run_config* cfg, char** out, size_t* n_fatal) {
  VFAM_REQUIRE(corpus);
  VFAM_REQUIRE(cfg);
  VFAM_REQUIRE(out);
  return guarded([&] {
    std::size_t fatal = 0;
    const auto m =
        method == VFAM_ALIGN_ORACLE ? vfam::AlignMethod::kOracle : vfam::AlignMethod::kGreedy;
    *out = dup_string(vfam::align_report(corpus->entries, m, to_config(cfg), &fatal));
    if (n_fatal) *n_fatal = fatal;
  });
}

vfam_status vfam_report_experiment(const vfam_corpus* corpus,
                                   const vfam_run_config* cfg, char** out, size_t* n_fatal) {
  VFAM_REQUIRE(corpus);
  VFAM_REQUIRE(cfg);
  VFAM_REQUIRE(out);
  return guarded([&] {
    std::size_t fatal = 0;
    *out = dup_string(vfam::experiment_report(corpus->entries, to_config(cfg), &fatal));
    if (n_fatal) *n_fatal = fatal;
  });
}

vfam_status vfam_pipeline(const vfam_model* const* models, size_t count,
                          const vfam_run_config* cfg, char** out, size_t* n_fatal) {
  VFAM_REQUIRE(models || count == 0);
  VFAM_REQUIRE(cfg);
  VFAM_REQUIRE(out);
  return guarded([&] {
    std::vector<vfam::ODEModel> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!models[i]) {
        throw vfam::Error(vfam::ErrorCode::kInvalidArgument, "NULL model handle");
      }
      list.push_back(models[i]->model);
    }
    auto result = vfam::run_pipeline(std::move(list), to_config(cfg));
    *out = dup_string(result.report);
    if (n_fatal) *n_fatal = result.fatal;
  });
}

}  // extern "C"
