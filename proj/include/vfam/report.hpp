#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vfam/align.hpp"
#include "vfam/error.hpp"
#include "vfam/models.hpp"
#include "vfam/perturb.hpp"
#include "vfam/polynomial.hpp"

namespace vfam {

enum class Format { kJson, kCsv };

struct RunConfig {
  std::uint64_t seed = 0;
  Format format = Format::kJson;
  std::uint64_t cap = 10'000'000;
  unsigned threads = 1;
  TieBreak tie_break = TieBreak::kLex;
  std::size_t trials = 10;
  unsigned box_exponent = 8;
  std::size_t max_species = 16;
  bool constraint = false;
  bool reduce = false;
  bool fixed = false;  // stored parameter values instead of random ones
  Score score = Score::S;
  bool strict = false;  // perturb scan: success means strict maximum
  std::uint64_t oracle_cap = 0;

  /// 16 hex digits identifying every field above except format.
  std::string hash() const;
};

/// A system under study, or the reason it could not be produced.
struct CorpusEntry {
  std::string id;
  std::uint64_t seed = 0;
  std::optional<PolynomialSystem> system;
  std::string error;
  ErrorCode error_code = ErrorCode::kInternal;
  /// Filtering reason (set by the pipeline), empty when scored.
  std::string skipped;
};

/// Per-model specialisation seed: derive_seed(run seed, fnv1a(id)).
std::uint64_t model_seed(std::uint64_t run_seed, const std::string& id);

CorpusEntry specialise_entry(const ODEModel& model, const RunConfig& cfg);

/// A model file and either its parsed model or the load error.
struct ModelLoad {
  std::string source;
  std::optional<ODEModel> model;
  std::string error;
};

std::string model_info_report(const std::vector<ModelLoad>& models,
                              Format format);
/// Report builders count entries that failed outside the skip policy
/// (cap exceeded, degenerate) into `fatal` when given.
std::string specialise_report(const std::vector<CorpusEntry>& corpus,
                              const RunConfig& cfg,
    std::size_t* fatal = nullptr);
std::string scores_report(const std::vector<CorpusEntry>& corpus,
                          const RunConfig& cfg,
    std::size_t* fatal = nullptr);
std::string perturb_scan_report(const std::vector<CorpusEntry>& corpus,
                                const RunConfig& cfg,
    std::size_t* fatal = nullptr);
std::string align_report(const std::vector<CorpusEntry>& corpus,
                         AlignMethod method, const RunConfig& cfg,
                         std::size_t* fatal = nullptr);
std::string experiment_report(const std::vector<CorpusEntry>& corpus,
                              const RunConfig& cfg,
    std::size_t* fatal = nullptr);

struct PipelineResult {
  std::string report;
  /// Models that failed for reasons other than the skip policy.
  std::size_t fatal = 0;
};

/// Specialise, filter, score, scan perturbations for every score and run
/// translation trials. Models are processed in id order; skipped models
/// are listed with their reason.
PipelineResult run_pipeline(std::vector<ODEModel> models,
                            const RunConfig& cfg);

}  // namespace vfam
