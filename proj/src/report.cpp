#include "vfam/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "vfam/error.hpp"
#include "vfam/rng.hpp"
#include "vfam/text.hpp"

namespace vfam {

namespace {

using nlohmann::ordered_json;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string s;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) s += ',';
    s += csv_field(fields[i]);
  }
  return s + "\n";
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

const char* b(bool v) { return v ? "true" : "false"; }

ordered_json config_json(const RunConfig& cfg) {
  ordered_json c;
  c["seed"] = cfg.seed;
  c["cap"] = cfg.cap;
  c["tie_break"] = std::string(tie_break_name(cfg.tie_break));
  c["trials"] = cfg.trials;
  c["box_exponent"] = cfg.box_exponent;
  c["max_species"] = cfg.max_species;
  c["constraint"] = cfg.constraint;
  c["reduce"] = cfg.reduce;
  c["specialisation"] = cfg.fixed ? "fixed" : "random";
  c["score"] = std::string(score_name(cfg.score));
  c["strict"] = cfg.strict;
  c["oracle_cap"] = cfg.oracle_cap;
  return c;
}

ordered_json header(const char* command, const RunConfig& cfg) {
  ordered_json doc;
  doc["command"] = command;
  doc["seed"] = cfg.seed;
  doc["config_hash"] = cfg.hash();
  doc["config"] = config_json(cfg);
  return doc;
}

std::string csv_header(const char* command, const RunConfig& cfg) {
  return std::string("# vfam ") + command + " seed=" + std::to_string(cfg.seed) +
         " config_hash=" + cfg.hash() + "\n";
}

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

EnumerationOptions enum_opts(const RunConfig& cfg) {
  return EnumerationOptions{cfg.cap, cfg.threads};
}

ordered_json point_json(const ExponentVector& e) {
  return ordered_json(std::vector<std::int64_t>(e.entries().begin(), e.entries().end()));
}

ordered_json system_json(const PolynomialSystem& s) {
  ordered_json j = ordered_json::array();
  for (const auto& p : s) j.push_back(render(p));
  return j;
}

ordered_json scores_json(const ScoreReport& r) {
  ordered_json j;
  j["M"] = r.counts.total;
  j["M0"] = r.counts.zero;
  j["Mnt"] = r.counts.nontrivial;
  j["M0nt"] = r.counts.nontrivial_zero;
  j["S"] = r.S;
  j["S0"] = r.S0;
  j["S0nt"] = r.S0nt;
  j["R0"] = to_string(r.R0);
  j["R0nt"] = to_string(r.R0nt);
  return j;
}

ordered_json perturbation_json(const Perturbation& p) {
  ordered_json j;
  j["poly"] = p.poly;
  j["var"] = p.var;
  j["shift"] = p.shift;
  j["label"] = p.to_string();
  return j;
}

ordered_json maximality_json(const MaximalityReport& r) {
  ordered_json j;
  j["score"] = std::string(score_name(r.score));
  j["original_value"] = to_string(r.original_value);
  j["is_maximum"] = r.is_maximum;
  j["is_strict_maximum"] = r.is_strict_maximum;
  for (const char* key : {"better", "ties"}) {
    const auto& list = std::string(key) == "better" ? r.better : r.ties;
    ordered_json arr = ordered_json::array();
    for (const auto& [p, v] : list) {
      ordered_json e = perturbation_json(p);
      e["value"] = to_string(v);
      arr.push_back(e);
    }
    j[key] = arr;
  }
  return j;
}

ordered_json alignment_json(const AlignmentResult& r) {
  ordered_json j;
  j["method"] = r.method == AlignMethod::kGreedy ? "greedy" : "oracle";
  if (r.method == AlignMethod::kGreedy) {
    j["tie_break"] = std::string(tie_break_name(r.tie_break));
  }
  j["union_size"] = r.union_size;
  ordered_json t = ordered_json::array();
  for (const auto& v : r.translations) t.push_back(point_json(v));
  j["translations"] = t;
  ordered_json u = ordered_json::array();
  for (const auto& p : r.united.canonical_order()) u.push_back(point_json(p));
  j["union"] = u;
  return j;
}

ordered_json trials_json(const TrialStatistics& s) {
  ordered_json j;
  j["baseline"] = s.baseline;
  j["trial_sizes"] = s.trial_sizes;
  j["mean_ratio"] = to_string(s.mean_ratio);
  j["best_ratio"] = to_string(s.best_ratio);
  if (s.oracle_size) j["oracle_size"] = *s.oracle_size;
  ordered_json shifts = ordered_json::array();
  for (const auto& trial : s.shifts) {
    ordered_json row = ordered_json::array();
    for (const auto& a : trial) row.push_back(point_json(a));
    shifts.push_back(row);
  }
  j["shifts"] = shifts;
  return j;
}

ordered_json entry_head(const CorpusEntry& e) {
  ordered_json j;
  j["id"] = e.id;
  j["seed"] = e.seed;
  return j;
}

TrialOptions trial_opts(const RunConfig& cfg, std::uint64_t seed) {
  TrialOptions t;
  t.trials = cfg.trials;
  t.seed = seed;
  t.box_exponent = cfg.box_exponent;
  t.tie_break = cfg.tie_break;
  t.oracle_cap = cfg.oracle_cap;
  return t;
}

bool skip_policy(ErrorCode code) {
  return code == ErrorCode::kCapExceeded || code == ErrorCode::kDegenerate;
}

// Runs `fn` on the entry's system, turning library errors into an error
// status on `j`. Returns false when there was nothing to report.
template <typename Fn>
bool with_system(const CorpusEntry& e, ordered_json& j, std::string& csv_note,
                 std::size_t* fatal, Fn&& fn) {
  if (!e.system) {
    const bool policy = skip_policy(e.error_code);
    if (!policy && fatal) ++*fatal;
    j["status"] = policy ? "skipped" : "error";
    j["error"] = e.error;
    csv_note = std::string(policy ? "# skipped " : "# error ") + e.id + ": " + one_line(e.error) + "\n";
    return false;
  }
  try {
    fn(*e.system);
    j["status"] = "ok";
    return true;
  } catch (const Error& err) {
    const bool policy = skip_policy(err.code());
    if (!policy && fatal) ++*fatal;
    j["status"] = policy ? "skipped" : "error";
    j["error"] = std::string(error_code_name(err.code())) + ": " + err.what();
    csv_note = std::string(policy ? "# skipped " : "# error ") + e.id + ": " + one_line(j["error"].get<std::string>()) + "\n";
    return false;
  }
}

}  // namespace

std::string RunConfig::hash() const {
  const std::string canonical = config_json(*this).dump();
  return hex64(fnv1a(canonical.data(), canonical.size()));
}

std::uint64_t model_seed(std::uint64_t run_seed, const std::string& id) {
  return derive_seed(run_seed, fnv1a(id.data(), id.size()));
}

CorpusEntry specialise_entry(const ODEModel& model, const RunConfig& cfg) {
  CorpusEntry e;
  e.id = model.id;
  e.seed = model_seed(cfg.seed, model.id);
  SpecialisationOptions opts{cfg.constraint, cfg.reduce, e.seed};
  try {
    e.system = cfg.fixed ? fixed_specialisation(model, opts)
                         : random_specialisation(model, opts);
  } catch (const Error& err) {
    e.error = std::string(error_code_name(err.code())) + ": " + err.what();
    e.error_code = err.code();
  }
  return e;
}

std::string model_info_report(const std::vector<ModelLoad>& models,
                              Format format) {
  if (format == Format::kCsv) {
    std::string out = csv_row({"source", "id", "n_species", "n_params",
                               "n_constraints", "deficiency", "description", "error"});
    for (const auto& m : models) {
      if (!m.model) {
        out += csv_row({m.source, "", "", "", "", "", "", one_line(m.error)});
        continue;
      }
      const ODEModel& md = *m.model;
      out += csv_row({m.source, md.id, std::to_string(md.n_species),
                      std::to_string(md.n_params), std::to_string(md.constraints.size()),
                      md.deficiency ? std::to_string(*md.deficiency) : "",
                      md.description, ""});
    }
    return out;
  }
  ordered_json doc;
  doc["command"] = "model info";
  ordered_json arr = ordered_json::array();
  for (const auto& m : models) {
    ordered_json j;
    j["source"] = m.source;
    if (!m.model) {
      j["status"] = "error";
      j["error"] = m.error;
      arr.push_back(j);
      continue;
    }
    const ODEModel& md = *m.model;
    j["status"] = "ok";
    j["id"] = md.id;
    j["description"] = md.description;
    j["summary"] = "Entry " + md.id + ", with " + std::to_string(md.n_species) +
                   " species and " + std::to_string(md.n_params) + " parameters.";
    j["n_species"] = md.n_species;
    j["n_params"] = md.n_params;
    j["deficiency"] = md.deficiency ? ordered_json(*md.deficiency) : ordered_json();
    j["stoichiometric_matrix"] = md.stoichiometric_matrix;
    if (md.reconfigured_stoichiometric_matrix) {
      j["reconfigured_stoichiometric_matrix"] = *md.reconfigured_stoichiometric_matrix;
    }
    if (md.kinetic_matrix) j["kinetic_matrix"] = *md.kinetic_matrix;
    ordered_json odes = ordered_json::array();
    for (const auto& p : md.odes) odes.push_back(render(p));
    j["odes"] = odes;
    ordered_json cons = ordered_json::array();
    for (const auto& p : md.constraints) cons.push_back(render(p));
    j["constraints"] = cons;
    if (md.param_values) {
      ordered_json pv = ordered_json::array();
      for (const auto& q : *md.param_values) pv.push_back(to_string(q));
      j["param_values"] = pv;
    }
    arr.push_back(j);
  }
  doc["models"] = arr;
  return finish(doc);
}

std::string specialise_report(const std::vector<CorpusEntry>& corpus,
                              const RunConfig& cfg, std::size_t* fatal) {
  if (cfg.format == Format::kCsv) {
    std::string out = csv_header("model specialise", cfg) +
                      csv_row({"model_id", "seed", "index", "polynomial"});
    for (const auto& e : corpus) {
      if (!e.system) {
        const bool policy = skip_policy(e.error_code);
        if (!policy && fatal) ++*fatal;
        out += std::string(policy ? "# skipped " : "# error ") + e.id + ": " +
               one_line(e.error) + "\n";
        continue;
      }
      for (std::size_t i = 0; i < e.system->size(); ++i) {
        out += csv_row({e.id, std::to_string(e.seed), std::to_string(i + 1),
                        render((*e.system)[i])});
      }
    }
    return out;
  }
  ordered_json doc = header("model specialise", cfg);
  ordered_json arr = ordered_json::array();
  for (const auto& e : corpus) {
    ordered_json j = entry_head(e);
    std::string note;
    with_system(e, j, note, fatal, [&](const PolynomialSystem& s) {
      j["n_vars"] = s.n_vars();
      j["polynomials"] = system_json(s);
      j["toric_candidate"] = is_toric_candidate(s);
    });
    arr.push_back(j);
  }
  doc["entries"] = arr;
  return finish(doc);
}

std::string scores_report(const std::vector<CorpusEntry>& corpus,
                          const RunConfig& cfg, std::size_t* fatal) {
  const bool csv = cfg.format == Format::kCsv;
  std::string out = csv ? csv_header("scores", cfg) +
                              csv_row({"model_id", "M", "M0", "Mnt", "M0nt", "S",
                                       "S0", "S0nt", "R0", "R0nt"})
                        : "";
  ordered_json doc = header("scores", cfg);
  ordered_json arr = ordered_json::array();
  for (const auto& e : corpus) {
    ordered_json j = entry_head(e);
    std::string note;
    ScoreReport r;
    if (with_system(e, j, note, fatal, [&](const PolynomialSystem& s) {
          r = score_report(s, enum_opts(cfg));
          j["scores"] = scores_json(r);
        })) {
      out += csv_row({e.id, std::to_string(r.counts.total), std::to_string(r.counts.zero),
                      std::to_string(r.counts.nontrivial),
                      std::to_string(r.counts.nontrivial_zero), std::to_string(r.S),
                      std::to_string(r.S0), std::to_string(r.S0nt), to_string(r.R0),
                      to_string(r.R0nt)});
    } else {
      out += note;
    }
    arr.push_back(j);
  }
  if (csv) return out;
  doc["entries"] = arr;
  return finish(doc);
}

std::string perturb_scan_report(const std::vector<CorpusEntry>& corpus,
                                const RunConfig& cfg, std::size_t* fatal) {
  const bool csv = cfg.format == Format::kCsv;
  std::string out = csv ? csv_header("perturb scan", cfg) +
                              csv_row({"model_id", "score", "is_max", "is_strict",
                                       "n_better", "n_ties"})
                        : "";
  ordered_json doc = header("perturb scan", cfg);
  ordered_json arr = ordered_json::array();
  std::size_t members = 0, successes = 0;
  for (const auto& e : corpus) {
    ordered_json j = entry_head(e);
    std::string note;
    MaximalityReport r;
    if (with_system(e, j, note, fatal, [&](const PolynomialSystem& s) {
          r = maximality_report(s, cfg.score, enum_opts(cfg));
          j["report"] = maximality_json(r);
        })) {
      ++members;
      const bool success = cfg.strict ? r.is_strict_maximum : r.is_maximum;
      if (success) ++successes;
      j["success"] = success;
      out += csv_row({e.id, std::string(score_name(cfg.score)), b(r.is_maximum),
                      b(r.is_strict_maximum), std::to_string(r.better.size()),
                      std::to_string(r.ties.size())});
    } else {
      out += note;
    }
    arr.push_back(j);
  }
  if (csv) {
    return out + "# summary score=" + std::string(score_name(cfg.score)) +
           " strict=" + b(cfg.strict) + " successes=" + std::to_string(successes) +
           "/" + std::to_string(members) + "\n";
  }
  doc["entries"] = arr;
  ordered_json summary;
  summary["score"] = std::string(score_name(cfg.score));
  summary["strict"] = cfg.strict;
  summary["members"] = members;
  summary["successes"] = successes;
  doc["summary"] = summary;
  return finish(doc);
}

std::string align_report(const std::vector<CorpusEntry>& corpus,
                         AlignMethod method, const RunConfig& cfg, std::size_t* fatal) {
  const char* command = method == AlignMethod::kGreedy ? "align greedy" : "align oracle";
  const bool csv = cfg.format == Format::kCsv;
  std::string out = csv ? csv_header(command, cfg) +
                              csv_row({"model_id", "method", "tie_break", "k",
                                       "union_size", "baseline"})
                        : "";
  ordered_json doc = header(command, cfg);
  ordered_json arr = ordered_json::array();
  for (const auto& e : corpus) {
    ordered_json j = entry_head(e);
    std::string note;
    AlignmentResult r;
    std::size_t baseline = 0;
    if (with_system(e, j, note, fatal, [&](const PolynomialSystem& s) {
          const auto sets = supports_of(s);
          r = method == AlignMethod::kGreedy
                  ? greedy_alignment(sets, cfg.tie_break, derive_seed(e.seed, 0))
                  : optimal_alignment(sets, cfg.cap);
          baseline = distinct_monomials(s).size();
          j["baseline"] = baseline;
          j["result"] = alignment_json(r);
        })) {
      out += csv_row({e.id, method == AlignMethod::kGreedy ? "greedy" : "oracle",
                      method == AlignMethod::kGreedy
                          ? std::string(tie_break_name(cfg.tie_break))
                          : "",
                      std::to_string(r.translations.size()),
                      std::to_string(r.union_size), std::to_string(baseline)});
    } else {
      out += note;
    }
    arr.push_back(j);
  }
  if (csv) return out;
  doc["entries"] = arr;
  return finish(doc);
}

std::string experiment_report(const std::vector<CorpusEntry>& corpus,
                              const RunConfig& cfg, std::size_t* fatal) {
  const bool csv = cfg.format == Format::kCsv;
  std::string out = csv ? csv_header("align experiment", cfg) +
                              csv_row({"model_id", "trial", "seed", "size",
                                       "baseline", "ratio"})
                        : "";
  ordered_json doc = header("align experiment", cfg);
  ordered_json arr = ordered_json::array();
  for (const auto& e : corpus) {
    ordered_json j = entry_head(e);
    std::string note;
    TrialStatistics stats;
    const std::uint64_t seed = derive_seed(e.seed, 1);
    if (with_system(e, j, note, fatal, [&](const PolynomialSystem& s) {
          stats = random_translation_trials(s, trial_opts(cfg, seed));
          j["trial_seed"] = seed;
          j["statistics"] = trials_json(stats);
        })) {
      for (std::size_t t = 0; t < stats.trial_sizes.size(); ++t) {
        Rational ratio(Integer(std::to_string(stats.trial_sizes[t])),
                       Integer(std::to_string(stats.baseline)));
        ratio.canonicalize();
        out += csv_row({e.id, std::to_string(t), std::to_string(seed),
                        std::to_string(stats.trial_sizes[t]),
                        std::to_string(stats.baseline), to_string(ratio)});
      }
    } else {
      out += note;
    }
    arr.push_back(j);
  }
  if (csv) return out;
  doc["entries"] = arr;
  return finish(doc);
}

namespace {

struct ModelOutcome {
  ordered_json row;
  std::vector<std::string> csv;
  enum { kOk, kSkipped, kFatal } status = kOk;
  std::vector<bool> is_max, is_strict;
  Rational mean_ratio, best_ratio;
};

ModelOutcome pipeline_model(const ODEModel& model, const RunConfig& cfg,
                            const std::string& hash, const EnumerationOptions& opts) {
  ModelOutcome out;
  ordered_json& j = out.row;
  std::vector<std::string>& csv = out.csv;
  j["id"] = model.id;
  const std::uint64_t seed = model_seed(cfg.seed, model.id);
  j["seed"] = seed;
  j["config_hash"] = hash;
  csv = {model.id, std::to_string(seed), hash};

  auto skip = [&](const std::string& status, const std::string& reason) {
    j["status"] = status;
    j["reason"] = reason;
    csv.push_back(status);
    csv.push_back(one_line(reason));
    csv.resize(24);
  };

  if (model.n_species > cfg.max_species) {
    skip("skipped", "more than " + std::to_string(cfg.max_species) + " species");
    out.status = ModelOutcome::kSkipped;
    return out;
  }
  try {
    CorpusEntry entry = specialise_entry(model, cfg);
    if (!entry.system) {
      const bool policy = skip_policy(entry.error_code);
      skip(policy ? "skipped" : "error", entry.error);
      out.status = policy ? ModelOutcome::kSkipped : ModelOutcome::kFatal;
      return out;
    }
    const PolynomialSystem& s = *entry.system;
    if (!is_toric_candidate(s)) {
      throw Error(ErrorCode::kDegenerate, "non-toric: a polynomial is a monomial");
    }
    const ScoreReport report = score_report(s, opts);
    std::vector<MaximalityReport> reports;
    for (Score sc : kAllScores) reports.push_back(maximality_report(s, sc, opts));
    const TrialStatistics stats =
        random_translation_trials(s, trial_opts(cfg, derive_seed(seed, 1)));

    j["status"] = "ok";
    j["reason"] = "";
    j["n_polys"] = s.size();
    j["n_vars"] = s.n_vars();
    j["n_monomials"] = distinct_monomials(s).size();
    j["polynomials"] = system_json(s);
    j["scores"] = scores_json(report);
    csv.insert(csv.end(), {"ok", "", std::to_string(s.size()),
                           std::to_string(distinct_monomials(s).size()),
                           std::to_string(report.S), std::to_string(report.S0),
                           std::to_string(report.S0nt), to_string(report.R0),
                           to_string(report.R0nt)});
    ordered_json maxima;
    for (const auto& r : reports) {
      ordered_json m;
      m["is_maximum"] = r.is_maximum;
      m["is_strict_maximum"] = r.is_strict_maximum;
      m["n_better"] = r.better.size();
      m["n_ties"] = r.ties.size();
      maxima[std::string(score_name(r.score))] = m;
      out.is_max.push_back(r.is_maximum);
      out.is_strict.push_back(r.is_strict_maximum);
      csv.push_back(b(r.is_maximum));
      csv.push_back(b(r.is_strict_maximum));
    }
    j["maximality"] = maxima;
    j["trials"] = trials_json(stats);
    csv.push_back(to_string(stats.mean_ratio));
    csv.push_back(to_string(stats.best_ratio));
    out.mean_ratio = stats.mean_ratio;
    out.best_ratio = stats.best_ratio;
  } catch (const Error& err) {
    const bool policy = skip_policy(err.code());
    skip(policy ? "skipped" : "error",
         std::string(error_code_name(err.code())) + ": " + err.what());
    out.status = policy ? ModelOutcome::kSkipped : ModelOutcome::kFatal;
  } catch (const std::exception& err) {
    skip("error", std::string("internal: ") + err.what());
    out.status = ModelOutcome::kFatal;
  }
  return out;
}

}  // namespace

PipelineResult run_pipeline(std::vector<ODEModel> models, const RunConfig& cfg) {
  std::sort(models.begin(), models.end(),
            [](const ODEModel& a, const ODEModel& b) { return a.id < b.id; });
  const std::string hash = cfg.hash();

  // Models run on worker threads; each minor enumeration stays single-threaded
  // when more than one model is in flight.
  std::size_t workers = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(models.size(), 1));
  EnumerationOptions opts = enum_opts(cfg);
  if (workers > 1) opts.threads = 1;

  std::vector<ModelOutcome> outcomes(models.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < models.size(); i = next++) {
      outcomes[i] = pipeline_model(models[i], cfg, hash, opts);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  PipelineResult result;
  std::vector<std::string> csv_rows;
  ordered_json rows = ordered_json::array();
  std::size_t scored = 0, skipped = 0;
  std::vector<std::size_t> successes(5, 0), strict(5, 0);
  std::optional<Rational> worst_mean, worst_best;
  for (auto& o : outcomes) {
    switch (o.status) {
      case ModelOutcome::kOk:
        ++scored;
        for (std::size_t i = 0; i < 5; ++i) {
          if (o.is_max[i]) ++successes[i];
          if (o.is_strict[i]) ++strict[i];
        }
        if (!worst_mean || o.mean_ratio > *worst_mean) worst_mean = o.mean_ratio;
        if (!worst_best || o.best_ratio > *worst_best) worst_best = o.best_ratio;
        break;
      case ModelOutcome::kSkipped: ++skipped; break;
      case ModelOutcome::kFatal: ++result.fatal; break;
    }
    rows.push_back(std::move(o.row));
    csv_rows.push_back(csv_row(o.csv));
  }

  if (cfg.format == Format::kCsv) {
    std::string out = csv_header("pipeline", cfg);
    std::vector<std::string> head = {"model_id", "seed", "config_hash", "status",
                                     "reason", "n_polys", "n_monomials", "S", "S0",
                                     "S0nt", "R0", "R0nt"};
    for (Score sc : kAllScores) {
      head.push_back("max_" + std::string(score_name(sc)));
      head.push_back("strict_" + std::string(score_name(sc)));
    }
    head.push_back("mean_ratio");
    head.push_back("best_ratio");
    out += csv_row(head);
    for (const auto& r : csv_rows) out += r;
    result.report = out;
    return result;
  }

  ordered_json doc = header("pipeline", cfg);
  doc["models"] = rows;
  ordered_json summary;
  summary["models"] = models.size();
  summary["scored"] = scored;
  summary["skipped"] = skipped;
  summary["errors"] = result.fatal;
  ordered_json succ, strict_j;
  for (std::size_t i = 0; i < 5; ++i) {
    succ[std::string(score_name(kAllScores[i]))] = successes[i];
    strict_j[std::string(score_name(kAllScores[i]))] = strict[i];
  }
  summary["score_successes"] = succ;
  summary["strict_successes"] = strict_j;
  summary["max_mean_ratio"] = worst_mean ? ordered_json(to_string(*worst_mean)) : ordered_json();
  summary["max_best_ratio"] = worst_best ? ordered_json(to_string(*worst_best)) : ordered_json();
  doc["summary"] = summary;
  result.report = finish(doc);
  return result;
}

}  // namespace vfam
