// vfam command-line driver. Talks to the library only through vfam.h.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vfam/vfam.h"

namespace fs = std::filesystem;

namespace {

struct Options {
  vfam_run_config cfg{};
  std::string format = "json";
  std::string tie_break = "lex";
  std::string score = "S";
  std::vector<std::string> inputs;
  std::vector<std::string> systems;
  std::string out;
};

struct Failure {
  int code;
};

void die(const std::string& what) {
  std::cerr << "vfam: " << what << "\n";
  throw Failure{2};
}

void check(vfam_status st, const std::string& what) {
  if (st != VFAM_OK) {
    die(what + ": " + vfam_status_name(st) + ": " + vfam_last_error());
  }
}

// Files named directly are kept in order; directories expand to their
// *.json files in name order.
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      std::vector<std::string> found;
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.is_regular_file() && e.path().extension() == ".json") {
          found.push_back(e.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  return files;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, char* report) {
  std::string text(report);
  vfam_string_free(report);
  if (o.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) die("cannot write " + o.out);
  f << text;
}

void finish_config(Options& o) {
  static const std::map<std::string, vfam_format> formats = {
      {"json", VFAM_FORMAT_JSON}, {"csv", VFAM_FORMAT_CSV}};
  static const std::map<std::string, vfam_tie_break> ties = {
      {"lex", VFAM_TIE_LEX}, {"zero", VFAM_TIE_ZERO}, {"random", VFAM_TIE_RANDOM}};
  static const std::map<std::string, vfam_score> scores = {
      {"S", VFAM_SCORE_S}, {"S0", VFAM_SCORE_S0}, {"S0nt", VFAM_SCORE_S0NT},
      {"R0", VFAM_SCORE_R0}, {"R0nt", VFAM_SCORE_R0NT}};
  o.cfg.format = formats.at(o.format);
  o.cfg.tie_break = ties.at(o.tie_break);
  o.cfg.score = scores.at(o.score);
}

// Loads every model file; load failures are reported and counted.
std::vector<vfam_model*> load_models(const std::vector<std::string>& files,
                                     std::size_t& failures) {
  std::vector<vfam_model*> models;
  for (const auto& f : files) {
    vfam_model* m = nullptr;
    const vfam_status st = vfam_model_load_file(f.c_str(), &m);
    if (st != VFAM_OK) {
      std::cerr << "vfam: " << vfam_status_name(st) << ": " << vfam_last_error() << "\n";
      ++failures;
      continue;
    }
    models.push_back(m);
  }
  return models;
}

void free_models(std::vector<vfam_model*>& models) {
  for (auto* m : models) vfam_model_free(m);
  models.clear();
}

int run_model_info(const Options& o) {
  const auto files = expand_inputs(o.inputs);
  std::vector<const char*> paths;
  for (const auto& f : files) paths.push_back(f.c_str());
  char* report = nullptr;
  size_t errors = 0;
  check(vfam_model_info_files(paths.data(), paths.size(), o.cfg.format, &report, &errors),
        "model info");
  emit(o, report);
  return errors == 0 ? 0 : 1;
}

enum class CorpusCommand { kSpecialise, kScores, kPerturb, kGreedy, kOracle, kExperiment };

int run_corpus(const Options& o, CorpusCommand cmd) {
  std::size_t failures = 0;
  auto models = load_models(expand_inputs(o.inputs), failures);
  vfam_corpus* corpus = nullptr;
  check(vfam_corpus_create(&corpus), "corpus");
  for (auto* m : models) check(vfam_corpus_add_model(corpus, m, &o.cfg), "specialise");
  free_models(models);
  for (const auto& path : o.systems) {
    const std::string id = fs::path(path).stem().string();
    const vfam_status st =
        vfam_corpus_add_system_text(corpus, id.c_str(), read_file(path).c_str());
    if (st != VFAM_OK) {
      std::cerr << "vfam: " << path << ": " << vfam_status_name(st) << ": "
                << vfam_last_error() << "\n";
      ++failures;
    }
  }

  char* report = nullptr;
  size_t fatal = 0;
  vfam_status st = VFAM_OK;
  switch (cmd) {
    case CorpusCommand::kSpecialise:
      st = vfam_report_specialise(corpus, &o.cfg, &report, &fatal);
      break;
    case CorpusCommand::kScores:
      st = vfam_report_scores(corpus, &o.cfg, &report, &fatal);
      break;
    case CorpusCommand::kPerturb:
      st = vfam_report_perturb_scan(corpus, &o.cfg, &report, &fatal);
      break;
    case CorpusCommand::kGreedy:
      st = vfam_report_align(corpus, VFAM_ALIGN_GREEDY, &o.cfg, &report, &fatal);
      break;
    case CorpusCommand::kOracle:
      st = vfam_report_align(corpus, VFAM_ALIGN_ORACLE, &o.cfg, &report, &fatal);
      break;
    case CorpusCommand::kExperiment:
      st = vfam_report_experiment(corpus, &o.cfg, &report, &fatal);
      break;
  }
  vfam_corpus_free(corpus);
  check(st, "report");
  emit(o, report);
  return failures + fatal == 0 ? 0 : 1;
}

int run_pipeline(const Options& o) {
  std::size_t failures = 0;
  auto models = load_models(expand_inputs(o.inputs), failures);
  std::vector<const vfam_model*> handles(models.begin(), models.end());
  char* report = nullptr;
  size_t fatal = 0;
  const vfam_status st =
      vfam_pipeline(handles.data(), handles.size(), &o.cfg, &report, &fatal);
  free_models(models);
  check(st, "pipeline");
  emit(o, report);
  return failures + fatal == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  vfam_run_config_init(&o.cfg);

  CLI::App app{"Vertical families of polynomial systems: scores, perturbations, alignment"};
  app.set_version_flag("--version", std::string(vfam_version()));
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--seed", o.cfg.seed, "Run seed")->capture_default_str();
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--cap", o.cfg.cap, "Enumeration cap for minors and the oracle")
      ->capture_default_str();
  app.add_option("--threads", o.cfg.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();
  app.add_flag("--constraint", o.cfg.constraint, "Append specialised constraints");
  app.add_flag("--reduce", o.cfg.reduce, "Drop ODEs of constraint pivot species");
  app.add_flag("--fixed", o.cfg.fixed, "Use stored parameter values");
  app.add_option("--tie-break", o.tie_break, "Greedy tie-break")
      ->check(CLI::IsMember({"lex", "zero", "random"}))
      ->capture_default_str();
  app.add_option("--trials", o.cfg.trials, "Random translation trials")
      ->capture_default_str();
  app.add_option("--box-exponent", o.cfg.box_exponent,
                 "Shifts are drawn from [0, 2^e - 1]")
      ->capture_default_str();
  app.add_option("--max-species", o.cfg.max_species, "Pipeline species bound")
      ->capture_default_str();
  app.add_option("--oracle-cap", o.cfg.oracle_cap,
                 "Experiment: run the exact oracle below this many candidates")
      ->capture_default_str();
  app.add_option("--out", o.out, "Write the report here instead of stdout");

  auto inputs = [&](CLI::App* sub) {
    sub->add_option("inputs", o.inputs, "Model files or directories");
  };
  auto systems = [&](CLI::App* sub) {
    sub->add_option("--system", o.systems, "Polynomial system text file")
        ->check(CLI::ExistingFile);
  };

  auto* model = app.add_subcommand("model", "Model files");
  model->require_subcommand(1);
  auto* info = model->add_subcommand("info", "Describe model files");
  inputs(info);
  auto* spec = model->add_subcommand("specialise", "Specialise parameters");
  inputs(spec);

  auto* scores = app.add_subcommand("scores", "Macaulay minor scores");
  inputs(scores);
  systems(scores);

  auto* perturb = app.add_subcommand("perturb", "Monomial-shift perturbations");
  perturb->require_subcommand(1);
  auto* scan = perturb->add_subcommand("scan", "Check score maximality");
  inputs(scan);
  systems(scan);
  scan->add_option("--score", o.score, "Score to maximise")
      ->check(CLI::IsMember({"S", "S0", "S0nt", "R0", "R0nt"}))
      ->capture_default_str();
  scan->add_flag("--strict", o.cfg.strict, "Count only strict maxima");

  auto* align = app.add_subcommand("align", "Support alignment");
  align->require_subcommand(1);
  auto* greedy = align->add_subcommand("greedy", "Greedy translation alignment");
  auto* oracle = align->add_subcommand("oracle", "Exact alignment by enumeration");
  auto* experiment = align->add_subcommand("experiment", "Random translation trials");
  for (auto* sub : {greedy, oracle, experiment}) {
    inputs(sub);
    systems(sub);
  }

  auto* pipeline = app.add_subcommand("pipeline", "Full batch run over a corpus");
  inputs(pipeline);

  for (auto* sub : {info, spec, scores, scan, greedy, oracle, experiment, pipeline}) {
    sub->fallthrough();
  }
  model->fallthrough();
  perturb->fallthrough();
  align->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    finish_config(o);
    if (o.cfg.trials == 0) die("--trials must be positive");
    if (o.cfg.box_exponent > 62) die("--box-exponent must be at most 62");
    if (*info) return run_model_info(o);
    if (*spec) return run_corpus(o, CorpusCommand::kSpecialise);
    if (*scores) return run_corpus(o, CorpusCommand::kScores);
    if (*scan) return run_corpus(o, CorpusCommand::kPerturb);
    if (*greedy) return run_corpus(o, CorpusCommand::kGreedy);
    if (*oracle) return run_corpus(o, CorpusCommand::kOracle);
    if (*experiment) return run_corpus(o, CorpusCommand::kExperiment);
    if (*pipeline) return run_pipeline(o);
  } catch (const Failure& f) {
    return f.code;
  }
  return 2;
}
