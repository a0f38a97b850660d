#include "vfam/perturb.hpp"

#include "vfam/error.hpp"

namespace vfam {

std::string_view score_name(Score s) noexcept {
  switch (s) {
    case Score::S: return "S";
    case Score::S0: return "S0";
    case Score::S0nt: return "S0nt";
    case Score::R0: return "R0";
    case Score::R0nt: return "R0nt";
  }
  return "?";
}

Score parse_score(std::string_view name) {
  for (Score s : kAllScores) {
    if (score_name(s) == name) return s;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown score '" + std::string(name) +
                  "' (expected S, S0, S0nt, R0 or R0nt)");
}

Rational score_value(const ScoreReport& report, Score s) {
  switch (s) {
    case Score::S: return Rational(Integer(std::to_string(report.S)));
    case Score::S0: return Rational(Integer(std::to_string(report.S0)));
    case Score::S0nt: return Rational(Integer(std::to_string(report.S0nt)));
    case Score::R0: return report.R0;
    case Score::R0nt: return report.R0nt;
  }
  return Rational(0);
}

Rational score_value(const PolynomialSystem& system, Score s,
                     const EnumerationOptions& opts) {
  if (s == Score::S) {
    if (system.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty polynomial system");
    }
    const std::size_t m = distinct_monomials(system).size();
    return Rational(-binomial(m, system.size()));
  }
  return score_value(score_report(system, opts), s);
}

std::string Perturbation::to_string() const {
  if (is_identity()) return "identity";
  return "x" + std::to_string(var) + "^" + std::to_string(shift) + "*f" +
         std::to_string(poly);
}

PolynomialSystem apply(const PolynomialSystem& system, const Perturbation& p) {
  if (p.is_identity()) return system;
  if (p.poly == 0 || p.poly > system.size() || p.var == 0 ||
      p.var > system.n_vars() || (p.shift != 1 && p.shift != -1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "perturbation " + p.to_string() + " outside the system");
  }
  const auto shift = ExponentVector::unit(system.n_vars(), p.var - 1, p.shift);
  return system.with_replaced(p.poly - 1,
                              monomial_multiply(system[p.poly - 1], shift));
}

std::vector<std::pair<Perturbation, PolynomialSystem>> enumerate_perturbations(
    const PolynomialSystem& system, bool include_identity) {
  std::vector<std::pair<Perturbation, PolynomialSystem>> out;
  out.reserve(2 * system.size() * system.n_vars() + 1);
  if (include_identity) out.emplace_back(Perturbation{}, system);
  for (std::size_t i = 1; i <= system.size(); ++i) {
    for (std::size_t j = 1; j <= system.n_vars(); ++j) {
      for (int s : {-1, 1}) {
        Perturbation p{i, j, s};
        out.emplace_back(p, apply(system, p));
      }
    }
  }
  return out;
}

MaximalityReport maximality_report(const PolynomialSystem& system, Score s,
                                   const EnumerationOptions& opts) {
  MaximalityReport r;
  r.score = s;
  r.original_value = score_value(system, s, opts);
  for (const auto& [p, perturbed] : enumerate_perturbations(system)) {
    Rational v = score_value(perturbed, s, opts);
    if (v > r.original_value) {
      r.better.emplace_back(p, std::move(v));
    } else if (v == r.original_value) {
      r.ties.emplace_back(p, std::move(v));
    }
  }
  r.is_maximum = r.better.empty();
  r.is_strict_maximum = r.is_maximum && r.ties.empty();
  return r;
}

CorpusScoreTable corpus_score_experiment(
    const std::vector<std::pair<std::string, PolynomialSystem>>& corpus,
    const EnumerationOptions& opts) {
  CorpusScoreTable table;
  for (const auto& [id, system] : corpus) {
    try {
      std::vector<MaximalityReport> reports;
      for (Score s : kAllScores) reports.push_back(maximality_report(system, s, opts));
      ++table.members;
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (reports[i].is_maximum) ++table.successes[i];
        if (reports[i].is_strict_maximum) ++table.strict_successes[i];
      }
    } catch (const Error& e) {
      table.failures.emplace_back(id, e.what());
    }
  }
  return table;
}

TiebreakReport tiebreak_report(const PolynomialSystem& system,
                               const EnumerationOptions& opts) {
  TiebreakReport r;
  r.original = score_report(system, opts);
  const Rational original_s = score_value(system, Score::S, opts);
  for (const auto& [p, perturbed] : enumerate_perturbations(system)) {
    if (score_value(perturbed, Score::S, opts) == original_s) {
      r.ties.emplace_back(p, score_report(perturbed, opts));
    }
  }
  return r;
}

}  // namespace vfam
