#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vfam/macaulay.hpp"
#include "vfam/polynomial.hpp"

namespace vfam {

enum class Score { S, S0, S0nt, R0, R0nt };

inline constexpr Score kAllScores[] = {Score::S, Score::S0, Score::S0nt,
                                       Score::R0, Score::R0nt};

std::string_view score_name(Score s) noexcept;
/// Throws Error(kInvalidArgument) for unknown names.
Score parse_score(std::string_view name);

Rational score_value(const ScoreReport& report, Score s);
/// S is computed from the distinct monomial count alone (no minor
/// enumeration); the other scores enumerate minors under `opts.cap`.
Rational score_value(const PolynomialSystem& system, Score s,
                     const EnumerationOptions& opts = {});

/// Replace polynomial `poly` (1-based) by x_var^shift * f_poly. A zero
/// shift is the identity.
struct Perturbation {
  std::size_t poly = 0;
  std::size_t var = 0;
  int shift = 0;

  bool is_identity() const noexcept { return shift == 0; }
  std::string to_string() const;
  friend bool operator==(const Perturbation&, const Perturbation&) = default;
};

PolynomialSystem apply(const PolynomialSystem& system, const Perturbation& p);

/// Canonical order: identity first (when requested), then poly, var,
/// shift -1 before +1.
std::vector<std::pair<Perturbation, PolynomialSystem>> enumerate_perturbations(
    const PolynomialSystem& system, bool include_identity = false);

struct MaximalityReport {
  Score score = Score::S;
  Rational original_value;
  bool is_maximum = true;
  bool is_strict_maximum = true;
  std::vector<std::pair<Perturbation, Rational>> better;
  std::vector<std::pair<Perturbation, Rational>> ties;
};

MaximalityReport maximality_report(const PolynomialSystem& system, Score s,
                                   const EnumerationOptions& opts = {});

struct CorpusScoreTable {
  std::size_t members = 0;
  /// Indexed by Score; members whose original system is a maximum.
  std::vector<std::size_t> successes = std::vector<std::size_t>(5, 0);
  std::vector<std::size_t> strict_successes = std::vector<std::size_t>(5, 0);
  /// (member id, message) for members that could not be scored.
  std::vector<std::pair<std::string, std::string>> failures;
};

CorpusScoreTable corpus_score_experiment(
    const std::vector<std::pair<std::string, PolynomialSystem>>& corpus,
    const EnumerationOptions& opts = {});

struct TiebreakReport {
  ScoreReport original;
  std::vector<std::pair<Perturbation, ScoreReport>> ties;
};

/// Full score reports of every non-identity perturbation tying the
/// original on S.
TiebreakReport tiebreak_report(const PolynomialSystem& system,
                               const EnumerationOptions& opts = {});

}  // namespace vfam
