#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vfam/exponent.hpp"
#include "vfam/polynomial.hpp"
#include "vfam/rational.hpp"

namespace vfam {

enum class TieBreak {
  kLex,     // lexicographically smallest minimising translation
  kZero,    // the zero translation when it is minimising, else kLex
  kRandom,  // uniform among minimisers, seeded
};

std::string_view tie_break_name(TieBreak t) noexcept;
TieBreak parse_tie_break(std::string_view name);

enum class AlignMethod { kGreedy, kOracle };

struct AlignmentResult {
  std::vector<ExponentVector> translations;
  Support united;
  std::size_t union_size = 0;
  AlignMethod method = AlignMethod::kGreedy;
  TieBreak tie_break = TieBreak::kLex;
};

/// Greedy translation alignment. The first set stays fixed; each following
/// set is translated by the v in U - S minimising |U + (S + v)| where U is
/// the union built so far. `seed` only matters for TieBreak::kRandom.
/// Throws Error(kInvalidArgument) on empty input or an empty set and
/// Error(kDimensionMismatch) on mixed ambient dimensions.
AlignmentResult greedy_alignment(const std::vector<Support>& sets,
                                 TieBreak tie_break = TieBreak::kLex,
                                 std::uint64_t seed = 0);

/// Exact minimum of |union of (S_i + v_i)| with v_1 = 0.
///
/// Some optimum has a connected overlap graph (moving a component until it
/// touches another never grows the union), so it is enough to try every
/// labelled spanning tree on the k sets and, per tree edge (p, c), every
/// relative translation v_c - v_p in S_p - S_c. Among optimal tuples the
/// lexicographically smallest is returned. Throws Error(kCapExceeded) when
/// the number of candidate tuples exceeds `cap`.
AlignmentResult optimal_alignment(const std::vector<Support>& sets,
                                  std::uint64_t cap = 10'000'000);

/// Number of translation tuples optimal_alignment would evaluate.
std::uint64_t optimal_alignment_candidates(const std::vector<Support>& sets);

struct TrialStatistics {
  std::vector<std::size_t> trial_sizes;
  /// Random shift applied to each polynomial, per trial.
  std::vector<std::vector<ExponentVector>> shifts;
  std::size_t baseline = 0;
  Rational mean_ratio;
  Rational best_ratio;
  std::optional<std::size_t> oracle_size;
};

struct TrialOptions {
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  unsigned box_exponent = 8;
  TieBreak tie_break = TieBreak::kLex;
  /// Also run optimal_alignment when it fits under this many candidates;
  /// 0 disables.
  std::uint64_t oracle_cap = 0;
};

/// Shifts each polynomial by a random exponent in [0, 2^box_exponent - 1]^n,
/// then aligns the shifted supports greedily. Trial t draws from its own
/// substream derive_seed(seed, t).
TrialStatistics random_translation_trials(const PolynomialSystem& system,
                                          const TrialOptions& opts);

std::vector<Support> supports_of(const PolynomialSystem& system);

}  // namespace vfam
