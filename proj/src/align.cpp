#include "vfam/align.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_set>

#include "vfam/error.hpp"
#include "vfam/rng.hpp"

namespace vfam {

std::string_view tie_break_name(TieBreak t) noexcept {
  switch (t) {
    case TieBreak::kLex: return "lex";
    case TieBreak::kZero: return "zero";
    case TieBreak::kRandom: return "random";
  }
  return "?";
}

TieBreak parse_tie_break(std::string_view name) {
  for (TieBreak t : {TieBreak::kLex, TieBreak::kZero, TieBreak::kRandom}) {
    if (tie_break_name(t) == name) return t;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown tie-break '" + std::string(name) +
                  "' (expected lex, zero or random)");
}

std::vector<Support> supports_of(const PolynomialSystem& system) {
  std::vector<Support> sets;
  sets.reserve(system.size());
  for (const auto& p : system) sets.push_back(support(p));
  return sets;
}

namespace {

using PointSet = std::unordered_set<ExponentVector, ExponentHash>;

std::size_t validate(const std::vector<Support>& sets) {
  if (sets.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "alignment needs at least one set");
  }
  const std::size_t n = sets.front().ambient();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "set " + std::to_string(i + 1) + " is empty");
    }
    if (sets[i].ambient() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "set " + std::to_string(i + 1) + " has dimension " +
                      std::to_string(sets[i].ambient()) + ", expected " +
                      std::to_string(n));
    }
  }
  return n;
}

Support union_of(const std::vector<Support>& sets,
                 const std::vector<ExponentVector>& translations,
                 std::size_t n) {
  std::vector<ExponentVector> points;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const auto& p : sets[i]) points.push_back(p + translations[i]);
  }
  return Support(n, std::move(points));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

// (parent, child) edges of a labelled tree, ordered so every parent is
// reached before its children when rooted at node 0.
using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

EdgeList prufer_decode(const std::vector<std::size_t>& code, std::size_t k) {
  std::vector<std::size_t> degree(k, 1);
  for (std::size_t v : code) ++degree[v];
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v : code) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  std::size_t a = k, b = k;
  for (std::size_t v = 0; v < k; ++v) {
    if (degree[v] == 1) (a == k ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return edges;
}

EdgeList root_at_zero(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                      std::size_t k) {
  std::vector<std::vector<std::size_t>> adj(k);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  EdgeList oriented;
  std::vector<bool> seen(k, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = true;
      oriented.emplace_back(u, w);
      q.push(w);
    }
  }
  return oriented;
}

std::vector<EdgeList> spanning_trees(std::size_t k) {
  std::vector<EdgeList> trees;
  if (k == 1) {
    trees.emplace_back();
    return trees;
  }
  if (k == 2) {
    trees.push_back({{0, 1}});
    return trees;
  }
  std::vector<std::size_t> code(k - 2, 0);
  while (true) {
    trees.push_back(root_at_zero(prufer_decode(code, k), k));
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == k - 1) code[--i] = 0;
    if (i == 0) break;
    ++code[i - 1];
  }
  return trees;
}

}  // namespace

AlignmentResult greedy_alignment(const std::vector<Support>& sets,
                                 TieBreak tie_break, std::uint64_t seed) {
  const std::size_t n = validate(sets);
  SplitMix64 rng(seed);
  AlignmentResult r;
  r.method = AlignMethod::kGreedy;
  r.tie_break = tie_break;
  r.translations.push_back(ExponentVector(n));

  PointSet united(sets.front().begin(), sets.front().end());
  const ExponentVector zero(n);
  for (std::size_t l = 1; l < sets.size(); ++l) {
    const Support& next = sets[l];
    const Support candidates =
        Support(n, {united.begin(), united.end()}).minkowski_difference(next);
    std::size_t best_overlap = 0;
    std::vector<const ExponentVector*> minimisers;
    for (const auto& v : candidates) {  // lexicographic order
      std::size_t overlap = 0;
      for (const auto& p : next) overlap += united.count(p + v);
      if (overlap > best_overlap) {
        best_overlap = overlap;
        minimisers.clear();
      }
      if (overlap == best_overlap) minimisers.push_back(&v);
    }
    const ExponentVector* chosen = minimisers.front();
    if (tie_break == TieBreak::kZero) {
      for (const auto* v : minimisers) {
        if (*v == zero) chosen = v;
      }
    } else if (tie_break == TieBreak::kRandom) {
      chosen = minimisers[rng.below(minimisers.size())];
    }
    for (const auto& p : next) united.insert(p + *chosen);
    r.translations.push_back(*chosen);
  }
  r.united = Support(n, {united.begin(), united.end()});
  r.union_size = r.united.size();
  return r;
}

std::uint64_t optimal_alignment_candidates(const std::vector<Support>& sets) {
  validate(sets);
  std::uint64_t total = 0;
  for (const auto& tree : spanning_trees(sets.size())) {
    std::uint64_t product = 1;
    for (auto [parent, child] : tree) {
      product = saturating_mul(
          product, sets[parent].minkowski_difference(sets[child]).size());
    }
    total = saturating_add(total, product);
  }
  return total;
}

AlignmentResult optimal_alignment(const std::vector<Support>& sets,
                                  std::uint64_t cap) {
  const std::size_t n = validate(sets);
  const std::size_t k = sets.size();
  const std::uint64_t candidates = optimal_alignment_candidates(sets);
  if (candidates > cap) {
    throw Error(ErrorCode::kCapExceeded,
                std::to_string(candidates) +
                    " candidate alignments exceed the cap of " +
                    std::to_string(cap));
  }

  std::size_t best_size = std::numeric_limits<std::size_t>::max();
  std::vector<ExponentVector> best;
  std::vector<ExponentVector> translations(k, ExponentVector(n));
  std::vector<ExponentVector> scratch;
  for (const auto& tree : spanning_trees(k)) {
    std::vector<std::vector<ExponentVector>> diffs;
    diffs.reserve(tree.size());
    for (auto [parent, child] : tree) {
      diffs.push_back(sets[parent].minkowski_difference(sets[child]).points());
    }
    std::vector<std::size_t> pick(tree.size(), 0);
    while (true) {
      for (std::size_t e = 0; e < tree.size(); ++e) {
        const auto [parent, child] = tree[e];
        translations[child] = translations[parent] + diffs[e][pick[e]];
      }
      scratch.clear();
      for (std::size_t i = 0; i < k; ++i) {
        for (const auto& p : sets[i]) scratch.push_back(p + translations[i]);
      }
      std::sort(scratch.begin(), scratch.end());
      const std::size_t size = static_cast<std::size_t>(
          std::unique(scratch.begin(), scratch.end()) - scratch.begin());
      if (size < best_size || (size == best_size && translations < best)) {
        best_size = size;
        best = translations;
      }
      std::size_t e = tree.size();
      while (e > 0 && pick[e - 1] + 1 == diffs[e - 1].size()) pick[--e] = 0;
      if (e == 0) break;
      ++pick[e - 1];
    }
  }

  AlignmentResult r;
  r.method = AlignMethod::kOracle;
  r.translations = std::move(best);
  r.united = union_of(sets, r.translations, n);
  r.union_size = r.united.size();
  return r;
}

TrialStatistics random_translation_trials(const PolynomialSystem& system,
                                          const TrialOptions& opts) {
  if (opts.trials == 0) {
    throw Error(ErrorCode::kInvalidArgument, "at least one trial required");
  }
  if (opts.box_exponent > 62) {
    throw Error(ErrorCode::kInvalidArgument, "box exponent must be at most 62");
  }
  const std::vector<Support> sets = supports_of(system);
  validate(sets);
  const std::size_t n = system.n_vars();
  const std::int64_t hi = (std::int64_t{1} << opts.box_exponent) - 1;

  TrialStatistics stats;
  stats.baseline = distinct_monomials(system).size();
  std::size_t sum = 0, best = std::numeric_limits<std::size_t>::max();
  for (std::size_t t = 0; t < opts.trials; ++t) {
    SplitMix64 rng(derive_seed(opts.seed, t));
    std::vector<ExponentVector> shifts;
    std::vector<Support> shifted;
    for (const auto& s : sets) {
      ExponentVector alpha(n);
      for (std::size_t i = 0; i < n; ++i) alpha[i] = rng.uniform(0, hi);
      shifted.push_back(s.translated(alpha));
      shifts.push_back(std::move(alpha));
    }
    const auto result = greedy_alignment(shifted, opts.tie_break, rng.next());
    stats.trial_sizes.push_back(result.union_size);
    stats.shifts.push_back(std::move(shifts));
    sum += result.union_size;
    best = std::min(best, result.union_size);
  }
  const Integer base(std::to_string(stats.baseline));
  stats.mean_ratio = Rational(Integer(std::to_string(sum)),
                              base * Integer(std::to_string(opts.trials)));
  stats.mean_ratio.canonicalize();
  stats.best_ratio = Rational(Integer(std::to_string(best)), base);
  stats.best_ratio.canonicalize();

  if (opts.oracle_cap > 0 && optimal_alignment_candidates(sets) <= opts.oracle_cap) {
    stats.oracle_size = optimal_alignment(sets, opts.oracle_cap).union_size;
  }
  return stats;
}

}  // namespace vfam
