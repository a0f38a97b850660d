// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or overruns its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "vfam/align.hpp"
#include "vfam/error.hpp"
#include "vfam/macaulay.hpp"
#include "vfam/models.hpp"
#include "vfam/perturb.hpp"
#include "vfam/report.hpp"
#include "vfam/text.hpp"

using namespace vfam;

namespace {

struct Check {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

PolynomialSystem sys(std::size_t n, std::vector<const char*> polys) {
  std::vector<LaurentPolynomial> p;
  for (const char* s : polys) p.push_back(parse_laurent(s, n));
  return PolynomialSystem(n, std::move(p));
}

ODEModel fixture(const std::string& id) {
  return load_model_file(std::string(VFAM_FIXTURES) + "/" + id + ".json");
}

std::vector<ODEModel> all_fixtures() {
  std::vector<ODEModel> out;
  for (const auto& e : std::filesystem::directory_iterator(VFAM_FIXTURES))
    out.push_back(load_model_file(e.path()));
  std::sort(out.begin(), out.end(),
            [](const ODEModel& a, const ODEModel& b) { return a.id < b.id; });
  return out;
}

bool lists(const std::vector<std::pair<Perturbation, Rational>>& v, Perturbation p) {
  return std::any_of(v.begin(), v.end(), [&](const auto& e) { return e.first == p; });
}

// Leibniz expansion, used as an independent determinant.
Rational leibniz(const MacaulayMatrix& m, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    Rational t = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) t *= m.at(i, cols[perm[i]]);
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Check criterion1() {
  Check c;
  const auto F = macaulay_matrix(sys(2, {"x1^2 + x2^2 + x1", "x1^2 + x2^2 + 1"}));
  const auto G = macaulay_matrix(sys(2, {"x1^2 + x2^2 + x1", "x1^2*x2 + x2^3 + x2"}));
  auto compare = [&](const MacaulayMatrix& m, const std::vector<ExponentVector>& order,
                     const std::vector<std::vector<int>>& expect, const char* name) {
    c.expect(m.rows() == expect.size() && m.cols() == order.size(),
             std::string(name) + " has the wrong shape");
    if (!c.ok) return;
    for (std::size_t i = 0; i < expect.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j)
        c.expect(m.at(i, m.column_of(order[j])) == expect[i][j],
                 std::string(name) + " entry mismatch");
  };
  compare(F, {{2, 0}, {0, 2}, {1, 0}, {0, 0}}, {{1, 1, 1, 0}, {1, 1, 0, 1}}, "Mac(F)");
  c.expect(F.labels() == std::vector<ExponentVector>{{2, 0}, {0, 2}, {1, 0}, {0, 0}},
           "Mac(F) columns not in canonical order");
  compare(G, {{2, 0}, {0, 2}, {1, 0}, {2, 1}, {0, 3}, {0, 1}},
          {{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}}, "Mac(G)");
  return c;
}

Check criterion2() {
  Check c;
  const auto F = score_report(sys(2, {"x1^2 + x2^2 + x1", "x1^2 + x2^2 + 1"}));
  const auto G = score_report(sys(2, {"x1^2 + x2^2 + x1", "x1^2*x2 + x2^3 + x2"}));
  c.expect(F.S == -6 && F.S0 == 1 && F.S0nt == 1, "F integer scores");
  c.expect(F.R0 == Rational(1, 6), "R0(F)");
  c.expect(F.R0nt == Rational(1, 6), "R0nt(F) (definition value 1/6)");
  c.expect(G.S == -15 && G.S0 == 6 && G.S0nt == 0, "G integer scores");
  c.expect(G.R0 == Rational(2, 5), "R0(G) = 6/15");
  c.expect(G.R0nt == 0, "R0nt(G)");
  return c;
}

Check criterion3() {
  Check c;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> val(-3, 3), zero(0, 99);
  std::size_t trivial_seen = 0;
  for (int t = 0; t < 1000 && c.ok; ++t) {
    const std::size_t k = 1 + rng() % 4;
    const std::size_t m = k + rng() % (8 - k + 1);
    std::vector<Rational> e;
    for (std::size_t i = 0; i < k * m; ++i) e.emplace_back(zero(rng) < 40 ? 0 : val(rng));
    const MacaulayMatrix M(k, m, std::move(e));
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < m; ++j)
        if (pick[j]) cols.push_back(j);
      if (!minor_is_nontrivial(M, cols)) {
        ++trivial_seen;
        c.expect(minor_value(M, cols) == 0, "trivial minor with nonzero determinant");
        c.expect(leibniz(M, cols) == 0, "trivial minor with nonzero Leibniz expansion");
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  c.expect(trivial_seen > 0, "no trivial minors generated");
  return c;
}

Check criterion4() {
  Check c;
  const auto m = fixture("BIOMD0000000629");
  const auto params = random_parameters(m.n_params, 629);
  c.expect(constraint_pivots(m, params) == std::vector<std::size_t>{0, 1, 3},
           "pivots are not {x1, x2, x4}");
  c.expect(constraint_pivots(m) == std::vector<std::size_t>{0, 1, 3},
           "generic pivots are not {x1, x2, x4}");
  const auto F = specialise_model(m, params, {false, true, {}});
  c.expect(F.size() == 2 && F[0] == specialise(m.odes[2], params) &&
               F[1] == specialise(m.odes[4], params),
           "reduced system is not {f3, f5}");
  if (!c.ok) return c;
  c.expect(distinct_monomials(F).size() == 4, "{f3, f5} does not have 4 monomials");
  const Perturbation witness{1, 4, 1};
  c.expect(distinct_monomials(apply(F, witness)).size() == 3, "x4*f3 does not give 3");
  const auto r = maximality_report(F, Score::S);
  c.expect(!r.is_maximum, "S reported as maximal");
  c.expect(lists(r.better, witness), "witness x4*f3 missing from better list");
  return c;
}

Check criterion5() {
  Check c;
  const auto m = fixture("BIOMD0000000405");
  const auto params = random_parameters(m.n_params, 405);
  const auto F = specialise_model(m, params, {false, true, {}});
  c.expect(F.size() == 4, "reduced system does not have 4 polynomials");
  if (!c.ok) return c;
  c.expect(distinct_monomials(F).size() == 6, "reduced system does not have 6 monomials");
  const auto r = maximality_report(F, Score::S);
  c.expect(r.is_maximum, "S not maximal");
  c.expect(!r.is_strict_maximum, "S reported as strict maximum");
  for (std::size_t var : {3, 4, 5}) {
    const Perturbation p{1, var, 1};
    c.expect(lists(r.ties, p), "tie " + p.to_string() + " missing");
    c.expect(distinct_monomials(apply(F, p)).size() == 6,
             p.to_string() + " does not keep 6 monomials");
  }
  return c;
}

Check criterion6() {
  Check c;
  const std::vector<Support> sets{
      Support(2, {{0, 0}, {1, 0}, {1, 1}}), Support(2, {{0, 1}, {1, 0}, {1, 1}}),
      Support(2, {{1, 0}, {0, 1}, {2, 1}, {1, 2}})};
  c.expect(optimal_alignment(sets).union_size == 5, "oracle is not 5");
  c.expect(greedy_alignment(sets, TieBreak::kZero).union_size == 6, "zero tie-break is not 6");
  c.expect(greedy_alignment(sets, TieBreak::kLex).union_size == 5, "lex tie-break is not 5");
  return c;
}

std::vector<Support> random_sets(std::mt19937_64& rng, std::size_t k, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> coord(0, hi);
  std::vector<Support> sets;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<ExponentVector> pts;
    const std::size_t size = 1 + rng() % 5;
    for (std::size_t j = 0; j < size; ++j) pts.push_back({coord(rng), coord(rng)});
    sets.emplace_back(2, std::move(pts));
  }
  return sets;
}

// Two-set optimum from the overlap formula, scanning every offset.
std::size_t two_set_optimum(const Support& a, const Support& b) {
  std::size_t best = 0;
  for (std::int64_t x = -6; x <= 6; ++x)
    for (std::int64_t y = -6; y <= 6; ++y) {
      std::size_t o = 0;
      for (const auto& p : b) o += a.contains(ExponentVector{p[0] + x, p[1] + y});
      best = std::max(best, o);
    }
  return a.size() + b.size() - best;
}

Check criterion7() {
  Check c;
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200 && c.ok; ++t) {
    const std::size_t k = 1 + t % 3;
    const auto sets = random_sets(rng, k, 6);
    const std::size_t oracle = optimal_alignment(sets).union_size;
    const std::size_t greedy = greedy_alignment(sets).union_size;
    c.expect(greedy >= oracle, "greedy beat the oracle on instance " + std::to_string(t));
    if (k == 2) {
      c.expect(greedy == oracle, "k=2 mismatch on instance " + std::to_string(t));
      c.expect(oracle == two_set_optimum(sets[0], sets[1]),
               "k=2 oracle disagrees with the overlap formula");
    }
  }
  return c;
}

Check criterion8() {
  Check c;
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<std::int64_t> shift(-50, 50);
  for (int t = 0; t < 100 && c.ok; ++t) {
    const auto sets = random_sets(rng, 1 + rng() % 4, 6);
    std::vector<Support> moved;
    for (const auto& s : sets) moved.push_back(s.translated({shift(rng), shift(rng)}));
    c.expect(greedy_alignment(sets).union_size == greedy_alignment(moved).union_size,
             "union size changed under translation on instance " + std::to_string(t));
  }
  return c;
}

Check criterion9() {
  Check c;
  for (const auto& m : all_fixtures()) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      c.expect(random_specialisation(m, {true, true, seed}).size() == m.n_species,
               m.id + " is not square");
    }
    if (m.param_values) {
      c.expect(fixed_specialisation(m, {true, true, {}}).size() == m.n_species,
               m.id + " (stored values) is not square");
    }
  }
  return c;
}

Check criterion10() {
  Check c;
  RunConfig cfg;
  cfg.seed = 20240101;
  cfg.reduce = true;
  const auto first = run_pipeline(all_fixtures(), cfg);
  const auto second = run_pipeline(all_fixtures(), cfg);
  c.expect(first.report == second.report, "JSON reports differ between runs");
  c.expect(first.fatal == 0, "fatal errors in the pipeline");
  RunConfig csv = cfg;
  csv.format = Format::kCsv;
  c.expect(run_pipeline(all_fixtures(), csv).report == run_pipeline(all_fixtures(), csv).report,
           "CSV reports differ between runs");

  const auto doc = nlohmann::json::parse(first.report);
  for (const char* key : {"command", "seed", "config_hash", "config", "models", "summary"})
    c.expect(doc.contains(key), std::string("report lacks ") + key);
  if (!c.ok) return c;
  c.expect(doc["models"].size() == 3, "expected 3 model rows");
  for (const auto& row : doc["models"]) {
    for (const char* key : {"id", "seed", "config_hash", "status", "scores", "maximality",
                            "trials"})
      c.expect(row.contains(key), std::string("row lacks ") + key);
    c.expect(row.value("status", "") == "ok", "model not scored");
    if (!c.ok) return c;
    c.expect(row["maximality"].size() == 5, "row lacks a score");
    const auto& s = row["maximality"]["S"];
    if (row["id"] == "BIOMD0000000629") {
      c.expect(s["is_maximum"] == false, "629 S outcome differs from its case study");
    }
    if (row["id"] == "BIOMD0000000405") {
      c.expect(s["is_maximum"] == true && s["is_strict_maximum"] == false,
               "405 S outcome differs from its case study");
    }
  }
  for (const char* key : {"score_successes", "strict_successes", "max_mean_ratio"})
    c.expect(doc["summary"].contains(key), std::string("summary lacks ") + key);
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Macaulay matrices of F and G", 1, criterion1},
      {2, "scores of F and G", 1, criterion2},
      {3, "trivial minors vanish (1000 random matrices)", 30, criterion3},
      {4, "BIOMD0000000629 case study", 1, criterion4},
      {5, "BIOMD0000000405 case study", 1, criterion5},
      {6, "greedy versus optimal alignment example", 1, criterion6},
      {7, "greedy never beats the oracle (200 instances)", 120, criterion7},
      {8, "greedy translation invariance (100 instances)", 30, criterion8},
      {9, "square systems with constraint and reduce", 1, criterion9},
      {10, "deterministic fixture pipeline", 30, criterion10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.why = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.ok && secs > cr.limit_seconds) {
      result.ok = false;
      result.why = "time limit exceeded";
    }
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n",
                result.ok ? "PASS" : "FAIL", cr.id, cr.name, secs, cr.limit_seconds,
                result.ok ? "" : ": ", result.why.c_str());
    failed += !result.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
