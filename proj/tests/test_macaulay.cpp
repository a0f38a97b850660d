#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "vfam/error.hpp"
#include "vfam/macaulay.hpp"
#include "vfam/text.hpp"

using namespace vfam;

namespace {

using Cols = std::vector<std::size_t>;

MacaulayMatrix mat(std::size_t r, std::size_t c, std::vector<Rational> e) {
  return MacaulayMatrix(r, c, std::move(e));
}

// Leibniz expansion over all permutations.
Rational leibniz(const MacaulayMatrix& m, const Cols& cols) {
  const std::size_t k = cols.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < k; ++i) term *= m.at(i, cols[perm[i]]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Some permutation picks only nonzero entries.
bool has_nonzero_diagonal(const MacaulayMatrix& m, const Cols& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) ok = m.at(i, cols[perm[i]]) != 0;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

template <typename Fn>
void for_each_subset(std::size_t m, std::size_t k, Fn&& fn) {
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Cols cols;
    for (std::size_t j = 0; j < m; ++j)
      if (pick[j]) cols.push_back(j);
    fn(cols);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

MinorCounts brute_counts(const MacaulayMatrix& m) {
  MinorCounts c;
  for_each_subset(m.cols(), m.rows(), [&](const Cols& cols) {
    ++c.total;
    const bool zero = leibniz(m, cols) == 0;
    const bool nt = has_nonzero_diagonal(m, cols);
    c.zero += zero;
    c.nontrivial += nt;
    c.nontrivial_zero += zero && nt;
  });
  return c;
}

MacaulayMatrix random_matrix(std::mt19937_64& rng, std::size_t k, std::size_t m,
                             bool fractions) {
  std::uniform_int_distribution<int> val(-3, 3), coin(0, 9), den(1, 4);
  std::vector<Rational> e;
  for (std::size_t i = 0; i < k * m; ++i) {
    if (coin(rng) < 4) {
      e.emplace_back(0);
      continue;
    }
    Rational q(val(rng), fractions ? den(rng) : 1);
    q.canonicalize();
    e.push_back(q);
  }
  return MacaulayMatrix(k, m, std::move(e));
}

PolynomialSystem sys(std::size_t n, std::vector<const char*> polys) {
  std::vector<LaurentPolynomial> p;
  for (const char* s : polys) p.push_back(parse_laurent(s, n));
  return PolynomialSystem(n, std::move(p));
}

}  // namespace

TEST_CASE("Macaulay matrices of the embedding example") {
  const auto F = sys(2, {"x1^2 + x2^2 + x1", "x1^2 + x2^2 + 1"});
  const auto mF = macaulay_matrix(F);
  CHECK(mF == MacaulayMatrix(2, 4, {1, 1, 1, 0, 1, 1, 0, 1},
                             {{2, 0}, {0, 2}, {1, 0}, {0, 0}}));

  const auto G = sys(2, {"x1^2 + x2^2 + x1", "x1^2*x2 + x2^3 + x2"});
  const auto mG = macaulay_matrix(G);
  REQUIRE(mG.rows() == 2);
  REQUIRE(mG.cols() == 6);
  const std::vector<ExponentVector> order{{2, 0}, {0, 2}, {1, 0}, {2, 1}, {0, 3}, {0, 1}};
  const int expect[2][6] = {{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(mG.at(i, mG.column_of(order[j])) == expect[i][j]);

  CHECK(macaulay_matrix(sys(1, {"x1"})) == MacaulayMatrix(1, 1, {1}, {{1}}));
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(mat(2, 2, {1, 2, 3}), Error);
  CHECK_THROWS_AS(MacaulayMatrix(1, 2, {1, 2}, {{0}, {0}}), Error);
  CHECK_THROWS_AS(mat(1, 2, {1, 2}).column_of({7}), Error);
}

TEST_CASE("minor values") {
  const auto F = mat(2, 4, {1, 1, 1, 0, 1, 1, 0, 1});
  CHECK(minor_value(F, Cols{0, 1}) == 0);
  CHECK(minor_value(F, Cols{2, 3}) == 1);
  CHECK(minor_value(mat(2, 3, {1, 0, 2, 3, 0, 4}), Cols{0, 1}) == 0);
  CHECK(minor_value(mat(2, 2, {Rational(1, 2), 3, Rational(-2, 3), 5}), Cols{0, 1}) ==
        Rational(9, 2));
  CHECK_THROWS_AS(minor_value(F, Cols{0}), Error);
  CHECK_THROWS_AS(minor_value(F, Cols{1, 1}), Error);
  CHECK_THROWS_AS(minor_value(F, Cols{0, 9}), Error);
}

TEST_CASE("minor values against Leibniz expansion") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 1 + rng() % 5, m = k + rng() % 4;
    const auto M = random_matrix(rng, k, m, t % 2 == 1);
    for_each_subset(m, k, [&](const Cols& cols) {
      CHECK(minor_value(M, cols) == leibniz(M, cols));
    });
  }
}

TEST_CASE("large entries take the exact path") {
  const Rational big(Integer("123456789012345678901234567890"));
  const auto M = mat(3, 3, {big, 1, 2, 3, big, 5, 7, 11, big});
  CHECK(minor_value(M, Cols{0, 1, 2}) == leibniz(M, Cols{0, 1, 2}));
  const Rational edge(Integer("4611686018427387903"));
  const auto E = mat(2, 2, {edge, edge, -edge, edge});
  CHECK(minor_value(E, Cols{0, 1}) == leibniz(E, Cols{0, 1}));
}

TEST_CASE("nontrivial minors") {
  const auto G = mat(2, 6, {1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1});
  CHECK_FALSE(minor_is_nontrivial(G, Cols{0, 1}));
  CHECK(minor_is_nontrivial(G, Cols{0, 3}));
  CHECK(minor_is_nontrivial(mat(2, 2, {1, 2, 3, 4}), Cols{0, 1}));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 1 + rng() % 4, m = k + rng() % 4;
    const auto M = random_matrix(rng, k, m, false);
    for_each_subset(m, k, [&](const Cols& cols) {
      CHECK(minor_is_nontrivial(M, cols) == has_nonzero_diagonal(M, cols));
    });
  }
}

TEST_CASE("minor counts") {
  CHECK(minor_counts(mat(2, 4, {1, 1, 1, 0, 1, 1, 0, 1})) == MinorCounts{6, 1, 6, 1});
  CHECK(minor_counts(mat(2, 6, {1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1})) ==
        MinorCounts{15, 6, 9, 0});
  CHECK(minor_counts(mat(1, 1, {7})) == MinorCounts{1, 0, 1, 0});

  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    const std::size_t k = 1 + rng() % 4, m = k + rng() % 5;
    const auto M = random_matrix(rng, k, m, t % 3 == 0);
    CHECK(minor_counts(M) == brute_counts(M));
  }
}

TEST_CASE("threaded counting matches sequential") {
  std::mt19937_64 rng(3);
  const auto M = random_matrix(rng, 4, 18, true);  // 3060 minors
  const auto M2 = random_matrix(rng, 3, 30, false);  // 4060 minors
  for (const auto* m : {&M, &M2}) {
    const auto seq = minor_counts(*m, {10'000'000, 1});
    CHECK(minor_counts(*m, {10'000'000, 4}) == seq);
    CHECK(minor_counts(*m, {10'000'000, 0}) == seq);
  }
}

TEST_CASE("count limits") {
  const auto M = mat(2, 4, {1, 1, 1, 0, 1, 1, 0, 1});
  CHECK_NOTHROW(minor_counts(M, {6, 1}));
  try {
    minor_counts(M, {5, 1});
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapExceeded);
  }
  CHECK_THROWS_AS(minor_counts(mat(3, 2, {1, 2, 3, 4, 5, 6})), Error);
}

TEST_CASE("scores of the embedding example") {
  const auto F = score_report(sys(2, {"x1^2 + x2^2 + x1", "x1^2 + x2^2 + 1"}));
  CHECK(F.S == -6);
  CHECK(F.S0 == 1);
  CHECK(F.S0nt == 1);
  CHECK(F.R0 == Rational(1, 6));
  CHECK(F.R0nt == Rational(1, 6));

  const auto G = score_report(sys(2, {"x1^2 + x2^2 + x1", "x1^2*x2 + x2^3 + x2"}));
  CHECK(G.S == -15);
  CHECK(G.S0 == 6);
  CHECK(G.S0nt == 0);
  CHECK(G.R0 == Rational(2, 5));  // 6/15
  CHECK(G.R0nt == 0);
}

TEST_CASE("scores from counts") {
  const auto r = score_report_from_counts({10, 4, 0, 0});
  CHECK(r.S == -10);
  CHECK(r.R0 == Rational(2, 5));
  CHECK(r.R0nt == 0);
}
