#include "doctest.h"

#include <vector>

#include "vfam/error.hpp"
#include "vfam/polynomial.hpp"
#include "vfam/text.hpp"

using namespace vfam;

namespace {

LaurentPolynomial L(const char* s, std::size_t n) { return parse_laurent(s, n); }

Support pts(std::size_t n, std::vector<ExponentVector> p) { return Support(n, std::move(p)); }

}  // namespace

TEST_CASE("exponent vectors") {
  ExponentVector a{2, -1}, b{0, 3};
  CHECK((a + b) == ExponentVector{2, 2});
  CHECK((a - b) == ExponentVector{2, -4});
  CHECK(-a == ExponentVector{-2, 1});
  CHECK(a.total_degree() == 1);
  CHECK(ExponentVector(3).is_zero());
  CHECK(ExponentVector::unit(3, 1, -1) == ExponentVector{0, -1, 0});
  CHECK(a.to_string() == "(2,-1)");
  CHECK(b < a);

  GrlexDescending g;
  CHECK(g(ExponentVector{2, 0}, ExponentVector{0, 2}));
  CHECK(g(ExponentVector{0, 2}, ExponentVector{1, 0}));
  CHECK(g(ExponentVector{1, 0}, ExponentVector{0, 0}));
  CHECK_FALSE(g(ExponentVector{0, 0}, ExponentVector{0, 0}));
}

TEST_CASE("supports") {
  const Support s = pts(2, {{1, 0}, {0, 0}, {1, 0}});
  CHECK(s.size() == 2);
  CHECK(s.contains(ExponentVector{0, 0}));
  CHECK(s.translated(ExponentVector{1, 1}) == pts(2, {{2, 1}, {1, 1}}));
  CHECK(s.united(pts(2, {{5, 5}})).size() == 3);
  // {a - b}: 2 x 2 differences with one repeat.
  const Support d = s.minkowski_difference(pts(2, {{0, 0}, {1, 0}}));
  CHECK(d == pts(2, {{-1, 0}, {0, 0}, {1, 0}}));
  CHECK(pts(2, {{0, 0}, {0, 2}, {2, 0}, {1, 0}}).canonical_order() ==
        std::vector<ExponentVector>{{2, 0}, {0, 2}, {1, 0}, {0, 0}});
  CHECK_THROWS_AS(Support(2, {ExponentVector{1, 2, 3}}), Error);
  try {
    Support(2, {ExponentVector{1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDimensionMismatch);
  }
}

TEST_CASE("support of a polynomial") {
  CHECK(support(L("x1^2 + x2^2 + x1", 2)) == pts(2, {{2, 0}, {0, 2}, {1, 0}}));
  CHECK(support(LaurentPolynomial(2)).empty());
  CHECK(support(L("x1^-1*x2 + 3", 2)) == pts(2, {{-1, 1}, {0, 0}}));
}

TEST_CASE("distinct monomials of a system") {
  PolynomialSystem F(2, {L("x1^2 + x2^2 + x1", 2), L("x1^2 + x2^2 + 1", 2)});
  CHECK(distinct_monomials(F) == pts(2, {{2, 0}, {0, 2}, {1, 0}, {0, 0}}));
  PolynomialSystem one(2, {L("x1 + 1", 2)});
  CHECK(distinct_monomials(one) == support(one[0]));
}

TEST_CASE("Laurent arithmetic") {
  const auto p = L("x1 + 1", 1), q = L("x1 - 1", 1);
  CHECK(p * q == L("x1^2 - 1", 1));
  CHECK(p - p == LaurentPolynomial(1));
  CHECK((p + q).coefficient(ExponentVector{1}) == 2);
  CHECK(L("x1*x1^-1", 1) == L("1", 1));
  CHECK_THROWS_AS(LaurentPolynomial(2).add_term(ExponentVector{1}, 1), Error);
}

TEST_CASE("monomial multiplication") {
  const auto f = L("x1^2 + x2^2 + x1", 2);
  CHECK(monomial_multiply(f, {0, 1}) == L("x1^2*x2 + x2^3 + x1*x2", 2));
  CHECK(monomial_multiply(f, {0, 0}) == f);
  CHECK(monomial_multiply(monomial_multiply(f, {3, -2}), {-3, 2}) == f);
}

TEST_CASE("specialisation of parametrised polynomials") {
  const auto p = parse_parametrised("-k2*x1*x3 + k3*x2", 3, 3);
  const std::vector<Rational> ones{1, 1, 1};
  CHECK(specialise(p, ones) == L("-x1*x3 + x2", 3));

  const auto c = parse_parametrised("k1*x4 + k1*x5 - k1*k8", 5, 8);
  std::vector<Rational> v(8, 0);
  v[0] = 2;
  v[7] = 3;
  CHECK(specialise(c, v) == L("2*x4 + 2*x5 - 6", 5));

  const std::vector<Rational> zeros(3, 0);
  CHECK(specialise(p, zeros).is_zero());
  CHECK_THROWS_AS(specialise(p, std::vector<Rational>{1}), Error);
}

TEST_CASE("parameter polynomials") {
  auto k1 = ParameterPolynomial::parameter(2, 0);
  auto k2 = ParameterPolynomial::parameter(2, 1);
  auto e = (k1 + k2) * (k1 - k2);
  const std::vector<Rational> v{Rational(3), Rational(1, 2)};
  CHECK(e.evaluate(v) == Rational(35, 4));
  CHECK(ParameterPolynomial::constant(2, 5).is_constant());
  CHECK_FALSE(e.is_constant());
  CHECK(render(e) == "k1^2 - k2^2");
}

TEST_CASE("minimal vertical systems") {
  PolynomialSystem F(2, {L("x1^2 + x2^2 + x1", 2), L("x1^2 + x2^2 + 1", 2)});
  const VerticalSystem v = minimal_vertical_system(F);
  CHECK(v.support == std::vector<ExponentVector>{{2, 0}, {0, 2}, {1, 0}, {0, 0}});
  CHECK(v.coeffs == std::vector<std::vector<Rational>>{{1, 1, 1, 0}, {1, 1, 0, 1}});
  CHECK(v.specialise_at_ones() == F);

  PolynomialSystem G(2, {L("x1^2 + x2^2 + x1", 2), L("x1^2*x2 + x2^3 + x2", 2)});
  CHECK(minimal_vertical_system(G).cols() == 6);

  PolynomialSystem single(1, {L("5*x1", 1)});
  const auto s = minimal_vertical_system(single);
  CHECK(s.support == std::vector<ExponentVector>{{1}});
  CHECK(s.coeffs == std::vector<std::vector<Rational>>{{5}});

  CHECK_THROWS_AS(minimal_vertical_system(PolynomialSystem(2)), Error);
}

TEST_CASE("vertical round trip at ones") {
  PolynomialSystem F(3, {L("3/2*x1^-2*x3 - x2 + 7", 3), L("-x1*x2*x3 + 1/3*x2", 3),
                         L("x3^4 - 2", 3)});
  CHECK(minimal_vertical_system(F).specialise_at_ones() == F);
}

TEST_CASE("polynomial systems") {
  CHECK_THROWS_AS(PolynomialSystem(2, {LaurentPolynomial(2)}), Error);
  CHECK_THROWS_AS(PolynomialSystem(2, {L("x1", 1)}), Error);
  PolynomialSystem F(1, {L("x1 + 1", 1), L("x1 - 1", 1)});
  CHECK(F.with_replaced(1, L("2", 1))[1] == L("2", 1));
}

TEST_CASE("rendering") {
  CHECK(render(L("x1^2 + x2^2 + x1", 2)) == "x1^2 + x2^2 + x1");
  CHECK(render(L("1 - x1", 1)) == "-x1 + 1");
  CHECK(render(L("-3/4*x1^-1*x2", 2)) == "-3/4*x1^-1*x2");
  CHECK(render(LaurentPolynomial(2)) == "0");
  CHECK(render(parse_parametrised("(-k1*k3 - k2)*x2 + k1*x4", 4, 3)) ==
        "(-k1*k3 - k2)*x2 + k1*x4");
  CHECK(render(parse_parametrised("-k1*k3*x1 + k2*x2 + k1*x3", 3, 3)) ==
        "-k1*k3*x1 + k2*x2 + k1*x3");
}

TEST_CASE("parse and render round trip") {
  for (const char* s : {"x1^2 + x2^2 + x1", "-7/3*x1*x2^-4 + 2", "x2^5 - x1^3*x2 + 1/2"}) {
    const auto p = L(s, 2);
    CHECK(L(render(p).c_str(), 2) == p);
  }
}

TEST_CASE("parser details") {
  CHECK(L("(x1 + 1)^2", 1) == L("x1^2 + 2*x1 + 1", 1));
  CHECK(L("x1^(-2)", 1) == L("x1^-2", 1));
  CHECK(L("2*(x1 - x1)", 1).is_zero());
  CHECK(L("x1^1000000000000", 1).coefficient(ExponentVector{1000000000000}) == 1);
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  CHECK(code([] { L("x1 +", 1); }) == ErrorCode::kParse);
  CHECK(code([] { L("x3", 2); }) == ErrorCode::kParse);
  CHECK(code([] { L("k1*x1", 1); }) == ErrorCode::kParse);
  CHECK(code([] { L("1/0", 1); }) == ErrorCode::kParse);
  CHECK(code([] { L("(x1 + 1)^-1", 1); }) == ErrorCode::kParse);
  CHECK(code([] { L("(x1 + 1)^100000", 1); }) == ErrorCode::kParse);
}

TEST_CASE("system text") {
  const auto s = parse_system("# comment\nvars=3\nx1 + x2\n\n-x3^2 + 1\n");
  CHECK(s.n_vars() == 3);
  CHECK(s.size() == 2);
  CHECK(parse_system(render_system(s)) == s);
  CHECK(parse_system("x1*x4 + 1").n_vars() == 4);
}
