#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "vfam/exponent.hpp"
#include "vfam/rational.hpp"

namespace vfam {

/// Sparse polynomial with rational coefficients in the parameters
/// k1..km. Exponents are nonnegative. Zero coefficients are never stored.
class ParameterPolynomial {
 public:
  using Monomial = std::vector<std::uint32_t>;

  explicit ParameterPolynomial(std::size_t n_params = 0)
      : n_params_(n_params) {}

  static ParameterPolynomial constant(std::size_t n_params, const Rational& c);
  static ParameterPolynomial parameter(std::size_t n_params, std::size_t index);

  std::size_t n_params() const noexcept { return n_params_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  /// True when the polynomial is a (possibly zero) constant.
  bool is_constant() const;
  Rational constant_term() const;

  void add_term(const Monomial& m, const Rational& c);

  Rational evaluate(std::span<const Rational> params) const;

  ParameterPolynomial& operator+=(const ParameterPolynomial& o);
  ParameterPolynomial& operator-=(const ParameterPolynomial& o);
  ParameterPolynomial operator-() const;
  friend ParameterPolynomial operator+(ParameterPolynomial a,
                                       const ParameterPolynomial& b) {
    return a += b;
  }
  friend ParameterPolynomial operator-(ParameterPolynomial a,
                                       const ParameterPolynomial& b) {
    return a -= b;
  }
  friend ParameterPolynomial operator*(const ParameterPolynomial& a,
                                       const ParameterPolynomial& b);
  friend bool operator==(const ParameterPolynomial&,
                         const ParameterPolynomial&) = default;

 private:
  std::size_t n_params_;
  std::map<Monomial, Rational> terms_;
};

/// Laurent polynomial in x1..xn with rational coefficients. Terms are kept
/// in canonical order (graded lexicographic descending).
class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GrlexDescending>;

  explicit LaurentPolynomial(std::size_t n_vars = 0) : n_vars_(n_vars) {}

  static LaurentPolynomial monomial(const ExponentVector& e,
                                    const Rational& c);

  std::size_t n_vars() const noexcept { return n_vars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Rational coefficient(const ExponentVector& e) const;

  void add_term(const ExponentVector& e, const Rational& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&,
                         const LaurentPolynomial&) = default;

 private:
  void check_dim(const ExponentVector& e) const;

  std::size_t n_vars_;
  TermMap terms_;
};

/// Polynomial in x1..xn whose coefficients are parameter polynomials.
class ParametrisedPolynomial {
 public:
  using TermMap =
      std::map<ExponentVector, ParameterPolynomial, GrlexDescending>;

  explicit ParametrisedPolynomial(std::size_t n_vars = 0,
                                  std::size_t n_params = 0)
      : n_vars_(n_vars), n_params_(n_params) {}

  static ParametrisedPolynomial constant(std::size_t n_vars,
                                         const ParameterPolynomial& c);
  static ParametrisedPolynomial variable(std::size_t n_vars,
                                         std::size_t n_params,
                                         std::size_t index);

  std::size_t n_vars() const noexcept { return n_vars_; }
  std::size_t n_params() const noexcept { return n_params_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  void add_term(const ExponentVector& e, const ParameterPolynomial& c);

  /// True when every monomial is 1 or a single variable to the first power.
  bool is_affine_linear() const;
  /// Coefficient of the monomial `e` (zero polynomial when absent).
  ParameterPolynomial coefficient(const ExponentVector& e) const;

  ParametrisedPolynomial& operator+=(const ParametrisedPolynomial& o);
  ParametrisedPolynomial& operator-=(const ParametrisedPolynomial& o);
  ParametrisedPolynomial operator-() const;
  friend ParametrisedPolynomial operator+(ParametrisedPolynomial a,
                                          const ParametrisedPolynomial& b) {
    return a += b;
  }
  friend ParametrisedPolynomial operator-(ParametrisedPolynomial a,
                                          const ParametrisedPolynomial& b) {
    return a -= b;
  }
  friend ParametrisedPolynomial operator*(const ParametrisedPolynomial& a,
                                          const ParametrisedPolynomial& b);
  friend bool operator==(const ParametrisedPolynomial&,
                         const ParametrisedPolynomial&) = default;

 private:
  void check_dims(const ExponentVector& e,
                  const ParameterPolynomial& c) const;

  std::size_t n_vars_;
  std::size_t n_params_;
  TermMap terms_;
};

/// Ordered list of nonzero Laurent polynomials sharing the same ambient
/// variable count. Order is the row order of the Macaulay matrix.
class PolynomialSystem {
 public:
  explicit PolynomialSystem(std::size_t n_vars = 0) : n_vars_(n_vars) {}
  /// Throws Error(kDimensionMismatch) on mixed ambient counts and
  /// Error(kDegenerate) on a zero polynomial.
  PolynomialSystem(std::size_t n_vars, std::vector<LaurentPolynomial> polys);

  std::size_t n_vars() const noexcept { return n_vars_; }
  std::size_t size() const noexcept { return polys_.size(); }
  bool empty() const noexcept { return polys_.empty(); }
  const LaurentPolynomial& operator[](std::size_t i) const {
    return polys_[i];
  }
  const std::vector<LaurentPolynomial>& polys() const noexcept {
    return polys_;
  }
  auto begin() const noexcept { return polys_.begin(); }
  auto end() const noexcept { return polys_.end(); }

  /// Copy of the system with polynomial `i` replaced.
  PolynomialSystem with_replaced(std::size_t i, LaurentPolynomial p) const;

  friend bool operator==(const PolynomialSystem&,
                         const PolynomialSystem&) = default;

 private:
  std::size_t n_vars_;
  std::vector<LaurentPolynomial> polys_;
};

/// Coefficient matrix of a system over its distinct monomials, i.e. the
/// minimal vertical system: polynomial i is sum_j coeffs[i][j] * a_j * x^support[j].
struct VerticalSystem {
  std::size_t n_vars = 0;
  std::vector<ExponentVector> support;
  std::vector<std::vector<Rational>> coeffs;

  std::size_t rows() const noexcept { return coeffs.size(); }
  std::size_t cols() const noexcept { return support.size(); }

  /// Specialises every column parameter a_j at `values[j]`.
  PolynomialSystem specialise(std::span<const Rational> values) const;
  /// Specialisation at a_j = 1, which recovers the original system.
  PolynomialSystem specialise_at_ones() const;
};

Support support(const LaurentPolynomial& p);
Support distinct_monomials(const PolynomialSystem& system);

/// Multiplies `p` by x^shift. Throws Error(kDimensionMismatch).
LaurentPolynomial monomial_multiply(const LaurentPolynomial& p,
                                    const ExponentVector& shift);

/// Evaluates every coefficient at `params`, dropping terms that vanish.
LaurentPolynomial specialise(const ParametrisedPolynomial& p,
                             std::span<const Rational> params);

/// Throws Error(kInvalidArgument) on an empty system.
VerticalSystem minimal_vertical_system(const PolynomialSystem& system);

}  // namespace vfam
