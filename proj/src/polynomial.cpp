#include "vfam/polynomial.hpp"

#include <string>

#include "vfam/error.hpp"

namespace vfam {

namespace {

void require_params(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(expected) +
                    " parameter values, got " + std::to_string(got));
  }
}

template <typename Map, typename Key, typename Coeff>
void accumulate_term(Map& terms, const Key& key, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ParameterPolynomial

ParameterPolynomial ParameterPolynomial::constant(std::size_t n_params,
                                                  const Rational& c) {
  ParameterPolynomial p(n_params);
  p.add_term(Monomial(n_params, 0), c);
  return p;
}

ParameterPolynomial ParameterPolynomial::parameter(std::size_t n_params,
                                                   std::size_t index) {
  if (index >= n_params) {
    throw Error(ErrorCode::kInvalidArgument,
                "parameter index " + std::to_string(index + 1) +
                    " out of range");
  }
  Monomial m(n_params, 0);
  m[index] = 1;
  ParameterPolynomial p(n_params);
  p.add_term(m, Rational(1));
  return p;
}

bool ParameterPolynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          terms_.begin()->first == Monomial(n_params_, 0));
}

Rational ParameterPolynomial::constant_term() const {
  auto it = terms_.find(Monomial(n_params_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void ParameterPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != n_params_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "parameter monomial of length " + std::to_string(m.size()) +
                    " in a ring with " + std::to_string(n_params_) +
                    " parameters");
  }
  accumulate_term(terms_, m, c);
}

Rational ParameterPolynomial::evaluate(std::span<const Rational> params) const {
  require_params(n_params_, params.size());
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) term *= params[i];
    }
    sum += term;
  }
  return sum;
}

ParameterPolynomial& ParameterPolynomial::operator+=(
    const ParameterPolynomial& o) {
  require_params(n_params_, o.n_params_);
  for (const auto& [m, c] : o.terms_) accumulate_term(terms_, m, c);
  return *this;
}

ParameterPolynomial& ParameterPolynomial::operator-=(
    const ParameterPolynomial& o) {
  require_params(n_params_, o.n_params_);
  for (const auto& [m, c] : o.terms_) {
    accumulate_term(terms_, m, Rational(-c));
  }
  return *this;
}

ParameterPolynomial ParameterPolynomial::operator-() const {
  ParameterPolynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ParameterPolynomial operator*(const ParameterPolynomial& a,
                              const ParameterPolynomial& b) {
  require_params(a.n_params_, b.n_params_);
  ParameterPolynomial r(a.n_params_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ParameterPolynomial::Monomial m(ma);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      accumulate_term(r.terms_, m, Rational(ca * cb));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& e,
                                              const Rational& c) {
  LaurentPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

void LaurentPolynomial::check_dim(const ExponentVector& e) const {
  if (e.size() != n_vars_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "monomial " + e.to_string() + " in a ring with " +
                    std::to_string(n_vars_) + " variables");
  }
}

Rational LaurentPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Rational& c) {
  check_dim(e);
  accumulate_term(terms_, e, c);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  if (a.n_vars_ != b.n_vars_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "product of polynomials in different rings");
  }
  LaurentPolynomial r(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      accumulate_term(r.terms_, ea + eb, Rational(ca * cb));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// ParametrisedPolynomial

ParametrisedPolynomial ParametrisedPolynomial::constant(
    std::size_t n_vars, const ParameterPolynomial& c) {
  ParametrisedPolynomial p(n_vars, c.n_params());
  p.add_term(ExponentVector(n_vars), c);
  return p;
}

ParametrisedPolynomial ParametrisedPolynomial::variable(std::size_t n_vars,
                                                        std::size_t n_params,
                                                        std::size_t index) {
  if (index >= n_vars) {
    throw Error(ErrorCode::kInvalidArgument,
                "variable index " + std::to_string(index + 1) +
                    " out of range");
  }
  ParametrisedPolynomial p(n_vars, n_params);
  p.add_term(ExponentVector::unit(n_vars, index),
             ParameterPolynomial::constant(n_params, Rational(1)));
  return p;
}

void ParametrisedPolynomial::check_dims(const ExponentVector& e,
                                        const ParameterPolynomial& c) const {
  if (e.size() != n_vars_ || c.n_params() != n_params_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "term outside the ring Q[k1..k" + std::to_string(n_params_) +
                    "][x1..x" + std::to_string(n_vars_) + "]");
  }
}

void ParametrisedPolynomial::add_term(const ExponentVector& e,
                                      const ParameterPolynomial& c) {
  check_dims(e, c);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ParametrisedPolynomial::is_affine_linear() const {
  for (const auto& [e, c] : terms_) {
    if (e.is_zero()) continue;
    std::size_t ones = 0;
    for (std::int64_t v : e.entries()) {
      if (v == 1) {
        ++ones;
      } else if (v != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

ParameterPolynomial ParametrisedPolynomial::coefficient(
    const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ParameterPolynomial(n_params_) : it->second;
}

ParametrisedPolynomial& ParametrisedPolynomial::operator+=(
    const ParametrisedPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParametrisedPolynomial& ParametrisedPolynomial::operator-=(
    const ParametrisedPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParametrisedPolynomial ParametrisedPolynomial::operator-() const {
  ParametrisedPolynomial r(n_vars_, n_params_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ParametrisedPolynomial operator*(const ParametrisedPolynomial& a,
                                 const ParametrisedPolynomial& b) {
  if (a.n_vars_ != b.n_vars_ || a.n_params_ != b.n_params_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "product of polynomials in different rings");
  }
  ParametrisedPolynomial r(a.n_vars_, a.n_params_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Systems

PolynomialSystem::PolynomialSystem(std::size_t n_vars,
                                   std::vector<LaurentPolynomial> polys)
    : n_vars_(n_vars), polys_(std::move(polys)) {
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (polys_[i].n_vars() != n_vars_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "polynomial " + std::to_string(i + 1) + " has " +
                      std::to_string(polys_[i].n_vars()) +
                      " variables, system has " + std::to_string(n_vars_));
    }
    if (polys_[i].is_zero()) {
      throw Error(ErrorCode::kDegenerate,
                  "polynomial " + std::to_string(i + 1) + " is zero");
    }
  }
}

PolynomialSystem PolynomialSystem::with_replaced(std::size_t i,
                                                 LaurentPolynomial p) const {
  std::vector<LaurentPolynomial> polys = polys_;
  polys.at(i) = std::move(p);
  return PolynomialSystem(n_vars_, std::move(polys));
}

PolynomialSystem VerticalSystem::specialise(
    std::span<const Rational> values) const {
  require_params(cols(), values.size());
  std::vector<LaurentPolynomial> polys;
  polys.reserve(rows());
  for (const auto& row : coeffs) {
    LaurentPolynomial p(n_vars);
    for (std::size_t j = 0; j < row.size(); ++j) {
      p.add_term(support[j], Rational(row[j] * values[j]));
    }
    polys.push_back(std::move(p));
  }
  return PolynomialSystem(n_vars, std::move(polys));
}

PolynomialSystem VerticalSystem::specialise_at_ones() const {
  std::vector<Rational> ones(cols(), Rational(1));
  return specialise(ones);
}

// ---------------------------------------------------------------------------
// Operations

Support support(const LaurentPolynomial& p) {
  std::vector<ExponentVector> points;
  points.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) points.push_back(e);
  return Support(p.n_vars(), std::move(points));
}

Support distinct_monomials(const PolynomialSystem& system) {
  std::vector<ExponentVector> points;
  for (const auto& p : system) {
    for (const auto& [e, c] : p.terms()) points.push_back(e);
  }
  return Support(system.n_vars(), std::move(points));
}

LaurentPolynomial monomial_multiply(const LaurentPolynomial& p,
                                    const ExponentVector& shift) {
  if (shift.size() != p.n_vars()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "shift " + shift.to_string() + " for a polynomial in " +
                    std::to_string(p.n_vars()) + " variables");
  }
  LaurentPolynomial r(p.n_vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e + shift, c);
  return r;
}

LaurentPolynomial specialise(const ParametrisedPolynomial& p,
                             std::span<const Rational> params) {
  require_params(p.n_params(), params.size());
  LaurentPolynomial r(p.n_vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.evaluate(params));
  return r;
}

VerticalSystem minimal_vertical_system(const PolynomialSystem& system) {
  if (system.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty polynomial system");
  }
  VerticalSystem v;
  v.n_vars = system.n_vars();
  v.support = distinct_monomials(system).canonical_order();
  v.coeffs.reserve(system.size());
  for (const auto& p : system) {
    std::vector<Rational> row;
    row.reserve(v.support.size());
    for (const auto& e : v.support) row.push_back(p.coefficient(e));
    v.coeffs.push_back(std::move(row));
  }
  return v;
}

}  // namespace vfam
