#include "vfam/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>
#include <vector>

#include "vfam/error.hpp"

namespace vfam {

namespace {

constexpr long long kMaxCompoundPower = 64;

class Parser {
 public:
  Parser(std::string_view text, std::size_t n_vars, std::size_t n_params)
      : text_(text), n_vars_(n_vars), n_params_(n_params) {}

  ParametrisedPolynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    ParametrisedPolynomial p = expr();
    skip_space();
    if (!at_end()) fail("unexpected character");
    return p;
  }

 private:
  ParametrisedPolynomial expr() {
    ParametrisedPolynomial sum(n_vars_, n_params_);
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
    }
    while (true) {
      ParametrisedPolynomial t = term();
      if (negative) {
        sum -= t;
      } else {
        sum += t;
      }
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      negative = get() == '-';
    }
    return sum;
  }

  ParametrisedPolynomial term() {
    ParametrisedPolynomial p = factor();
    while (true) {
      skip_space();
      if (peek() != '*') break;
      get();
      p = p * factor();
    }
    return p;
  }

  ParametrisedPolynomial factor() {
    const bool is_x = (skip_space(), peek() == 'x');
    ParametrisedPolynomial base = primary();
    skip_space();
    if (peek() != '^') return base;
    get();
    const long long e = exponent();
    if (is_x) {
      const auto& [mono, coeff] = *base.terms().begin();
      ParametrisedPolynomial r(n_vars_, n_params_);
      ExponentVector scaled(n_vars_);
      for (std::size_t i = 0; i < n_vars_; ++i) scaled[i] = mono[i] * e;
      r.add_term(scaled, coeff);
      return r;
    }
    if (e < 0) fail("negative exponent on a non-variable factor");
    if (e > kMaxCompoundPower) fail("exponent too large");
    ParametrisedPolynomial r = one();
    for (long long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  long long exponent() {
    skip_space();
    bool paren = false;
    if (peek() == '(') {
      get();
      paren = true;
      skip_space();
    }
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    skip_space();
    const std::string_view digits = take_digits();
    if (digits.empty()) fail("expected an integer exponent");
    long long v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(),
                                     digits.data() + digits.size(), v);
    if (ec != std::errc()) fail("exponent out of range");
    if (paren) {
      skip_space();
      if (get() != ')') fail("expected ')'");
    }
    return negative ? -v : v;
  }

  ParametrisedPolynomial primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      get();
      ParametrisedPolynomial inner = expr();
      skip_space();
      if (get() != ')') fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal(take_digits());
      if (peek() == '/') {
        get();
        const std::string_view den = take_digits();
        if (den.empty()) fail("expected a denominator");
        literal += "/";
        literal += den;
      }
      Rational q = parse_rational(literal);
      return ParametrisedPolynomial::constant(
          n_vars_, ParameterPolynomial::constant(n_params_, q));
    }
    if (c == 'x' || c == 'k') {
      get();
      const std::size_t index = variable_index();
      if (c == 'x') {
        if (index == 0 || index > n_vars_) {
          fail("variable x" + std::to_string(index) + " out of range (n=" +
               std::to_string(n_vars_) + ")");
        }
        return ParametrisedPolynomial::variable(n_vars_, n_params_,
                                                index - 1);
      }
      if (index == 0 || index > n_params_) {
        fail("parameter k" + std::to_string(index) + " out of range (m=" +
             std::to_string(n_params_) + ")");
      }
      return ParametrisedPolynomial::constant(
          n_vars_, ParameterPolynomial::parameter(n_params_, index - 1));
    }
    fail(at_end() ? "unexpected end of input" : "unexpected character");
  }

  std::size_t variable_index() {
    const std::string_view digits = take_digits();
    if (digits.empty()) fail("expected a variable index");
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(),
                                     digits.data() + digits.size(), v);
    if (ec != std::errc()) fail("variable index out of range");
    return v;
  }

  ParametrisedPolynomial one() const {
    return ParametrisedPolynomial::constant(
        n_vars_, ParameterPolynomial::constant(n_params_, Rational(1)));
  }

  std::string_view take_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParse, msg + " at offset " + std::to_string(pos_) +
                                       " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t n_vars_;
  std::size_t n_params_;
  std::size_t pos_ = 0;
};

std::string power_product(char letter, std::span<const std::int64_t> exps) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += letter;
    s += std::to_string(i + 1);
    if (exps[i] != 1) s += "^" + std::to_string(exps[i]);
  }
  return s;
}

// |c| combined with a product of factors, without sign.
std::string term_body(const Rational& abs_c, const std::string& factors) {
  if (factors.empty()) return to_string(abs_c);
  if (abs_c == 1) return factors;
  return to_string(abs_c) + "*" + factors;
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [negative, body] = terms[i];
    if (i == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    s += body;
  }
  return s;
}

std::vector<std::int64_t> widen(const ParameterPolynomial::Monomial& m) {
  return {m.begin(), m.end()};
}

std::vector<std::pair<ParameterPolynomial::Monomial, Rational>>
canonical_terms(const ParameterPolynomial& p) {
  std::vector<std::pair<ParameterPolynomial::Monomial, Rational>> terms(
      p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return GrlexDescending{}(ExponentVector(widen(a.first)),
                             ExponentVector(widen(b.first)));
  });
  return terms;
}

}  // namespace

ParametrisedPolynomial parse_parametrised(std::string_view text,
                                          std::size_t n_vars,
                                          std::size_t n_params) {
  return Parser(text, n_vars, n_params).parse();
}

LaurentPolynomial parse_laurent(std::string_view text, std::size_t n_vars) {
  const ParametrisedPolynomial p = parse_parametrised(text, n_vars, 0);
  LaurentPolynomial r(n_vars);
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.constant_term());
  return r;
}

std::string render(const LaurentPolynomial& p) {
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [e, c] : p.terms()) {
    terms.emplace_back(c < 0, term_body(abs(c), power_product('x', e.entries())));
  }
  return join_signed(terms);
}

std::string render(const ParameterPolynomial& p) {
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [m, c] : canonical_terms(p)) {
    const auto exps = widen(m);
    terms.emplace_back(c < 0, term_body(abs(c), power_product('k', exps)));
  }
  return join_signed(terms);
}

std::string render(const ParametrisedPolynomial& p) {
  std::vector<std::pair<bool, std::string>> terms;
  for (const auto& [e, c] : p.terms()) {
    const std::string xs = power_product('x', e.entries());
    if (c.term_count() == 1) {
      const auto& [m, q] = *c.terms().begin();
      std::string factors = power_product('k', widen(m));
      if (!xs.empty()) factors += (factors.empty() ? "" : "*") + xs;
      terms.emplace_back(q < 0, term_body(abs(q), factors));
    } else {
      std::string body = "(" + render(c) + ")";
      if (!xs.empty()) body += "*" + xs;
      terms.emplace_back(false, body);
    }
  }
  return join_signed(terms);
}

PolynomialSystem parse_system(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t n_vars = 0;
  bool explicit_vars = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (body.rfind("vars=", 0) == 0) {
      try {
        n_vars = std::stoul(body.substr(5));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(line_no) + ": bad vars directive");
      }
      explicit_vars = true;
      continue;
    }
    lines.push_back(std::move(body));
  }
  if (!explicit_vars) {
    for (const auto& l : lines) {
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] != 'x') continue;
        std::size_t j = i + 1, v = 0;
        while (j < l.size() && std::isdigit(static_cast<unsigned char>(l[j]))) {
          v = v * 10 + static_cast<std::size_t>(l[j] - '0');
          ++j;
        }
        n_vars = std::max(n_vars, v);
      }
    }
  }
  std::vector<LaurentPolynomial> polys;
  polys.reserve(lines.size());
  for (const auto& l : lines) polys.push_back(parse_laurent(l, n_vars));
  return PolynomialSystem(n_vars, std::move(polys));
}

std::string render_system(const PolynomialSystem& system) {
  std::string s = "vars=" + std::to_string(system.n_vars()) + "\n";
  for (const auto& p : system) s += render(p) + "\n";
  return s;
}

}  // namespace vfam
