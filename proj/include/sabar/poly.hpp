#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sabar/rational.hpp"

namespace sabar {

class UniPoly;

/// Sparse multivariate polynomial with rational coefficients over named variables.
///
/// The variable list is kept sorted and contains exactly the variables that occur
/// with a positive exponent, so equal polynomials have identical representations.
/// Terms are keyed by exponent vectors aligned with the variable list; zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using Exponent = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponent, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(const Rational& coeff, const std::vector<std::pair<std::string, std::uint32_t>>& powers);
  /// Builds sum_i coeffs[i] * var^i.
  static MultiPoly from_coefficients(const std::string& var, const std::vector<MultiPoly>& coeffs);
  /// Parses the shared polynomial text grammar, e.g. "(x^2 + y^2 - 1)".
  static MultiPoly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Constant term value; requires is_constant().
  Rational constant_value() const;
  bool has_variable(const std::string& var) const;
  int degree(const std::string& var) const;
  int total_degree() const;

  MultiPoly derivative(const std::string& var) const;
  /// Evaluates with every variable bound; throws std::invalid_argument otherwise.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Values must be aligned with variables().
  Rational evaluate_aligned(const std::vector<Rational>& values) const;
  MultiPoly substitute(const std::string& var, const Rational& value) const;
  MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
  MultiPoly substitute(const std::map<std::string, Rational>& values) const;

  /// Coefficients with respect to `var`, lowest degree first.
  std::vector<MultiPoly> coefficients(const std::string& var) const;
  /// Leading coefficient with respect to `var`.
  MultiPoly leading_coefficient(const std::string& var) const;

  /// Positive rational c such that (1/c) * this has coprime integer coefficients.
  Rational content() const;
  /// this / content(); signs preserved.
  MultiPoly primitive() const;
  /// primitive() with the lexicographically leading coefficient made positive.
  MultiPoly normalized() const;
  /// Largest monomial dividing every term, as exponents per variable.
  std::map<std::string, std::uint32_t> monomial_content() const;
  MultiPoly divide_monomial(const std::map<std::string, std::uint32_t>& powers) const;

  /// Exact division; throws std::domain_error when `divisor` does not divide this.
  MultiPoly exact_divide(const MultiPoly& divisor) const;

  /// Requires at most one variable; the result's main variable is that variable
  /// (or `fallback_var` for constants).
  UniPoly to_uni(const std::string& fallback_var = "X") const;

  /// Canonical text: terms in descending lexicographic order of exponents.
  std::string str() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
    return a.terms_ < b.terms_;
  }

 private:
  MultiPoly(std::vector<std::string> vars, TermMap terms);
  void canonicalize();
  MultiPoly with_variables(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exp);

/// Dense univariate polynomial with rational coefficients, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "X");
  static UniPoly constant(const Rational& c, std::string var = "X");
  static UniPoly x(std::string var = "X");
  /// Parses text that mentions at most one variable.
  static UniPoly parse(std::string_view text, const std::string& fallback_var = "X");

  const std::string& var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(int i) const;

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }
  UniPoly derivative() const;
  UniPoly with_var(std::string var) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  UniPoly scaled(const Rational& c) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  MultiPoly to_multi() const;
  std::string str() const;

 private:
  void trim();

  std::string var_ = "X";
  std::vector<Rational> c_;
};

}  // namespace sabar
