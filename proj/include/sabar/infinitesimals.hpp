#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sabar/poly.hpp"
#include "sabar/thom.hpp"

namespace sabar {

/// Monomial in the infinitesimals, e.g. {e0: 2, e1: 1}. Empty map is 1.
using EpsMonomial = std::map<std::string, std::uint32_t>;

std::string eps_monomial_str(const EpsMonomial& m);

/// Polynomial in a main variable (default T) with coefficients in Q[e0, e1, ...].
/// e0 is the largest infinitesimal: 0 < ... << e1 << e0 << 1.
class EpsPoly {
 public:
  EpsPoly(MultiPoly body, std::string main_var = "T");
  static EpsPoly parse(std::string_view text, std::string main_var = "T");

  static bool is_eps_var(const std::string& name);
  /// Index i of the variable e<i>.
  static int eps_index(const std::string& name);

  const MultiPoly& body() const { return body_; }
  const std::string& main_var() const { return main_; }
  /// Infinitesimals occurring, ordered by index.
  std::vector<std::string> eps_vars() const;
  std::string str() const { return body_.str(); }

  /// Real polynomial obtained by e_i -> eta^w_i, w_i = weights[e_i] or i+1.
  UniPoly substitute_eta(const Rational& eta, const std::map<std::string, unsigned>& weights = {}) const;

 private:
  MultiPoly body_;
  std::string main_;
};

struct CoefficientDecomposition {
  std::string main_var;
  /// (m_alpha, G_alpha), m_alpha = 1 first, then by total degree and name.
  std::vector<std::pair<EpsMonomial, UniPoly>> parts;

  MultiPoly reassemble() const;
};

CoefficientDecomposition decompose(const EpsPoly& g);

/// Ordered, duplicate-free real roots of all coefficient polynomials G_alpha.
std::vector<ThomEncoding> remove_infinitesimals(const std::vector<EpsPoly>& gs);

/// Smallest exponents w_0 < w_1 < ... with w_0 = 1 such that e_i -> eta^w_i
/// keeps every monomial occurring in gs below all monomials in e_0..e_(i-1)
/// alone. Equals i+1 when that is already order-preserving.
std::map<std::string, unsigned> eta_weights(const std::vector<EpsPoly>& gs);

/// Finite-eta check that no root of any substituted G lies in the middle half
/// of any gap (s_i, s_{i+1}).
bool lemma_check(const std::vector<EpsPoly>& gs, const std::vector<ThomEncoding>& s, const Rational& eta);

}  // namespace sabar
