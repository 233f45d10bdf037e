#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sabar/poly.hpp"
#include "sabar/thom.hpp"

namespace sabar {

enum class Rel { Lt, Le, Eq, Ge, Gt, Ne };

std::string rel_str(Rel r);
bool rel_holds(Rel r, int sign);
bool is_strict(Rel r);

struct Atom {
  MultiPoly poly;
  Rel rel = Rel::Eq;

  std::string str() const;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Raised when the input of make_closed does not describe a closed set.
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Quantifier-free formula over polynomial sign atoms. An And with no children
/// is true, an Or with no children is false.
class QfFormula {
 public:
  enum class Kind { Atom, And, Or, Not };

  static QfFormula atom(MultiPoly poly, Rel rel);
  static QfFormula atom(const Atom& a) { return atom(a.poly, a.rel); }
  static QfFormula conj(std::vector<QfFormula> children);
  static QfFormula disj(std::vector<QfFormula> children);
  static QfFormula negate(QfFormula child);
  static QfFormula truth() { return conj({}); }

  /// Grammar: atoms `(<poly> <op> <poly>)` with op in < <= = >= > !=, connectives
  /// & | !, parentheses. The printed form always has right-hand side 0.
  static QfFormula parse(std::string_view text);

  Kind kind() const { return kind_; }
  const Atom& as_atom() const { return atom_; }
  const std::vector<QfFormula>& children() const { return children_; }

  std::set<std::string> variables() const;
  void collect_atoms(std::vector<Atom>& out) const;
  std::size_t atom_count() const;

  std::string str() const;
  friend bool operator==(const QfFormula&, const QfFormula&) = default;

 private:
  Kind kind_ = Kind::And;
  Atom atom_;
  std::vector<QfFormula> children_;
};

/// Truth value with atom signs supplied by a callback.
bool eval_with(const QfFormula& f, const std::function<int(const MultiPoly&)>& sign_of);
/// Truth value at a rational point; throws if a variable has no binding.
bool eval(const QfFormula& f, const std::map<std::string, Rational>& point);

/// Negation-free DNF with relations among < <= = >= >. Throws if more than
/// `atom_budget` atoms would be produced.
std::vector<std::vector<Atom>> to_dnf(const QfFormula& f, std::size_t atom_budget = 64);

struct ClosedFormula {
  std::vector<std::vector<Atom>> dnf;

  QfFormula to_formula() const;
  std::string str() const { return to_formula().str(); }
};

/// End of a piece of a subset of the line.
struct Endpoint {
  enum class Kind { MinusInfinity, Finite, PlusInfinity };
  Kind kind = Kind::Finite;
  std::optional<ThomEncoding> value;

  static Endpoint minus_infinity() { return {Kind::MinusInfinity, std::nullopt}; }
  static Endpoint plus_infinity() { return {Kind::PlusInfinity, std::nullopt}; }
  static Endpoint at(ThomEncoding t) { return {Kind::Finite, std::move(t)}; }
  bool finite() const { return kind == Kind::Finite; }
};

bool same_point(const Endpoint& a, const Endpoint& b);

/// A connected piece: a point (lo == hi, both closed) or an interval whose
/// ends are each open or closed. Infinite ends are always open.
struct Piece {
  Endpoint lo;
  Endpoint hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool is_point() const { return lo.finite() && hi.finite() && lo_closed && hi_closed && same_point(lo, hi); }
  bool closed() const { return (!lo.finite() || lo_closed) && (!hi.finite() || hi_closed); }
  std::string str() const;
};

struct UnivariateRealization {
  std::vector<Piece> pieces;

  bool empty() const { return pieces.empty(); }
  bool closed() const;
  std::string str() const;
  bool contains(const Rational& x) const;
};

bool operator==(const Piece& a, const Piece& b);
bool operator==(const UnivariateRealization& a, const UnivariateRealization& b);

/// Realization of a formula in at most one variable.
UnivariateRealization realize_univariate(const QfFormula& f);

/// All sign vectors on F realized at some real point.
std::set<std::vector<int>> realizable_sign_conditions(const std::vector<UniPoly>& family);

/// Closed, negation-free, strict-free DNF with the same realization as a
/// univariate formula whose realization is closed.
ClosedFormula make_closed(const QfFormula& theta, std::size_t atom_budget = 64);

}  // namespace sabar
