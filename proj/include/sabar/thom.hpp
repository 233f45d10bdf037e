#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "sabar/exact_arith.hpp"
#include "sabar/poly.hpp"
#include "sabar/rational.hpp"

namespace sabar {

/// A real algebraic number given by a square-free defining polynomial, the signs
/// of its derivative tuple at the root, and a rational isolating interval.
///
/// The interval is either open, lo < root < hi with poly(lo), poly(hi) nonzero
/// and exactly one root of poly inside, or degenerate, lo == hi == root.
struct ThomEncoding {
  UniPoly poly;
  /// sign of each element of Der(poly) at the root; der_signs[0] == 0.
  std::vector<int> der_signs;
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  /// Bisects the isolating interval once (exact roots are returned unchanged).
  ThomEncoding refined() const;

  static ThomEncoding from_rational(const Rational& q, const std::string& var = "X");
};

/// One encoding per distinct real root of f, in increasing order.
std::vector<ThomEncoding> encode_roots(const UniPoly& f);

/// Order of the two represented real numbers.
std::strong_ordering compare(const ThomEncoding& a, const ThomEncoding& b);

/// Sorted, duplicate-free encodings of all real roots of the given polynomials.
/// Constant polynomials contribute nothing.
std::vector<ThomEncoding> order_roots(const std::vector<UniPoly>& polys);

int sign_at_root(const ThomEncoding& t, const UniPoly& q);
std::vector<int> signs_at_root(const ThomEncoding& t, const std::vector<UniPoly>& qs);

/// Isolating interval of width at most `width`.
std::pair<Rational, Rational> rational_approx(const ThomEncoding& t, const Rational& width);

/// Sign of (root - q) for a rational q.
int compare_to_rational(const ThomEncoding& t, const Rational& q);

/// A rational strictly between a < b, chosen with a small denominator near the
/// middle of the gap.
Rational rational_between(const ThomEncoding& a, const ThomEncoding& b);

/// The root as "p/q" when it is rational, else "~" and six decimals.
std::string display(const ThomEncoding& t);

}  // namespace sabar
