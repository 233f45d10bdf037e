#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sabar/poly.hpp"
#include "sabar/rational.hpp"

namespace sabar {

/// A point of the extended rational line.
struct Bound {
  enum class Kind { MinusInfinity, Finite, PlusInfinity };
  Kind kind = Kind::Finite;
  Rational value;

  static Bound minus_infinity() { return {Kind::MinusInfinity, Rational(0)}; }
  static Bound plus_infinity() { return {Kind::PlusInfinity, Rational(0)}; }
  static Bound at(const Rational& q) { return {Kind::Finite, q}; }
  bool finite() const { return kind == Kind::Finite; }
};

/// (f, f', f'', ..., f^(deg f)); throws for the zero polynomial.
std::vector<UniPoly> derivatives(const UniPoly& f);

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Quotient of an exact division; throws std::domain_error if the remainder is nonzero.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

/// Integer coefficients with gcd 1, sign of the leading coefficient preserved.
UniPoly primitive_part(const UniPoly& f);
/// primitive_part with positive leading coefficient.
UniPoly normalize(const UniPoly& f);

/// Greatest common divisor, normalized; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// f / gcd(f, f'), normalized. Same real roots as f, each simple.
UniPoly square_free(const UniPoly& f);

/// Signed remainder sequence (f, f', -rem(f, f'), ...), each term scaled by a
/// positive constant to keep integer coefficients small.
std::vector<UniPoly> sturm_sequence(const UniPoly& f);

/// Sign variations of a Sturm sequence at a point of the extended line (zeros skipped).
int sign_variations(const std::vector<UniPoly>& seq, const Bound& at);

/// Number of distinct real roots of f in the open interval (a, b).
/// Throws std::invalid_argument when a finite endpoint is a root of f.
int sturm_count(const UniPoly& f, const Bound& a, const Bound& b);
int sturm_count(const std::vector<UniPoly>& seq, const Bound& a, const Bound& b);

/// A rational B with every real root of f in (-B, B).
Rational root_bound(const UniPoly& f);

/// Enclosure of f over [lo, hi] by interval Horner evaluation.
std::pair<Rational, Rational> eval_range(const UniPoly& f, const Rational& lo, const Rational& hi);

/// Determinant of the Sylvester matrix of f and g with respect to `var`,
/// computed by fraction-free (Bareiss) elimination.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Determinant of a square matrix of polynomials by Bareiss elimination.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

}  // namespace sabar
