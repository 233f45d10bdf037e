#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sabar/formulas.hpp"
#include "sabar/infinitesimals.hpp"
#include "sabar/persistence.hpp"

namespace sabar {

/// The set R(formula) ∩ {|X|^2 <= radius} filtered by the sub-level sets of poly.
struct SemialgebraicInput {
  QfFormula formula;
  MultiPoly poly;
  Rational radius;
  int level = 0;  // largest homology dimension reported

  /// Sorted variables of formula and poly.
  std::vector<std::string> variables() const;
};

struct FamilyMember {
  MultiPoly poly;
  int source = 0;  // 0: ball, 1..s: formula polynomials, s+1: poly - T
  int sign = 0;    // sign of the infinitesimal, 0 when unperturbed
};

struct PerturbedFamily {
  std::vector<std::string> vars;
  std::vector<FamilyMember> members;  // ball first, level polynomial last
  std::size_t formula_polys = 0;
};

/// P_0 = sum X^2 - R, P_i + e_(i-1), P_i - e_(i-1), P - T.
PerturbedFamily perturb(const SemialgebraicInput& input);

struct CriticalSystem {
  std::vector<std::size_t> subset;  // indices into members, level polynomial excluded
  /// Maximal minors of the Jacobian of (Q, P) in the X variables; empty when
  /// the Jacobian has more rows than columns.
  std::vector<MultiPoly> minors;
  MultiPoly jac_poly;  // sum of squares of the minors
  std::vector<MultiPoly> members;
  MultiPoly level_poly;

  /// Polynomials whose common zeros, projected to T, contain the critical values.
  std::vector<MultiPoly> equations() const;
};

/// Subsets of at most k members; two copies of the same P_i never together.
std::vector<CriticalSystem> critical_systems(const PerturbedFamily& fam);

/// Eliminates `vars` from the system by iterated resultants, splitting off
/// monomial factors. Returns polynomials in the remaining variables, one per
/// branch, whose zero sets contain the projection.
std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& system, const std::vector<std::string>& vars);

/// Largest k handled by elimination.
inline constexpr std::size_t max_exact_dimension = 3;

std::vector<EpsPoly> critical_value_polys(const PerturbedFamily& fam);

struct CriticalValueList {
  std::vector<ThomEncoding> values;
  /// samples[0] < values[0] < samples[1] < ... < values[M] < samples[M + 1]
  std::vector<Rational> samples;
};

/// Interleaving rational samples for an ordered list.
std::vector<Rational> interleave_samples(const std::vector<ThomEncoding>& values);
CriticalValueList critical_values(const SemialgebraicInput& input);

/// Freudenthal triangulation of [-rho, rho]^k, rho = ceil(sqrt(R)), with grid_n
/// steps per axis. Inequalities are tested at every vertex, equations by a sign
/// change over the simplex; faces of included simplices are included.
SimplicialComplex sublevel_complex(const SemialgebraicInput& input, const Rational& t, int grid_n);
/// K_i = sublevel_complex(input, samples[i], grid_n).
Filtration sublevel_filtration(const SemialgebraicInput& input, const std::vector<Rational>& samples, int grid_n);

struct SemialgebraicBarcodes {
  CriticalValueList levels;
  std::vector<Barcode> barcodes;  // p = 0..level
  std::size_t simplices = 0;
};

/// Critical values by elimination, extra rational levels merged in, sub-level
/// complexes sampled just above each value.
SemialgebraicBarcodes barcode_semialgebraic(const SemialgebraicInput& input, int grid_n,
                                            const std::vector<Rational>& extra_levels = {});
/// Same with the given rational levels only, no elimination.
SemialgebraicBarcodes barcode_at_levels(const SemialgebraicInput& input, int grid_n, std::vector<Rational> levels);

using Point = std::vector<Rational>;

/// Rips filtration over the distinct squared pairwise distances (0 first).
Filtration rips_filtration(const std::vector<Point>& points, int max_dim);

/// Worker count: SABAR_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

}  // namespace sabar
