#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sabar/linalg.hpp"
#include "sabar/thom.hpp"

namespace sabar {

/// Sorted vertex ids.
using Simplex = std::vector<int>;

/// Order used for bases: by dimension, then lexicographic.
bool simplex_less(const Simplex& a, const Simplex& b);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Adds all faces of the given simplices; vertex lists are sorted.
  static SimplicialComplex closure_of(std::vector<Simplex> simplices);
  /// Throws unless the list is already closed under faces.
  static SimplicialComplex from_closed(std::vector<Simplex> simplices);

  const std::vector<Simplex>& simplices() const { return simplices_; }
  /// Simplices of dimension p in lexicographic order.
  std::vector<Simplex> simplices(int p) const;
  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  int dimension() const;
  bool contains(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Simplex> simplices_;  // sorted by simplex_less, no duplicates
};

/// Matrix of the boundary map C_p -> C_{p-1} in the lexicographic bases.
QMatrix boundary_matrix(const SimplicialComplex& k, int p);
std::size_t betti(const SimplicialComplex& k, int p);

struct FiltrationValue {
  enum class Kind { Index, Exact, Algebraic, MinusInfinity, PlusInfinity };
  Kind kind = Kind::Index;
  long index = 0;
  Rational exact;
  std::optional<ThomEncoding> algebraic;
  /// Isolating interval reported for algebraic values.
  std::pair<Rational, Rational> approx;

  static FiltrationValue at_index(long i);
  static FiltrationValue of(const Rational& q);
  static FiltrationValue of(const ThomEncoding& t, const Rational& width);
  static FiltrationValue minus_infinity();
  static FiltrationValue plus_infinity();

  std::string str() const;
};

std::strong_ordering compare(const FiltrationValue& a, const FiltrationValue& b);
bool operator==(const FiltrationValue& a, const FiltrationValue& b);

/// K_0 ⊆ ... ⊆ K_N as one list of simplices with the index of the first
/// complex containing each.
class Filtration {
 public:
  Filtration() = default;
  /// Faces must not be born after their cofaces; every face must be present.
  Filtration(std::vector<std::pair<Simplex, int>> entries, int steps);
  /// From explicit nested complexes.
  static Filtration from_complexes(const std::vector<SimplicialComplex>& ks);

  int steps() const { return steps_; }
  /// N, the index of the last complex.
  int last() const { return steps_ - 1; }
  const std::vector<std::pair<Simplex, int>>& entries() const { return entries_; }
  /// K_i for -1 <= i <= N + 1, with K_{-1} empty and K_{N+1} = K_N.
  SimplicialComplex complex(int i) const;

  const std::optional<std::vector<FiltrationValue>>& values() const { return values_; }
  void set_values(std::vector<FiltrationValue> values);
  FiltrationValue value(int i) const;

 private:
  std::vector<std::pair<Simplex, int>> entries_;  // sorted by (birth, simplex_less)
  int steps_ = 0;
  std::optional<std::vector<FiltrationValue>> values_;
};

/// Rank of H_p(K_i) -> H_p(K_j), as dim Z_p(K_i) - dim(Z_p(K_i) ∩ B_p(K_j)),
/// by dense elimination.
std::size_t persistent_betti(const Filtration& f, int p, int i, int j);

/// Persistence pairs from one sparse column reduction over Q; answers
/// persistent Betti queries for all p, i, j.
class PersistenceTable {
 public:
  explicit PersistenceTable(const Filtration& f);

  int last() const { return last_; }
  int max_dim() const { return max_dim_; }
  std::size_t persistent_betti(int p, int i, int j) const;
  /// Number of pairs (birth step, death step) per dimension; death -1 for essential classes.
  const std::map<std::pair<int, int>, std::size_t>& pairs(int p) const;

 private:
  int last_ = -1;
  int max_dim_ = -1;
  std::vector<std::map<std::pair<int, int>, std::size_t>> pairs_;
};

/// Multiplicity of bars born at i and dying at j, 0 <= i <= j <= N + 1, with
/// j = N + 1 meaning the bar never dies.
long multiplicity(const PersistenceTable& t, int p, int i, int j);
long multiplicity(const Filtration& f, int p, int i, int j);

struct SubquotientReport {
  std::size_t dim_M = 0;
  std::size_t dim_N = 0;
  std::size_t dim_P = 0;
};

/// Explicit M/N subspaces of H_p(K_i) with dim P = dim M - dim N; same index
/// conventions as multiplicity.
SubquotientReport subquotient_oracle(const Filtration& f, int p, int i, int j);

struct Bar {
  int birth_index = 0;
  int death_index = -1;  // -1: never dies
  FiltrationValue birth;
  std::optional<FiltrationValue> death;
  long mult = 0;
};

struct Barcode {
  int p = 0;
  std::vector<Bar> bars;
};

Barcode barcode(const Filtration& f, int p);
Barcode barcode(const Filtration& f, const PersistenceTable& t, int p);
std::vector<Barcode> barcodes(const Filtration& f, int max_p);

}  // namespace sabar
