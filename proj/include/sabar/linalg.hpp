#pragma once

#include <cstddef>
#include <vector>

#include "sabar/rational.hpp"

namespace sabar {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  QVector column(std::size_t c) const;
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

std::size_t rank(QMatrix m);
/// Basis of {x : m x = 0}.
std::vector<QVector> nullspace(QMatrix m);
/// Dimension of the span of the vectors (each of length `dim`).
std::size_t span_dim(const std::vector<QVector>& vs, std::size_t dim);
/// Indices of a subset of `extra` that extends a basis of span(base) to a
/// basis of span(base + extra).
std::vector<std::size_t> complement_indices(const std::vector<QVector>& base, const std::vector<QVector>& extra,
                                            std::size_t dim);

}  // namespace sabar
