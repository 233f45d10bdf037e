#include "sabar/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sabar {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(p, k), m.at(row, k));
    }
    const Rational inv = Rational(1) / m.at(row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m.at(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, c).is_zero()) continue;
      const Rational f = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m.at(row, k).is_zero()) m.at(r, k) -= f * m.at(row, k);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Incremental echelon basis: insert vectors, report whether each was independent.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  bool insert(QVector v) {
    if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivot_[i];
      if (v[p].is_zero()) continue;
      const Rational f = v[p];
      for (std::size_t k = p; k < dim_; ++k) {
        if (!rows_[i][k].is_zero()) v[k] -= f * rows_[i][k];
      }
    }
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    const Rational inv = Rational(1) / v[p];
    for (std::size_t k = p; k < dim_; ++k) v[k] *= inv;
    rows_.push_back(std::move(v));
    pivot_.push_back(p);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivot_;
};

}  // namespace

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<QVector> nullspace(QMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t span_dim(const std::vector<QVector>& vs, std::size_t dim) {
  Echelon e(dim);
  for (const auto& v : vs) e.insert(v);
  return e.size();
}

std::vector<std::size_t> complement_indices(const std::vector<QVector>& base, const std::vector<QVector>& extra,
                                            std::size_t dim) {
  Echelon e(dim);
  for (const auto& v : base) e.insert(v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < extra.size(); ++i) {
    if (e.insert(extra[i])) out.push_back(i);
  }
  return out;
}

}  // namespace sabar
