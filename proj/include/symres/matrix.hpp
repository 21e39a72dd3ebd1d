#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symres/error.hpp"
#include "symres/exact_arith.hpp"

namespace symres {

/// Dense row-major matrix of Scalars over one field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(const FieldDescriptor& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

  static ExactMatrix identity(const FieldDescriptor& f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
  }

  static ExactMatrix from_rows(const FieldDescriptor& f, const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) {
        if (!(rows[i][j].field() == f)) {
          throw InvalidInput("matrix entry over " + rows[i][j].field().to_string() + " in a matrix over " +
                             f.to_string());
        }
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Keeps the first n rows.
  ExactMatrix top_rows(std::size_t n) const {
    ExactMatrix m(field_, n, cols_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix dimension mismatch in product");
    if (!(a.field_ == b.field_)) throw InvalidInput("matrix field mismatch in product");
    ExactMatrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix dimension mismatch");
    ExactMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Serialization used as a canonical dictionary key: rows separated by ';'.
  std::string key() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ';';
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ' ';
        s += (*this)(i, j).to_string();
      }
    }
    return s;
  }

 private:
  FieldDescriptor field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  ExactMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. Zero rows end up at the bottom.
inline RowEchelon rref(ExactMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    if (!m(r, col).is_one()) {
      const Scalar inv = m(r, col).inverse();
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      const Scalar f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

/// Basis of the right null space {v : M v = 0}, one basis vector per column.
inline ExactMatrix kernel(const ExactMatrix& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivot_columns) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  ExactMatrix basis(m.field(), m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = Scalar::one(m.field());
    for (std::size_t i = 0; i < e.rank; ++i) basis(e.pivot_columns[i], k) = -e.reduced(i, free_cols[k]);
  }
  return basis;
}

inline std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  ExactMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  auto e = rref(std::move(aug));
  if (e.rank < n || e.pivot_columns[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Reduces `row` against the rows of an rref matrix (first `rank` rows, with
/// the given pivots). Returns the remainder, zero iff row lies in the row space.
inline std::vector<Scalar> reduce_against(const RowEchelon& e, std::vector<Scalar> row) {
  for (std::size_t i = 0; i < e.rank; ++i) {
    const std::size_t p = e.pivot_columns[i];
    if (row[p].is_zero()) continue;
    const Scalar f = row[p];
    for (std::size_t j = p; j < row.size(); ++j)
      if (!e.reduced(i, j).is_zero()) row[j] -= f * e.reduced(i, j);
  }
  return row;
}

}  // namespace symres
