#ifndef FAITHDIM_FIELDMAT_HPP
#define FAITHDIM_FIELDMAT_HPP

#include <cstddef>
#include <vector>

#include "faithdim/errors.hpp"

namespace faithdim {

/// Dense matrix over a finite field F (PrimeField or ExtensionField).
template <class F>
class FieldMatrix {
 public:
  using Elem = typename F::Elem;

  FieldMatrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(&field), rows_(rows), cols_(cols),
        data_(rows * cols, field.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return *field_; }
  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::size_t rank() const {
    FieldMatrix tmp = *this;
    return tmp.eliminate();
  }

  /// Basis of the right kernel { x : M x = 0 }, size cols - rank.
  std::vector<std::vector<Elem>> kernel_basis() const {
    const F& k = *field_;
    FieldMatrix m = *this;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && k.is_zero(m.at(piv, c))) ++piv;
      if (piv == rows_) continue;
      m.swap_rows(r, piv);
      Elem inv = k.inv(m.at(r, c));
      for (std::size_t j = c; j < cols_; ++j)
        m.at(r, j) = k.mul(m.at(r, j), inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || k.is_zero(m.at(i, c))) continue;
        Elem factor = m.at(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          m.at(i, j) = k.sub(m.at(i, j), k.mul(factor, m.at(r, j)));
      }
      pivot_col.push_back(c);
      ++r;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<Elem> x(cols_, k.zero());
      x[c] = k.one();
      for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = k.neg(m.at(i, c));
      basis.push_back(std::move(x));
    }
    return basis;
  }

  Elem det() const {
    if (rows_ != cols_) throw internal_error("det of non-square matrix");
    const F& k = *field_;
    FieldMatrix m = *this;
    Elem d = k.one();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t piv = c;
      while (piv < rows_ && k.is_zero(m.at(piv, c))) ++piv;
      if (piv == rows_) return k.zero();
      if (piv != c) {
        m.swap_rows(c, piv);
        d = k.neg(d);
      }
      d = k.mul(d, m.at(c, c));
      Elem inv = k.inv(m.at(c, c));
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (k.is_zero(m.at(i, c))) continue;
        Elem factor = k.mul(m.at(i, c), inv);
        for (std::size_t j = c; j < cols_; ++j)
          m.at(i, j) = k.sub(m.at(i, j), k.mul(factor, m.at(c, j)));
      }
    }
    return d;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

 private:
  // In-place row echelon; returns the rank.
  std::size_t eliminate() {
    const F& k = *field_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && k.is_zero(at(piv, c))) ++piv;
      if (piv == rows_) continue;
      swap_rows(r, piv);
      Elem inv = k.inv(at(r, c));
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (k.is_zero(at(i, c))) continue;
        Elem factor = k.mul(at(i, c), inv);
        for (std::size_t j = c; j < cols_; ++j)
          at(i, j) = k.sub(at(i, j), k.mul(factor, at(r, j)));
      }
      ++r;
    }
    return r;
  }

  const F* field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

/// Incremental span of vectors in F^dim; used for matroid greedy steps.
template <class F>
class SpanTracker {
 public:
  using Elem = typename F::Elem;

  SpanTracker(const F& field, std::size_t dim)
      : field_(&field), dim_(dim), pivot_of_col_(dim, std::size_t(-1)) {}

  std::size_t dim_span() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

  /// True iff v is outside the current span (v then gets absorbed).
  bool try_extend(std::vector<Elem> v) {
    const F& k = *field_;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (k.is_zero(v[c])) continue;
      std::size_t r = pivot_of_col_[c];
      if (r == std::size_t(-1)) {
        Elem inv = k.inv(v[c]);
        for (auto& x : v) x = k.mul(x, inv);
        pivot_of_col_[c] = rows_.size();
        rows_.push_back(std::move(v));
        pivot_col_.push_back(c);
        return true;
      }
      Elem factor = v[c];
      for (std::size_t j = c; j < dim_; ++j)
        v[j] = k.sub(v[j], k.mul(factor, rows_[r][j]));
    }
    return false;
  }

  /// Membership test without absorbing.
  bool contains(std::vector<Elem> v) const {
    const F& k = *field_;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (k.is_zero(v[c])) continue;
      std::size_t r = pivot_of_col_[c];
      if (r == std::size_t(-1)) return false;
      Elem factor = v[c];
      for (std::size_t j = c; j < dim_; ++j)
        v[j] = k.sub(v[j], k.mul(factor, rows_[r][j]));
    }
    return true;
  }

 private:
  const F* field_;
  std::size_t dim_;
  std::vector<std::vector<Elem>> rows_;  // pivot-normalized
  std::vector<std::size_t> pivot_col_;
  std::vector<std::size_t> pivot_of_col_;
};

}  // namespace faithdim

#endif
