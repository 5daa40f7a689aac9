#include "faithdim/intmat.hpp"

#include <algorithm>
#include <cstdlib>

#include "faithdim/errors.hpp"

namespace faithdim {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw internal_error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return std::vector<Int>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw internal_error("matmul shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) += k * at(b, j);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Int& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) += k * at(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw internal_error("det of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = t / prev;  // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

HnfResult hnf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  IntMatrix t = IntMatrix::identity(rows);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclidean elimination in column c below row r.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == rows || abs(h.at(i, c)) < abs(h.at(best, c))) best = i;
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      t.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = h.at(i, c) / h.at(r, c);
        h.add_row_multiple(i, r, -q);
        t.add_row_multiple(i, r, -q);
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows && h.at(r, c) != 0) {
      if (h.at(r, c) < 0) {
        h.negate_row(r);
        t.negate_row(r);
      }
      // Reduce entries above the pivot into [0, pivot).
      for (std::size_t i = 0; i < r; ++i) {
        Int q = h.at(i, c) / h.at(r, c);
        if (h.at(i, c) - q * h.at(r, c) < 0) q -= 1;
        h.add_row_multiple(i, r, -q);
        t.add_row_multiple(i, r, -q);
      }
      pivots.push_back(c);
      ++r;
    }
  }
  IntMatrix top(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) top.at(i, j) = h.at(i, j);
  return HnfResult{std::move(top), std::move(t), std::move(pivots)};
}

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  const std::size_t nmin = std::min(rows, cols);

  for (std::size_t k = 0; k < nmin; ++k) {
    while (true) {
      // Minimal-absolute-value nonzero pivot, row-major tie break.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi == rows || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) goto done;  // all-zero tail
      d.swap_rows(k, pi);
      u.swap_rows(k, pi);
      d.swap_cols(k, pj);
      v.swap_cols(k, pj);

      bool reduced = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = d.at(i, k) / d.at(k, k);
        d.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
        if (d.at(i, k) != 0) reduced = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = d.at(k, j) / d.at(k, k);
        d.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        if (d.at(k, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // Divisibility: fold any entry not divisible by the pivot into row k.
      bool fixed = false;
      for (std::size_t i = k + 1; i < rows && !fixed; ++i)
        for (std::size_t j = k + 1; j < cols && !fixed; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            d.add_row_multiple(k, i, 1);
            u.add_row_multiple(k, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      u.negate_row(k);
    }
  }
done:
  std::vector<Int> divisors;
  for (std::size_t k = 0; k < nmin; ++k) {
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      u.negate_row(k);
    }
    if (d.at(k, k) != 0) divisors.push_back(d.at(k, k));
  }
  return SnfResult{std::move(u), std::move(d), std::move(v),
                   std::move(divisors)};
}

IntMatrix left_kernel(const IntMatrix& m) {
  HnfResult h = hnf(m);
  const std::size_t r = h.h.rows();
  // Transform rows beyond the rank map onto the dropped zero rows.
  IntMatrix ker(m.rows() - r, m.rows());
  for (std::size_t i = r; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j)
      ker.at(i - r, j) = h.transform.at(i, j);
  return hnf(ker).h;  // canonical form
}

/// Inverse of a unimodular matrix: the HNF of such a matrix is the
/// identity, so the HNF transform is exactly the inverse.
IntMatrix unimodular_inverse(const IntMatrix& v) {
  HnfResult h = hnf(v);
  if (h.h.rows() != v.rows() || h.h != IntMatrix::identity(v.rows()))
    throw internal_error("unimodular_inverse: matrix is not unimodular");
  return h.transform;
}

IntMatrix saturate(const IntMatrix& m) {
  SnfResult s = smith_normal_form(m);
  const std::size_t r = s.divisors.size();
  const std::size_t n = m.cols();
  if (r == 0) return IntMatrix(0, n);
  // u m v = d, so m = u^-1 d v^-1 and the Q-rowspace of m equals the
  // Q-span of the first r rows of v^-1.  Those rows extend to a Z-basis
  // of Z^n (v^-1 is unimodular), hence they are a saturated basis.
  IntMatrix vinv = unimodular_inverse(s.v);
  IntMatrix sat(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) sat.at(i, j) = vinv.at(i, j);
  return hnf(sat).h;
}

std::optional<std::vector<Int>> solve_in_rowspace(const IntMatrix& basis,
                                                  const std::vector<Int>& v) {
  const std::size_t r = basis.rows(), n = basis.cols();
  if (v.size() != n) throw internal_error("solve_in_rowspace length mismatch");
  HnfResult h = hnf(basis);
  if (h.h.rows() != r) throw internal_error("solve_in_rowspace: dependent rows");
  // Solve y * h.h = v by pivot substitution, then x = y * (top of transform).
  std::vector<Int> rem = v, y(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t c = h.pivot_cols[i];
    if (rem[c] % h.h.at(i, c) != 0) return std::nullopt;
    y[i] = rem[c] / h.h.at(i, c);
    if (y[i] != 0)
      for (std::size_t j = 0; j < n; ++j) rem[j] -= y[i] * h.h.at(i, j);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Int& x) { return x != 0; }))
    return std::nullopt;
  std::vector<Int> x(r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) x[j] += y[i] * h.transform.at(i, j);
  return x;
}

std::size_t rank_z(const IntMatrix& m) { return hnf(m).h.rows(); }

Int largest_prime_factor(const Int& n) {
  Int x = abs(n);
  if (x <= 1) return 1;
  Int best = 1;
  for (Int d = 2; d * d <= x; ++d)
    while (x % d == 0) {
      best = d;
      x /= d;
    }
  if (x > 1) best = x;
  return best;
}

}  // namespace faithdim
