#ifndef FAITHDIM_INTMAT_HPP
#define FAITHDIM_INTMAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

namespace faithdim {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::vector<Int> row(std::size_t i) const;
  bool is_zero() const;
  bool operator==(const IntMatrix& o) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row a += k * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Int& k);
  void add_col_multiple(std::size_t a, std::size_t b, const Int& k);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  /// Exact determinant (square matrices; fraction-free elimination).
  Int det() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

struct HnfResult {
  IntMatrix h;          // row Hermite normal form, zero rows dropped
  IntMatrix transform;  // full transform: transform * input has h on top
  std::vector<std::size_t> pivot_cols;
};

/// Row Hermite normal form with positive pivots, entries above a pivot
/// reduced to [0, pivot).  Deterministic, row-major pivot order.
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix u, d, v;  // u * input * v = d, u and v unimodular
  std::vector<Int> divisors;  // nonzero diagonal of d, d_i | d_{i+1}
};

/// Smith normal form.  Pivot = minimal absolute value nonzero entry,
/// ties broken row-major.
SnfResult smith_normal_form(const IntMatrix& m);

/// Basis of { x : x * m = 0 } as rows; always saturated.
IntMatrix left_kernel(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& v);

/// Basis (rows) of the saturation { v : k*v in rowspace(m) for some k != 0 }.
IntMatrix saturate(const IntMatrix& m);

/// Solve x * basis = v exactly over Z; nullopt if no integer solution.
/// `basis` must have independent rows.
std::optional<std::vector<Int>> solve_in_rowspace(const IntMatrix& basis,
                                                  const std::vector<Int>& v);

std::size_t rank_z(const IntMatrix& m);

/// Largest prime factor of |n|; 1 for n in {-1, 0, 1} by convention
/// (0 never reaches here in bound computations).
Int largest_prime_factor(const Int& n);

}  // namespace faithdim

#endif
