#ifndef FAITHDIM_LIE_HPP
#define FAITHDIM_LIE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "faithdim/field.hpp"
#include "faithdim/fieldmat.hpp"
#include "faithdim/intmat.hpp"

namespace faithdim {

/// Nilpotent Lie algebra on a free Z-module, given by structure constants.
/// Brackets are stored for i < j only; [v_j,v_i] = -[v_i,v_j] and
/// [v_i,v_i] = 0 are implied.
class ZLieAlgebra {
 public:
  explicit ZLieAlgebra(std::size_t dim,
                       std::vector<std::string> basis_names = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  /// Define [v_i, v_j] = result (0-based, i < j, result has length dim).
  void set_bracket(std::size_t i, std::size_t j, std::vector<Int> result);
  /// Bracket of basis vectors with sign handling; zero vector for i == j.
  std::vector<Int> basis_bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension to coordinate vectors.
  std::vector<Int> bracket(const std::vector<Int>& x,
                           const std::vector<Int>& y) const;

  /// Optional grading by positive degrees (set by constructors only).
  void set_grading(std::vector<unsigned> degrees);
  bool graded() const { return !grading_.empty(); }
  const std::vector<unsigned>& grading() const { return grading_; }

  bool operator==(const ZLieAlgebra& o) const {
    return dim_ == o.dim_ && brackets_ == o.brackets_;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> basis_names_;
  std::vector<std::vector<Int>> brackets_;  // index pair_index(i,j)
  std::vector<unsigned> grading_;

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    return i * dim_ + j;
  }
};

struct ValidationReport {
  bool ok = true;
  std::string message;
};

/// Checks the Jacobi identity on all basis triples and nilpotency via the
/// lower central series; reports the first violation found.
ValidationReport validate(const ZLieAlgebra& g);
/// validate() that throws input_error on failure.
void validate_or_throw(const ZLieAlgebra& g);

/// Descending central series g = g^1 >= g^2 >= ... >= 0, each term returned
/// as a saturated submodule in row HNF.  The final (zero) term is included.
std::vector<IntMatrix> lower_central_series(const ZLieAlgebra& g);

/// Centre as a saturated submodule in row HNF.
IntMatrix center(const ZLieAlgebra& g);

/// The commutator subalgebra [g,g] as an honest subgroup (not saturated);
/// row HNF basis.
IntMatrix commutator_subalgebra(const ZLieAlgebra& g);

unsigned nilpotency_class(const ZLieAlgebra& g);

struct BadPrimeConstants {
  unsigned l1 = 0;         // rk(Z(g) cap [g,g])
  unsigned c = 1;          // nilpotency class
  Int c1 = 1, c2 = 1, c3 = 1;
  bool m_of_x_exact = true;  // false when the submatrix surrogate was used
  /// Constant gating the rank-minimization theorem: max{c, C1, C2, C3}.
  Int reduction_bound() const;
  /// The full constant max{l1, c, C1, C2, C3}.
  Int bound() const;
};

BadPrimeConstants bad_prime_constants(const ZLieAlgebra& g);
/// max{l1, c, C1, C2, C3} as a plain integer.
unsigned bad_prime_bound(const ZLieAlgebra& g);

/// g tensor F_q: structure constants reduced into the field.
template <class F>
class FqLieAlgebra {
 public:
  using Elem = typename F::Elem;

  FqLieAlgebra(const ZLieAlgebra& g, F field);

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::vector<Elem> zero() const { return std::vector<Elem>(dim_, field_.zero()); }
  const std::vector<Elem>& basis_bracket_upper(std::size_t i,
                                               std::size_t j) const {
    return brackets_[i * dim_ + j];  // requires i < j
  }
  std::vector<Elem> bracket(const std::vector<Elem>& x,
                            const std::vector<Elem>& y) const;
  bool is_zero_vec(const std::vector<Elem>& x) const;
  /// Used by negative-control tests: deliberately corrupt one constant.
  void corrupt(std::size_t i, std::size_t j, std::size_t k, Elem value);

 private:
  F field_;
  std::size_t dim_;
  std::vector<std::vector<Elem>> brackets_;
};

/// Reduce mod the field characteristic.  Refuses (with the violated
/// constant named) when char(F) <= max{c, C1, C2, C3}.
template <class F>
FqLieAlgebra<F> reduce_mod(const ZLieAlgebra& g, const F& field);

/// Ranks of the lower central series of g tensor F_q (until zero).
template <class F>
std::vector<std::size_t> series_ranks_mod(const FqLieAlgebra<F>& gq);

/// Centre of g tensor F_q as row vectors.
template <class F>
std::vector<std::vector<typename F::Elem>> center_mod(const FqLieAlgebra<F>& gq);

/// Conjugate structure constants by a unimodular change of basis
/// (new basis u_i = sum_j U(i,j) v_j); grading is dropped.
ZLieAlgebra change_basis(const ZLieAlgebra& g, const IntMatrix& u);

}  // namespace faithdim

#endif
