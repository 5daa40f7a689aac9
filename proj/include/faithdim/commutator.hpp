#ifndef FAITHDIM_COMMUTATOR_HPP
#define FAITHDIM_COMMUTATOR_HPP

#include <cstdint>
#include <vector>

#include "faithdim/fieldmat.hpp"
#include "faithdim/intmat.hpp"
#include "faithdim/lie.hpp"

namespace faithdim {

/// The basis split used by the rank-minimization theorem: w's span the
/// commutator subalgebra with the central ones first, z's the rest of the
/// centre, u's a complement of Z(g)+[g,g], v's a complement of Z(g).
/// All rows are coordinate vectors in the ambient basis of g.
struct AdaptedBasis {
  IntMatrix w;  // m rows, first l1 spanning Z(g) cap [g,g]
  IntMatrix z;  // l2 rows
  IntMatrix u;  // l3 rows
  IntMatrix v;  // n rows
  unsigned l1 = 0;

  unsigned m() const { return unsigned(w.rows()); }
  unsigned l2() const { return unsigned(z.rows()); }
  unsigned l3() const { return unsigned(u.rows()); }
  unsigned n() const { return unsigned(v.rows()); }
  unsigned dim() const { return m() + l2() + l3(); }
};

AdaptedBasis adapted_basis(const ZLieAlgebra& g);

/// One integer linear form sum coeff_k * T_{var_k}.
struct LinearForm {
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
  bool operator==(const LinearForm&) const = default;
};

/// n x n skew-symmetric matrix of linear forms in m variables.  Only the
/// upper triangle is stored.  Reduced matrices of graded algebras carry an
/// anti-diagonal cell decomposition that rank_at exploits.
class LinearFormMatrix {
 public:
  struct Cell {
    std::uint32_t r0, r1, c0, c1;  // rows [r0,r1) x cols [c0,c1)
    bool diagonal;                 // skew cell on the block diagonal
  };

  LinearFormMatrix(std::size_t n, std::size_t m)
      : n_(n), m_(m), forms_(n * n) {}

  std::size_t size() const { return n_; }
  std::size_t vars() const { return m_; }

  void set_form(std::size_t i, std::size_t j, LinearForm f);
  /// Form at (i,j); lower-triangle entries come back negated.
  LinearForm form(std::size_t i, std::size_t j) const;

  void set_cells(std::vector<Cell> cells) { cells_ = std::move(cells); }
  const std::vector<Cell>& cells() const { return cells_; }

  /// Full skew matrix specialized at a point of F^m.
  template <class F>
  FieldMatrix<F> specialize(const F& field,
                            const std::vector<typename F::Elem>& point) const;

  /// Rank of the specialization; throws internal_error on an odd rank.
  template <class F>
  unsigned rank_at(const F& field,
                   const std::vector<typename F::Elem>& point) const;

  bool operator==(const LinearFormMatrix& o) const {
    return n_ == o.n_ && m_ == o.m_ && forms_ == o.forms_;
  }

 private:
  std::size_t n_, m_;
  std::vector<LinearForm> forms_;  // row-major, both triangles
  std::vector<Cell> cells_;
};

/// Commutator matrix of g relative to an adapted basis (lambda coefficients
/// of [v_i, v_j] in the w-basis).
LinearFormMatrix commutator_matrix(const ZLieAlgebra& g,
                                   const AdaptedBasis& basis);

/// For a graded algebra whose centre is exactly the top-degree component:
/// the commutator matrix in the top-degree variables only, with all other
/// variables set to zero.  Rows/columns are the basis vectors of degree
/// below the top, in basis order; the anti-diagonal cell structure is
/// attached.  Throws input_error when the grading is inconsistent with the
/// brackets or the centre is not the top component.
LinearFormMatrix reduced_commutator_matrix(const ZLieAlgebra& g);

/// Per-field evaluation plan for the forms of a LinearFormMatrix; build
/// once and reuse across many points.
template <class F>
class SpecializePlan {
 public:
  SpecializePlan(const LinearFormMatrix& lfm, const F& field);

  /// Rank at a point, using the cell structure when available.
  unsigned rank_at(const std::vector<typename F::Elem>& point) const;

 private:
  using Elem = typename F::Elem;
  struct Entry {
    std::vector<std::pair<std::uint32_t, Elem>> terms;
  };
  Elem eval(const Entry& e, const std::vector<Elem>& point) const;
  unsigned cell_rank(const std::vector<Elem>& point, std::size_t cell) const;

  const LinearFormMatrix* lfm_;
  const F* field_;
  std::vector<Entry> entries_;  // row-major full matrix
  mutable std::vector<Elem> scratch_;
};

}  // namespace faithdim

#endif
