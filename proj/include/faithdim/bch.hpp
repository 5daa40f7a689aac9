#ifndef FAITHDIM_BCH_HPP
#define FAITHDIM_BCH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "faithdim/engine.hpp"
#include "faithdim/lie.hpp"

namespace faithdim {

struct GroupCheckReport {
  bool ok = true;
  std::string message;
};

/// The group exp(g_q) under the truncated Campbell-Baker-Hausdorff law.
/// Elements are coordinate vectors of g_q.  The series is evaluated through
/// a per-group table: each right-nested bracket word in the two arguments
/// carries one field coefficient, accumulated over all composition tuples
/// of the Dynkin-type sum.
template <class F>
class BchGroup {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  /// Requires char(F) > nilpotency class (checked; refusal otherwise).
  explicit BchGroup(const FqLieAlgebra<F>& gq);

  const FqLieAlgebra<F>& algebra() const { return *gq_; }
  unsigned nilpotency_class() const { return class_; }

  Vec multiply(const Vec& x, const Vec& y) const;
  Vec inverse(const Vec& x) const;
  Vec identity() const { return gq_->zero(); }

  /// Associativity on seeded random triples, identity, inverses.
  GroupCheckReport axioms_check(std::size_t trials,
                                std::uint64_t seed = 0) const;

  /// Elements commuting with every basis generator; enumerates the whole
  /// group, so only desk-size instances are allowed.
  std::vector<Vec> centre_elements(std::uint64_t budget = 2000000) const;

 private:
  const FqLieAlgebra<F>* gq_;
  unsigned class_ = 1;
  // coefficient of the word [l_1,[l_2,...,[l_{k-1},l_k]...]] where bit j of
  // the key selects the letter l_{j+1} (0 = x, 1 = y); indexed by length.
  std::vector<std::vector<Elem>> word_coeff_;
};

/// |Stab(theta_a)| = q^{d - rank(F(proj_3(a)))}.
template <class F>
std::uint64_t stabilizer_size(const LinearFormMatrix& lfm, const F& field,
                              const CharacterDims& dims,
                              const std::vector<typename F::Elem>& a);

/// dim rho_a = q^{rank(F(proj_3(a)))/2}.
template <class F>
std::uint64_t irrep_dimension(const LinearFormMatrix& lfm, const F& field,
                              const CharacterDims& dims,
                              const std::vector<typename F::Elem>& a);

/// Histogram dimension -> number of irreducibles, by enumerating all q^d
/// character points and dividing each rank stratum by its orbit size.
/// Validates the divisibility; total weighted count must be |G|.
template <class F>
std::map<std::uint64_t, std::uint64_t> orbit_census(
    const LinearFormMatrix& lfm, const F& field, const CharacterDims& dims,
    std::uint64_t budget = 10000000);

/// Direct minimal faithful dimension: complete search over admissible sets
/// of (l1+l2)*f character points (proj_2 independent over F_p), minimizing
/// the total dimension.  Tiny instances only.
template <class F>
std::uint64_t direct_min_faithful(const LinearFormMatrix& lfm, const F& field,
                                  const CharacterDims& dims,
                                  std::uint64_t budget = 2000000);

}  // namespace faithdim

#endif
