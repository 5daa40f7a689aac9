#ifndef FAITHDIM_CONSTRUCTORS_HPP
#define FAITHDIM_CONSTRUCTORS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "faithdim/lie.hpp"

namespace faithdim {

/// Strict partial order on {1..n} with i < j whenever i precedes j;
/// transitively closed on construction.
class Poset {
 public:
  Poset(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& relations);

  unsigned n() const { return n_; }
  bool less(unsigned i, unsigned j) const { return rel_[(i - 1) * n_ + (j - 1)]; }
  /// Comparable pairs (i, j), i before j, in lexicographic order.
  std::vector<std::pair<unsigned, unsigned>> pairs() const;

 private:
  unsigned n_;
  std::vector<bool> rel_;
};

ZLieAlgebra pattern_algebra(const Poset& p);

/// Pairs (i,j) with i minimal, j maximal, i before j.
std::vector<std::pair<unsigned, unsigned>> extreme_pairs(const Poset& p);
/// Number of k strictly between i and j; the pair must be comparable.
unsigned alpha(const Poset& p, unsigned i, unsigned j);
/// Longest chain edge count.
unsigned poset_length(const Poset& p);

/// Closed form sum of f*q^{alpha(i,j)} over extreme pairs; refuses
/// p <= length.
std::uint64_t pattern_prediction(const Poset& p, std::uint32_t prime,
                                 unsigned f);

/// Witt number r_n(c) = (1/c) sum_{d|c} mu(d) n^{c/d}.
std::uint64_t witt(unsigned n, unsigned c);

/// Hall words on n generators, lengths 1..c, under the order (length,
/// then recursive structural comparison).  Words are identified by dense
/// ids; id order equals the Hall order.
class HallBasis {
 public:
  HallBasis(unsigned n, unsigned c);

  unsigned generators() const { return n_; }
  unsigned max_length() const { return c_; }
  std::size_t size() const { return len_.size(); }
  unsigned length(std::size_t id) const { return len_[id]; }
  /// -1 for internal nodes.
  int generator(std::size_t id) const { return gen_[id]; }
  std::size_t left(std::size_t id) const { return left_[id]; }
  std::size_t right(std::size_t id) const { return right_[id]; }
  std::vector<std::size_t> words_of_length(unsigned len) const;
  std::string name(std::size_t id) const;

  /// [u, v] as a sparse vector of (word id, coefficient); zero beyond the
  /// class bound.  Memoized Hall rewriting.
  std::vector<std::pair<std::size_t, Int>> bracket(std::size_t u,
                                                   std::size_t v) const;

 private:
  bool word_less(std::size_t a, std::size_t b) const;
  std::vector<std::pair<std::size_t, Int>> bracket_impl(std::size_t u,
                                                        std::size_t v,
                                                        unsigned depth) const;

  unsigned n_, c_;
  std::vector<unsigned> len_;
  std::vector<int> gen_;
  std::vector<std::size_t> left_, right_;
  std::vector<std::vector<std::size_t>> by_length_;
  // (left, right) -> id for Hall nodes
  std::vector<std::pair<std::size_t, std::size_t>> node_key_;
  mutable std::map<std::pair<std::size_t, std::size_t>,
                   std::vector<std::pair<std::size_t, Int>>>
      memo_;
};

/// Free nilpotent Lie algebra on n generators of class c over the Hall
/// basis; graded by word length.
ZLieAlgebra free_nilpotent(unsigned n, unsigned c);

/// Free metabelian Lie algebra on 2 generators of class c, graded.
ZLieAlgebra free_metabelian_2(unsigned c);

ZLieAlgebra binary_quadratic_algebra();
ZLieAlgebra binary_cubic_algebra();
ZLieAlgebra lee_algebra();
ZLieAlgebra elliptic_algebra(const Int& a);
ZLieAlgebra heisenberg_algebra(unsigned k);     // Hei_{2k+1}
ZLieAlgebra unitriangular_algebra(unsigned k);  // u_k
ZLieAlgebra abelian_algebra(unsigned k);
/// 2-step algebra whose commutator matrix block is T1*I - T2*C_g for the
/// companion matrix of the monic polynomial g (constant term first,
/// leading coefficient 1).
ZLieAlgebra companion_algebra(const std::vector<Int>& monic_poly);

/// Named lookup used by the CLI: heisenberg(k), unitriangular(k),
/// elliptic(a), abelian(k) take their parameter after a colon, e.g.
/// "heisenberg:2"; companion takes comma-separated coefficients.
ZLieAlgebra example_algebra(const std::string& spec);

}  // namespace faithdim

#endif
