#ifndef FAITHDIM_ENGINE_HPP
#define FAITHDIM_ENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "faithdim/commutator.hpp"
#include "faithdim/field.hpp"

namespace faithdim {

struct EngineOptions {
  std::uint64_t budget = 100000000;  // rank evaluations in exact mode
  std::uint64_t seed = 0;            // sampling-mode generator seed
  unsigned threads = 0;              // 0 = hardware concurrency
};

/// Sorted multiset of half-ranks a_1 <= ... <= a_{l1}.
using RankSignature = std::vector<unsigned>;

struct FaithfulDimResult {
  std::uint64_t value = 0;
  RankSignature signature;
  /// l1 rows; row i is a point of F_q^m stored as element encodings.
  std::vector<std::vector<std::uint64_t>> witness;
  bool exact = true;  // false = sampling mode, value is an upper bound
  std::uint64_t q = 0;
  unsigned f = 1, l1 = 0, l2 = 0, m = 0;
};

/// Faithful dimension of exp(g tensor F_q) given the commutator matrix:
/// minimum of f * sum q^{rank(F(x_l))/2} over l1 points whose leading l1
/// coordinates form an invertible matrix, plus f*l2.  Exact when q^m fits
/// the budget (matroid greedy over the full enumeration); otherwise a
/// seeded-sample upper bound.
template <class F>
FaithfulDimResult minimize(const LinearFormMatrix& lfm, const F& field,
                           unsigned l1, unsigned l2, unsigned f,
                           const EngineOptions& opt = {});

/// Independent oracle: complete branch-and-bound search over all l1-subsets
/// with invertible leading block (no matroid exchange argument).  Refuses
/// oversized instances.
template <class F>
std::uint64_t exhaustive_min(const LinearFormMatrix& lfm, const F& field,
                             unsigned l1, unsigned l2, unsigned f,
                             const EngineOptions& opt = {});

struct Stratum {
  std::uint64_t count = 0;
  std::vector<std::vector<std::uint64_t>> samples;  // up to a small cap
};

struct StrataIndex {
  bool exact = true;
  std::map<unsigned, Stratum> by_half_rank;
  std::uint64_t points_seen = 0;
};

/// Histogram of points of F_q^m by half-rank of the specialization.
template <class F>
StrataIndex rank_strata(const LinearFormMatrix& lfm, const F& field,
                        const EngineOptions& opt = {});

/// Recover the signature from a value of the form f*(sum q^{a_i} + l2).
/// Requires q > l1 so the base-q digits are unambiguous.
RankSignature decode_signature(std::uint64_t value, std::uint64_t q,
                               unsigned l1, unsigned l2, unsigned f);

/// Partition fm' vectors of F_q^{m'} that are independent over F_p into f
/// blocks, each an F_q-basis (greedy with augmenting exchanges).
template <class F>
std::vector<std::vector<std::size_t>> rado_horn_partition(
    const F& field, const std::vector<std::vector<typename F::Elem>>& vecs);

struct CharacterDims {
  unsigned l1 = 0, l2 = 0, l3 = 0, m = 0;
  unsigned total() const { return m + l2 + l3; }
};

/// proj_2: the (l1 + l2) coordinates a' and b of a character point.
template <class F>
std::vector<typename F::Elem> proj2(const CharacterDims& dims,
                                    const std::vector<typename F::Elem>& a);

/// Scale a regular set by an F_p-basis of F_q, yielding an admissible set
/// of (l1+l2)*f character points; validates both sides.
template <class F>
std::vector<std::vector<typename F::Elem>> admissible_from_regular(
    const F& field, const CharacterDims& dims,
    const std::vector<std::vector<typename F::Elem>>& regular);

/// Flatten a vector over F_q to its F_p coordinates (length f * dim).
template <class F>
std::vector<std::uint32_t> prime_coordinates(
    const F& field, const std::vector<typename F::Elem>& v);

/// Witness rows of a minimize() result extended to a full regular set of
/// character points: the l1 witness rows padded with zeros, plus l2 unit
/// vectors in the z-coordinates.
template <class F>
std::vector<std::vector<typename F::Elem>> regular_set_from_witness(
    const F& field, const CharacterDims& dims, const FaithfulDimResult& r);

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

}  // namespace faithdim

#endif
