#ifndef FAITHDIM_CLASSIFIER_HPP
#define FAITHDIM_CLASSIFIER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "faithdim/constructors.hpp"
#include "faithdim/engine.hpp"

namespace faithdim {

/// End-to-end computation: validates, gates the prime, builds the adapted
/// basis and commutator matrix (the reduced matrix for graded constructions
/// whose centre is the top component), and runs the engine.
FaithfulDimResult faithful_dimension(const ZLieAlgebra& g, std::uint32_t p,
                                     unsigned f, const EngineOptions& opt = {},
                                     bool use_reduced_if_graded = true);

/// Is p represented by the positive definite form a x^2 + b xy + c y^2?
/// Exhaustive search within the eigenvalue bound.
bool represented_by_form(std::uint32_t p, std::int64_t a, std::int64_t b,
                         std::int64_t c);

struct PredictionCase {
  std::string description;
  std::function<bool(std::uint32_t, unsigned)> applies;  // (p, f)
  RankSignature signature;  // predicted value = f * (sum q^{a_i} + l2)
};

struct PiecewisePrediction {
  unsigned l2 = 0;
  std::vector<PredictionCase> cases;

  /// Value of the first matching case; nullopt when no case applies.
  std::optional<std::uint64_t> value(std::uint32_t p, unsigned f) const;
  std::optional<std::string> case_label(std::uint32_t p, unsigned f) const;
};

/// The known piecewise formulas for the bundled examples
/// (binary_quadratic, binary_cubic, lee, elliptic:a, heisenberg:k,
/// unitriangular:k, abelian:k).  Throws input_error for unknown names and
/// refusal for excluded parameters (p = 2, p | a, f > 1 where the source
/// only covers f = 1).
PiecewisePrediction bundled_prediction(const std::string& name,
                                       std::uint32_t p, unsigned f);

/// Convenience: the predicted value itself; nullopt when the case analysis
/// does not cover (p, f), e.g. the elliptic example without a curve point.
std::optional<std::uint64_t> predicted_value(const std::string& name,
                                             std::uint32_t p, unsigned f);

struct SweepRow {
  std::uint32_t p = 0;
  unsigned f = 1;
  std::uint64_t q = 0;
  bool computed = false;      // false = engine refused this prime
  std::uint64_t value = 0;
  RankSignature signature;
  bool exact = true;
  std::string matched;        // case label, "MISMATCH", "REFUSED" or ""
  std::string note;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  /// rows grouped by identical signature, in first-appearance order
  std::vector<std::pair<RankSignature, std::vector<std::size_t>>> clusters()
      const;
  std::string to_csv() const;
  std::string to_json() const;
};

/// Run the engine for every prime in [lo, hi]; refusals become rows, not
/// errors.  When `name` is nonempty the bundled prediction is matched
/// against each row.
SweepReport sweep(const ZLieAlgebra& g, std::uint32_t lo, std::uint32_t hi,
                  unsigned f, const EngineOptions& opt = {},
                  const std::string& name = "");

/// Fixed prime, f in [flo, fhi].
SweepReport vertical_sweep(const ZLieAlgebra& g, std::uint32_t p,
                           unsigned flo, unsigned fhi,
                           const EngineOptions& opt = {},
                           const std::string& name = "");

}  // namespace faithdim

#endif
