#ifndef FAITHDIM_IO_HPP
#define FAITHDIM_IO_HPP

#include <string>

#include "faithdim/classifier.hpp"
#include "faithdim/constructors.hpp"
#include "faithdim/engine.hpp"
#include "faithdim/lie.hpp"

namespace faithdim {

/// Algebra file: {"dim": d, "basis": ["v1", ...], "brackets":
///   [{"i": 1, "j": 2, "result": {"5": 1}}, ...]}
/// meaning [v_i, v_j] = sum_k result[k] * v_k with 1-based indices; omitted
/// pairs bracket to zero; coefficients as numbers or decimal strings.
ZLieAlgebra algebra_from_json(const std::string& text);
ZLieAlgebra load_algebra(const std::string& path);
std::string algebra_to_json(const ZLieAlgebra& g);

/// Poset file: {"n": 4, "relations": [[1,2],[2,4],[1,3],[3,4]]}.
Poset poset_from_json(const std::string& text);
Poset load_poset(const std::string& path);

/// {"schema":1, "p":..,"f":..,"q":..,"l1":..,"l2":..,"m":..,"value":..,
///  "signature":[..],"witness":[[..]],"mode":"exact"|"upper-bound"}
std::string result_to_json(const FaithfulDimResult& r, std::uint32_t p);
std::string result_to_text(const FaithfulDimResult& r, std::uint32_t p);
std::string result_to_csv(const FaithfulDimResult& r, std::uint32_t p);

}  // namespace faithdim

#endif
