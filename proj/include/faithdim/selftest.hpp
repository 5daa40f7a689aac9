#ifndef FAITHDIM_SELFTEST_HPP
#define FAITHDIM_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "faithdim/engine.hpp"

namespace faithdim {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Run the acceptance criteria, printing one pass/fail line per criterion.
std::vector<CriterionResult> run_acceptance(const EngineOptions& opt,
                                            std::ostream& log);

/// Exit status style wrapper: 0 when every criterion passes.
int selftest_main(const EngineOptions& opt, std::ostream& log);

}  // namespace faithdim

#endif
