#include <cstdlib>
#include <iostream>
#include <string>

#include "faithdim/selftest.hpp"

// Runs every acceptance criterion and prints one pass/fail line per
// criterion.  --budget and --threads mirror the CLI flags.
int main(int argc, char** argv) {
  faithdim::EngineOptions opt;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--budget")
      opt.budget = std::strtoull(argv[i + 1], nullptr, 10);
    else if (flag == "--threads")
      opt.threads = unsigned(std::strtoul(argv[i + 1], nullptr, 10));
  }
  return faithdim::selftest_main(opt, std::cout);
}
