#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "faithdim/bch.hpp"
#include "faithdim/classifier.hpp"
#include "faithdim/io.hpp"
#include "faithdim/selftest.hpp"

using namespace faithdim;

namespace {

struct Common {
  std::uint32_t p = 0;
  unsigned f = 1;
  std::uint64_t budget = 100000000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string format = "text";
};

void add_engine_flags(CLI::App* cmd, Common& c, bool with_format = true) {
  cmd->add_option("--budget", c.budget,
                  "max rank evaluations for exact mode (default 1e8)");
  cmd->add_option("--seed", c.seed, "sampling-mode seed (default 0)");
  cmd->add_option("--threads", c.threads,
                  "worker threads (default: hardware)");
  if (with_format)
    cmd->add_option("--format", c.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

EngineOptions engine_options(const Common& c) {
  EngineOptions opt;
  opt.budget = c.budget;
  opt.seed = c.seed;
  opt.threads = c.threads;
  return opt;
}

void print_result(const FaithfulDimResult& r, const Common& c) {
  if (c.format == "json")
    std::cout << result_to_json(r, c.p) << "\n";
  else if (c.format == "csv")
    std::cout << result_to_csv(r, c.p);
  else
    std::cout << result_to_text(r, c.p);
}

bool parse_range(const std::string& s, std::uint64_t& lo, std::uint64_t& hi) {
  auto dots = s.find("..");
  if (dots == std::string::npos) return false;
  try {
    lo = std::stoull(s.substr(0, dots));
    hi = std::stoull(s.substr(dots + 2));
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact faithful-dimension computations for nilpotent Z-Lie "
               "algebras over finite fields"};
  app.require_subcommand(1);

  Common c;
  std::string algebra_path, name_spec, poset_path, primes_range, fs_range;
  unsigned free_n = 2, free_c = 2, meta_c = 2;
  bool check_flag = false;

  auto* compute = app.add_subcommand(
      "compute", "faithful dimension for an algebra file or built-in name");
  compute->add_option("--algebra", algebra_path, "algebra JSON file");
  compute->add_option("--name", name_spec,
                      "built-in algebra, e.g. binary_quadratic, lee, "
                      "heisenberg:2, elliptic:1, companion:-1,-1,0,1");
  compute->add_option("--p", c.p, "prime")->required();
  compute->add_option("--f", c.f, "field degree f, q = p^f");
  add_engine_flags(compute, c);

  auto* pattern = app.add_subcommand(
      "pattern", "closed-form prediction for a pattern group from a poset");
  pattern->add_option("--poset", poset_path, "poset JSON file")->required();
  pattern->add_option("--p", c.p, "prime")->required();
  pattern->add_option("--f", c.f, "field degree");
  pattern->add_flag("--check", check_flag,
                    "also run the engine and compare");
  add_engine_flags(pattern, c);

  auto* freecmd = app.add_subcommand(
      "free", "faithful dimension of the free nilpotent group exp(f_{n,c})");
  freecmd->add_option("--n", free_n, "generators")->required();
  freecmd->add_option("--c", free_c, "nilpotency class")->required();
  freecmd->add_option("--p", c.p, "prime")->required();
  freecmd->add_option("--f", c.f, "field degree");
  add_engine_flags(freecmd, c);

  auto* meta = app.add_subcommand(
      "metabelian", "faithful dimension of exp(m_{2,c})");
  meta->add_option("--c", meta_c, "nilpotency class")->required();
  meta->add_option("--p", c.p, "prime")->required();
  meta->add_option("--f", c.f, "field degree");
  add_engine_flags(meta, c);

  auto* example = app.add_subcommand(
      "example", "faithful dimension of a named example algebra");
  example->add_option("--name", name_spec, "example name")->required();
  example->add_option("--p", c.p, "prime")->required();
  example->add_option("--f", c.f, "field degree");
  add_engine_flags(example, c);

  auto* sweepcmd = app.add_subcommand(
      "sweep", "run the engine over a range of primes and cluster rows");
  sweepcmd->add_option("--algebra", algebra_path, "algebra JSON file");
  sweepcmd->add_option("--name", name_spec, "built-in algebra");
  sweepcmd->add_option("--primes", primes_range, "prime range, e.g. 3..97")
      ->required();
  sweepcmd->add_option("--f", c.f, "field degree");
  add_engine_flags(sweepcmd, c);

  auto* vert = app.add_subcommand(
      "vertical", "fixed prime, sweep the field degree f");
  vert->add_option("--algebra", algebra_path, "algebra JSON file");
  vert->add_option("--name", name_spec, "built-in algebra");
  vert->add_option("--p", c.p, "prime")->required();
  vert->add_option("--fs", fs_range, "f range, e.g. 1..4")->required();
  add_engine_flags(vert, c);

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  add_engine_flags(self, c, false);

  CLI11_PARSE(app, argc, argv);

  try {
    EngineOptions opt = engine_options(c);
    auto load = [&]() -> ZLieAlgebra {
      if (!algebra_path.empty()) return load_algebra(algebra_path);
      if (!name_spec.empty()) return example_algebra(name_spec);
      throw input_error("provide --algebra FILE or --name NAME");
    };

    if (compute->parsed() || example->parsed()) {
      ZLieAlgebra g = load();
      print_result(faithful_dimension(g, c.p, c.f, opt), c);
      return 0;
    }
    if (pattern->parsed()) {
      Poset poset = load_poset(poset_path);
      std::uint64_t pred = pattern_prediction(poset, c.p, c.f);
      std::cout << "prediction " << pred << "\n";
      if (check_flag) {
        ZLieAlgebra g = pattern_algebra(poset);
        std::uint64_t got =
            g.dim() == 0 ? 0 : faithful_dimension(g, c.p, c.f, opt).value;
        if (got != pred) {
          std::cerr << "engine value " << got
                    << " disagrees with the prediction\n";
          return 3;
        }
        std::cout << "engine agrees\n";
      }
      return 0;
    }
    if (freecmd->parsed()) {
      print_result(faithful_dimension(free_nilpotent(free_n, free_c), c.p,
                                      c.f, opt),
                   c);
      return 0;
    }
    if (meta->parsed()) {
      print_result(
          faithful_dimension(free_metabelian_2(meta_c), c.p, c.f, opt), c);
      return 0;
    }
    if (sweepcmd->parsed()) {
      std::uint64_t lo = 0, hi = 0;
      if (!parse_range(primes_range, lo, hi))
        throw input_error("--primes expects a range like 3..97");
      ZLieAlgebra g = load();
      SweepReport rep =
          sweep(g, std::uint32_t(lo), std::uint32_t(hi), c.f, opt, name_spec);
      std::cout << (c.format == "json" ? rep.to_json() + "\n" : rep.to_csv());
      return 0;
    }
    if (vert->parsed()) {
      std::uint64_t lo = 0, hi = 0;
      if (!parse_range(fs_range, lo, hi))
        throw input_error("--fs expects a range like 1..4");
      ZLieAlgebra g = load();
      SweepReport rep = vertical_sweep(g, c.p, unsigned(lo), unsigned(hi),
                                       opt, name_spec);
      std::cout << (c.format == "json" ? rep.to_json() + "\n" : rep.to_csv());
      return 0;
    }
    if (self->parsed()) {
      return selftest_main(opt, std::cout);
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
