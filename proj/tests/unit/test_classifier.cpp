#include <random>

#include "doctest.h"
#include "faithdim/classifier.hpp"

using namespace faithdim;

TEST_CASE("represented_by_form") {
  CHECK(represented_by_form(13, 2, 1, 3));   // x=2, y=1
  CHECK_FALSE(represented_by_form(3, 1, 0, 1));
  CHECK(represented_by_form(5, 1, 0, 1));    // 1 + 4
  CHECK_THROWS_AS(represented_by_form(5, 1, 0, -1), input_error);
  CHECK_THROWS_AS(represented_by_form(5, 1, 2, 1), input_error);
  // oracle cross-check on a naive bounded search
  for (std::uint32_t p : {7u, 11u, 13u, 31u, 59u}) {
    bool naive = false;
    for (int x = -40; x <= 40 && !naive; ++x)
      for (int y = -40; y <= 40 && !naive; ++y)
        if (x * x + x * y + 6 * y * y == int(p)) naive = true;
    CHECK(represented_by_form(p, 1, 1, 6) == naive);
  }
}

TEST_CASE("predicted values for the bundled examples") {
  CHECK(predicted_value("binary_quadratic", 13, 1) == 26);
  CHECK(predicted_value("binary_quadratic", 7, 1) == 98);
  CHECK(predicted_value("binary_quadratic", 3, 2) == 36);
  CHECK(predicted_value("binary_cubic", 13, 1) == 2 * 13 * 13 * 13);
  CHECK(predicted_value("binary_cubic", 23, 1) == 2 * 23 * 23);
  CHECK(predicted_value("lee", 3, 1) == 21);
  CHECK(predicted_value("lee", 7, 1) == 147);
  CHECK(predicted_value("unitriangular:5", 7, 1) == 343);
  CHECK(predicted_value("heisenberg:2", 3, 2) == 162);
  CHECK(predicted_value("abelian:3", 7, 2) == 6);
  CHECK_THROWS_AS(predicted_value("nonsense", 5, 1), input_error);
  CHECK_THROWS_AS(predicted_value("lee", 2, 1), refusal);
  CHECK_THROWS_AS(predicted_value("lee", 7, 2), refusal);
  // elliptic: constructive curve predicate
  auto e5 = predicted_value("elliptic:1", 5, 1);
  if (e5) CHECK(*e5 == 75);
  CHECK_THROWS_AS(predicted_value("elliptic:5", 5, 1), refusal);  // p | a
}

TEST_CASE("sweep clusters the binary quadratic example into two classes") {
  ZLieAlgebra g = binary_quadratic_algebra();
  SweepReport rep = sweep(g, 3, 97, 1, {}, "binary_quadratic");
  REQUIRE_FALSE(rep.rows.empty());
  for (const auto& row : rep.rows) {
    CHECK(row.computed);
    CHECK(row.matched != "MISMATCH");
    CHECK_FALSE(row.matched.empty());
    // decode consistency: value = f*(sum q^{a_i} + l2)
    std::uint64_t v = 0;
    for (unsigned a : row.signature) {
      std::uint64_t w = 1;
      for (unsigned e = 0; e < a; ++e) w *= row.q;
      v += w;
    }
    CHECK(row.f * v == row.value);
  }
  auto cl = rep.clusters();
  REQUIRE(cl.size() == 2);
  for (const auto& [sig, rows] : cl)
    for (auto idx : rows) {
      std::uint32_t p = rep.rows[idx].p;
      if (sig == RankSignature{1, 1})
        CHECK(p % 4 == 1);
      else
        CHECK(p % 4 == 3);
    }
}

TEST_CASE("sweep records refusals instead of failing") {
  // class-3 algebra refuses p = 3
  ZLieAlgebra g = free_nilpotent(2, 3);
  SweepReport rep = sweep(g, 3, 7, 1);
  REQUIRE(rep.rows.size() == 3);
  CHECK_FALSE(rep.rows[0].computed);
  CHECK(rep.rows[0].matched == "REFUSED");
  CHECK(rep.rows[1].computed);
  CHECK(rep.rows[1].value == 2 * 5);
  // CSV includes the refused row
  std::string csv = rep.to_csv();
  CHECK(csv.find("refused") != std::string::npos);
}

TEST_CASE("vertical sweep of the binary quadratic example at p = 3") {
  ZLieAlgebra g = binary_quadratic_algebra();
  SweepReport rep = vertical_sweep(g, 3, 1, 4, {}, "binary_quadratic");
  REQUIRE(rep.rows.size() == 4);
  for (const auto& row : rep.rows) {
    REQUIRE(row.computed);
    if (row.f % 2 == 0)
      CHECK(row.signature == RankSignature{1, 1});
    else
      CHECK(row.signature == RankSignature{2, 2});
    CHECK_FALSE(row.matched.empty());
    CHECK(row.matched != "MISMATCH");
  }
  // heisenberg(1): constant signature (1), values f*q
  SweepReport hrep =
      vertical_sweep(heisenberg_algebra(1), 3, 1, 3, {}, "heisenberg:1");
  REQUIRE(hrep.rows.size() == 3);
  std::uint64_t q = 3;
  for (unsigned f = 1; f <= 3; ++f) {
    CHECK(hrep.rows[f - 1].signature == RankSignature{1});
    CHECK(hrep.rows[f - 1].value == f * q);
    q *= 3;
  }
  CHECK(hrep.clusters().size() == 1);
}

TEST_CASE("root-count trichotomy for T^3 - T - 1") {
  PrimeField dummy(3);
  for (std::uint32_t p : {3u,  5u,  7u,  11u, 13u, 17u, 19u, 29u, 31u,
                          37u, 41u, 43u, 47u, 53u, 59u, 61u, 67u, 71u,
                          73u, 79u, 83u, 89u, 97u, 101u, 199u}) {
    PrimeField fp(p);
    std::size_t n = count_roots({-1, -1, 0, 1}, fp);
    if (p == 23) continue;
    CHECK((n == 0 || n == 1 || n == 3));
    if (legendre_symbol(p, 23) == -1) {
      CHECK(n == 1);
    } else {
      bool by2 = represented_by_form(p, 2, 1, 3);
      bool by1 = represented_by_form(p, 1, 1, 6);
      CHECK(by1 != by2);  // exactly one form represents p
      CHECK(n == (by1 ? 3 : 0));
    }
  }
}

TEST_CASE("discriminant Legendre symbol vs cubic factor count") {
  // (D/p) = (-1)^{3-g} for monic cubics with squarefree discriminant
  std::mt19937_64 rng(17);
  auto disc = [](std::int64_t a, std::int64_t b, std::int64_t c) {
    // disc(T^3 + aT^2 + bT + c)
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b -
           4 * b * b * b - 27 * c * c;
  };
  auto squarefree = [](std::int64_t d) {
    d = d < 0 ? -d : d;
    if (d == 0) return false;
    for (std::int64_t k = 2; k * k <= d; ++k)
      if (d % (k * k) == 0) return false;
    return true;
  };
  int tested = 0;
  while (tested < 12) {
    std::int64_t a = std::int64_t(rng() % 9) - 4;
    std::int64_t b = std::int64_t(rng() % 9) - 4;
    std::int64_t c = std::int64_t(rng() % 9) - 4;
    std::int64_t d = disc(a, b, c);
    if (!squarefree(d)) continue;
    ++tested;
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u,
                            41u, 43u, 47u, 53u, 59u, 61u, 67u, 71u, 73u, 79u,
                            83u, 89u, 97u}) {
      if (d % p == 0) continue;
      PrimeField fp(p);
      std::size_t n = count_roots({c, b, a, 1}, fp);
      // distinct roots since p does not divide the discriminant
      int gfactors = n == 3 ? 3 : (n == 1 ? 2 : 1);
      CHECK(legendre_symbol(d, p) == ((3 - gfactors) % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("sweep and vertical serialize to csv and json") {
  ZLieAlgebra g = binary_quadratic_algebra();
  SweepReport rep = sweep(g, 3, 13, 1, {}, "binary_quadratic");
  std::string csv = rep.to_csv();
  CHECK(csv.rfind("prime,f,q,value,signature,mode,matched_case\n", 0) == 0);
  CHECK(csv.find("5,1,5,10,1 1,exact") != std::string::npos);
  std::string js = rep.to_json();
  CHECK(js.find("\"schema\":1") != std::string::npos);
  CHECK(js.find("\"value\":10") != std::string::npos);
}
