#include <map>
#include <random>

#include "doctest.h"
#include "faithdim/commutator.hpp"
#include "faithdim/constructors.hpp"

using namespace faithdim;

namespace {

LinearForm lf(std::initializer_list<std::pair<std::uint32_t, std::int64_t>> l) {
  LinearForm f;
  for (auto& t : l) f.terms.push_back(t);
  return f;
}

Poset chain(unsigned k) {
  std::vector<std::pair<unsigned, unsigned>> rel;
  for (unsigned i = 1; i < k; ++i) rel.emplace_back(i, i + 1);
  return Poset(k, rel);
}

Poset heisenberg_poset(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> rel;
  for (unsigned mid = 2; mid <= n + 1; ++mid) {
    rel.emplace_back(1, mid);
    rel.emplace_back(mid, n + 2);
  }
  return Poset(n + 2, rel);
}

Poset random_poset(std::mt19937_64& rng, unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> rel;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      if (rng() % 3 == 0) rel.emplace_back(i, j);
  return Poset(n, rel);
}

}  // namespace

TEST_CASE("pattern algebras") {
  // chain 1 < 2 < 3 gives the 3-dimensional Heisenberg algebra
  ZLieAlgebra h = pattern_algebra(chain(3));
  CHECK(h.dim() == 3);
  CHECK(validate(h).ok);
  CHECK(nilpotency_class(h) == 2);
  // basis order e12 < e13 < e23: [e12, e23] = e13
  auto b = h.basis_bracket(0, 2);
  CHECK(b[1] == 1);

  ZLieAlgebra u4 = pattern_algebra(chain(4));
  CHECK(u4.dim() == 6);
  CHECK(validate(u4).ok);

  ZLieAlgebra anti = pattern_algebra(Poset(3, {}));
  CHECK(anti.dim() == 0);
}

TEST_CASE("pattern algebra centre is spanned by the extreme pairs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 15; ++t) {
    Poset p = random_poset(rng, 2 + unsigned(rng() % 4));
    ZLieAlgebra g = pattern_algebra(p);
    CHECK(validate(g).ok);
    const bool class_matches_length =
        g.dim() == 0 || nilpotency_class(g) == std::max(1u, poset_length(p));
    CHECK(class_matches_length);
    auto ex = extreme_pairs(p);
    IntMatrix z = center(g);
    CHECK(z.rows() == ex.size());
    // each extreme e_ij is central
    auto prs = p.pairs();
    for (auto [i, j] : ex) {
      std::size_t idx =
          std::find(prs.begin(), prs.end(), std::make_pair(i, j)) -
          prs.begin();
      std::vector<Int> e(g.dim(), 0);
      e[idx] = 1;
      CHECK(solve_in_rowspace(z, e).has_value());
    }
  }
}

TEST_CASE("extreme pairs, alpha, length") {
  Poset hei = heisenberg_poset(2);
  auto ex = extreme_pairs(hei);
  REQUIRE(ex.size() == 1);
  CHECK(ex[0] == std::make_pair(1u, 4u));
  CHECK(alpha(hei, 1, 4) == 2);
  CHECK(poset_length(hei) == 2);

  Poset c5 = chain(5);
  auto exc = extreme_pairs(c5);
  REQUIRE(exc.size() == 1);
  CHECK(exc[0] == std::make_pair(1u, 5u));
  CHECK(alpha(c5, 1, 5) == 3);
  CHECK(poset_length(c5) == 4);

  Poset anti(3, {});
  CHECK(extreme_pairs(anti).empty());
  CHECK(poset_length(anti) == 0);
  CHECK_THROWS_AS(alpha(anti, 1, 2), input_error);
}

TEST_CASE("pattern prediction closed form") {
  CHECK(pattern_prediction(chain(5), 7, 1) == 343);  // 7^3
  CHECK(pattern_prediction(heisenberg_poset(2), 3, 2) == 162);  // 2*9^2
  CHECK(pattern_prediction(heisenberg_poset(3), 5, 1) == 125);  // 5^3
  CHECK(pattern_prediction(Poset(3, {}), 5, 1) == 0);
  CHECK_THROWS_AS(pattern_prediction(chain(5), 3, 1), refusal);  // p <= length
}

TEST_CASE("witt numbers") {
  CHECK(witt(3, 3) == 8);
  CHECK(witt(2, 1) == 2);
  CHECK(witt(2, 2) == 1);
  CHECK(witt(2, 6) == 9);
  // cross-check against Hall basis group sizes
  for (unsigned n = 2; n <= 3; ++n) {
    unsigned cmax = n == 2 ? 6 : 4;
    HallBasis hall(n, cmax);
    for (unsigned c = 1; c <= cmax; ++c)
      CHECK(hall.words_of_length(c).size() == witt(n, c));
  }
}

TEST_CASE("hall basis listing for three generators up to length 3") {
  HallBasis hall(3, 3);
  auto h3 = hall.words_of_length(3);
  REQUIRE(h3.size() == 8);
  std::vector<std::string> expect{
      "[x1,[x1,x2]]", "[x1,[x1,x3]]", "[x2,[x1,x2]]", "[x2,[x1,x3]]",
      "[x2,[x2,x3]]", "[x3,[x1,x2]]", "[x3,[x1,x3]]", "[x3,[x2,x3]]"};
  for (std::size_t i = 0; i < 8; ++i) CHECK(hall.name(h3[i]) == expect[i]);

  HallBasis h22(2, 2);
  CHECK(h22.size() == 3);
  CHECK(h22.name(2) == "[x1,x2]");

  HallBasis h26(2, 6);
  std::vector<std::size_t> sizes;
  for (unsigned c = 1; c <= 6; ++c)
    sizes.push_back(h26.words_of_length(c).size());
  CHECK(sizes == std::vector<std::size_t>{2, 1, 2, 3, 6, 9});
}

TEST_CASE("free nilpotent algebras validate and have Witt-sized layers") {
  for (auto [n, c] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {4, 2}}) {
    ZLieAlgebra g = free_nilpotent(n, c);
    CHECK(validate(g).ok);
    CHECK(nilpotency_class(g) == c);
    auto series = lower_central_series(g);
    REQUIRE(series.size() == c + 1);
    for (unsigned k = 1; k <= c; ++k) {
      std::size_t expect = 0;
      for (unsigned l = k; l <= c; ++l) expect += witt(n, l);
      CHECK(series[k - 1].rows() == expect);
    }
  }
  CHECK(free_nilpotent(2, 2).dim() == 3);  // Heisenberg
}

TEST_CASE("reduced commutator matrix of f_{3,3} block entries") {
  ZLieAlgebra g = free_nilpotent(3, 3);
  auto F = reduced_commutator_matrix(g);
  REQUIRE(F.size() == 6);
  REQUIRE(F.vars() == 8);
  // F_12 block (rows x1,x2,x3 vs columns [x1,x2],[x1,x3],[x2,x3]):
  //   T1  T2  T4-T6
  //   T3  T4  T5
  //   T6  T7  T8
  CHECK(F.form(0, 3) == lf({{0, 1}}));
  CHECK(F.form(0, 4) == lf({{1, 1}}));
  CHECK(F.form(0, 5) == lf({{3, 1}, {5, -1}}));
  CHECK(F.form(1, 3) == lf({{2, 1}}));
  CHECK(F.form(1, 4) == lf({{3, 1}}));
  CHECK(F.form(1, 5) == lf({{4, 1}}));
  CHECK(F.form(2, 3) == lf({{5, 1}}));
  CHECK(F.form(2, 4) == lf({{6, 1}}));
  CHECK(F.form(2, 5) == lf({{7, 1}}));
  // reduced: generator-generator block has no top-degree part
  CHECK(F.form(0, 1) == lf({}));
  CHECK(F.form(0, 2) == lf({}));
  CHECK(F.form(1, 2) == lf({}));
  // cell structure: one off-diagonal block (degrees 1 and 2)
  REQUIRE(F.cells().size() == 1);
  CHECK_FALSE(F.cells()[0].diagonal);

  // the full commutator matrix additionally shows the H^2 variables
  auto basis = adapted_basis(g);
  CHECK(basis.l1 == 8);
  CHECK(basis.m() == 11);
  auto full = commutator_matrix(g, basis);
  CHECK(full.form(0, 1) == lf({{8, 1}}));   // [x1,x2] = T9
  CHECK(full.form(0, 2) == lf({{9, 1}}));   // [x1,x3] = T10
  CHECK(full.form(1, 2) == lf({{10, 1}}));  // [x2,x3] = T11
  CHECK(full.form(0, 5) == lf({{3, 1}, {5, -1}}));
}

TEST_CASE("reduced commutator matrix of f_{2,6} block entries") {
  ZLieAlgebra g = free_nilpotent(2, 6);
  CHECK(g.dim() == 23);
  auto F = reduced_commutator_matrix(g);
  REQUIRE(F.size() == 14);
  REQUIRE(F.vars() == 9);
  // F_{1,5}: rows x1,x2 vs the six degree-5 words:
  //   x1  x2+x6  x3+2x7-x9  x4+2x8  x6    x7+x9
  //   x2  x3     x4         x5      x7-x9 x8
  const unsigned r5 = 8;  // first degree-5 row index: 2+1+2+3
  CHECK(F.form(0, r5 + 0) == lf({{0, 1}}));
  CHECK(F.form(0, r5 + 1) == lf({{1, 1}, {5, 1}}));
  CHECK(F.form(0, r5 + 2) == lf({{2, 1}, {6, 2}, {8, -1}}));
  CHECK(F.form(0, r5 + 3) == lf({{3, 1}, {7, 2}}));
  CHECK(F.form(0, r5 + 4) == lf({{5, 1}}));
  CHECK(F.form(0, r5 + 5) == lf({{6, 1}, {8, 1}}));
  CHECK(F.form(1, r5 + 0) == lf({{1, 1}}));
  CHECK(F.form(1, r5 + 1) == lf({{2, 1}}));
  CHECK(F.form(1, r5 + 2) == lf({{3, 1}}));
  CHECK(F.form(1, r5 + 3) == lf({{4, 1}}));
  CHECK(F.form(1, r5 + 4) == lf({{6, 1}, {8, -1}}));
  CHECK(F.form(1, r5 + 5) == lf({{7, 1}}));
  // F_{2,4} = (x6, x7, x8): row [x1,x2] vs degree-4 words
  CHECK(F.form(2, 5) == lf({{5, 1}}));
  CHECK(F.form(2, 6) == lf({{6, 1}}));
  CHECK(F.form(2, 7) == lf({{7, 1}}));
  // F_{3,3} = ((0, x9), (-x9, 0)): the two degree-3 words
  CHECK(F.form(3, 4) == lf({{8, 1}}));
  REQUIRE(F.cells().size() == 3);
  CHECK(F.cells()[2].diagonal);

  // blockwise rank agrees with the generic path on random points
  PrimeField f7(7);
  LinearFormMatrix plain = F;
  plain.set_cells({});
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    std::vector<PrimeField::Elem> pt(9);
    for (auto& e : pt) e = PrimeField::Elem(rng() % 7);
    CHECK(F.rank_at(f7, pt) == plain.rank_at(f7, pt));
  }
}

TEST_CASE("lemma-sparse structure of F_12 in f_{n,3}") {
  // each variable T_iik and T_iji appears exactly once in the F_12 block
  for (unsigned n : {2u, 3u, 4u}) {
    ZLieAlgebra g = free_nilpotent(n, 3);
    auto F = reduced_commutator_matrix(g);
    const unsigned gens = n;
    HallBasis hall(n, 3);
    auto h3 = hall.words_of_length(3);
    std::map<unsigned, int> appearances;
    for (unsigned i = 0; i < gens; ++i)
      for (unsigned jc = gens; jc < F.size(); ++jc)
        for (auto [var, coef] : F.form(i, jc).terms) appearances[var]++;
    for (std::size_t w = 0; w < h3.size(); ++w) {
      // words [x_i,[x_j,x_k]] with i = j or i = k appear exactly once
      std::size_t id = h3[w];
      std::size_t a = hall.left(id);
      std::size_t bc = hall.right(id);
      std::size_t b = hall.left(bc), c = hall.right(bc);
      bool degenerate = a == b || a == c;
      if (degenerate) CHECK(appearances[unsigned(w)] == 1);
    }
  }
}

TEST_CASE("free metabelian algebras") {
  ZLieAlgebra m2 = free_metabelian_2(2);
  CHECK(m2.dim() == 3);  // Heisenberg
  CHECK(validate(m2).ok);

  ZLieAlgebra m4 = free_metabelian_2(4);
  CHECK(m4.dim() == 2 + 1 + 2 + 3);
  CHECK(validate(m4).ok);
  CHECK(nilpotency_class(m4) == 4);
  // reduced matrix: F = ((T1, T2), (T2, T3)) against the degree-4 words
  auto F = reduced_commutator_matrix(m4);
  REQUIRE(F.size() == 5);
  REQUIRE(F.vars() == 3);
  const unsigned c3 = 3;  // first degree-3 row: x1, x2, y2_1
  CHECK(F.form(0, c3 + 0) == lf({{0, 1}}));
  CHECK(F.form(0, c3 + 1) == lf({{1, 1}}));
  CHECK(F.form(1, c3 + 0) == lf({{1, 1}}));
  CHECK(F.form(1, c3 + 1) == lf({{2, 1}}));

  // metabelian identity: [[g,g],[g,g]] = 0
  for (unsigned c : {3u, 5u, 6u}) {
    ZLieAlgebra m = free_metabelian_2(c);
    CHECK(validate(m).ok);
    IntMatrix comm = commutator_subalgebra(m);
    for (std::size_t i = 0; i < comm.rows(); ++i)
      for (std::size_t j = i + 1; j < comm.rows(); ++j) {
        auto br = m.bracket(comm.row(i), comm.row(j));
        CHECK(std::all_of(br.begin(), br.end(),
                          [](const Int& x) { return x == 0; }));
      }
  }
}

TEST_CASE("named example algebras") {
  CHECK(binary_quadratic_algebra().dim() == 6);
  CHECK(validate(binary_quadratic_algebra()).ok);
  CHECK(nilpotency_class(binary_quadratic_algebra()) == 2);
  CHECK(adapted_basis(binary_quadratic_algebra()).l1 == 2);

  ZLieAlgebra l = lee_algebra();
  CHECK(l.dim() == 8);
  CHECK(validate(l).ok);
  // [v2,v4] = v8
  CHECK(l.basis_bracket(1, 3)[7] == 1);

  CHECK(validate(binary_cubic_algebra()).ok);
  CHECK(validate(elliptic_algebra(1)).ok);
  CHECK_THROWS_AS(elliptic_algebra(0), input_error);

  CHECK(heisenberg_algebra(1).dim() == 3);
  CHECK(heisenberg_algebra(2).dim() == 5);
  CHECK(unitriangular_algebra(4).dim() == 6);
  CHECK(abelian_algebra(3).dim() == 3);

  CHECK(example_algebra("lee").dim() == 8);
  CHECK(example_algebra("heisenberg:2").dim() == 5);
  CHECK_THROWS_AS(example_algebra("nonsense"), input_error);
  CHECK_THROWS_AS(example_algebra("heisenberg"), input_error);
}

TEST_CASE("companion algebra") {
  // g = T^3 - T - 1: coefficients (-1, -1, 0, 1)
  std::vector<Int> g{-1, -1, 0, 1};
  ZLieAlgebra a = companion_algebra(g);
  CHECK(a.dim() == 8);
  CHECK(validate(a).ok);
  auto basis = adapted_basis(a);
  CHECK(basis.l1 == 2);
  CHECK(basis.l2() == 0);
  auto F = commutator_matrix(a, basis);

  // det of the upper block M(T1,T2) is the homogenized polynomial:
  // evaluate both on all of F_7^2
  PrimeField f7(7);
  for (unsigned t1 = 0; t1 < 7; ++t1)
    for (unsigned t2 = 0; t2 < 7; ++t2) {
      FieldMatrix<PrimeField> mblock(f7, 3, 3);
      auto spec = F.specialize(f7, {t1, t2});
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mblock.at(i, j) = spec.at(i, 3 + j);
      // homogenized: T1^3 - T1 T2^2 - T2^3
      std::uint64_t expect =
          (std::uint64_t(t1) * t1 % 7 * t1 + 7 * 7 -
           std::uint64_t(t1) * t2 % 7 * t2 % 7 + 7 * 7 -
           std::uint64_t(t2) * t2 % 7 * t2 % 7) %
          7;
      CHECK(std::uint64_t(mblock.det()) == expect % 7);
    }

  // rank-drop points on the projective line match the root count
  for (unsigned p : {5u, 7u, 11u, 23u}) {
    PrimeField fp(p);
    unsigned drops = 0;
    // [1:0]
    {
      auto s = F.specialize(fp, {1, 0});
      if (s.rank() < 6) ++drops;
    }
    for (unsigned x = 0; x < p; ++x) {
      auto s = F.specialize(fp, {x, 1});
      if (s.rank() < 6) ++drops;
    }
    CHECK(drops == count_roots({-1, -1, 0, 1}, fp));
  }
}
