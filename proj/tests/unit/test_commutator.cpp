#include <random>

#include "doctest.h"
#include "faithdim/commutator.hpp"
#include "faithdim/lie.hpp"

using namespace faithdim;

namespace {

std::vector<Int> unit(std::size_t d, std::size_t k, long long c = 1) {
  std::vector<Int> v(d, 0);
  v[k] = c;
  return v;
}

// [v1,v2] = [v3,v4] = v5, [v1,v4] = [v2,v3] = v6
ZLieAlgebra binary_quadratic() {
  ZLieAlgebra g(6);
  g.set_bracket(0, 1, unit(6, 4));
  g.set_bracket(2, 3, unit(6, 4));
  g.set_bracket(0, 3, unit(6, 5));
  g.set_bracket(1, 2, unit(6, 5));
  return g;
}

// [v1,v4]=[v2,v5]=[v3,v6]=v7, [v1,v5]=[v2,v6]=v8, [v1,v6]=a v9,
// [v2,v4]=[v3,v4]=v9
ZLieAlgebra elliptic(long long a) {
  ZLieAlgebra g(9);
  g.set_bracket(0, 3, unit(9, 6));
  g.set_bracket(1, 4, unit(9, 6));
  g.set_bracket(2, 5, unit(9, 6));
  g.set_bracket(0, 4, unit(9, 7));
  g.set_bracket(1, 5, unit(9, 7));
  g.set_bracket(0, 5, unit(9, 8, a));
  g.set_bracket(1, 3, unit(9, 8));
  g.set_bracket(2, 3, unit(9, 8));
  return g;
}

// [v1,v4]=[v2,v5]=v6, [v1,v5]=v7, [v3,v4]=2v7, [v2,v4]=[v3,v5]=v8
ZLieAlgebra lee() {
  ZLieAlgebra g(8);
  g.set_bracket(0, 3, unit(8, 5));
  g.set_bracket(1, 4, unit(8, 5));
  g.set_bracket(0, 4, unit(8, 6));
  g.set_bracket(2, 3, unit(8, 6, 2));
  g.set_bracket(1, 3, unit(8, 7));
  g.set_bracket(2, 4, unit(8, 7));
  return g;
}

LinearForm lf(std::initializer_list<std::pair<std::uint32_t, std::int64_t>> l) {
  LinearForm f;
  for (auto& t : l) f.terms.push_back(t);
  return f;
}

}  // namespace

TEST_CASE("adapted basis dimensions") {
  auto b = adapted_basis(binary_quadratic());
  CHECK(b.l1 == 2);
  CHECK(b.l2() == 0);
  CHECK(b.l3() == 4);
  CHECK(b.m() == 2);
  CHECK(b.n() == 4);

  auto e = adapted_basis(elliptic(1));
  CHECK(e.l1 == 3);
  CHECK(e.l2() == 0);
  CHECK(e.m() == 3);
  CHECK(e.n() == 6);
  CHECK(e.l3() == 6);

  auto ab = adapted_basis(ZLieAlgebra(3));
  CHECK(ab.l1 == 0);
  CHECK(ab.m() == 0);
  CHECK(ab.l2() == 3);
  CHECK(ab.n() == 0);
  CHECK(ab.l3() == 0);
}

TEST_CASE("commutator matrix of the binary quadratic algebra") {
  ZLieAlgebra g = binary_quadratic();
  auto b = adapted_basis(g);
  auto F = commutator_matrix(g, b);
  REQUIRE(F.size() == 4);
  REQUIRE(F.vars() == 2);
  // ( 0    T1   0    T2 )
  // (-T1   0    T2   0  )
  // ( 0   -T2   0    T1 )
  // (-T2   0   -T1   0  )
  CHECK(F.form(0, 1) == lf({{0, 1}}));
  CHECK(F.form(0, 2) == lf({}));
  CHECK(F.form(0, 3) == lf({{1, 1}}));
  CHECK(F.form(1, 2) == lf({{1, 1}}));
  CHECK(F.form(1, 3) == lf({}));
  CHECK(F.form(2, 3) == lf({{0, 1}}));
  CHECK(F.form(1, 0) == lf({{0, -1}}));
}

TEST_CASE("commutator matrix of the elliptic-curve algebra") {
  ZLieAlgebra g = elliptic(5);
  auto b = adapted_basis(g);
  auto F = commutator_matrix(g, b);
  REQUIRE(F.size() == 6);
  REQUIRE(F.vars() == 3);
  // upper-right block M = [[T1,T2,aT3],[T3,T1,T2],[T3,0,T1]]
  CHECK(F.form(0, 3) == lf({{0, 1}}));
  CHECK(F.form(0, 4) == lf({{1, 1}}));
  CHECK(F.form(0, 5) == lf({{2, 5}}));
  CHECK(F.form(1, 3) == lf({{2, 1}}));
  CHECK(F.form(1, 4) == lf({{0, 1}}));
  CHECK(F.form(1, 5) == lf({{1, 1}}));
  CHECK(F.form(2, 3) == lf({{2, 1}}));
  CHECK(F.form(2, 4) == lf({}));
  CHECK(F.form(2, 5) == lf({{0, 1}}));
  // v-v block vanishes
  CHECK(F.form(0, 1) == lf({}));
  CHECK(F.form(1, 2) == lf({}));
}

TEST_CASE("commutator matrix of the Lee algebra") {
  ZLieAlgebra g = lee();
  auto b = adapted_basis(g);
  auto F = commutator_matrix(g, b);
  REQUIRE(F.size() == 5);
  REQUIRE(F.vars() == 3);
  // M = [[T1,T2],[T3,T1],[2T2,T3]]
  CHECK(F.form(0, 3) == lf({{0, 1}}));
  CHECK(F.form(0, 4) == lf({{1, 1}}));
  CHECK(F.form(1, 3) == lf({{2, 1}}));
  CHECK(F.form(1, 4) == lf({{0, 1}}));
  CHECK(F.form(2, 3) == lf({{1, 2}}));
  CHECK(F.form(2, 4) == lf({{2, 1}}));
}

TEST_CASE("specialization ranks and skew symmetry") {
  ZLieAlgebra g = binary_quadratic();
  auto b = adapted_basis(g);
  auto F = commutator_matrix(g, b);

  PrimeField f5(5);
  CHECK(F.rank_at(f5, {0, 0}) == 0);
  // det F = (T1^2+T2^2)^2: at (1,0) it is 1, so full rank 4
  CHECK(F.rank_at(f5, {1, 0}) == 4);
  // 2^2 = -1 mod 5, so (2,1) is a rank-2 point
  CHECK(F.rank_at(f5, {2, 1}) == 2);
  auto spec = F.specialize(f5, {2, 1});
  CHECK(spec.rank() == 2);
  CHECK(spec.kernel_basis().size() == 2);
  // kernel vectors are annihilated
  for (auto& v : spec.kernel_basis())
    for (std::size_t i = 0; i < 4; ++i) {
      PrimeField::Elem acc = 0;
      for (std::size_t j = 0; j < 4; ++j)
        acc = f5.add(acc, f5.mul(spec.at(i, j), v[j]));
      CHECK(acc == 0);
    }

  PrimeField f13(13);
  // 5^2 = 25 = -1 mod 13
  CHECK(F.rank_at(f13, {5, 1}) == 2);
  CHECK(F.rank_at(f13, {1, 1}) == 4);

  CHECK_THROWS_AS(F.rank_at(f5, {1, 2, 3}), input_error);

  // skew symmetry of specializations at random points
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    std::vector<PrimeField::Elem> pt{PrimeField::Elem(rng() % 5),
                                     PrimeField::Elem(rng() % 5)};
    auto s = F.specialize(f5, pt);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(f5.add(s.at(i, j), s.at(j, i)) == 0);
    CHECK(F.rank_at(f5, pt) % 2 == 0);
  }
}

TEST_CASE("rank over an extension field") {
  ZLieAlgebra g = binary_quadratic();
  auto b = adapted_basis(g);
  auto F = commutator_matrix(g, b);
  ExtensionField f9 = make_extension_field(3, 2);
  // -1 is a square in F_9: find alpha with alpha^2 = -1
  ExtensionField::Elem alpha = f9.zero();
  for (std::uint64_t i = 1; i < 9; ++i) {
    auto x = f9.decode(i);
    if (f9.mul(x, x) == f9.from_int(-1)) {
      alpha = x;
      break;
    }
  }
  REQUIRE_FALSE(f9.is_zero(alpha));
  CHECK(F.rank_at(f9, {alpha, f9.one()}) == 2);
  CHECK(F.rank_at(f9, {f9.one(), f9.zero()}) == 4);
}

TEST_CASE("strata counts are invariant under unimodular base change") {
  std::mt19937_64 rng(99);
  ZLieAlgebra g = binary_quadratic();
  PrimeField f3(3);
  auto count_ranks = [&](const ZLieAlgebra& alg) {
    auto b = adapted_basis(alg);
    auto F = commutator_matrix(alg, b);
    std::vector<int> hist(8, 0);
    std::vector<PrimeField::Elem> pt(F.vars());
    for (unsigned x = 0; x < 3; ++x)
      for (unsigned y = 0; y < 3; ++y) {
        pt[0] = x;
        pt[1] = y;
        ++hist[F.rank_at(f3, pt)];
      }
    return hist;
  };
  auto base = count_ranks(g);
  for (int t = 0; t < 5; ++t) {
    IntMatrix u = IntMatrix::identity(6);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, 5);
    for (int s = 0; s < 18; ++s) {
      std::size_t a = pick(rng), b2 = pick(rng);
      if (a != b2) u.add_row_multiple(a, b2, coef(rng));
    }
    ZLieAlgebra h = change_basis(g, u);
    CHECK(count_ranks(h) == base);
  }
}
