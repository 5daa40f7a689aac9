#include "doctest.h"
#include "faithdim/bch.hpp"
#include "faithdim/commutator.hpp"
#include "faithdim/engine.hpp"
#include "faithdim/lie.hpp"

using namespace faithdim;

namespace {

std::vector<Int> unit(std::size_t d, std::size_t k, long long c = 1) {
  std::vector<Int> v(d, 0);
  v[k] = c;
  return v;
}

ZLieAlgebra heisenberg3() {
  // basis e12, e13, e23 with [e12, e23] = e13
  ZLieAlgebra g(3);
  g.set_bracket(0, 2, unit(3, 1));
  return g;
}

ZLieAlgebra heisenberg5() {
  // basis x1, x2, y1, y2, z with [x1,y1] = [x2,y2] = z
  ZLieAlgebra g(5);
  g.set_bracket(0, 2, unit(5, 4));
  g.set_bracket(1, 3, unit(5, 4));
  return g;
}

ZLieAlgebra free23() {
  // basis x1, x2, u = [x1,x2], A = [x1,u], B = [x2,u]
  ZLieAlgebra g(5);
  g.set_bracket(0, 1, unit(5, 2));
  g.set_bracket(0, 2, unit(5, 3));
  g.set_bracket(1, 2, unit(5, 4));
  return g;
}

ZLieAlgebra binary_quadratic() {
  ZLieAlgebra g(6);
  g.set_bracket(0, 1, unit(6, 4));
  g.set_bracket(2, 3, unit(6, 4));
  g.set_bracket(0, 3, unit(6, 5));
  g.set_bracket(1, 2, unit(6, 5));
  return g;
}

}  // namespace

TEST_CASE("class-2 multiplication: x*y = x + y + [x,y]/2") {
  PrimeField f5(5);
  auto gq = reduce_mod(heisenberg3(), f5);
  BchGroup<PrimeField> grp(gq);
  CHECK(grp.nilpotency_class() == 2);
  std::vector<PrimeField::Elem> e12{1, 0, 0}, e23{0, 0, 1};
  auto prod = grp.multiply(e12, e23);
  CHECK(prod == std::vector<PrimeField::Elem>{1, 3, 1});  // 1/2 = 3 mod 5
  // x * 0 = x
  CHECK(grp.multiply(e12, grp.identity()) == e12);
}

TEST_CASE("class-3 multiplication matches the explicit formula") {
  PrimeField f7(7);
  auto gq = reduce_mod(free23(), f7);
  BchGroup<PrimeField> grp(gq);
  CHECK(grp.nilpotency_class() == 3);
  auto half = f7.inv(2), twelfth = f7.inv(f7.from_int(12));
  std::uint64_t st = 5;
  auto next = [&] {
    return st = st * 6364136223846793005ull + 1442695040888963407ull;
  };
  for (int t = 0; t < 200; ++t) {
    std::vector<PrimeField::Elem> x(5), y(5);
    for (auto& e : x) e = PrimeField::Elem(next() % 7);
    for (auto& e : y) e = PrimeField::Elem(next() % 7);
    auto xy = gq.bracket(x, y);
    auto xxy = gq.bracket(x, xy);
    auto yyx = gq.bracket(y, gq.bracket(y, x));
    std::vector<PrimeField::Elem> expect(5);
    for (int i = 0; i < 5; ++i)
      expect[i] = f7.add(
          f7.add(f7.add(x[i], y[i]), f7.mul(half, xy[i])),
          f7.mul(twelfth, f7.add(xxy[i], yyx[i])));
    CHECK(grp.multiply(x, y) == expect);
  }
}

TEST_CASE("group axioms hold; corrupted constants are caught") {
  PrimeField f5(5);
  auto gq = reduce_mod(heisenberg3(), f5);
  BchGroup<PrimeField> grp(gq);
  CHECK(grp.axioms_check(1000).ok);

  PrimeField f7(7);
  auto gq2 = reduce_mod(free23(), f7);
  CHECK(BchGroup<PrimeField>(gq2).axioms_check(1000).ok);

  // Deliberate Jacobi violation that keeps the series descending:
  // [v1,v2]=v4, [v1,v3]=v5, [v1,v4]=v6, [v2,v5]=v6 fails Jacobi on (1,2,3).
  ZLieAlgebra broken(6);
  broken.set_bracket(0, 1, unit(6, 3));
  broken.set_bracket(0, 2, unit(6, 4));
  broken.set_bracket(0, 3, unit(6, 5));
  broken.set_bracket(1, 4, unit(6, 5));
  CHECK_FALSE(validate(broken).ok);
  FqLieAlgebra<PrimeField> gq3(broken, f5);  // bypass the validating reducer
  BchGroup<PrimeField> bad(gq3);
  auto rep = bad.axioms_check(1000);
  CHECK_FALSE(rep.ok);
  CHECK(rep.message.find("associativity") != std::string::npos);
}

TEST_CASE("BCH refuses p <= c") {
  PrimeField f3(3);
  auto gq = FqLieAlgebra<PrimeField>(free23(), f3);  // class 3 at p = 3
  CHECK_THROWS_AS(BchGroup<PrimeField>{gq}, refusal);
}

TEST_CASE("stabilizer sizes") {
  ZLieAlgebra g = binary_quadratic();
  auto basis = adapted_basis(g);
  auto F = commutator_matrix(g, basis);
  CharacterDims dims{basis.l1, basis.l2(), basis.l3(), basis.m()};
  PrimeField f7(7);
  std::vector<PrimeField::Elem> zero(dims.total(), 0);
  CHECK(stabilizer_size(F, f7, dims, zero) == checked_pow(7, 6).value());
  std::vector<PrimeField::Elem> a(dims.total(), 0);
  a[0] = 1;  // a' = (1,0): rank 4
  CHECK(stabilizer_size(F, f7, dims, a) == 49);

  // Heisenberg_3: nonzero central character has stabilizer = centre
  ZLieAlgebra h = heisenberg3();
  auto hb = adapted_basis(h);
  auto Fh = commutator_matrix(h, hb);
  CharacterDims hd{hb.l1, hb.l2(), hb.l3(), hb.m()};
  PrimeField f5(5);
  std::vector<PrimeField::Elem> c(hd.total(), 0);
  c[0] = 2;
  CHECK(stabilizer_size(Fh, f5, hd, c) == 5);
}

TEST_CASE("irreducible dimensions") {
  ZLieAlgebra h5 = heisenberg5();
  auto b = adapted_basis(h5);
  auto F = commutator_matrix(h5, b);
  CharacterDims dims{b.l1, b.l2(), b.l3(), b.m()};
  PrimeField f3(3);
  std::vector<PrimeField::Elem> zero(dims.total(), 0);
  CHECK(irrep_dimension(F, f3, dims, zero) == 1);
  std::vector<PrimeField::Elem> a(dims.total(), 0);
  a[0] = 1;
  CHECK(irrep_dimension(F, f3, dims, a) == 9);  // p^k with k = 2
}

TEST_CASE("orbit census") {
  // Heisenberg_3(F_3): 9 linear characters and 2 of dimension 3
  ZLieAlgebra h = heisenberg3();
  auto b = adapted_basis(h);
  auto F = commutator_matrix(h, b);
  CharacterDims dims{b.l1, b.l2(), b.l3(), b.m()};
  PrimeField f3(3);
  auto census = orbit_census(F, f3, dims);
  REQUIRE(census.size() == 2);
  CHECK(census.at(1) == 9);
  CHECK(census.at(3) == 2);
  std::uint64_t sq = 0;
  for (auto [dim, count] : census) sq += count * dim * dim;
  CHECK(sq == 27);

  // abelian rank 2: all characters linear
  ZLieAlgebra ab(2);
  auto ba = adapted_basis(ab);
  auto Fa = commutator_matrix(ab, ba);
  CharacterDims da{ba.l1, ba.l2(), ba.l3(), ba.m()};
  auto censa = orbit_census(Fa, f3, da);
  REQUIRE(censa.size() == 1);
  CHECK(censa.at(1) == 9);

  // binary quadratic at q = 3: sum of squares = 3^6
  ZLieAlgebra g = binary_quadratic();
  auto bg = adapted_basis(g);
  auto Fg = commutator_matrix(g, bg);
  CharacterDims dg{bg.l1, bg.l2(), bg.l3(), bg.m()};
  auto censg = orbit_census(Fg, f3, dg);
  std::uint64_t total = 0;
  for (auto [dim, count] : censg) total += count * dim * dim;
  CHECK(total == 729);
}

TEST_CASE("group centre equals the Lie centre as coordinate sets") {
  PrimeField f3(3);
  {
    auto gq = reduce_mod(heisenberg3(), f3);
    BchGroup<PrimeField> grp(gq);
    auto zc = grp.centre_elements();
    CHECK(zc.size() == 3);  // q^1
    auto zmod = center_mod(gq);
    CHECK(zmod.size() == 1);
  }
  {
    auto gq = reduce_mod(binary_quadratic(), f3);
    BchGroup<PrimeField> grp(gq);
    auto zc = grp.centre_elements();
    CHECK(zc.size() == 9);  // q^2
    // every centre element lies in the span of the Lie centre
    SpanTracker<PrimeField> span(f3, 6);
    for (auto& v : center_mod(gq)) span.try_extend(v);
    for (auto& v : zc) CHECK(span.contains(v));
  }
}

TEST_CASE("direct faithful search equals the engine value") {
  PrimeField f3(3);
  {
    ZLieAlgebra h = heisenberg3();
    auto b = adapted_basis(h);
    auto F = commutator_matrix(h, b);
    CharacterDims dims{b.l1, b.l2(), b.l3(), b.m()};
    CHECK(direct_min_faithful(F, f3, dims) == 3);
    CHECK(minimize(F, f3, b.l1, b.l2(), 1).value == 3);
  }
  {
    ZLieAlgebra g = binary_quadratic();
    auto b = adapted_basis(g);
    auto F = commutator_matrix(g, b);
    CharacterDims dims{b.l1, b.l2(), b.l3(), b.m()};
    CHECK(direct_min_faithful(F, f3, dims) == 18);
    CHECK(minimize(F, f3, b.l1, b.l2(), 1).value == 18);
  }
  {
    // abelian: the search must return l2 * f
    ZLieAlgebra ab(3);
    auto b = adapted_basis(ab);
    auto F = commutator_matrix(ab, b);
    CharacterDims dims{b.l1, b.l2(), b.l3(), b.m()};
    CHECK(direct_min_faithful(F, f3, dims) == 3);
  }
}
