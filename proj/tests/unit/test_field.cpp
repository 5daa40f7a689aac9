#include <set>

#include "doctest.h"
#include "faithdim/field.hpp"
#include "faithdim/fieldmat.hpp"

using namespace faithdim;

namespace {

// Independent oracle: quadratic residues by direct square enumeration.
int legendre_oracle(long long a, unsigned p) {
  long long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (unsigned x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

// Independent oracle: irreducibility by trial division over F_p.
bool irreducible_oracle(const std::vector<std::uint32_t>& poly, unsigned p) {
  PrimeField fp(p);
  const std::size_t deg = poly.size() - 1;
  // enumerate monic divisors of degree 1..deg/2
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::uint32_t> div(d + 1, 0);
      std::uint64_t rem = code;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = rem % p;
        rem /= p;
      }
      div[d] = 1;
      // long-divide poly by div, check zero remainder
      std::vector<std::uint32_t> r = poly;
      while (r.size() > d) {
        std::uint32_t lead = r.back();
        std::size_t shift = r.size() - 1 - d;
        if (lead != 0)
          for (std::size_t i = 0; i <= d; ++i)
            r[shift + i] = fp.sub(r[shift + i], fp.mul(lead, div[i]));
        r.pop_back();
      }
      bool zero = true;
      for (auto c : r) zero &= (c == 0);
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(1048573));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(is_prime((1ull << 20) + 1), input_error);
}

TEST_CASE("legendre symbol basics and oracle agreement") {
  CHECK(legendre_symbol(0, 7) == 0);
  CHECK(legendre_symbol(4, 11) == 1);
  CHECK(legendre_symbol(59, 23) == legendre_oracle(59, 23));
  CHECK_THROWS_AS(legendre_symbol(3, 8), input_error);
  CHECK_THROWS_AS(legendre_symbol(3, 15), input_error);
  for (unsigned p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u,
                     43u, 47u, 53u, 59u, 61u, 67u, 71u, 73u, 79u, 83u, 89u, 97u})
    for (unsigned a = 0; a < p; ++a)
      CHECK(legendre_symbol(a, p) == legendre_oracle(a, p));
}

TEST_CASE("extension field modulus is the lex-least irreducible") {
  ExtensionField f9 = make_extension_field(3, 2);
  // Oracle: first (c0,c1) in lex order with T^2+c1*T+c0 irreducible.
  std::vector<std::uint32_t> expect;
  for (std::uint32_t c0 = 0; c0 < 3 && expect.empty(); ++c0)
    for (std::uint32_t c1 = 0; c1 < 3 && expect.empty(); ++c1)
      if (irreducible_oracle({c0, c1, 1}, 3)) expect = {c0, c1, 1};
  CHECK(f9.modulus() == expect);
  CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // T^2 + 1

  ExtensionField f5 = make_extension_field(5, 1);
  CHECK(f5.modulus() == std::vector<std::uint32_t>{0, 1});  // T

  CHECK_THROWS_AS(make_extension_field(4, 1), input_error);
}

TEST_CASE("extension field arithmetic laws") {
  for (auto [p, f] : {std::pair<unsigned, unsigned>{3, 2}, {3, 4}, {5, 2}}) {
    ExtensionField k = make_extension_field(p, f);
    CHECK(irreducible_oracle(k.modulus(), p));
    const std::uint64_t q = k.q();
    // x^(q-1) == 1 for all nonzero x; Frobenius is additive/multiplicative.
    for (std::uint64_t i = 1; i < q; ++i) {
      auto x = k.decode(i);
      CHECK(k.pow(x, q - 1) == k.one());
      CHECK(k.encode(k.decode(i)) == i);
    }
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(q, 12); ++i)
      for (std::uint64_t j = 0; j < std::min<std::uint64_t>(q, 12); ++j) {
        auto x = k.decode(i), y = k.decode(j);
        CHECK(k.frobenius(k.add(x, y)) ==
              k.add(k.frobenius(x), k.frobenius(y)));
        CHECK(k.frobenius(k.mul(x, y)) ==
              k.mul(k.frobenius(x), k.frobenius(y)));
        CHECK(k.mul(x, y) == k.mul(y, x));
        if (!k.is_zero(y)) CHECK(k.mul(k.mul(x, y), k.inv(y)) == x);
      }
    // associativity spot check
    auto a = k.decode(q - 1), b = k.decode(q / 2), c = k.decode(1 + q / 3);
    CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
  }
}

TEST_CASE("count_roots") {
  PrimeField f5(5);
  CHECK(count_roots({1, 0, 1}, f5) == 2);  // T^2 + 1 over F_5
  PrimeField f23(23);
  CHECK(count_roots({-1, -1, 0, 1}, f23) == 2);  // T^3 - T - 1 over F_23
  PrimeField f7(7);
  CHECK(count_roots({0, 1}, f7) == 1);  // T
  CHECK_THROWS_AS(count_roots({7, 14}, f7), input_error);
  ExtensionField f9 = make_extension_field(3, 2);
  CHECK(count_roots({1, 0, 1}, f9) == 2);  // -1 is a square in F_9
  // degree bound property
  for (std::int64_t c = 1; c < 7; ++c)
    CHECK(count_roots({c, 3, 1, 2}, f7) <= 3);
}

TEST_CASE("field matrix rank and kernel") {
  PrimeField f7(7);
  FieldMatrix<PrimeField> id(f7, 4, 4);
  for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
  CHECK(id.rank() == 4);
  CHECK(id.kernel_basis().empty());

  FieldMatrix<PrimeField> z(f7, 3, 5);
  CHECK(z.rank() == 0);
  CHECK(z.kernel_basis().size() == 5);

  PrimeField f3(3);
  FieldMatrix<PrimeField> z2(f3, 2, 2);
  CHECK(z2.kernel_basis().size() == 2);

  // random rank-nullity over F_q
  ExtensionField f9 = make_extension_field(3, 2);
  std::uint64_t seed = 42;
  auto next = [&] { return seed = seed * 6364136223846793005ull + 1442695040888963407ull; };
  for (int t = 0; t < 25; ++t) {
    std::size_t r = 1 + next() % 5, c = 1 + next() % 5;
    FieldMatrix<ExtensionField> m(f9, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f9.decode(next() % 9);
    auto ker = m.kernel_basis();
    CHECK(m.rank() + ker.size() == c);
    for (auto& v : ker)
      for (std::size_t i = 0; i < r; ++i) {
        auto acc = f9.zero();
        for (std::size_t j = 0; j < c; ++j)
          acc = f9.add(acc, f9.mul(m.at(i, j), v[j]));
        CHECK(f9.is_zero(acc));
      }
  }
}

TEST_CASE("span tracker") {
  PrimeField f5(5);
  SpanTracker<PrimeField> span(f5, 3);
  CHECK(span.try_extend({1, 2, 3}));
  CHECK_FALSE(span.try_extend({2, 4, 1}));
  CHECK(span.try_extend({0, 1, 0}));
  CHECK(span.contains({1, 3, 3}));
  CHECK_FALSE(span.contains({0, 0, 1}));
  CHECK(span.try_extend({0, 0, 1}));
  CHECK(span.full());
}
