#include "faithdim/field.hpp"

#include <algorithm>
#include <numeric>

namespace faithdim {

bool is_prime(std::uint64_t n) {
  if (n > (1ull << 20))
    throw input_error("primality test supports inputs up to 2^20, got " +
                      std::to_string(n));
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int legendre_symbol(std::int64_t a, std::uint32_t p) {
  if (p == 2 || !is_prime(p))
    throw input_error("legendre_symbol requires an odd prime, got " +
                      std::to_string(p));
  PrimeField fp(p);
  PrimeField::Elem r = fp.from_int(a);
  if (r == 0) return 0;
  return fp.pow(r, (p - 1) / 2) == 1 ? 1 : -1;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw input_error(std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw internal_error("inverse of zero");
  // Extended Euclid; p is prime so the gcd is 1 for canonical residues.
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw internal_error("inv: non-canonical residue");
  return Elem(t < 0 ? t + p_ : t);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& m, const PrimeField& fp) {
  a = poly_trim(std::move(a));
  const std::size_t dm = m.size() - 1;  // m monic
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i)
        a[shift + i] = fp.sub(a[shift + i], fp.mul(lead, m[i]));
    }
    a.pop_back();
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m,
                 const PrimeField& fp) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = fp.add(prod[i + j], fp.mul(a[i], b[j]));
  }
  return poly_mod(std::move(prod), m, fp);
}

Poly poly_powmod(Poly a, std::uint64_t e, const Poly& m, const PrimeField& fp) {
  Poly r{1};
  a = poly_mod(std::move(a), m, fp);
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, m, fp);
    a = poly_mulmod(a, a, m, fp);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& fp) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    std::uint32_t linv = fp.inv(b.back());
    Poly bm = b;
    for (auto& c : bm) c = fp.mul(c, linv);
    a = poly_mod(std::move(a), bm, fp);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly,
                          std::uint32_t p) {
  PrimeField fp(p);
  const std::size_t f = poly.size() - 1;
  if (poly.back() != 1) throw internal_error("modulus must be monic");
  if (f == 0) return false;
  if (f == 1) return true;
  // x^(p^f) == x mod poly, and gcd(x^(p^(f/r)) - x, poly) == 1 for prime r|f.
  auto xq_minus_x = [&](std::uint64_t e) {
    Poly xq = poly_powmod(Poly{0, 1}, e, poly, fp);
    Poly d = xq;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = fp.sub(d[1], 1);
    return poly_trim(std::move(d));
  };
  auto ppow = [&](std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= p;
    return r;
  };
  if (!xq_minus_x(ppow(std::uint32_t(f))).empty()) return false;
  for (std::size_t r = 2; r <= f; ++r) {
    if (f % r != 0) continue;
    bool rprime = true;
    for (std::size_t d = 2; d * d <= r; ++d)
      if (r % d == 0) rprime = false;
    if (!rprime) continue;
    Poly g = poly_gcd(poly, xq_minus_x(ppow(std::uint32_t(f / r))), fp);
    if (poly_trim(g).size() != 1) return false;
  }
  return true;
}

ExtensionField::ExtensionField(std::uint32_t p, std::uint32_t f)
    : base_(p), f_(f) {
  if (p == 2) throw input_error("extension fields require an odd prime");
  if (f < 1) throw input_error("extension degree must be >= 1");
  q_ = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    if (q_ > (1ull << 40)) throw refusal("field too large: p^f exceeds 2^40");
    q_ *= p;
  }
  // Lexicographically least monic irreducible; the tuple (c_0, ..., c_{f-1})
  // is compared constant-term first, so c_0 is the most significant digit of
  // the enumeration counter.
  std::vector<std::uint32_t> cand(f + 1, 0);
  cand[f] = 1;
  for (std::uint64_t code = 0; code < q_; ++code) {
    std::uint64_t rem = code;
    for (std::uint32_t i = f; i-- > 0;) {
      cand[i] = std::uint32_t(rem % p);
      rem /= p;
    }
    if (is_irreducible_mod_p(cand, p)) {
      modulus_ = cand;
      return;
    }
  }
  throw internal_error("no irreducible polynomial found");
}

ExtensionField::Elem ExtensionField::one() const {
  Elem e(f_, 0);
  e[0] = 1;
  return e;
}

bool ExtensionField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
  Elem r(f_);
  for (std::uint32_t i = 0; i < f_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
  Elem r(f_);
  for (std::uint32_t i = 0; i < f_; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtensionField::Elem ExtensionField::neg(const Elem& a) const {
  Elem r(f_);
  for (std::uint32_t i = 0; i < f_; ++i) r[i] = base_.neg(a[i]);
  return r;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
  Poly prod(2 * f_ - 1, 0);
  for (std::uint32_t i = 0; i < f_; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < f_; ++j)
      prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
  }
  Poly red = poly_mod(std::move(prod), modulus_, base_);
  red.resize(f_, 0);
  return red;
}

ExtensionField::Elem ExtensionField::inv(const Elem& a) const {
  if (is_zero(a)) throw internal_error("inverse of zero");
  return pow(a, q_ - 2);
}

ExtensionField::Elem ExtensionField::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

ExtensionField::Elem ExtensionField::from_int(std::int64_t v) const {
  Elem r(f_, 0);
  r[0] = base_.from_int(v);
  return r;
}

std::uint64_t ExtensionField::encode(const Elem& a) const {
  std::uint64_t idx = 0;
  for (std::uint32_t i = f_; i-- > 0;) idx = idx * p() + a[i];
  return idx;
}

ExtensionField::Elem ExtensionField::decode(std::uint64_t idx) const {
  Elem a(f_);
  for (std::uint32_t i = 0; i < f_; ++i) {
    a[i] = std::uint32_t(idx % p());
    idx /= p();
  }
  return a;
}

std::string ExtensionField::to_string(const Elem& a) const {
  return std::to_string(encode(a));
}

ExtensionField::Elem ExtensionField::power_basis_elem(std::uint32_t i) const {
  if (i >= f_) throw internal_error("power basis index out of range");
  Elem e(f_, 0);
  e[i] = 1;
  return e;
}

ExtensionField make_extension_field(std::uint32_t p, std::uint32_t f) {
  if (!is_prime(p)) throw input_error(std::to_string(p) + " is not prime");
  return ExtensionField(p, f);
}

template <class F>
std::size_t count_roots(const std::vector<std::int64_t>& coeffs,
                        const F& field) {
  std::vector<typename F::Elem> c;
  bool all_zero = true;
  for (auto v : coeffs) {
    c.push_back(field.from_int(v));
    if (!field.is_zero(c.back())) all_zero = false;
  }
  if (all_zero)
    throw input_error("polynomial vanishes identically mod " +
                      std::to_string(field.p()));
  std::size_t n = 0;
  for (std::uint64_t idx = 0; idx < field.q(); ++idx) {
    typename F::Elem x = field.decode(idx);
    typename F::Elem acc = field.zero();
    for (std::size_t i = c.size(); i-- > 0;)
      acc = field.add(field.mul(acc, x), c[i]);
    if (field.is_zero(acc)) ++n;
  }
  return n;
}

template std::size_t count_roots<PrimeField>(const std::vector<std::int64_t>&,
                                             const PrimeField&);
template std::size_t count_roots<ExtensionField>(
    const std::vector<std::int64_t>&, const ExtensionField&);

}  // namespace faithdim
