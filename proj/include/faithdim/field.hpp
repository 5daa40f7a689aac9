#ifndef FAITHDIM_FIELD_HPP
#define FAITHDIM_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "faithdim/errors.hpp"

namespace faithdim {

/// Deterministic trial-division primality; inputs capped at 2^20.
bool is_prime(std::uint64_t n);

/// Legendre symbol by Euler's criterion; p must be an odd prime.
int legendre_symbol(std::int64_t a, std::uint32_t p);

/// Z/p for a prime p.  Elements are canonical least residues.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return 1; }
  std::uint64_t q() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    return Elem(r < 0 ? r + p_ : r);
  }

  std::uint64_t encode(Elem a) const { return a; }
  Elem decode(std::uint64_t idx) const { return Elem(idx); }
  std::string to_string(Elem a) const { return std::to_string(a); }

 private:
  std::uint32_t p_;
};

/// F_{p^f} as F_p[T] modulo the lexicographically least monic irreducible
/// polynomial of degree f (coefficients compared from the constant term up).
/// Elements are coefficient vectors of length f.
class ExtensionField {
 public:
  using Elem = std::vector<std::uint32_t>;

  ExtensionField(std::uint32_t p, std::uint32_t f);

  std::uint32_t p() const { return base_.p(); }
  std::uint32_t f() const { return f_; }
  std::uint64_t q() const { return q_; }
  const PrimeField& base() const { return base_; }
  /// Monic modulus, length f+1, constant term first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem(f_, 0); }
  Elem one() const;
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem from_int(std::int64_t v) const;
  Elem frobenius(const Elem& a) const { return pow(a, p()); }

  std::uint64_t encode(const Elem& a) const;
  Elem decode(std::uint64_t idx) const;
  std::string to_string(const Elem& a) const;

  /// The i-th power basis element T^i, 0 <= i < f (an F_p-basis of F_q).
  Elem power_basis_elem(std::uint32_t i) const;

 private:
  PrimeField base_;
  std::uint32_t f_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
};

ExtensionField make_extension_field(std::uint32_t p, std::uint32_t f);

/// Number of distinct roots of an integer polynomial in F (full enumeration).
/// Throws input_error if the polynomial vanishes identically mod char(F).
template <class F>
std::size_t count_roots(const std::vector<std::int64_t>& coeffs, const F& field);

/// True iff the monic polynomial (constant term first, length deg+1,
/// leading coefficient 1) is irreducible over F_p.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly,
                          std::uint32_t p);

}  // namespace faithdim

#endif
