#include "faithdim/lie.hpp"

#include <algorithm>

namespace faithdim {

ZLieAlgebra::ZLieAlgebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), basis_names_(std::move(basis_names)),
      brackets_(dim * dim) {
  if (basis_names_.empty()) {
    for (std::size_t i = 1; i <= dim; ++i)
      basis_names_.push_back("v" + std::to_string(i));
  }
  if (basis_names_.size() != dim)
    throw input_error("basis name count does not match dimension");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      brackets_[pair_index(i, j)].assign(dim, 0);
}

void ZLieAlgebra::set_bracket(std::size_t i, std::size_t j,
                              std::vector<Int> result) {
  if (i >= dim_ || j >= dim_ || i == j)
    throw input_error("bracket indices out of range or equal");
  if (result.size() != dim_) throw input_error("bracket result length mismatch");
  if (i > j) {
    for (auto& x : result) x = -x;
    std::swap(i, j);
  }
  brackets_[pair_index(i, j)] = result;
  for (auto& x : result) x = -x;
  brackets_[pair_index(j, i)] = std::move(result);
}

std::vector<Int> ZLieAlgebra::basis_bracket(std::size_t i,
                                            std::size_t j) const {
  if (i == j) return std::vector<Int>(dim_, 0);
  return brackets_[pair_index(i, j)];
}

std::vector<Int> ZLieAlgebra::bracket(const std::vector<Int>& x,
                                      const std::vector<Int>& y) const {
  std::vector<Int> r(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Int coef = x[i] * y[j];
      const auto& b = brackets_[pair_index(i, j)];
      for (std::size_t k = 0; k < dim_; ++k)
        if (b[k] != 0) r[k] += coef * b[k];
    }
  }
  return r;
}

void ZLieAlgebra::set_grading(std::vector<unsigned> degrees) {
  if (degrees.size() != dim_) throw input_error("grading length mismatch");
  grading_ = std::move(degrees);
}

namespace {

bool vec_is_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

ValidationReport validate(const ZLieAlgebra& g) {
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        std::vector<Int> ek(d, 0), ei(d, 0), ej(d, 0);
        ek[k] = 1;
        ei[i] = 1;
        ej[j] = 1;
        std::vector<Int> t1 = g.bracket(g.basis_bracket(i, j), ek);
        std::vector<Int> t2 = g.bracket(g.basis_bracket(j, k), ei);
        std::vector<Int> t3 = g.bracket(g.basis_bracket(k, i), ej);
        bool zero = true;
        for (std::size_t a = 0; a < d; ++a)
          if (t1[a] + t2[a] + t3[a] != 0) zero = false;
        if (!zero)
          return {false, "Jacobi identity fails on basis triple (" +
                             std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + "," +
                             std::to_string(k + 1) + ")"};
      }
  // Nilpotency: the saturated lower central series has strictly decreasing
  // rank until it reaches zero.
  IntMatrix term = IntMatrix::identity(d);
  while (true) {
    std::vector<std::vector<Int>> gen;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t r = 0; r < term.rows(); ++r) {
        std::vector<Int> ei(d, 0);
        ei[i] = 1;
        std::vector<Int> b = g.bracket(ei, term.row(r));
        if (!vec_is_zero(b)) gen.push_back(std::move(b));
      }
    if (gen.empty()) return {true, ""};
    IntMatrix next = saturate(IntMatrix::from_rows(gen, d));
    if (next.rows() >= term.rows())
      return {false, "not nilpotent: lower central series stabilizes at a "
                     "nonzero term of rank " + std::to_string(next.rows())};
    term = next;
  }
}

void validate_or_throw(const ZLieAlgebra& g) {
  ValidationReport r = validate(g);
  if (!r.ok) throw input_error(r.message);
}

std::vector<IntMatrix> lower_central_series(const ZLieAlgebra& g) {
  const std::size_t d = g.dim();
  std::vector<IntMatrix> series;
  series.push_back(hnf(IntMatrix::identity(d)).h);
  while (true) {
    const IntMatrix& prev = series.back();
    if (prev.rows() == 0) break;
    std::vector<std::vector<Int>> gen;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t r = 0; r < prev.rows(); ++r) {
        std::vector<Int> ei(d, 0);
        ei[i] = 1;
        std::vector<Int> b = g.bracket(ei, prev.row(r));
        if (!vec_is_zero(b)) gen.push_back(std::move(b));
      }
    if (gen.empty()) {
      series.push_back(IntMatrix(0, d));
      break;
    }
    IntMatrix next = saturate(IntMatrix::from_rows(gen, d));
    if (next.rows() >= prev.rows())
      throw input_error("not nilpotent: lower central series stabilizes");
    series.push_back(std::move(next));
  }
  return series;
}

IntMatrix center(const ZLieAlgebra& g) {
  const std::size_t d = g.dim();
  if (d == 0) return IntMatrix(0, 0);
  // x central iff x * Ad = 0, Ad stacking the maps x -> [x, v_j].
  IntMatrix ad(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Int> b = g.basis_bracket(i, j);
      for (std::size_t k = 0; k < d; ++k) ad.at(i, j * d + k) = b[k];
    }
  return left_kernel(ad);
}

IntMatrix commutator_subalgebra(const ZLieAlgebra& g) {
  const std::size_t d = g.dim();
  std::vector<std::vector<Int>> gen;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Int> b = g.basis_bracket(i, j);
      if (!vec_is_zero(b)) gen.push_back(std::move(b));
    }
  if (gen.empty()) return IntMatrix(0, d);
  return hnf(IntMatrix::from_rows(gen, d)).h;
}

unsigned nilpotency_class(const ZLieAlgebra& g) {
  return unsigned(lower_central_series(g).size()) - 1;
}

namespace {

IntMatrix intersect_rowspaces(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.cols();
  if (a.rows() == 0 || b.rows() == 0) return IntMatrix(0, n);
  // v = x a = y b  <=>  (x, y) in the left kernel of [a; -b]
  IntMatrix stacked(a.rows() + b.rows(), n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      stacked.at(a.rows() + i, j) = -b.at(i, j);
  IntMatrix ker = left_kernel(stacked);
  if (ker.rows() == 0) return IntMatrix(0, n);
  std::vector<std::vector<Int>> rows;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    std::vector<Int> v(n, 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += ker.at(r, i) * a.at(i, j);
    if (!vec_is_zero(v)) rows.push_back(std::move(v));
  }
  if (rows.empty()) return IntMatrix(0, n);
  return hnf(IntMatrix::from_rows(rows, n)).h;
}

Int max_int(const Int& a, const Int& b) { return a > b ? a : b; }

/// Largest prime dividing the torsion exponent of Z^n / rowspace(m);
/// 1 when the quotient is free.
Int torsion_e(const IntMatrix& m) {
  if (m.rows() == 0) return 1;
  auto s = smith_normal_form(m);
  Int e = 1;
  for (const auto& d : s.divisors) e = max_int(e, largest_prime_factor(d));
  return e;
}

/// The constant m(X): min over n x n submatrices X' of the largest prime
/// dividing det X'.  Exact by enumeration when the number of row choices is
/// small; otherwise a sound upper surrogate from the HNF pivot minor.
std::pair<Int, bool> m_of_x(const IntMatrix& x) {
  const std::size_t n = x.cols();
  if (n == 0) return {Int(1), true};
  const std::size_t rows = x.rows();
  if (rank_z(x) < n)
    throw internal_error("m(X): matrix does not have full column rank");
  double combos = 1;
  for (std::size_t i = 0; i < n; ++i)
    combos *= double(rows - i) / double(i + 1);
  if (combos <= 200000.0) {
    Int best = -1;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
      IntMatrix sub(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sub.at(i, j) = x.at(idx[i], j);
      Int det = sub.det();
      if (det != 0) {
        Int mp = largest_prime_factor(det);
        if (best < 0 || mp < best) best = mp;
        if (best == 1) return {Int(1), true};
      }
      std::size_t k = n;
      while (k > 0 && idx[k - 1] == rows - n + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t i = k; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
    return {best, true};
  }
  HnfResult h = hnf(x.transpose());
  Int prod = 1;
  for (std::size_t i = 0; i < h.h.rows(); ++i)
    prod *= h.h.at(i, h.pivot_cols[i]);
  return {largest_prime_factor(prod), false};
}

}  // namespace

BadPrimeConstants bad_prime_constants(const ZLieAlgebra& g) {
  const std::size_t d = g.dim();
  BadPrimeConstants out;
  out.c = std::max<unsigned>(1u, d == 0 ? 1u : nilpotency_class(g));
  IntMatrix z = center(g);
  IntMatrix comm = commutator_subalgebra(g);
  IntMatrix zcap = intersect_rowspaces(z, comm);
  out.l1 = unsigned(zcap.rows());

  // C1 = max{m(X), e([g,g]), e(g/[g,g])}; [g,g] is a subgroup of a free
  // module, so e([g,g]) = 1.
  const std::size_t n = d - z.rows();
  const std::size_t m = comm.rows();
  Int c1 = m ? torsion_e(comm) : Int(1);  // e(g/[g,g])
  if (n > 0 && m > 0) {
    // Semibasis of g/Z(g): coordinates outside the HNF pivot set of Z.
    HnfResult zh = hnf(z);
    std::vector<bool> zpiv(d, false);
    for (auto c : zh.pivot_cols) zpiv[c] = true;
    std::vector<std::size_t> vidx;
    for (std::size_t i = 0; i < d; ++i)
      if (!zpiv[i]) vidx.push_back(i);
    IntMatrix x(m * n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        std::vector<Int> br = g.basis_bracket(vidx[a], vidx[b]);
        auto lam = solve_in_rowspace(comm, br);
        if (!lam) throw internal_error("bracket does not lie in [g,g]");
        for (std::size_t k = 0; k < m; ++k) {
          x.at(b + n * k, a) += (*lam)[k];
          x.at(a + n * k, b) -= (*lam)[k];
        }
      }
    auto [mx, exact] = m_of_x(x);
    out.m_of_x_exact = exact;
    c1 = max_int(c1, mx);
  }
  out.c1 = c1;

  // C2 = e(g/M) where M is spanned by the w's and z's, i.e. [g,g] + Z(g).
  std::vector<std::vector<Int>> mgen;
  for (std::size_t r = 0; r < comm.rows(); ++r) mgen.push_back(comm.row(r));
  for (std::size_t r = 0; r < z.rows(); ++r) mgen.push_back(z.row(r));
  out.c2 = mgen.empty() ? Int(1) : torsion_e(IntMatrix::from_rows(mgen, d));

  // C3 = e((g/Z(g))_tor) = 1: the centre is saturated for free inputs.
  out.c3 = 1;
  return out;
}

Int BadPrimeConstants::reduction_bound() const {
  Int b = c;
  b = max_int(b, c1);
  b = max_int(b, c2);
  return max_int(b, c3);
}

Int BadPrimeConstants::bound() const {
  return max_int(reduction_bound(), Int(l1));
}

unsigned bad_prime_bound(const ZLieAlgebra& g) {
  return unsigned(bad_prime_constants(g).bound());
}

template <class F>
FqLieAlgebra<F>::FqLieAlgebra(const ZLieAlgebra& g, F field)
    : field_(std::move(field)), dim_(g.dim()), brackets_(dim_ * dim_) {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      std::vector<Int> b = g.basis_bracket(i, j);
      std::vector<Elem> r(dim_, field_.zero());
      for (std::size_t k = 0; k < dim_; ++k) {
        Int red = b[k] % Int(field_.p());
        r[k] = field_.from_int(red.convert_to<std::int64_t>());
      }
      brackets_[i * dim_ + j] = std::move(r);
    }
}

template <class F>
std::vector<typename F::Elem> FqLieAlgebra<F>::bracket(
    const std::vector<Elem>& x, const std::vector<Elem>& y) const {
  std::vector<Elem> r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || field_.is_zero(y[j])) continue;
      Elem coef = field_.mul(x[i], y[j]);
      const auto& b = brackets_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!field_.is_zero(b[k]))
          r[k] = field_.add(r[k], field_.mul(coef, b[k]));
    }
  }
  return r;
}

template <class F>
bool FqLieAlgebra<F>::is_zero_vec(const std::vector<Elem>& x) const {
  return std::all_of(x.begin(), x.end(),
                     [&](const Elem& e) { return field_.is_zero(e); });
}

template <class F>
void FqLieAlgebra<F>::corrupt(std::size_t i, std::size_t j, std::size_t k,
                              Elem value) {
  brackets_[i * dim_ + j][k] = value;
  brackets_[j * dim_ + i][k] = field_.neg(value);
}

template <class F>
FqLieAlgebra<F> reduce_mod(const ZLieAlgebra& g, const F& field) {
  BadPrimeConstants bc = bad_prime_constants(g);
  const Int p(field.p());
  if (p <= bc.reduction_bound()) {
    std::string which = "nilpotency class c = " + std::to_string(bc.c);
    Int worst = bc.c;
    if (bc.c1 > worst) { worst = bc.c1; which = "C1 = " + bc.c1.str(); }
    if (bc.c2 > worst) { worst = bc.c2; which = "C2 = " + bc.c2.str(); }
    if (bc.c3 > worst) { worst = bc.c3; which = "C3 = " + bc.c3.str(); }
    throw refusal("prime " + std::to_string(field.p()) +
                  " too small: need p > " + bc.reduction_bound().str() + " (" +
                  which + ")");
  }
  FqLieAlgebra<F> gq(g, field);
  // Jacobi holds over Z; re-check mod p as a guard.
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      for (std::size_t k = j + 1; k < g.dim(); ++k) {
        std::vector<typename F::Elem> ei = gq.zero(), ej = gq.zero(),
                                      ek = gq.zero();
        ei[i] = field.one();
        ej[j] = field.one();
        ek[k] = field.one();
        auto t1 = gq.bracket(gq.bracket(ei, ej), ek);
        auto t2 = gq.bracket(gq.bracket(ej, ek), ei);
        auto t3 = gq.bracket(gq.bracket(ek, ei), ej);
        for (std::size_t a = 0; a < g.dim(); ++a)
          if (!field.is_zero(field.add(field.add(t1[a], t2[a]), t3[a])))
            throw internal_error("Jacobi failed mod p after reduction");
      }
  return gq;
}

template <class F>
std::vector<std::size_t> series_ranks_mod(const FqLieAlgebra<F>& gq) {
  const F& k = gq.field();
  const std::size_t d = gq.dim();
  std::vector<std::size_t> ranks{d};
  std::vector<std::vector<typename F::Elem>> term;
  for (std::size_t i = 0; i < d; ++i) {
    auto e = gq.zero();
    e[i] = k.one();
    term.push_back(std::move(e));
  }
  while (!term.empty()) {
    std::vector<std::vector<typename F::Elem>> gen;
    for (std::size_t i = 0; i < d; ++i) {
      auto ei = gq.zero();
      ei[i] = k.one();
      for (const auto& t : term) {
        auto b = gq.bracket(ei, t);
        if (!gq.is_zero_vec(b)) gen.push_back(std::move(b));
      }
    }
    SpanTracker<F> span(k, d);
    std::vector<std::vector<typename F::Elem>> next;
    for (auto& v : gen)
      if (span.try_extend(v)) next.push_back(v);
    ranks.push_back(next.size());
    if (next.size() >= term.size() && !next.empty())
      throw internal_error("series does not descend mod p");
    term = std::move(next);
    if (ranks.back() == 0) break;
  }
  return ranks;
}

template <class F>
std::vector<std::vector<typename F::Elem>> center_mod(
    const FqLieAlgebra<F>& gq) {
  const F& k = gq.field();
  const std::size_t d = gq.dim();
  FieldMatrix<F> adt(k, d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto ei = gq.zero();
    ei[i] = k.one();
    for (std::size_t j = 0; j < d; ++j) {
      auto ej = gq.zero();
      ej[j] = k.one();
      auto b = gq.bracket(ei, ej);
      for (std::size_t l = 0; l < d; ++l) adt.at(j * d + l, i) = b[l];
    }
  }
  return adt.kernel_basis();
}

ZLieAlgebra change_basis(const ZLieAlgebra& g, const IntMatrix& u) {
  const std::size_t d = g.dim();
  if (u.rows() != d || u.cols() != d)
    throw input_error("change of basis must be d x d");
  IntMatrix uinv = unimodular_inverse(u);
  ZLieAlgebra out(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      std::vector<Int> br = g.bracket(u.row(a), u.row(b));
      std::vector<Int> res(d, 0);
      for (std::size_t k = 0; k < d; ++k)
        if (br[k] != 0)
          for (std::size_t l = 0; l < d; ++l) res[l] += br[k] * uinv.at(k, l);
      out.set_bracket(a, b, std::move(res));
    }
  return out;
}

template class FqLieAlgebra<PrimeField>;
template class FqLieAlgebra<ExtensionField>;
template FqLieAlgebra<PrimeField> reduce_mod(const ZLieAlgebra&,
                                             const PrimeField&);
template FqLieAlgebra<ExtensionField> reduce_mod(const ZLieAlgebra&,
                                                 const ExtensionField&);
template std::vector<std::size_t> series_ranks_mod(
    const FqLieAlgebra<PrimeField>&);
template std::vector<std::size_t> series_ranks_mod(
    const FqLieAlgebra<ExtensionField>&);
template std::vector<std::vector<PrimeField::Elem>> center_mod(
    const FqLieAlgebra<PrimeField>&);
template std::vector<std::vector<ExtensionField::Elem>> center_mod(
    const FqLieAlgebra<ExtensionField>&);

}  // namespace faithdim
