#include "faithdim/commutator.hpp"

#include <algorithm>

namespace faithdim {

namespace {

/// Complete a basis of the saturated submodule `sub` (rows in ambient
/// coordinates) to a basis of the module spanned by `amb` rows.  Returns the
/// complement rows only.  When `sub` expressed in amb-coordinates has an HNF
/// with all pivots 1, the completion is by unit coordinate vectors (this
/// keeps the natural coordinate ordering on all bundled algebras); otherwise an
/// SNF completion is used.
std::vector<std::vector<Int>> complement_in(const IntMatrix& sub,
                                            const IntMatrix& amb) {
  const std::size_t d = amb.cols();
  const std::size_t msz = amb.rows();
  // sub in amb coordinates
  IntMatrix a(sub.rows(), msz);
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    auto sol = solve_in_rowspace(amb, sub.row(i));
    if (!sol) throw internal_error("complement_in: submodule not inside ambient");
    for (std::size_t j = 0; j < msz; ++j) a.at(i, j) = (*sol)[j];
  }
  std::vector<std::vector<Int>> comp_coords;
  HnfResult h = hnf(a);
  bool unit_pivots = h.h.rows() == sub.rows();
  for (std::size_t i = 0; i < h.h.rows(); ++i)
    if (h.h.at(i, h.pivot_cols[i]) != 1) unit_pivots = false;
  if (unit_pivots) {
    std::vector<bool> piv(msz, false);
    for (auto c : h.pivot_cols) piv[c] = true;
    for (std::size_t j = 0; j < msz; ++j)
      if (!piv[j]) {
        std::vector<Int> e(msz, 0);
        e[j] = 1;
        comp_coords.push_back(std::move(e));
      }
  } else {
    // u a v = diag(1...1) since sub is saturated in amb; rows of v^-1
    // beyond the first rank(a) complete the basis.
    SnfResult s = smith_normal_form(a);
    for (const auto& dv : s.divisors)
      if (dv != 1)
        throw internal_error("complement_in: submodule not saturated");
    IntMatrix vinv = unimodular_inverse(s.v);
    for (std::size_t i = s.divisors.size(); i < msz; ++i)
      comp_coords.push_back(vinv.row(i));
  }
  // map back to ambient coordinates
  std::vector<std::vector<Int>> out;
  for (auto& cc : comp_coords) {
    std::vector<Int> row(d, 0);
    for (std::size_t k = 0; k < msz; ++k)
      if (cc[k] != 0)
        for (std::size_t j = 0; j < d; ++j) row[j] += cc[k] * amb.at(k, j);
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix rows_to_matrix(const std::vector<std::vector<Int>>& rows,
                         std::size_t cols) {
  return IntMatrix::from_rows(rows, cols);
}

IntMatrix intersect(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.cols();
  if (a.rows() == 0 || b.rows() == 0) return IntMatrix(0, n);
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
    bool nz = false;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += ker.at(r, i) * a.at(i, j);
    for (auto& x : v) nz = nz || x != 0;
    if (nz) rows.push_back(std::move(v));
  }
  if (rows.empty()) return IntMatrix(0, n);
  return hnf(rows_to_matrix(rows, n)).h;
}

}  // namespace

AdaptedBasis adapted_basis(const ZLieAlgebra& g) {
  const std::size_t d = g.dim();
  AdaptedBasis out;
  IntMatrix comm = commutator_subalgebra(g);
  IntMatrix zc = center(g);
  IntMatrix zcap = intersect(zc, comm);
  out.l1 = unsigned(zcap.rows());

  // w: basis of Z cap [g,g], completed to a basis of [g,g].  The quotient
  // [g,g]/(Z cap [g,g]) is torsion-free for free inputs, so the completion
  // is exact.
  std::vector<std::vector<Int>> wrows;
  for (std::size_t i = 0; i < zcap.rows(); ++i) wrows.push_back(zcap.row(i));
  for (auto& r : complement_in(zcap, comm)) wrows.push_back(std::move(r));
  out.w = wrows.empty() ? IntMatrix(0, d) : rows_to_matrix(wrows, d);

  // z: complement of sat(Z cap [g,g]) inside Z(g).
  IntMatrix t = zcap.rows() ? saturate(zcap) : IntMatrix(0, d);
  auto zrows = complement_in(t, zc);
  out.z = zrows.empty() ? IntMatrix(0, d) : rows_to_matrix(zrows, d);

  // u: complement of sat(Z(g) + [g,g]) in g.
  std::vector<std::vector<Int>> mg;
  for (std::size_t i = 0; i < comm.rows(); ++i) mg.push_back(comm.row(i));
  for (std::size_t i = 0; i < zc.rows(); ++i) mg.push_back(zc.row(i));
  IntMatrix zplusg = mg.empty() ? IntMatrix(0, d)
                                : saturate(rows_to_matrix(mg, d));
  auto urows = complement_in(zplusg, hnf(IntMatrix::identity(d)).h);
  out.u = urows.empty() ? IntMatrix(0, d) : rows_to_matrix(urows, d);

  // v: complement of Z(g) in g (Z is saturated, quotient free).
  auto vrows = complement_in(zc, hnf(IntMatrix::identity(d)).h);
  out.v = vrows.empty() ? IntMatrix(0, d) : rows_to_matrix(vrows, d);

  if (out.dim() != d)
    throw internal_error("adapted basis does not have full rank");
  if (out.n() != out.m() - out.l1 + out.l3())
    throw internal_error("adapted basis rank bookkeeping failed");
  return out;
}

void LinearFormMatrix::set_form(std::size_t i, std::size_t j, LinearForm f) {
  if (i == j) {
    if (!f.terms.empty()) throw internal_error("diagonal form must vanish");
    return;
  }
  std::sort(f.terms.begin(), f.terms.end());
  LinearForm neg = f;
  for (auto& t : neg.terms) t.second = -t.second;
  forms_[i * n_ + j] = std::move(f);
  forms_[j * n_ + i] = std::move(neg);
}

LinearForm LinearFormMatrix::form(std::size_t i, std::size_t j) const {
  return forms_[i * n_ + j];
}

LinearFormMatrix commutator_matrix(const ZLieAlgebra& g,
                                   const AdaptedBasis& basis) {
  const std::size_t n = basis.n(), m = basis.m();
  LinearFormMatrix lfm(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Int> br = g.bracket(basis.v.row(i), basis.v.row(j));
      const bool br_zero = std::all_of(
          br.begin(), br.end(), [](const Int& x) { return x == 0; });
      std::optional<std::vector<Int>> lam;
      if (br_zero)
        lam.emplace(m, 0);
      else if (m > 0)
        lam = solve_in_rowspace(basis.w, br);
      if (!lam)
        throw internal_error(
            "bracket of adapted vectors (" + std::to_string(i + 1) + "," +
            std::to_string(j + 1) + ") does not decompose in the w-basis");
      LinearForm f;
      for (std::size_t k = 0; k < m; ++k)
        if ((*lam)[k] != 0)
          f.terms.emplace_back(std::uint32_t(k),
                               (*lam)[k].convert_to<std::int64_t>());
      lfm.set_form(i, j, std::move(f));
    }
  return lfm;
}

LinearFormMatrix reduced_commutator_matrix(const ZLieAlgebra& g) {
  if (!g.graded())
    throw input_error("reduced commutator matrix requires a graded algebra");
  const std::size_t d = g.dim();
  const auto& deg = g.grading();
  const unsigned top = *std::max_element(deg.begin(), deg.end());

  // Grading consistency: [deg a, deg b] lies in the degree a+b component.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Int> br = g.basis_bracket(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (br[k] != 0 && deg[k] != deg[i] + deg[j])
          throw input_error("grading inconsistent with brackets at (" +
                            std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
    }

  std::vector<std::size_t> topidx, lowidx;
  for (std::size_t k = 0; k < d; ++k)
    (deg[k] == top ? topidx : lowidx).push_back(k);

  // The centre must be exactly the top component.
  IntMatrix zc = center(g);
  if (zc.rows() != topidx.size())
    throw input_error("centre is not the top-degree component");
  for (auto k : topidx) {
    std::vector<Int> e(d, 0);
    e[k] = 1;
    if (!solve_in_rowspace(zc, e))
      throw input_error("centre is not the top-degree component");
  }

  const std::size_t n = lowidx.size(), m = topidx.size();
  std::vector<std::size_t> top_pos(d, std::size_t(-1));
  for (std::size_t k = 0; k < m; ++k) top_pos[topidx[k]] = k;

  LinearFormMatrix lfm(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Int> br = g.basis_bracket(lowidx[i], lowidx[j]);
      LinearForm f;
      for (std::size_t k = 0; k < d; ++k)
        if (br[k] != 0 && deg[k] == top)
          f.terms.emplace_back(std::uint32_t(top_pos[k]),
                               br[k].convert_to<std::int64_t>());
      lfm.set_form(i, j, std::move(f));
    }

  // Anti-diagonal cells: degrees are ascending along lowidx.
  std::vector<LinearFormMatrix::Cell> cells;
  for (unsigned a = 1; 2 * a <= top; ++a) {
    unsigned b = top - a;
    auto range_of = [&](unsigned degree) {
      std::uint32_t lo = 0, hi = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (deg[lowidx[k]] == degree) {
          lo = std::uint32_t(k);
          while (k < n && deg[lowidx[k]] == degree) ++k;
          hi = std::uint32_t(k);
          break;
        }
      return std::pair<std::uint32_t, std::uint32_t>(lo, hi);
    };
    auto [r0, r1] = range_of(a);
    auto [c0, c1] = range_of(b);
    if (r0 == r1 || c0 == c1) continue;
    cells.push_back({r0, r1, c0, c1, a == b});
  }
  lfm.set_cells(std::move(cells));
  return lfm;
}

template <class F>
FieldMatrix<F> LinearFormMatrix::specialize(
    const F& field, const std::vector<typename F::Elem>& point) const {
  if (point.size() != m_)
    throw input_error("specialization point has wrong length");
  FieldMatrix<F> out(field, n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      typename F::Elem acc = field.zero();
      for (const auto& [var, coef] : forms_[i * n_ + j].terms)
        acc = field.add(acc, field.mul(field.from_int(coef), point[var]));
      out.at(i, j) = acc;
    }
  return out;
}

template <class F>
unsigned LinearFormMatrix::rank_at(
    const F& field, const std::vector<typename F::Elem>& point) const {
  SpecializePlan<F> plan(*this, field);
  return plan.rank_at(point);
}

template <class F>
SpecializePlan<F>::SpecializePlan(const LinearFormMatrix& lfm, const F& field)
    : lfm_(&lfm), field_(&field), entries_(lfm.size() * lfm.size()) {
  const std::size_t n = lfm.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LinearForm f = lfm.form(i, j);
      for (const auto& [var, coef] : f.terms) {
        Elem c = field.from_int(coef);
        if (!field.is_zero(c)) entries_[i * n + j].terms.emplace_back(var, c);
      }
    }
  scratch_.resize(n * n, field.zero());
}

template <class F>
typename F::Elem SpecializePlan<F>::eval(
    const Entry& e, const std::vector<Elem>& point) const {
  Elem acc = field_->zero();
  for (const auto& [var, coef] : e.terms)
    acc = field_->add(acc, field_->mul(coef, point[var]));
  return acc;
}

template <class F>
unsigned SpecializePlan<F>::cell_rank(const std::vector<Elem>& point,
                                      std::size_t cidx) const {
  const F& k = *field_;
  const auto& cell = lfm_->cells()[cidx];
  const std::size_t n = lfm_->size();
  const std::size_t r = cell.r1 - cell.r0, c = cell.c1 - cell.c0;
  Elem* buf = scratch_.data();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      buf[i * c + j] = eval(entries_[(cell.r0 + i) * n + (cell.c0 + j)], point);
  // row echelon on the r x c buffer
  unsigned rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && k.is_zero(buf[piv * c + col])) ++piv;
    if (piv == r) continue;
    if (piv != rank)
      for (std::size_t j = col; j < c; ++j)
        std::swap(buf[piv * c + j], buf[rank * c + j]);
    Elem inv = k.inv(buf[rank * c + col]);
    for (std::size_t i = rank + 1; i < r; ++i) {
      if (k.is_zero(buf[i * c + col])) continue;
      Elem factor = k.mul(buf[i * c + col], inv);
      for (std::size_t j = col; j < c; ++j)
        buf[i * c + j] = k.sub(buf[i * c + j], k.mul(factor, buf[rank * c + j]));
    }
    ++rank;
  }
  return rank;
}

template <class F>
unsigned SpecializePlan<F>::rank_at(const std::vector<Elem>& point) const {
  const F& k = *field_;
  const std::size_t n = lfm_->size();
  if (point.size() != lfm_->vars())
    throw input_error("specialization point has wrong length");
  unsigned rank = 0;
  if (!lfm_->cells().empty()) {
    for (std::size_t c = 0; c < lfm_->cells().size(); ++c) {
      unsigned r = cell_rank(point, c);
      rank += lfm_->cells()[c].diagonal ? r : 2 * r;
    }
  } else {
    Elem* buf = scratch_.data();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        buf[i * n + j] = eval(entries_[i * n + j], point);
    for (std::size_t col = 0; col < n && rank < n; ++col) {
      std::size_t piv = rank;
      while (piv < n && k.is_zero(buf[piv * n + col])) ++piv;
      if (piv == n) continue;
      if (piv != rank)
        for (std::size_t j = 0; j < n; ++j)
          std::swap(buf[piv * n + j], buf[rank * n + j]);
      Elem inv = k.inv(buf[rank * n + col]);
      for (std::size_t i = rank + 1; i < n; ++i) {
        if (k.is_zero(buf[i * n + col])) continue;
        Elem factor = k.mul(buf[i * n + col], inv);
        for (std::size_t j = col; j < n; ++j)
          buf[i * n + j] =
              k.sub(buf[i * n + j], k.mul(factor, buf[rank * n + j]));
      }
      ++rank;
    }
  }
  if (rank % 2 != 0)
    throw internal_error("skew specialization has odd rank");
  return rank;
}

template class SpecializePlan<PrimeField>;
template class SpecializePlan<ExtensionField>;
template FieldMatrix<PrimeField> LinearFormMatrix::specialize(
    const PrimeField&, const std::vector<PrimeField::Elem>&) const;
template FieldMatrix<ExtensionField> LinearFormMatrix::specialize(
    const ExtensionField&, const std::vector<ExtensionField::Elem>&) const;
template unsigned LinearFormMatrix::rank_at(
    const PrimeField&, const std::vector<PrimeField::Elem>&) const;
template unsigned LinearFormMatrix::rank_at(
    const ExtensionField&, const std::vector<ExtensionField::Elem>&) const;

}  // namespace faithdim
