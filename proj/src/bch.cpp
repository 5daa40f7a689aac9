#include "faithdim/bch.hpp"

#include <algorithm>

namespace faithdim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

template <class F>
BchGroup<F>::BchGroup(const FqLieAlgebra<F>& gq) : gq_(&gq) {
  auto ranks = series_ranks_mod(gq);
  class_ = std::max<unsigned>(1, unsigned(ranks.size()) - 1);
  if (std::uint64_t(gq.field().p()) <= class_)
    throw refusal("BCH multiplication needs p > c; p = " +
                  std::to_string(gq.field().p()) + ", c = " +
                  std::to_string(class_));
  const F& k = gq.field();
  const unsigned c = class_;

  word_coeff_.assign(c + 1, {});
  for (unsigned len = 1; len <= c; ++len)
    word_coeff_[len].assign(std::size_t(1) << len, k.zero());

  // Enumerate composition tuples (a_1,b_1),...,(a_n,b_n) with a_i+b_i >= 1
  // and total weight <= c.  Each surviving tuple contributes
  // (-1)^{n+1} / (n * W * prod a_i! b_i!) to one bracket word: the letters
  // a_1 x's, b_1 y's, ..., closed by y when b_n = 1 or by x when
  // (a_n, b_n) = (1, 0); tuples with b_n >= 2, or b_n = 0 and a_n >= 2,
  // vanish identically.
  std::vector<std::pair<unsigned, unsigned>> seq;
  auto emit = [&](unsigned total) {
    const auto [an, bn] = seq.back();
    if (bn >= 2 || (bn == 0 && an != 1)) return;
    unsigned bits = 0, pos = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      pos += seq[i].first;  // x letters contribute 0 bits
      for (unsigned t = 0; t < seq[i].second; ++t) bits |= 1u << (pos++);
    }
    if (bn == 1) {
      pos += an;
      bits |= 1u << pos++;
    } else {
      ++pos;  // final letter x
    }
    std::uint64_t den = std::uint64_t(seq.size()) * total;
    for (const auto& [a, b] : seq) den *= factorial(a) * factorial(b);
    const F& fld = gq_->field();
    typename F::Elem coef = fld.inv(fld.from_int(std::int64_t(den % fld.p())));
    if (seq.size() % 2 == 0) coef = fld.neg(coef);
    word_coeff_[total][bits] = fld.add(word_coeff_[total][bits], coef);
  };
  auto rec = [&](auto&& self, unsigned total) -> void {
    if (!seq.empty()) emit(total);
    if (total == c) return;
    for (unsigned s = 1; s + total <= c; ++s)
      for (unsigned a = 0; a <= s; ++a) {
        seq.emplace_back(a, s - a);
        self(self, total + s);
        seq.pop_back();
      }
  };
  rec(rec, 0);
}

template <class F>
typename BchGroup<F>::Vec BchGroup<F>::multiply(const Vec& x,
                                                const Vec& y) const {
  const F& k = gq_->field();
  const std::size_t d = gq_->dim();
  if (x.size() != d || y.size() != d)
    throw input_error("group element has wrong length");
  // Values of all bracket words, built from suffixes: the word (len, bits)
  // equals [letter(bits_0), value(len-1, bits >> 1)].
  std::vector<std::vector<Vec>> val(class_ + 1);
  val[1] = {x, y};
  Vec out = gq_->zero();
  for (unsigned len = 1; len <= class_; ++len) {
    if (len >= 2) {
      val[len].assign(std::size_t(1) << len, Vec());
      for (unsigned bits = 0; bits < (1u << len); ++bits) {
        const Vec& tail = val[len - 1][bits >> 1];
        if (len > 2 && tail.empty()) continue;
        Vec v = gq_->bracket((bits & 1) ? y : x, tail);
        if (!gq_->is_zero_vec(v)) val[len][bits] = std::move(v);
      }
    }
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      const Vec& v = val[len][bits];
      const auto& coef = word_coeff_[len][bits];
      if (v.empty() || k.is_zero(coef)) continue;
      for (std::size_t i = 0; i < d; ++i)
        out[i] = k.add(out[i], k.mul(coef, v[i]));
    }
  }
  return out;
}

template <class F>
typename BchGroup<F>::Vec BchGroup<F>::inverse(const Vec& x) const {
  const F& k = gq_->field();
  Vec r = x;
  for (auto& e : r) e = k.neg(e);
  return r;
}

template <class F>
GroupCheckReport BchGroup<F>::axioms_check(std::size_t trials,
                                           std::uint64_t seed) const {
  const F& k = gq_->field();
  const std::size_t d = gq_->dim();
  auto random_elem = [&](std::uint64_t t, unsigned which) {
    Vec v(d, k.zero());
    for (std::size_t i = 0; i < d; ++i)
      v[i] = k.decode(splitmix64(seed ^ splitmix64(t * 3 + which) ^
                                 splitmix64(i + 101)) %
                      k.q());
    return v;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    Vec x = random_elem(t, 0), y = random_elem(t, 1), z = random_elem(t, 2);
    Vec lhs = multiply(multiply(x, y), z);
    Vec rhs = multiply(x, multiply(y, z));
    if (lhs != rhs)
      return {false, "associativity fails at trial " + std::to_string(t)};
    if (multiply(x, identity()) != x || multiply(identity(), x) != x)
      return {false, "identity fails at trial " + std::to_string(t)};
    if (!gq_->is_zero_vec(multiply(x, inverse(x))))
      return {false, "inverse fails at trial " + std::to_string(t)};
  }
  return {true, ""};
}

template <class F>
std::vector<typename BchGroup<F>::Vec> BchGroup<F>::centre_elements(
    std::uint64_t budget) const {
  const F& k = gq_->field();
  const std::size_t d = gq_->dim();
  auto order = checked_pow(k.q(), unsigned(d));
  if (!order || *order > budget)
    throw refusal("group too large to enumerate its centre");
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e = gq_->zero();
    e[i] = k.one();
    gens.push_back(std::move(e));
  }
  std::vector<Vec> out;
  Vec x(d, k.zero());
  for (std::uint64_t idx = 0; idx < *order; ++idx) {
    std::uint64_t rem = idx;
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = k.decode(rem % k.q());
      rem /= k.q();
    }
    bool central = true;
    for (const auto& gele : gens)
      if (multiply(x, gele) != multiply(gele, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

template <class F>
std::uint64_t stabilizer_size(const LinearFormMatrix& lfm, const F& field,
                              const CharacterDims& dims,
                              const std::vector<typename F::Elem>& a) {
  if (a.size() != dims.total())
    throw input_error("character point has wrong length");
  std::vector<typename F::Elem> p3(a.begin(), a.begin() + dims.m);
  unsigned rk = lfm.rank_at(field, p3);
  auto s = checked_pow(field.q(), dims.total() - rk);
  if (!s) throw internal_error("stabilizer size overflows");
  return *s;
}

template <class F>
std::uint64_t irrep_dimension(const LinearFormMatrix& lfm, const F& field,
                              const CharacterDims& dims,
                              const std::vector<typename F::Elem>& a) {
  if (a.size() != dims.total())
    throw input_error("character point has wrong length");
  std::vector<typename F::Elem> p3(a.begin(), a.begin() + dims.m);
  unsigned rk = lfm.rank_at(field, p3);
  auto s = checked_pow(field.q(), rk / 2);
  if (!s) throw internal_error("irrep dimension overflows");
  return *s;
}

template <class F>
std::map<std::uint64_t, std::uint64_t> orbit_census(
    const LinearFormMatrix& lfm, const F& field, const CharacterDims& dims,
    std::uint64_t budget) {
  const unsigned d = dims.total();
  auto order = checked_pow(field.q(), d);
  if (!order || *order > budget)
    throw refusal("orbit census refused: q^d = " +
                  (order ? std::to_string(*order) : std::string(">2^62")) +
                  " exceeds the budget");
  SpecializePlan<F> plan(lfm, field);
  std::map<unsigned, std::uint64_t> by_rank;
  std::vector<typename F::Elem> a(d, field.zero());
  std::vector<typename F::Elem> p3(dims.m, field.zero());
  for (std::uint64_t idx = 0; idx < *order; ++idx) {
    std::uint64_t rem = idx;
    for (unsigned i = 0; i < d; ++i) {
      a[i] = field.decode(rem % field.q());
      rem /= field.q();
    }
    for (unsigned i = 0; i < dims.m; ++i) p3[i] = a[i];
    ++by_rank[plan.rank_at(p3)];
  }
  std::map<std::uint64_t, std::uint64_t> census;
  std::uint64_t total_sq = 0;
  for (auto [rk, count] : by_rank) {
    auto orbit = checked_pow(field.q(), rk);
    if (!orbit || count % *orbit != 0)
      throw internal_error("stratum count not divisible by the orbit size");
    auto dim = checked_pow(field.q(), rk / 2);
    census[*dim] += count / *orbit;
    total_sq += count;
  }
  if (total_sq != *order)
    throw internal_error("census does not sum to |G|");
  return census;
}

template <class F>
std::uint64_t direct_min_faithful(const LinearFormMatrix& lfm, const F& field,
                                  const CharacterDims& dims,
                                  std::uint64_t budget) {
  const unsigned d = dims.total();
  const unsigned f = field.f();
  const unsigned picks = (dims.l1 + dims.l2) * f;
  auto order = checked_pow(field.q(), d);
  if (!order || *order > budget)
    throw refusal("direct faithful search refused: q^d too large");
  if (picks == 0) return 0;  // trivial group

  SpecializePlan<F> plan(lfm, field);
  struct P {
    std::uint64_t weight;
    std::uint64_t idx;
    std::vector<std::uint32_t> proj;  // F_p coordinates of proj_2
  };
  std::vector<P> pts;
  std::vector<typename F::Elem> a(d, field.zero());
  std::vector<typename F::Elem> p3(dims.m, field.zero());
  for (std::uint64_t idx = 0; idx < *order; ++idx) {
    std::uint64_t rem = idx;
    for (unsigned i = 0; i < d; ++i) {
      a[i] = field.decode(rem % field.q());
      rem /= field.q();
    }
    auto pr2 = proj2<F>(dims, a);
    bool zero = std::all_of(pr2.begin(), pr2.end(), [&](const auto& e) {
      return field.is_zero(e);
    });
    if (zero) continue;
    for (unsigned i = 0; i < dims.m; ++i) p3[i] = a[i];
    auto w = checked_pow(field.q(), plan.rank_at(p3) / 2);
    if (!w) throw internal_error("weight overflow");
    pts.push_back(P{*w, idx, prime_coordinates(field, pr2)});
  }
  std::sort(pts.begin(), pts.end(), [](const P& x, const P& y) {
    return x.weight != y.weight ? x.weight < y.weight : x.idx < y.idx;
  });
  std::vector<std::uint64_t> prefix(pts.size() + 1, 0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    prefix[i + 1] = prefix[i] + pts[i].weight;

  PrimeField base(field.p());
  std::vector<SpanTracker<PrimeField>> spans(
      picks + 1, SpanTracker<PrimeField>(base, (dims.l1 + dims.l2) * f));
  std::uint64_t best = ~std::uint64_t(0);
  std::uint64_t nodes = 0;
  const std::uint64_t node_cap = 20000000;
  auto dfs = [&](auto&& self, std::size_t pos, unsigned chosen,
                 std::uint64_t sum) -> void {
    if (chosen == picks) {
      best = std::min(best, sum);
      return;
    }
    const unsigned need = picks - chosen;
    for (std::size_t i = pos; i + need <= pts.size(); ++i) {
      if (++nodes > node_cap)
        throw refusal("direct faithful search exceeded its node cap");
      if (sum + prefix[i + need] - prefix[i] >= best) return;
      if (!spans[chosen].contains(pts[i].proj)) {
        spans[chosen + 1] = spans[chosen];
        spans[chosen + 1].try_extend(pts[i].proj);
        self(self, i + 1, chosen + 1, sum + pts[i].weight);
      }
    }
  };
  dfs(dfs, 0, 0, 0);
  if (best == ~std::uint64_t(0))
    throw internal_error("no admissible set found");
  return best;
}

#define FAITHDIM_BCH_INSTANTIATE(F)                                         \
  template class BchGroup<F>;                                               \
  template std::uint64_t stabilizer_size<F>(const LinearFormMatrix&,        \
                                            const F&, const CharacterDims&, \
                                            const std::vector<F::Elem>&);   \
  template std::uint64_t irrep_dimension<F>(const LinearFormMatrix&,        \
                                            const F&, const CharacterDims&, \
                                            const std::vector<F::Elem>&);   \
  template std::map<std::uint64_t, std::uint64_t> orbit_census<F>(          \
      const LinearFormMatrix&, const F&, const CharacterDims&,              \
      std::uint64_t);                                                       \
  template std::uint64_t direct_min_faithful<F>(                            \
      const LinearFormMatrix&, const F&, const CharacterDims&, std::uint64_t);

FAITHDIM_BCH_INSTANTIATE(PrimeField)
FAITHDIM_BCH_INSTANTIATE(ExtensionField)
#undef FAITHDIM_BCH_INSTANTIATE

}  // namespace faithdim
