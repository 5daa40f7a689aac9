#include "faithdim/engine.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace faithdim {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::uint64_t(1) << 62) / base) return std::nullopt;
    r *= base;
  }
  return r;
}

namespace {

unsigned effective_threads(const EngineOptions& opt) {
  unsigned t = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  return std::max(1u, t);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic sample point: independent of threading and evaluation
/// order, fully determined by (seed, sample index, coordinate).
template <class F>
void sample_point(const F& field, std::uint64_t seed, std::uint64_t idx,
                  std::vector<typename F::Elem>& out) {
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field.decode(splitmix64(seed ^ splitmix64(idx * out.size() + i)) %
                          field.q());
}

std::uint64_t checked_value(std::uint64_t q, const RankSignature& sig,
                            unsigned l2, unsigned f) {
  std::uint64_t sum = l2;
  for (unsigned a : sig) {
    auto w = checked_pow(q, a);
    if (!w || *w > ~std::uint64_t(0) - sum)
      throw internal_error("faithful dimension overflows 64 bits");
    sum += *w;
  }
  if (sum != 0 && f > (~std::uint64_t(0)) / sum)
    throw internal_error("faithful dimension overflows 64 bits");
  return std::uint64_t(f) * sum;
}

/// Odometer over F_q^m in index order: coordinate 0 is the most significant
/// digit, so the leading l1 coordinates of consecutive points change slowly.
template <class F>
void decode_point(const F& field, std::uint64_t idx, unsigned m,
                  std::vector<typename F::Elem>& out) {
  const std::uint64_t q = field.q();
  for (unsigned i = m; i-- > 0;) {
    out[i] = field.decode(idx % q);
    idx /= q;
  }
}

template <class F>
void increment_point(const F& field, std::vector<typename F::Elem>& pt) {
  const std::uint64_t q = field.q();
  for (unsigned i = unsigned(pt.size()); i-- > 0;) {
    std::uint64_t e = field.encode(pt[i]) + 1;
    if (e < q) {
      pt[i] = field.decode(e);
      return;
    }
    pt[i] = field.zero();
  }
}

template <class F>
struct Candidate {
  std::uint64_t idx;
  std::vector<typename F::Elem> point;
};

/// Per-bucket chunk-local greedy candidates: within each half-rank bucket a
/// maximal prefix-independent set of leading-l1 projections.  The union over
/// chunks provably contains every point the serial greedy would select.
template <class F>
struct ChunkResult {
  std::vector<std::vector<Candidate<F>>> buckets;
};

template <class F>
ChunkResult<F> scan_range(const LinearFormMatrix& lfm, const F& field,
                          unsigned l1, std::uint64_t lo, std::uint64_t hi) {
  const unsigned m = unsigned(lfm.vars());
  const unsigned half_max = unsigned(lfm.size() / 2);
  SpecializePlan<F> plan(lfm, field);
  ChunkResult<F> res;
  res.buckets.resize(half_max + 1);
  std::vector<SpanTracker<F>> spans;
  for (unsigned a = 0; a <= half_max; ++a) spans.emplace_back(field, l1);

  std::vector<typename F::Elem> pt(m, field.zero());
  decode_point(field, lo, m, pt);
  std::vector<typename F::Elem> proj(l1, field.zero());
  for (std::uint64_t idx = lo; idx < hi;
       ++idx, increment_point(field, pt)) {
    bool proj_zero = true;
    for (unsigned i = 0; i < l1; ++i) {
      proj[i] = pt[i];
      proj_zero = proj_zero && field.is_zero(pt[i]);
    }
    if (proj_zero) continue;
    unsigned full = plan.rank_at(pt);
    unsigned a = full / 2;
    if (spans[a].full()) continue;
    if (spans[a].try_extend(proj))
      res.buckets[a].push_back(Candidate<F>{idx, pt});
  }
  return res;
}

}  // namespace

template <class F>
FaithfulDimResult minimize(const LinearFormMatrix& lfm, const F& field,
                           unsigned l1, unsigned l2, unsigned f,
                           const EngineOptions& opt) {
  FaithfulDimResult out;
  out.q = field.q();
  out.f = f;
  out.l1 = l1;
  out.l2 = l2;
  out.m = unsigned(lfm.vars());
  if (f != field.f())
    throw input_error("f does not match the field degree");
  if (l1 > lfm.vars())
    throw input_error("l1 exceeds the variable count");
  if (l1 == 0) {
    out.value = checked_value(out.q, {}, l2, f);
    return out;
  }

  const unsigned m = unsigned(lfm.vars());
  const unsigned half_max = unsigned(lfm.size() / 2);
  auto total = checked_pow(field.q(), m);
  const bool exact = total && *total <= opt.budget;
  out.exact = exact;

  std::vector<ChunkResult<F>> chunks;
  if (exact) {
    const unsigned nt =
        unsigned(std::min<std::uint64_t>(effective_threads(opt), *total));
    std::vector<std::uint64_t> cut(nt + 1);
    for (unsigned t = 0; t <= nt; ++t)
      cut[t] = std::uint64_t((__uint128_t(*total) * t) / nt);
    chunks.resize(nt);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nt; ++t)
      workers.emplace_back([&, t] {
        chunks[t] = scan_range(lfm, field, l1, cut[t], cut[t + 1]);
      });
    for (auto& w : workers) w.join();
  } else {
    // Sampling: all axis-aligned points x*e_i first, then seeded random
    // points; the result is an upper bound.
    SpecializePlan<F> plan(lfm, field);
    ChunkResult<F> local;
    local.buckets.resize(half_max + 1);
    std::vector<SpanTracker<F>> spans;
    for (unsigned a = 0; a <= half_max; ++a) spans.emplace_back(field, l1);
    const std::uint64_t q = field.q();
    const std::uint64_t naxis = std::uint64_t(q) * m;
    std::vector<typename F::Elem> pt(m, field.zero());
    std::vector<typename F::Elem> proj(l1, field.zero());
    for (std::uint64_t s = 0; s < naxis + opt.budget; ++s) {
      if (s < naxis) {
        for (unsigned i = 0; i < m; ++i) pt[i] = field.zero();
        pt[s % m] = field.decode(s / m);
      } else {
        sample_point(field, opt.seed, s - naxis, pt);
      }
      bool proj_zero = true;
      for (unsigned i = 0; i < l1; ++i) {
        proj[i] = pt[i];
        proj_zero = proj_zero && field.is_zero(pt[i]);
      }
      if (proj_zero) continue;
      unsigned a = plan.rank_at(pt) / 2;
      if (spans[a].full()) continue;
      if (spans[a].try_extend(proj))
        local.buckets[a].push_back(Candidate<F>{s, pt});
    }
    chunks.push_back(std::move(local));
  }

  // Merge: ascending half-rank, candidates in global index order.
  SpanTracker<F> global(field, l1);
  std::vector<typename F::Elem> proj(l1, field.zero());
  for (unsigned a = 0; a <= half_max && !global.full(); ++a) {
    std::vector<const Candidate<F>*> merged;
    for (const auto& ch : chunks)
      for (const auto& cand : ch.buckets[a]) merged.push_back(&cand);
    std::sort(merged.begin(), merged.end(),
              [](const Candidate<F>* x, const Candidate<F>* y) {
                return x->idx < y->idx;
              });
    for (const auto* cand : merged) {
      if (global.full()) break;
      for (unsigned i = 0; i < l1; ++i) proj[i] = cand->point[i];
      if (global.try_extend(proj)) {
        out.signature.push_back(a);
        std::vector<std::uint64_t> enc;
        for (const auto& e : cand->point) enc.push_back(field.encode(e));
        out.witness.push_back(std::move(enc));
      }
    }
  }
  if (out.signature.size() != l1) {
    if (exact)
      throw internal_error("exact enumeration found no regular set");
    throw refusal("no witness: sampling did not reach a regular set; "
                  "increase the budget");
  }
  out.value = checked_value(out.q, out.signature, l2, f);

  // Witness soundness: ranks reproduce the signature and the leading
  // block is invertible.
  SpecializePlan<F> plan(lfm, field);
  FieldMatrix<F> lead(field, l1, l1);
  for (unsigned i = 0; i < l1; ++i) {
    std::vector<typename F::Elem> pt;
    for (auto e : out.witness[i]) pt.push_back(field.decode(e));
    if (plan.rank_at(pt) / 2 != out.signature[i])
      throw internal_error("witness rank mismatch");
    for (unsigned j = 0; j < l1; ++j) lead.at(i, j) = pt[j];
  }
  if (field.is_zero(lead.det()))
    throw internal_error("witness leading block is singular");
  return out;
}

template <class F>
std::uint64_t exhaustive_min(const LinearFormMatrix& lfm, const F& field,
                             unsigned l1, unsigned l2, unsigned f,
                             const EngineOptions& opt) {
  if (l1 == 0) return checked_value(field.q(), {}, l2, f);
  const unsigned m = unsigned(lfm.vars());
  auto total = checked_pow(field.q(), m);
  if (!total || *total > opt.budget)
    throw refusal("exhaustive oracle refused: q^m = " +
                  (total ? std::to_string(*total) : std::string(">2^62")) +
                  " exceeds the budget");

  // Collect every point with nonzero leading projection, sorted by
  // (half-rank, index).
  SpecializePlan<F> plan(lfm, field);
  struct P {
    unsigned a;
    std::uint64_t idx;
    std::vector<typename F::Elem> proj;
  };
  const std::uint64_t point_cap = 4000000;
  if (*total > point_cap)
    throw refusal("exhaustive oracle refused: q^m = " + std::to_string(*total) +
                  " exceeds its point cap of " + std::to_string(point_cap));
  std::vector<P> pts;
  std::vector<typename F::Elem> pt(m, field.zero());
  for (std::uint64_t idx = 0; idx < *total;
       ++idx, increment_point(field, pt)) {
    bool proj_zero = true;
    for (unsigned i = 0; i < l1; ++i)
      proj_zero = proj_zero && field.is_zero(pt[i]);
    if (proj_zero) continue;
    P rec;
    rec.a = plan.rank_at(pt) / 2;
    rec.idx = idx;
    rec.proj.assign(pt.begin(), pt.begin() + l1);
    pts.push_back(std::move(rec));
  }
  std::sort(pts.begin(), pts.end(), [](const P& x, const P& y) {
    return x.a != y.a ? x.a < y.a : x.idx < y.idx;
  });

  const std::uint64_t q = field.q();
  std::vector<std::uint64_t> weight(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto w = checked_pow(q, pts[i].a);
    if (!w) throw internal_error("weight overflow");
    weight[i] = *w;
  }
  // suffix_min_sum[i][k]: the sum of the k cheapest weights at positions
  // >= i, i.e. of weight[i..i+k) since weights are sorted.
  std::vector<std::uint64_t> prefix(pts.size() + 1, 0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    prefix[i + 1] = prefix[i] + weight[i];

  const std::uint64_t node_cap = 50000000;
  std::uint64_t nodes = 0;
  std::uint64_t best = ~std::uint64_t(0);

  // DFS over positions in ascending (weight, index) order; admissible bound
  // by the cheapest remaining completions.  Complete search: every subset
  // whose bound does not already exceed the incumbent is visited.
  std::vector<SpanTracker<F>> spans(l1 + 1, SpanTracker<F>(field, l1));
  auto dfs = [&](auto&& self, std::size_t pos, unsigned chosen,
                 std::uint64_t sum) -> void {
    if (chosen == l1) {
      best = std::min(best, sum);
      return;
    }
    const unsigned need = l1 - chosen;
    for (std::size_t i = pos; i + need <= pts.size(); ++i) {
      if (++nodes > node_cap)
        throw refusal("exhaustive oracle refused: search exceeded node cap");
      // weights ascend, so once the cheapest completion fails, all do
      if (sum + prefix[i + need] - prefix[i] >= best) return;
      if (!spans[chosen].contains(pts[i].proj)) {
        spans[chosen + 1] = spans[chosen];
        spans[chosen + 1].try_extend(pts[i].proj);
        self(self, i + 1, chosen + 1, sum + weight[i]);
      }
    }
  };
  dfs(dfs, 0, 0, 0);
  if (best == ~std::uint64_t(0))
    throw internal_error("exhaustive search found no regular set");
  if (best > ~std::uint64_t(0) - l2 ||
      (best + l2) > (~std::uint64_t(0)) / std::max(1u, f))
    throw internal_error("faithful dimension overflows 64 bits");
  return std::uint64_t(f) * (best + l2);
}

template <class F>
StrataIndex rank_strata(const LinearFormMatrix& lfm, const F& field,
                        const EngineOptions& opt) {
  const unsigned m = unsigned(lfm.vars());
  constexpr std::size_t sample_cap = 4;
  auto total = checked_pow(field.q(), m);
  StrataIndex out;
  out.exact = total && *total <= opt.budget;

  const std::uint64_t limit = out.exact ? *total : opt.budget;
  struct Acc {
    std::map<unsigned, Stratum> strata;
    std::uint64_t seen = 0;
  };
  const unsigned nt = unsigned(
      std::min<std::uint64_t>(effective_threads(opt), std::max<std::uint64_t>(limit, 1)));
  std::vector<Acc> accs(nt);
  std::vector<std::uint64_t> cut(nt + 1);
  for (unsigned t = 0; t <= nt; ++t)
    cut[t] = std::uint64_t((__uint128_t(limit) * t) / nt);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < nt; ++t)
    workers.emplace_back([&, t] {
      SpecializePlan<F> plan(lfm, field);
      std::vector<typename F::Elem> pt(m, field.zero());
      if (out.exact) decode_point(field, cut[t], m, pt);
      for (std::uint64_t idx = cut[t]; idx < cut[t + 1]; ++idx) {
        if (out.exact) {
          if (idx != cut[t]) increment_point(field, pt);
        } else {
          sample_point(field, opt.seed, idx, pt);
        }
        unsigned a = plan.rank_at(pt) / 2;
        auto& s = accs[t].strata[a];
        ++s.count;
        ++accs[t].seen;
        if (s.samples.size() < sample_cap) {
          std::vector<std::uint64_t> enc;
          for (const auto& e : pt) enc.push_back(field.encode(e));
          s.samples.push_back(std::move(enc));
        }
      }
    });
  for (auto& w : workers) w.join();
  for (auto& acc : accs) {
    out.points_seen += acc.seen;
    for (auto& [a, s] : acc.strata) {
      auto& dst = out.by_half_rank[a];
      dst.count += s.count;
      for (auto& smp : s.samples)
        if (dst.samples.size() < sample_cap) dst.samples.push_back(smp);
    }
  }
  return out;
}

RankSignature decode_signature(std::uint64_t value, std::uint64_t q,
                               unsigned l1, unsigned l2, unsigned f) {
  if (q <= l1)
    throw refusal("signature decoding requires q > l1");
  if (f == 0 || value % f != 0)
    throw input_error("value is not divisible by f");
  std::uint64_t v = value / f;
  if (v < l2) throw input_error("value is smaller than f*l2");
  v -= l2;
  RankSignature sig;
  unsigned expo = 0;
  while (v > 0) {
    std::uint64_t digit = v % q;
    if (digit > l1) throw input_error("value is not a sum of l1 powers of q");
    for (std::uint64_t i = 0; i < digit; ++i) sig.push_back(expo);
    v /= q;
    ++expo;
  }
  if (sig.size() != l1)
    throw input_error("value is not a sum of l1 powers of q");
  return sig;
}

template <class F>
std::vector<std::uint32_t> prime_coordinates(
    const F& field, const std::vector<typename F::Elem>& v) {
  std::vector<std::uint32_t> out;
  const unsigned f = field.f();
  for (const auto& e : v) {
    std::uint64_t code = field.encode(e);
    for (unsigned i = 0; i < f; ++i) {
      out.push_back(std::uint32_t(code % field.p()));
      code /= field.p();
    }
  }
  return out;
}

template <class F>
std::vector<std::vector<std::size_t>> rado_horn_partition(
    const F& field, const std::vector<std::vector<typename F::Elem>>& vecs) {
  const unsigned f = field.f();
  if (vecs.empty() || vecs.size() % f != 0)
    throw input_error("expected f*m' input vectors");
  const std::size_t mprime = vecs.size() / f;
  for (const auto& v : vecs)
    if (v.size() != mprime)
      throw input_error("vectors must lie in F_q^{m'} with |S| = f*m'");

  // F_p-independence of the whole family.
  PrimeField base(field.p());
  SpanTracker<PrimeField> pspan(base, unsigned(f * mprime));
  for (const auto& v : vecs)
    if (!pspan.try_extend(prime_coordinates(field, v)))
      throw input_error("input vectors are not independent over F_p");

  std::vector<int> block_of(vecs.size(), -1);
  std::vector<std::vector<std::size_t>> blocks(f);
  auto independent_of_block = [&](std::size_t vi, std::size_t b,
                                  std::size_t skip) {
    SpanTracker<F> span(field, unsigned(mprime));
    for (auto wmem : blocks[b])
      if (wmem != skip) span.try_extend(vecs[wmem]);
    return !span.contains(vecs[vi]);
  };

  const std::size_t exchange_cap = vecs.size() * vecs.size() + 16;
  std::size_t exchanges = 0;
  for (std::size_t v = 0; v < vecs.size(); ++v) {
    // BFS over "x needs a home" states, displacing block members as needed.
    struct Node {
      std::size_t vec;
      int parent;     // index into the bfs vector
      std::size_t into_block;  // block the parent's vec enters, displacing us
    };
    std::vector<Node> bfs{{v, -1, 0}};
    std::vector<bool> visited(vecs.size(), false);
    visited[v] = true;
    int found = -1;
    std::size_t found_block = 0;
    for (std::size_t head = 0; head < bfs.size() && found < 0; ++head) {
      std::size_t x = bfs[head].vec;
      for (std::size_t b = 0; b < blocks.size() && found < 0; ++b) {
        if (blocks[b].size() < mprime &&
            independent_of_block(x, b, SIZE_MAX)) {
          found = int(head);
          found_block = b;
          break;
        }
      }
      if (found >= 0) break;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t w : blocks[b]) {
          if (visited[w]) continue;
          if (independent_of_block(x, b, w)) {
            visited[w] = true;
            bfs.push_back({w, int(head), b});
          }
        }
    }
    if (found < 0)
      throw internal_error("Rado-Horn augmentation failed");
    // Apply the path from the terminal node back to v.
    int cur = found;
    std::size_t target = found_block;
    while (cur >= 0) {
      std::size_t x = bfs[cur].vec;
      if (bfs[cur].parent >= 0) {
        auto& members = blocks[bfs[cur].into_block];
        members.erase(std::find(members.begin(), members.end(), x));
      }
      blocks[target].push_back(x);
      block_of[x] = int(target);
      if (++exchanges > exchange_cap)
        throw internal_error("Rado-Horn exceeded the exchange cap");
      target = bfs[cur].into_block;
      cur = bfs[cur].parent;
    }
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  return blocks;
}

template <class F>
std::vector<typename F::Elem> proj2(const CharacterDims& dims,
                                    const std::vector<typename F::Elem>& a) {
  std::vector<typename F::Elem> out;
  for (unsigned i = 0; i < dims.l1; ++i) out.push_back(a[i]);
  for (unsigned i = 0; i < dims.l2; ++i) out.push_back(a[dims.m + i]);
  return out;
}

template <class F>
std::vector<std::vector<typename F::Elem>> admissible_from_regular(
    const F& field, const CharacterDims& dims,
    const std::vector<std::vector<typename F::Elem>>& regular) {
  const unsigned k = dims.l1 + dims.l2;
  if (regular.size() != k)
    throw input_error("a regular set has l1+l2 points");
  SpanTracker<F> span(field, k);
  for (const auto& a : regular) {
    if (a.size() != dims.total())
      throw input_error("character point has wrong length");
    if (!span.try_extend(proj2<F>(dims, a)))
      throw input_error("input is not a regular set");
  }
  std::vector<std::vector<typename F::Elem>> out;
  const unsigned f = field.f();
  PrimeField base(field.p());
  SpanTracker<PrimeField> pspan(base, k * f);
  for (unsigned i = 0; i < f; ++i) {
    typename F::Elem omega =
        f == 1 ? field.one() : field.decode(checked_pow(field.p(), i).value());
    for (const auto& a : regular) {
      std::vector<typename F::Elem> scaled;
      for (const auto& e : a) scaled.push_back(field.mul(e, omega));
      if (!pspan.try_extend(
              prime_coordinates(field, proj2<F>(dims, scaled))))
        throw internal_error("scaled family is not admissible");
      out.push_back(std::move(scaled));
    }
  }
  return out;
}

template <class F>
std::vector<std::vector<typename F::Elem>> regular_set_from_witness(
    const F& field, const CharacterDims& dims, const FaithfulDimResult& r) {
  if (r.witness.size() != dims.l1)
    throw input_error("witness does not have l1 rows");
  std::vector<std::vector<typename F::Elem>> out;
  for (const auto& row : r.witness) {
    std::vector<typename F::Elem> a(dims.total(), field.zero());
    for (std::size_t i = 0; i < row.size(); ++i)
      a[i] = field.decode(row[i]);
    out.push_back(std::move(a));
  }
  for (unsigned j = 0; j < dims.l2; ++j) {
    std::vector<typename F::Elem> a(dims.total(), field.zero());
    a[dims.m + j] = field.one();
    out.push_back(std::move(a));
  }
  return out;
}

#define FAITHDIM_INSTANTIATE(F)                                              \
  template FaithfulDimResult minimize<F>(const LinearFormMatrix&, const F&,  \
                                         unsigned, unsigned, unsigned,       \
                                         const EngineOptions&);              \
  template std::uint64_t exhaustive_min<F>(const LinearFormMatrix&,          \
                                           const F&, unsigned, unsigned,     \
                                           unsigned, const EngineOptions&);  \
  template StrataIndex rank_strata<F>(const LinearFormMatrix&, const F&,     \
                                      const EngineOptions&);                 \
  template std::vector<std::vector<std::size_t>> rado_horn_partition<F>(     \
      const F&, const std::vector<std::vector<F::Elem>>&);                   \
  template std::vector<F::Elem> proj2<F>(const CharacterDims&,               \
                                         const std::vector<F::Elem>&);       \
  template std::vector<std::vector<F::Elem>> admissible_from_regular<F>(     \
      const F&, const CharacterDims&,                                        \
      const std::vector<std::vector<F::Elem>>&);                             \
  template std::vector<std::uint32_t> prime_coordinates<F>(                  \
      const F&, const std::vector<F::Elem>&);                                \
  template std::vector<std::vector<F::Elem>> regular_set_from_witness<F>(    \
      const F&, const CharacterDims&, const FaithfulDimResult&);

FAITHDIM_INSTANTIATE(PrimeField)
FAITHDIM_INSTANTIATE(ExtensionField)
#undef FAITHDIM_INSTANTIATE

}  // namespace faithdim
