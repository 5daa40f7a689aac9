#include "faithdim/constructors.hpp"

#include <algorithm>
#include <map>

namespace faithdim {

Poset::Poset(unsigned n,
             const std::vector<std::pair<unsigned, unsigned>>& relations)
    : n_(n), rel_(std::size_t(n) * n, false) {
  for (auto [i, j] : relations) {
    if (i < 1 || j < 1 || i > n || j > n)
      throw input_error("poset relation index out of range");
    if (i >= j)
      throw input_error("poset relations require i < j, got (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
    rel_[(i - 1) * n_ + (j - 1)] = true;
  }
  // transitive closure
  for (unsigned k = 0; k < n; ++k)
    for (unsigned i = 0; i < n; ++i)
      if (rel_[i * n_ + k])
        for (unsigned j = 0; j < n; ++j)
          if (rel_[k * n_ + j]) rel_[i * n_ + j] = true;
}

std::vector<std::pair<unsigned, unsigned>> Poset::pairs() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 1; i <= n_; ++i)
    for (unsigned j = i + 1; j <= n_; ++j)
      if (less(i, j)) out.emplace_back(i, j);
  return out;
}

ZLieAlgebra pattern_algebra(const Poset& p) {
  auto prs = p.pairs();
  std::map<std::pair<unsigned, unsigned>, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < prs.size(); ++k) {
    index[prs[k]] = k;
    names.push_back("e" + std::to_string(prs[k].first) +
                    std::to_string(prs[k].second));
  }
  ZLieAlgebra g(prs.size(), names);
  // [e_ij, e_kl] = delta_jk e_il - delta_li e_kj
  for (std::size_t a = 0; a < prs.size(); ++a)
    for (std::size_t b = a + 1; b < prs.size(); ++b) {
      auto [i, j] = prs[a];
      auto [k, l] = prs[b];
      std::vector<Int> r(prs.size(), 0);
      if (j == k) r[index.at({i, l})] += 1;
      if (l == i) r[index.at({k, j})] -= 1;
      g.set_bracket(a, b, std::move(r));
    }
  return g;
}

std::vector<std::pair<unsigned, unsigned>> extreme_pairs(const Poset& p) {
  const unsigned n = p.n();
  std::vector<bool> minimal(n + 1, true), maximal(n + 1, true);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      if (p.less(i, j)) {
        minimal[j] = false;
        maximal[i] = false;
      }
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      if (p.less(i, j) && minimal[i] && maximal[j]) out.emplace_back(i, j);
  return out;
}

unsigned alpha(const Poset& p, unsigned i, unsigned j) {
  if (!p.less(i, j))
    throw input_error("alpha requires a comparable pair");
  unsigned count = 0;
  for (unsigned k = 1; k <= p.n(); ++k)
    if (p.less(i, k) && p.less(k, j)) ++count;
  return count;
}

unsigned poset_length(const Poset& p) {
  const unsigned n = p.n();
  std::vector<unsigned> h(n + 1, 0);
  // indices are topologically sorted by the i < j convention
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned i = 1; i < j; ++i)
      if (p.less(i, j)) h[j] = std::max(h[j], h[i] + 1);
  return *std::max_element(h.begin(), h.end());
}

std::uint64_t pattern_prediction(const Poset& p, std::uint32_t prime,
                                 unsigned f) {
  if (prime <= poset_length(p))
    throw refusal("prime " + std::to_string(prime) +
                  " too small: need p > poset length " +
                  std::to_string(poset_length(p)));
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) q *= prime;
  std::uint64_t total = 0;
  for (auto [i, j] : extreme_pairs(p)) {
    std::uint64_t w = f;
    for (unsigned e = 0; e < alpha(p, i, j); ++e) {
      if (w > (std::uint64_t(1) << 62) / q)
        throw internal_error("prediction overflows");
      w *= q;
    }
    total += w;
  }
  return total;
}

std::uint64_t witt(unsigned n, unsigned c) {
  if (n < 1 || c < 1) throw input_error("witt requires n, c >= 1");
  auto mobius = [](unsigned x) {
    int m = 1;
    for (unsigned d = 2; d * d <= x; ++d)
      if (x % d == 0) {
        x /= d;
        if (x % d == 0) return 0;
        m = -m;
      }
    if (x > 1) m = -m;
    return m;
  };
  std::int64_t total = 0;
  for (unsigned d = 1; d <= c; ++d) {
    if (c % d != 0) continue;
    std::int64_t pw = 1;
    for (unsigned i = 0; i < c / d; ++i) pw *= n;
    total += mobius(d) * pw;
  }
  return std::uint64_t(total / c);
}

HallBasis::HallBasis(unsigned n, unsigned c) : n_(n), c_(c) {
  if (n < 1 || c < 1) throw input_error("Hall basis requires n, c >= 1");
  by_length_.resize(c + 1);
  for (unsigned i = 0; i < n; ++i) {
    len_.push_back(1);
    gen_.push_back(int(i));
    left_.push_back(SIZE_MAX);
    right_.push_back(SIZE_MAX);
    node_key_.emplace_back(SIZE_MAX, SIZE_MAX);
    by_length_[1].push_back(i);
  }
  for (unsigned len = 2; len <= c; ++len) {
    std::vector<std::size_t> created;
    if (len == 2) {
      for (unsigned a = 0; a < n; ++a)
        for (unsigned b = a + 1; b < n; ++b) {
          len_.push_back(2);
          gen_.push_back(-1);
          left_.push_back(a);
          right_.push_back(b);
          node_key_.emplace_back(a, b);
          created.push_back(len_.size() - 1);
        }
    } else {
      // (C): [a, h] with h = [b, c'] in H, b <= a < h
      for (unsigned lh = 2; lh < len; ++lh) {
        unsigned la = len - lh;
        for (std::size_t h : by_length_[lh])
          for (std::size_t a : by_length_[la]) {
            std::size_t b = left_[h];
            if (!(b == a || word_less(b, a))) continue;  // b <= a
            if (!word_less(a, h)) continue;              // a < h
            len_.push_back(len);
            gen_.push_back(-1);
            left_.push_back(a);
            right_.push_back(h);
            node_key_.emplace_back(a, h);
            created.push_back(len_.size() - 1);
          }
      }
    }
    std::sort(created.begin(), created.end(),
              [&](std::size_t x, std::size_t y) { return word_less(x, y); });
    by_length_[len] = created;
  }
  // Re-pack so that id order is (length, word order).
  std::vector<std::size_t> order;
  for (unsigned len = 1; len <= c; ++len)
    for (std::size_t id : by_length_[len]) order.push_back(id);
  std::vector<std::size_t> newid(len_.size());
  for (std::size_t i = 0; i < order.size(); ++i) newid[order[i]] = i;
  HallBasis packed = *this;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t old = order[i];
    packed.len_[i] = len_[old];
    packed.gen_[i] = gen_[old];
    packed.left_[i] = left_[old] == SIZE_MAX ? SIZE_MAX : newid[left_[old]];
    packed.right_[i] = right_[old] == SIZE_MAX ? SIZE_MAX : newid[right_[old]];
    packed.node_key_[i] = {packed.left_[i], packed.right_[i]};
  }
  for (unsigned len = 1; len <= c; ++len)
    for (auto& id : packed.by_length_[len]) id = newid[id];
  len_ = std::move(packed.len_);
  gen_ = std::move(packed.gen_);
  left_ = std::move(packed.left_);
  right_ = std::move(packed.right_);
  node_key_ = std::move(packed.node_key_);
  by_length_ = std::move(packed.by_length_);
  memo_.clear();
}

bool HallBasis::word_less(std::size_t a, std::size_t b) const {
  if (len_[a] != len_[b]) return len_[a] < len_[b];
  if (len_[a] == 1) return gen_[a] < gen_[b];
  if (left_[a] != left_[b]) return word_less(left_[a], left_[b]);
  if (right_[a] == right_[b]) return false;
  return word_less(right_[a], right_[b]);
}

std::vector<std::size_t> HallBasis::words_of_length(unsigned len) const {
  return by_length_.at(len);
}

std::string HallBasis::name(std::size_t id) const {
  if (gen_[id] >= 0) return "x" + std::to_string(gen_[id] + 1);
  return "[" + name(left_[id]) + "," + name(right_[id]) + "]";
}

std::vector<std::pair<std::size_t, Int>> HallBasis::bracket(
    std::size_t u, std::size_t v) const {
  return bracket_impl(u, v, 0);
}

std::vector<std::pair<std::size_t, Int>> HallBasis::bracket_impl(
    std::size_t u, std::size_t v, unsigned depth) const {
  if (depth > 10 * c_)
    throw internal_error("Hall rewriting exceeded its depth guard");
  using Sparse = std::vector<std::pair<std::size_t, Int>>;
  if (u == v) return {};
  if (len_[u] + len_[v] > c_) return {};
  if (word_less(v, u)) {
    Sparse r = bracket_impl(v, u, depth + 1);
    for (auto& t : r) t.second = -t.second;
    return r;
  }
  if (auto it = memo_.find({u, v}); it != memo_.end()) return it->second;

  Sparse result;
  // Is [u, v] itself a Hall word?
  bool hall = false;
  if (len_[v] == 1)
    hall = true;  // u, v letters with u < v: condition (B)
  else
    hall = left_[v] == u || word_less(left_[v], u);  // b <= u (and u < v)
  if (hall) {
    // find the node with key (u, v)
    for (std::size_t id : by_length_[len_[u] + len_[v]])
      if (node_key_[id] == std::make_pair(u, v)) {
        result = {{id, Int(1)}};
        break;
      }
    if (result.empty())
      throw internal_error("Hall node lookup failed");
  } else {
    // u < v = [b, c'] with u < b: [u,[b,c']] = [[u,b],c'] + [b,[u,c']]
    const std::size_t b = left_[v], cp = right_[v];
    std::map<std::size_t, Int> acc;
    for (const auto& [w, coef] : bracket_impl(u, b, depth + 1))
      for (const auto& [w2, coef2] : bracket_impl(w, cp, depth + 1))
        acc[w2] += coef * coef2;
    for (const auto& [w, coef] : bracket_impl(u, cp, depth + 1))
      for (const auto& [w2, coef2] : bracket_impl(b, w, depth + 1))
        acc[w2] += coef * coef2;
    for (const auto& [w, coef] : acc)
      if (coef != 0) result.emplace_back(w, coef);
  }
  memo_[{u, v}] = result;
  return result;
}

ZLieAlgebra free_nilpotent(unsigned n, unsigned c) {
  if (n < 2 || c < 2)
    throw input_error("free nilpotent constructor requires n >= 2, c >= 2");
  HallBasis hall(n, c);
  const std::size_t d = hall.size();
  if (d > 64) throw refusal("free nilpotent algebra too large (dim > 64)");
  std::vector<std::string> names;
  std::vector<unsigned> grading;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back(hall.name(i));
    grading.push_back(hall.length(i));
  }
  ZLieAlgebra g(d, names);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Int> r(d, 0);
      for (const auto& [w, coef] : hall.bracket(i, j)) r[w] = coef;
      g.set_bracket(i, j, std::move(r));
    }
  g.set_grading(std::move(grading));
  return g;
}

ZLieAlgebra free_metabelian_2(unsigned c) {
  if (c < 2) throw input_error("free metabelian constructor requires c >= 2");
  // basis: x1, x2, then y^k_l for 2 <= k <= c, 1 <= l <= k-1
  std::vector<std::string> names{"x1", "x2"};
  std::vector<unsigned> grading{1, 1};
  std::map<std::pair<unsigned, unsigned>, std::size_t> yindex;
  for (unsigned k = 2; k <= c; ++k)
    for (unsigned l = 1; l <= k - 1; ++l) {
      yindex[{k, l}] = names.size();
      names.push_back("y" + std::to_string(k) + "_" + std::to_string(l));
      grading.push_back(k);
    }
  const std::size_t d = names.size();
  ZLieAlgebra g(d, names);
  std::vector<Int> r(d, 0);
  r[yindex.at({2, 1})] = 1;
  g.set_bracket(0, 1, r);  // [x1, x2] = y^2_1
  for (unsigned k = 2; k < c; ++k)
    for (unsigned l = 1; l <= k - 1; ++l) {
      std::vector<Int> r1(d, 0);
      r1[yindex.at({k + 1, l})] = 1;
      g.set_bracket(0, yindex.at({k, l}), std::move(r1));  // [x1, y^k_l]
      std::vector<Int> r2(d, 0);
      r2[yindex.at({k + 1, l + 1})] = 1;
      g.set_bracket(1, yindex.at({k, l}), std::move(r2));  // [x2, y^k_l]
    }
  g.set_grading(std::move(grading));
  return g;
}

namespace {

std::vector<Int> unit(std::size_t d, std::size_t k, Int c = Int(1)) {
  std::vector<Int> v(d, 0);
  v[k] = std::move(c);
  return v;
}

}  // namespace

ZLieAlgebra binary_quadratic_algebra() {
  ZLieAlgebra g(6);
  g.set_bracket(0, 1, unit(6, 4));
  g.set_bracket(2, 3, unit(6, 4));
  g.set_bracket(0, 3, unit(6, 5));
  g.set_bracket(1, 2, unit(6, 5));
  return g;
}

ZLieAlgebra binary_cubic_algebra() {
  ZLieAlgebra g(8);
  g.set_bracket(0, 3, unit(8, 6));
  g.set_bracket(1, 4, unit(8, 6));
  g.set_bracket(2, 5, unit(8, 6));
  g.set_bracket(0, 4, unit(8, 7));
  g.set_bracket(1, 5, unit(8, 7));
  g.set_bracket(2, 4, unit(8, 7));
  g.set_bracket(2, 3, unit(8, 7, Int(-1)));
  return g;
}

ZLieAlgebra lee_algebra() {
  // The displayed relations read as [v1,v5] = v7 and [v3,v4] = 2 v7.
  ZLieAlgebra g(8);
  g.set_bracket(0, 3, unit(8, 5));
  g.set_bracket(1, 4, unit(8, 5));
  g.set_bracket(0, 4, unit(8, 6));
  g.set_bracket(2, 3, unit(8, 6, Int(2)));
  g.set_bracket(1, 3, unit(8, 7));
  g.set_bracket(2, 4, unit(8, 7));
  return g;
}

ZLieAlgebra elliptic_algebra(const Int& a) {
  if (a == 0) throw input_error("elliptic algebra requires a != 0");
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

ZLieAlgebra heisenberg_algebra(unsigned k) {
  if (k < 1) throw input_error("heisenberg index must be >= 1");
  std::vector<std::pair<unsigned, unsigned>> rel;
  for (unsigned mid = 2; mid <= k + 1; ++mid) {
    rel.emplace_back(1, mid);
    rel.emplace_back(mid, k + 2);
  }
  return pattern_algebra(Poset(k + 2, rel));
}

ZLieAlgebra unitriangular_algebra(unsigned k) {
  if (k < 2) throw input_error("unitriangular index must be >= 2");
  std::vector<std::pair<unsigned, unsigned>> rel;
  for (unsigned i = 1; i < k; ++i) rel.emplace_back(i, i + 1);
  return pattern_algebra(Poset(k, rel));
}

ZLieAlgebra abelian_algebra(unsigned k) { return ZLieAlgebra(k); }

ZLieAlgebra companion_algebra(const std::vector<Int>& monic_poly) {
  if (monic_poly.size() < 2 || monic_poly.back() != 1)
    throw input_error("companion constructor requires a monic polynomial of "
                      "degree >= 1");
  const std::size_t k = monic_poly.size() - 1;
  const std::size_t d = 2 * k + 2;
  // basis v_1..v_k, v_{k+1}..v_{2k}, w_1, w_2
  ZLieAlgebra g(d);
  // companion matrix C: C e_j = e_{j+1} for j < k; C e_k = -sum a_i e_{i+1}
  // as columns; entries C(i, j).
  auto comp = [&](std::size_t i, std::size_t j) -> Int {
    if (j + 1 < k) return i == j + 1 ? Int(1) : Int(0);
    return -monic_poly[i];
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      // M(i,j) = T1 delta_ij - T2 C(i,j)
      std::vector<Int> r(d, 0);
      if (i == j) r[2 * k] += 1;
      r[2 * k + 1] -= comp(i, j);
      g.set_bracket(i, k + j, std::move(r));
    }
  return g;
}

ZLieAlgebra example_algebra(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    try {
      return Int(s);
    } catch (const std::exception&) {
      throw input_error("cannot parse integer '" + s + "' in example spec");
    }
  };
  auto need_int = [&]() {
    if (arg.empty())
      throw input_error("example '" + name + "' needs a parameter, e.g. " +
                        name + ":2");
    return parse_int(arg);
  };
  if (name == "binary_quadratic") return binary_quadratic_algebra();
  if (name == "binary_cubic") return binary_cubic_algebra();
  if (name == "lee") return lee_algebra();
  if (name == "elliptic")
    return elliptic_algebra(arg.empty() ? Int(1) : parse_int(arg));
  if (name == "heisenberg")
    return heisenberg_algebra(need_int().convert_to<unsigned>());
  if (name == "unitriangular")
    return unitriangular_algebra(need_int().convert_to<unsigned>());
  if (name == "abelian") return abelian_algebra(need_int().convert_to<unsigned>());
  if (name == "companion") {
    std::vector<Int> coeffs;
    std::string cur;
    for (char ch : arg + ",") {
      if (ch == ',') {
        if (!cur.empty()) coeffs.push_back(parse_int(cur));
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    return companion_algebra(coeffs);
  }
  throw input_error("unknown example algebra '" + name + "'");
}

}  // namespace faithdim
