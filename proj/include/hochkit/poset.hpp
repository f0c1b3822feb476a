#pragma once

#include "bitset.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hochkit {

// Finite poset given by its cover relations. Elements are indexed 0..size()-1 and
// carry opaque string keys.
class FinitePoset {
 public:
  FinitePoset() = default;

  FinitePoset(std::vector<std::string> keys, std::vector<std::pair<int, int>> covers)
      : keys_(std::move(keys)), covers_(std::move(covers)) {
    const int N = size();
    for (int i = 0; i < N; ++i)
      if (!index_.emplace(keys_[i], i).second) throw std::invalid_argument("duplicate element key " + keys_[i]);
    up_adj_.assign(N, {});
    down_adj_.assign(N, {});
    for (auto [lo, hi] : covers_) {
      if (lo < 0 || hi < 0 || lo >= N || hi >= N) throw std::invalid_argument("cover index out of range");
      if (lo == hi) throw std::invalid_argument("cover relation is a loop");
      up_adj_[lo].push_back(hi);
      down_adj_[hi].push_back(lo);
    }
    for (auto& v : up_adj_) std::sort(v.begin(), v.end());
    for (auto& v : down_adj_) std::sort(v.begin(), v.end());

    // Kahn's algorithm, smallest index first.
    std::vector<int> indeg(N, 0);
    for (auto [lo, hi] : covers_) ++indeg[hi];
    std::priority_queue<int, std::vector<int>, std::greater<int>> q;
    for (int i = 0; i < N; ++i)
      if (!indeg[i]) q.push(i);
    while (!q.empty()) {
      int x = q.top();
      q.pop();
      topo_.push_back(x);
      for (int y : up_adj_[x])
        if (--indeg[y] == 0) q.push(y);
    }
    if (static_cast<int>(topo_.size()) != N) throw std::invalid_argument("cover digraph has a cycle");

    down_.assign(N, Bitset(N));
    for (int x : topo_) {
      down_[x].set(x);
      for (int y : down_adj_[x]) down_[x] |= down_[y];
    }
    up_.assign(N, Bitset(N));
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      int x = *it;
      up_[x].set(x);
      for (int y : up_adj_[x]) up_[x] |= up_[y];
    }
    down_count_.resize(N);
    for (int i = 0; i < N; ++i) down_count_[i] = static_cast<int>(down_[i].count());

    for (int x = 0; x < N; ++x)
      for (std::size_t a = 0; a < up_adj_[x].size(); ++a) {
        if (a > 0 && up_adj_[x][a] == up_adj_[x][a - 1]) throw std::invalid_argument("repeated cover relation");
        for (int c : up_adj_[x])
          if (c != up_adj_[x][a] && up_[c].test(up_adj_[x][a]))
            throw std::invalid_argument("redundant cover " + keys_[x] + " < " + keys_[up_adj_[x][a]]);
      }
  }

  // Build from an order predicate on indices by extracting covers.
  static FinitePoset from_order(std::vector<std::string> keys, const std::function<bool(int, int)>& leq) {
    const int N = static_cast<int>(keys.size());
    std::vector<Bitset> strict_up(N, Bitset(N));
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (a != b && leq(a, b)) strict_up[a].set(b);
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < N; ++a)
      strict_up[a].for_each([&](std::size_t b) {
        bool cover = true;
        strict_up[a].for_each([&](std::size_t c) {
          if (c != b && strict_up[c].test(b)) cover = false;
        });
        if (cover) covers.emplace_back(a, static_cast<int>(b));
      });
    return FinitePoset(std::move(keys), std::move(covers));
  }

  int size() const { return static_cast<int>(keys_.size()); }
  const std::string& key(int i) const { return keys_[i]; }
  const std::vector<std::string>& keys() const { return keys_; }
  int index_of(const std::string& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) throw std::out_of_range("unknown element " + k);
    return it->second;
  }
  bool contains(const std::string& k) const { return index_.count(k) > 0; }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return up_adj_[x]; }
  const std::vector<int>& lower_covers(int x) const { return down_adj_[x]; }
  const std::vector<int>& linear_extension() const { return topo_; }
  const Bitset& down_set(int x) const { return down_[x]; }
  const Bitset& up_set(int x) const { return up_[x]; }

  bool leq(int a, int b) const { return down_[b].test(a); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }

  std::vector<int> minimal() const {
    std::vector<int> r;
    for (int i = 0; i < size(); ++i)
      if (down_adj_[i].empty()) r.push_back(i);
    return r;
  }
  std::vector<int> maximal() const {
    std::vector<int> r;
    for (int i = 0; i < size(); ++i)
      if (up_adj_[i].empty()) r.push_back(i);
    return r;
  }
  std::optional<int> bottom() const {
    auto m = minimal();
    if (m.size() == 1) return m[0];
    return std::nullopt;
  }
  std::optional<int> top() const {
    auto m = maximal();
    if (m.size() == 1) return m[0];
    return std::nullopt;
  }
  bool is_bounded() const { return size() > 0 && bottom() && top(); }

  std::optional<int> meet(int a, int b) const {
    Bitset L = down_[a] & down_[b];
    long best = -1;
    int best_count = -1;
    L.for_each([&](std::size_t c) {
      if (down_count_[c] > best_count) {
        best_count = down_count_[c];
        best = static_cast<long>(c);
      }
    });
    if (best < 0) return std::nullopt;
    if (!L.subset_of(down_[best])) return std::nullopt;
    return static_cast<int>(best);
  }

  std::optional<int> join(int a, int b) const {
    Bitset U = up_[a] & up_[b];
    long best = -1;
    int best_count = -1;
    U.for_each([&](std::size_t c) {
      int cnt = size() - down_count_[c];
      if (cnt > best_count) {
        best_count = cnt;
        best = static_cast<long>(c);
      }
    });
    if (best < 0) return std::nullopt;
    if (!U.subset_of(up_[best])) return std::nullopt;
    return static_cast<int>(best);
  }

  std::optional<std::string> meet(const std::string& a, const std::string& b) const {
    auto r = meet(index_of(a), index_of(b));
    if (!r) return std::nullopt;
    return keys_[*r];
  }
  std::optional<std::string> join(const std::string& a, const std::string& b) const {
    auto r = join(index_of(a), index_of(b));
    if (!r) return std::nullopt;
    return keys_[*r];
  }

  // Longest chain length (number of covers); 0 for an antichain.
  int length() const {
    std::vector<int> h(size(), 0);
    int best = 0;
    for (int x : topo_)
      for (int y : up_adj_[x]) {
        h[y] = std::max(h[y], h[x] + 1);
        best = std::max(best, h[y]);
      }
    return best;
  }

  // Rank function when every cover raises it by one from a rank-0 minimum set.
  std::optional<std::vector<int>> ranks() const {
    std::vector<int> r(size(), -1);
    for (int x : topo_) {
      if (down_adj_[x].empty()) r[x] = 0;
      for (int y : down_adj_[x]) {
        if (r[x] == -1) r[x] = r[y] + 1;
        else if (r[x] != r[y] + 1) return std::nullopt;
      }
    }
    return r;
  }

 private:
  std::vector<std::string> keys_;
  std::vector<std::pair<int, int>> covers_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> up_adj_, down_adj_;
  std::vector<int> topo_;
  std::vector<Bitset> down_, up_;
  std::vector<int> down_count_;
};

// A pair of elements without meet/join, if any.
struct LatticeWitness {
  bool all_meets = true;
  bool all_joins = true;
  std::optional<std::pair<int, int>> meetless, joinless;
};

inline LatticeWitness lattice_witness(const FinitePoset& p) {
  LatticeWitness w;
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b) {
      if (w.all_meets && !p.meet(a, b)) {
        w.all_meets = false;
        w.meetless = {a, b};
      }
      if (w.all_joins && !p.join(a, b)) {
        w.all_joins = false;
        w.joinless = {a, b};
      }
      if (!w.all_meets && !w.all_joins) return w;
    }
  return w;
}

inline bool is_lattice(const FinitePoset& p) {
  if (!p.is_bounded()) return false;
  auto w = lattice_witness(p);
  return w.all_meets && w.all_joins;
}

struct MorphismCheckReport {
  bool is_meet_morphism = true;
  bool is_join_morphism = true;
  std::optional<std::pair<int, int>> meet_counterexample;
  std::optional<std::pair<int, int>> join_counterexample;
};

// Exhaustive test of f(x meet y) = f(x) meet f(y) and the dual; f maps src indices to dst indices.
inline MorphismCheckReport check_meet_morphism(const std::vector<int>& f, const FinitePoset& src,
                                               const FinitePoset& dst) {
  if (static_cast<int>(f.size()) != src.size()) throw std::invalid_argument("map is not total");
  for (int v : f)
    if (v < 0 || v >= dst.size()) throw std::invalid_argument("map leaves the target");
  MorphismCheckReport r;
  for (int x = 0; x < src.size(); ++x)
    for (int y = x + 1; y < src.size(); ++y) {
      if (r.is_meet_morphism) {
        auto a = src.meet(x, y);
        auto b = dst.meet(f[x], f[y]);
        if (!a || !b || f[*a] != *b) {
          r.is_meet_morphism = false;
          r.meet_counterexample = {x, y};
        }
      }
      if (r.is_join_morphism) {
        auto a = src.join(x, y);
        auto b = dst.join(f[x], f[y]);
        if (!a || !b || f[*a] != *b) {
          r.is_join_morphism = false;
          r.join_counterexample = {x, y};
        }
      }
    }
  return r;
}

// ---- polynomials over the integers (coefficients low degree first) ----

using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::string to_string(const IntPoly& p) {
  std::string s;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] == 0) continue;
    BigInt c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (c != 1 || i == 0) s += c.str();
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

// Exact division by a monic divisor; returns nullopt when the remainder is nonzero.
inline std::optional<IntPoly> divide_exact(IntPoly num, const IntPoly& den) {
  trim(num);
  int dn = static_cast<int>(den.size()) - 1;
  if (dn < 0 || den.back() != 1) throw std::invalid_argument("divisor must be monic");
  if (static_cast<int>(num.size()) - 1 < dn) {
    if (num.empty()) return IntPoly{};
    return std::nullopt;
  }
  IntPoly q(num.size() - dn, 0);
  for (int i = static_cast<int>(num.size()) - 1; i >= dn; --i) {
    BigInt c = num[i];
    q[i - dn] = c;
    if (c != 0)
      for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) return std::nullopt;
  trim(q);
  return q;
}

inline IntPoly cyclotomic(int k) {
  static std::map<int, IntPoly> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
  }
  IntPoly p(k + 1, 0);
  p[0] = -1;
  p[k] = 1;
  for (int d = 1; d < k; ++d)
    if (k % d == 0) p = *divide_exact(p, cyclotomic(d));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(k, p);
  return p;
}

inline int euler_phi(int k) {
  int r = k;
  for (int p = 2; p * p <= k; ++p)
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      r -= r / p;
    }
  if (k > 1) r -= r / k;
  return r;
}

// Whether a monic integer polynomial factors into cyclotomic polynomials.
inline bool is_cyclotomic_product(IntPoly p) {
  trim(p);
  if (p.empty() || p.back() != 1) return false;
  int deg = static_cast<int>(p.size()) - 1;
  // phi(k) >= sqrt(k/2), so k <= 2 deg^2 suffices.
  for (int k = 1; k <= 2 * deg * deg + 2 && p.size() > 1; ++k) {
    if (euler_phi(k) > static_cast<int>(p.size()) - 1) continue;
    IntPoly c = cyclotomic(k);
    while (p.size() > 1) {
      auto q = divide_exact(p, c);
      if (!q) break;
      p = *q;
    }
  }
  return p.size() == 1 && p[0] == 1;
}

// Characteristic polynomial det(xI - A) by Berkowitz's division-free algorithm.
inline IntPoly characteristic_polynomial(const std::vector<std::vector<BigInt>>& A) {
  const int n = static_cast<int>(A.size());
  // Coefficients of det(xI - A), high degree first during the computation.
  std::vector<BigInt> poly{1};
  for (int r = 0; r < n; ++r) {
    // Leading principal submatrix of size r+1: a = A[r][r], R = row r (cols < r), C = col r (rows < r).
    std::vector<BigInt> t(r + 2, 0);
    t[0] = 1;
    t[1] = -A[r][r];
    std::vector<BigInt> col(r);
    for (int i = 0; i < r; ++i) col[i] = A[i][r];
    for (int k = 2; k <= r + 1; ++k) {
      BigInt s = 0;
      for (int j = 0; j < r; ++j) s += A[r][j] * col[j];
      t[k] = -s;
      std::vector<BigInt> nc(r, 0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) nc[i] += A[i][j] * col[j];
      col = std::move(nc);
    }
    std::vector<BigInt> np(r + 2, 0);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= i && j < static_cast<int>(poly.size()); ++j) np[i] += t[i - j] * poly[j];
    poly = std::move(np);
  }
  IntPoly out(poly.rbegin(), poly.rend());
  return out;
}

// Coxeter polynomial: characteristic polynomial of -Z^{-1} Z^T, Z the zeta matrix in
// a linear extension.
inline IntPoly coxeter_polynomial(const FinitePoset& p) {
  const int N = p.size();
  const auto& order = p.linear_extension();
  std::vector<int> pos(N);
  for (int i = 0; i < N; ++i) pos[order[i]] = i;
  std::vector<std::vector<BigInt>> Z(N, std::vector<BigInt>(N, 0)), M(N, std::vector<BigInt>(N, 0));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (p.leq(a, b)) Z[pos[a]][pos[b]] = 1;
  // Z is upper unitriangular; its inverse is the Moebius matrix.
  for (int i = N - 1; i >= 0; --i) {
    M[i][i] = 1;
    for (int j = i + 1; j < N; ++j) {
      BigInt s = 0;
      for (int k = i + 1; k <= j; ++k) s += Z[i][k] * M[k][j];
      M[i][j] = -s;
    }
  }
  std::vector<std::vector<BigInt>> C(N, std::vector<BigInt>(N, 0));
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      if (M[i][k] == 0) continue;
      for (int j = 0; j < N; ++j)
        if (Z[j][k] != 0) C[i][j] -= M[i][k] * Z[j][k];
    }
  return characteristic_polynomial(C);
}

struct LatticeAnalytics {
  bool is_lattice = false;
  bool is_meet_semidistributive = false;
  bool is_join_semidistributive = false;
  bool is_extremal = false;
  int join_irreducibles = 0;
  int meet_irreducibles = 0;
  int length = 0;
  bool coxeter_computed = false;  // false above the size limit
  IntPoly coxeter_polynomial;
  bool coxeter_is_cyclotomic = false;
};

namespace detail {

// x meet (join of all y with x meet y = v) must equal v, for every x and v.
inline bool semidistributive(const FinitePoset& p, bool meet_side) {
  const int N = p.size();
  auto op = [&](int a, int b) { return meet_side ? p.meet(a, b) : p.join(a, b); };
  auto co = [&](int a, int b) { return meet_side ? p.join(a, b) : p.meet(a, b); };
  for (int x = 0; x < N; ++x) {
    std::map<int, int> fold;
    for (int y = 0; y < N; ++y) {
      int v = *op(x, y);
      auto it = fold.find(v);
      if (it == fold.end()) fold.emplace(v, y);
      else it->second = *co(it->second, y);
    }
    for (auto [v, j] : fold)
      if (*op(x, j) != v) return false;
  }
  return true;
}

}  // namespace detail

// Analytics bundle; Coxeter data is skipped above `coxeter_limit` elements.
inline LatticeAnalytics lattice_analytics(const FinitePoset& p, int coxeter_limit = 200) {
  if (!p.is_bounded()) throw std::invalid_argument("lattice analytics need a bounded poset");
  LatticeAnalytics a;
  a.is_lattice = is_lattice(p);
  a.length = p.length();
  for (int i = 0; i < p.size(); ++i) {
    if (p.lower_covers(i).size() == 1) ++a.join_irreducibles;
    if (p.upper_covers(i).size() == 1) ++a.meet_irreducibles;
  }
  a.is_extremal = a.is_lattice && a.join_irreducibles == a.length && a.meet_irreducibles == a.length;
  if (a.is_lattice) {
    a.is_meet_semidistributive = detail::semidistributive(p, true);
    a.is_join_semidistributive = detail::semidistributive(p, false);
  }
  if (p.size() <= coxeter_limit) {
    a.coxeter_computed = true;
    a.coxeter_polynomial = coxeter_polynomial(p);
    a.coxeter_is_cyclotomic = is_cyclotomic_product(a.coxeter_polynomial);
  }
  return a;
}

}  // namespace hochkit
