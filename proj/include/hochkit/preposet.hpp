#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hochkit {

// A reflexive relation on {1..d} (d <= 32), normally kept transitively closed.
// Row i holds the up-set of i as a bit mask (bit j-1 set iff i <= j).
class Preposet {
 public:
  static constexpr int kMaxSize = 32;

  Preposet() = default;
  explicit Preposet(int d) : d_(d), up_(d, 0) {
    if (d < 0 || d > kMaxSize) throw std::invalid_argument("preposet size out of range");
    for (int i = 0; i < d; ++i) up_[i] = bit(i);
  }

  int size() const { return d_; }
  bool leq(int i, int j) const { return (up_[i - 1] >> (j - 1)) & 1u; }
  bool strictly_less(int i, int j) const { return leq(i, j) && !leq(j, i); }
  bool equivalent(int i, int j) const { return leq(i, j) && leq(j, i); }
  std::uint32_t up_mask(int i) const { return up_[i - 1]; }

  void add(int i, int j) {
    check(i);
    check(j);
    up_[i - 1] |= bit(j - 1);
  }

  Preposet& close() {
    for (int k = 0; k < d_; ++k)
      for (int i = 0; i < d_; ++i)
        if ((up_[i] >> k) & 1u) up_[i] |= up_[k];
    return *this;
  }

  Preposet closed() const {
    Preposet p = *this;
    return p.close();
  }

  // Relation inclusion: every pair of `o` is a pair of `*this`.
  bool contains(const Preposet& o) const {
    for (int i = 0; i < d_; ++i)
      if (o.up_[i] & ~up_[i]) return false;
    return true;
  }

  Preposet united(const Preposet& o) const {
    Preposet p = *this;
    for (int i = 0; i < d_; ++i) p.up_[i] |= o.up_[i];
    return p.close();
  }

  // Number of ordered pairs i != j with i <= j.
  int pair_count() const {
    int c = 0;
    for (int i = 0; i < d_; ++i) c += std::popcount(up_[i]) - 1;
    return c;
  }

  bool is_antisymmetric() const {
    for (int i = 1; i <= d_; ++i)
      for (int j = i + 1; j <= d_; ++j)
        if (equivalent(i, j)) return false;
    return true;
  }

  // Total order test (the chambers of the braid fan).
  bool is_total_order() const {
    if (!is_antisymmetric()) return false;
    for (int i = 1; i <= d_; ++i)
      for (int j = i + 1; j <= d_; ++j)
        if (!leq(i, j) && !leq(j, i)) return false;
    return true;
  }

  // Equivalence classes as sorted lists, ordered by least element.
  std::vector<std::vector<int>> classes() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(d_ + 1, false);
    for (int i = 1; i <= d_; ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      for (int j = i; j <= d_; ++j)
        if (equivalent(i, j)) {
          c.push_back(j);
          seen[j] = true;
        }
      out.push_back(std::move(c));
    }
    return out;
  }

  // Cover relations of the quotient poset, as pairs of class indices into classes().
  std::vector<std::pair<int, int>> hasse() const {
    auto cl = classes();
    int c = static_cast<int>(cl.size());
    auto lt = [&](int a, int b) { return strictly_less(cl[a][0], cl[b][0]); };
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < c; ++a)
      for (int b = 0; b < c; ++b) {
        if (!lt(a, b)) continue;
        bool cover = true;
        for (int x = 0; x < c && cover; ++x)
          if (lt(a, x) && lt(x, b)) cover = false;
        if (cover) out.emplace_back(a, b);
      }
    return out;
  }

  // The undirected Hasse diagram of the quotient has no cycle.
  bool hasse_is_forest() const {
    auto cl = classes();
    std::vector<int> parent(cl.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : hasse()) {
      int ra = find(a), rb = find(b);
      if (ra == rb) return false;
      parent[ra] = rb;
    }
    return true;
  }

  // Linear extension of the quotient: a listing of 1..d compatible with the relation.
  std::vector<int> linear_extension() const {
    std::vector<int> order(d_);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      int da = std::popcount(down_mask(a)), db = std::popcount(down_mask(b));
      return da < db;
    });
    return order;
  }

  std::uint32_t down_mask(int j) const {
    std::uint32_t m = 0;
    for (int i = 1; i <= d_; ++i)
      if (leq(i, j)) m |= bit(i - 1);
    return m;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= d_; ++i)
      for (int j = 1; j <= d_; ++j)
        if (i != j && leq(i, j)) {
          if (!s.empty()) s += ", ";
          s += std::to_string(i) + "<=" + std::to_string(j);
        }
    return "{" + s + "}";
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(d_);
    for (auto r : up_) h = h * 1000003u ^ r;
    return h;
  }

  friend bool operator==(const Preposet&, const Preposet&) = default;

 private:
  static std::uint32_t bit(int k) { return std::uint32_t{1} << k; }
  void check(int i) const {
    if (i < 1 || i > d_) throw std::out_of_range("preposet element out of range");
  }

  int d_ = 0;
  std::vector<std::uint32_t> up_;
};

struct PreposetHash {
  std::size_t operator()(const Preposet& p) const { return p.hash(); }
};

}  // namespace hochkit
