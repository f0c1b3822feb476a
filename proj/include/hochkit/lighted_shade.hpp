#pragma once

#include "common.hpp"
#include "numeric.hpp"
#include "preposet.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hochkit {

struct ShadeEntry {
  std::vector<int> tuple;
  std::vector<int> lights;  // sorted; empty when the position carries no cut
  friend bool operator==(const ShadeEntry&, const ShadeEntry&) = default;
};

// An m-lighted n-shade: a top-to-bottom sequence of integer tuples with total sum n,
// some positions carrying a cut; the cut labels form an ordered partition of [m].
class LightedShade {
 public:
  // One integer of some tuple together with its preceding sum.
  struct Cell {
    int entry;
    int value;
    int ps;
  };

  LightedShade(int m, int n, std::vector<ShadeEntry> entries) : m_(m), n_(n), entries_(std::move(entries)) {
    check_parameters(m, n);
    int sum = 0;
    std::vector<bool> seen(m + 1, false);
    int cuts = 0;
    for (auto& e : entries_) {
      for (int x : e.tuple) {
        if (x < 1) throw std::invalid_argument("shade entries must be positive");
        sum += x;
      }
      std::sort(e.lights.begin(), e.lights.end());
      for (int l : e.lights) {
        if (l < 1 || l > m || seen[l]) throw std::invalid_argument("lights are not a partition of [m]");
        seen[l] = true;
      }
      if (!e.lights.empty()) ++cuts;
      if (e.tuple.empty() && e.lights.empty()) throw std::invalid_argument("empty tuple without a cut");
    }
    for (int l = 1; l <= m; ++l)
      if (!seen[l]) throw std::invalid_argument("lights are not a partition of [m]");
    if (sum != n) throw std::invalid_argument("shade entries must sum to n");
    if (m > 0 && cuts == 0) throw std::invalid_argument("m >= 1 requires a cut");
    int ps = m;
    pos_of_light_.assign(m + 1, -1);
    for (int i = 0; i < static_cast<int>(entries_.size()); ++i) {
      for (int l : entries_[i].lights) pos_of_light_[l] = i;
      for (int x : entries_[i].tuple) {
        ps += x;
        cells_.push_back({i, x, ps});
      }
    }
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return m_ + n_; }
  const std::vector<ShadeEntry>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }
  // Entry index holding cut label i.
  int position_of_light(int i) const { return pos_of_light_[i]; }
  bool is_cut(int entry) const { return !entries_[entry].lights.empty(); }

  int cut_count() const {
    int c = 0;
    for (auto& e : entries_) c += !e.lights.empty();
    return c;
  }
  int integer_count() const { return static_cast<int>(cells_.size()); }
  int rank() const { return m_ - size() + integer_count(); }
  bool is_unary() const { return rank() == 0; }

  Preposet preposet() const {
    Preposet p(m_ + n_);
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= m_; ++j)
        if (pos_of_light_[i] >= pos_of_light_[j]) p.add(i, j);
    for (auto& x : cells_)
      for (auto& y : cells_)
        if (x.entry >= y.entry)
          for (int k = x.ps - x.value + 1; k <= x.ps; ++k) p.add(k, y.ps);
    for (int i = 1; i <= m_; ++i)
      for (auto& x : cells_) {
        if (x.entry <= pos_of_light_[i]) p.add(i, x.ps);
        if (x.entry >= pos_of_light_[i])
          for (int k = x.ps - x.value + 1; k <= x.ps; ++k) p.add(k, i);
      }
    return p.close();
  }

  // Canonical serialization, e.g. "(1) (){1} (2,1)".
  std::string key() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ' ';
      s += '(';
      for (std::size_t j = 0; j < entries_[i].tuple.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(entries_[i].tuple[j]);
      }
      s += ')';
      if (!entries_[i].lights.empty()) {
        s += '{';
        for (std::size_t j = 0; j < entries_[i].lights.size(); ++j) {
          if (j) s += ',';
          s += std::to_string(entries_[i].lights[j]);
        }
        s += '}';
      }
    }
    return s;
  }

  friend bool operator==(const LightedShade& a, const LightedShade& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const LightedShade& a, const LightedShade& b) { return a.key() < b.key(); }

 private:
  int m_, n_;
  std::vector<ShadeEntry> entries_;
  std::vector<Cell> cells_;
  std::vector<int> pos_of_light_;
};

// Right rotations of a unary shade.
inline std::vector<Rotation<LightedShade>> rotations(const LightedShade& s) {
  if (!s.is_unary()) throw std::invalid_argument("rotations need a unary shade");
  std::vector<Rotation<LightedShade>> out;
  const auto& E = s.entries();
  const int len = s.size();
  for (int q = 0; q < len; ++q) {
    // (1) a singleton (r) splits into (a), (r - a).
    if (!s.is_cut(q) && E[q].tuple[0] >= 2) {
      int r = E[q].tuple[0];
      for (int a = 1; a < r; ++a) {
        auto F = E;
        F[q].tuple = {a};
        F.insert(F.begin() + q + 1, ShadeEntry{{r - a}, {}});
        out.push_back({LightedShade(s.m(), s.n(), std::move(F)), 1});
      }
    }
    if (q + 1 >= len) continue;
    // (2) a singleton passes below the cut right under it.
    if (!s.is_cut(q) && s.is_cut(q + 1)) {
      auto F = E;
      std::swap(F[q], F[q + 1]);
      out.push_back({LightedShade(s.m(), s.n(), std::move(F)), 2});
    }
    // (3) consecutive cuts exchange labels when the lower label is smaller.
    if (s.is_cut(q) && s.is_cut(q + 1) && E[q + 1].lights[0] < E[q].lights[0]) {
      auto F = E;
      std::swap(F[q], F[q + 1]);
      out.push_back({LightedShade(s.m(), s.n(), std::move(F)), 3});
    }
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.target < b.target; });
  return out;
}

// Shades of rank one more obtained by merging two adjacent positions or splitting an integer.
inline std::vector<LightedShade> refinement_covers_down(const LightedShade& s) {
  std::vector<LightedShade> out;
  const auto& E = s.entries();
  for (int q = 0; q + 1 < s.size(); ++q) {
    auto F = E;
    F[q].tuple.insert(F[q].tuple.end(), E[q + 1].tuple.begin(), E[q + 1].tuple.end());
    F[q].lights.insert(F[q].lights.end(), E[q + 1].lights.begin(), E[q + 1].lights.end());
    F.erase(F.begin() + q + 1);
    out.emplace_back(s.m(), s.n(), std::move(F));
  }
  for (int q = 0; q < s.size(); ++q)
    for (std::size_t j = 0; j < E[q].tuple.size(); ++j)
      for (int a = 1; a < E[q].tuple[j]; ++a) {
        auto F = E;
        auto& t = F[q].tuple;
        int r = t[j];
        t[j] = a;
        t.insert(t.begin() + j + 1, r - a);
        out.emplace_back(s.m(), s.n(), std::move(F));
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

struct ShadeTemplateEntry {
  std::vector<int> tuple;
  bool lit;
};

// Sequences of (tuple, lit) with total sum `rest` and exactly `marks` lit positions.
inline void shade_templates(int rest, int marks, std::vector<ShadeTemplateEntry>& cur,
                            const std::function<void(const std::vector<ShadeTemplateEntry>&)>& emit) {
  if (rest == 0 && marks == 0) {
    emit(cur);
    return;
  }
  // Next entry: a composition of v (v = 0 means the empty tuple, which must be lit).
  for (int v = 0; v <= rest; ++v) {
    std::vector<int> comp;
    std::function<void(int)> rec = [&](int left) {
      if (left == 0) {
        for (int lit = 0; lit <= 1; ++lit) {
          if (lit && marks == 0) continue;
          if (!lit && comp.empty()) continue;
          cur.push_back({comp, static_cast<bool>(lit)});
          shade_templates(rest - v, marks - lit, cur, emit);
          cur.pop_back();
        }
        return;
      }
      for (int x = 1; x <= left; ++x) {
        comp.push_back(x);
        rec(left - x);
        comp.pop_back();
      }
    };
    rec(v);
  }
}

}  // namespace detail

template <class F>
void for_each_lighted_shade(int m, int n, std::optional<int> rank, F&& f) {
  check_parameters(m, n);
  if (rank) check_rank(m, n, *rank);
  int kmin = m == 0 ? 0 : 1;
  for (int k = kmin; k <= m; ++k) {
    auto blocks = ordered_partitions(m, k);
    std::vector<detail::ShadeTemplateEntry> cur;
    detail::shade_templates(n, k, cur, [&](const std::vector<detail::ShadeTemplateEntry>& t) {
      int ints = 0;
      for (auto& e : t) ints += static_cast<int>(e.tuple.size());
      if (rank && m - static_cast<int>(t.size()) + ints != *rank) return;
      for (const auto& b : blocks) {
        std::vector<ShadeEntry> E;
        std::size_t bi = 0;
        for (auto& e : t) E.push_back({e.tuple, e.lit ? b[bi++] : std::vector<int>{}});
        f(LightedShade(m, n, std::move(E)));
      }
    });
  }
}

inline std::vector<LightedShade> enum_lighted_shades(int m, int n, std::optional<int> rank = std::nullopt,
                                                          int max_dim = kDefaultMaxDim) {
  check_bound(m, n, max_dim);
  std::vector<LightedShade> out;
  for_each_lighted_shade(m, n, rank, [&](LightedShade s) { out.push_back(std::move(s)); });
  std::sort(out.begin(), out.end());
  return out;
}

// Unary shades directly: m single-label cuts interleaved with singletons.
inline std::vector<LightedShade> enumerate_unary_shades(int m, int n, int max_dim = kDefaultMaxDim) {
  check_bound(m, n, max_dim);
  std::vector<LightedShade> out;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i + 1;
  // A sequence over {cut, singleton value}; cuts are consumed in permutation order.
  std::vector<int> seq;  // 0 = cut, v > 0 = singleton (v)
  std::function<void(int, int)> rec = [&](int cuts, int rest) {
    if (cuts == 0 && rest == 0) {
      std::vector<int> p = perm;
      do {
        std::vector<ShadeEntry> E;
        std::size_t c = 0;
        for (int v : seq) E.push_back(v == 0 ? ShadeEntry{{}, {p[c++]}} : ShadeEntry{{v}, {}});
        out.emplace_back(m, n, std::move(E));
      } while (std::next_permutation(p.begin(), p.end()));
      return;
    }
    if (cuts > 0) {
      seq.push_back(0);
      rec(cuts - 1, rest);
      seq.pop_back();
    }
    for (int v = 1; v <= rest; ++v) {
      seq.push_back(v);
      rec(cuts, rest - v);
      seq.pop_back();
    }
  };
  rec(m, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hochkit
