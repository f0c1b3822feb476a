#pragma once

#include "lighted_shade.hpp"
#include "painted_tree.hpp"
#include "shadow.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hochkit {

inline Preposet preposet_of_painted_tree(const PaintedTree& t) { return t.preposet(); }
inline Preposet preposet_of_lighted_shade(const LightedShade& s) { return s.preposet(); }
inline int rank(const PaintedTree& t) { return t.rank(); }
inline int rank(const LightedShade& s) { return s.rank(); }

template <class T>
std::vector<T> rotation_successors(const T& obj) {
  std::vector<T> out;
  for (auto& r : rotations(obj)) out.push_back(r.target);
  return out;
}

inline bool is_singleton(const PaintedTree& t) {
  if (!t.is_binary()) throw std::invalid_argument("singleton test needs a binary painted tree");
  return is_singleton_shadow(shadow(t));
}

// Rank-zero objects of a kind, in canonical order.
template <class T>
std::vector<T> enum_rank_zero(int m, int n, int max_dim = kDefaultMaxDim);
template <>
inline std::vector<PaintedTree> enum_rank_zero<PaintedTree>(int m, int n, int max_dim) {
  return enum_painted_trees(m, n, 0, max_dim);
}
template <>
inline std::vector<LightedShade> enum_rank_zero<LightedShade>(int m, int n, int max_dim) {
  return enum_lighted_shades(m, n, 0, max_dim);
}

template <class T>
std::vector<T> enum_all(int m, int n, int max_dim = kDefaultMaxDim);
template <>
inline std::vector<PaintedTree> enum_all<PaintedTree>(int m, int n, int max_dim) {
  return enum_painted_trees(m, n, std::nullopt, max_dim);
}
template <>
inline std::vector<LightedShade> enum_all<LightedShade>(int m, int n, int max_dim) {
  return enum_lighted_shades(m, n, std::nullopt, max_dim);
}

// Definitional rotation test between two full-dimensional preposets: the pair (i, j),
// i < j, is strict in p and reversed in q, and adding the reversed pair to either side
// gives the same preposet with one class fewer (their common wall).
inline std::optional<std::pair<int, int>> flip_pair(const Preposet& p, const Preposet& q) {
  const int d = p.size();
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      if (!p.strictly_less(i, j) || !q.strictly_less(j, i)) continue;
      Preposet a = p, b = q;
      a.add(j, i);
      b.add(i, j);
      a.close();
      b.close();
      if (a == b && static_cast<int>(a.classes().size()) == d - 1) return std::make_pair(i, j);
    }
  return std::nullopt;
}

// The literal reading: the relation sets agree once (i, j) and (j, i) are removed.
inline std::optional<std::pair<int, int>> literal_flip_pair(const Preposet& p, const Preposet& q) {
  const int d = p.size();
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      if (!p.leq(i, j) || !q.leq(j, i)) continue;
      bool same = true;
      for (int a = 1; a <= d && same; ++a)
        for (int b = 1; b <= d && same; ++b) {
          if ((a == i && b == j) || (a == j && b == i)) continue;
          if (p.leq(a, b) != q.leq(a, b)) same = false;
        }
      if (same && !p.leq(j, i) && !q.leq(i, j)) return std::make_pair(i, j);
    }
  return std::nullopt;
}

}  // namespace hochkit
