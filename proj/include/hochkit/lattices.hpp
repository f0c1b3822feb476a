#pragma once

#include "objects.hpp"
#include "poset.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hochkit {

// A poset whose element i is objects[i].
template <class T>
struct ObjectPoset {
  std::vector<T> objects;
  FinitePoset poset;

  int index_of(const T& obj) const { return poset.index_of(obj.key()); }
};

namespace detail {

template <class T>
std::vector<std::string> keys_of(const std::vector<T>& objs) {
  std::vector<std::string> k;
  k.reserve(objs.size());
  for (auto& o : objs) k.push_back(o.key());
  return k;
}

}  // namespace detail

// Rank-zero objects ordered by right rotations.
template <class T>
ObjectPoset<T> rotation_poset(int m, int n, int max_dim = kDefaultMaxDim) {
  auto objs = enum_rank_zero<T>(m, n, max_dim);
  auto keys = detail::keys_of(objs);
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(keys.size()); ++i) idx[keys[i]] = i;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    for (auto& r : rotations(objs[i])) covers.emplace_back(i, idx.at(r.target.key()));
  FinitePoset p(std::move(keys), std::move(covers));
  return {std::move(objs), std::move(p)};
}

// All objects; x <= y when the preposet of x contains that of y (faces below the
// polytope's full face, vertices maximal).
template <class T>
ObjectPoset<T> refinement_poset(int m, int n, int max_dim = kDefaultMaxDim) {
  auto objs = enum_all<T>(m, n, max_dim);
  auto keys = detail::keys_of(objs);
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(keys.size()); ++i) idx[keys[i]] = i;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    for (auto& c : refinement_covers_down(objs[i])) covers.emplace_back(idx.at(c.key()), i);
  FinitePoset p(std::move(keys), std::move(covers));
  return {std::move(objs), std::move(p)};
}

inline FinitePoset build_rotation_poset(ObjectKind kind, int m, int n, int max_dim = kDefaultMaxDim) {
  if (kind == ObjectKind::painted_tree) return rotation_poset<PaintedTree>(m, n, max_dim).poset;
  return rotation_poset<LightedShade>(m, n, max_dim).poset;
}

inline FinitePoset build_refinement_poset(ObjectKind kind, int m, int n, int max_dim = kDefaultMaxDim) {
  if (kind == ObjectKind::painted_tree) return refinement_poset<PaintedTree>(m, n, max_dim).poset;
  return refinement_poset<LightedShade>(m, n, max_dim).poset;
}

// Index map of the shadow from painted-tree elements to shade elements.
template <class S, class D>
std::vector<int> shadow_index_map(const ObjectPoset<S>& src, const ObjectPoset<D>& dst) {
  std::vector<int> f;
  f.reserve(src.objects.size());
  for (auto& t : src.objects) f.push_back(dst.poset.index_of(shadow(t).key()));
  return f;
}

struct CongruenceReport {
  bool fibers_have_unique_min = true;
  bool min_is_fiber_min = true;
  bool proj_down_order_preserving = true;
  std::optional<std::pair<int, int>> proj_down_violation;
  bool fibers_have_unique_max = true;
  bool max_is_fiber_max = true;
  bool proj_up_order_preserving = true;
  std::optional<std::pair<int, int>> proj_up_violation;  // a cover (a, b) with projUp(a) not <= projUp(b)
  bool surjective = true;
  bool quotient_matches_target = true;
  std::vector<std::string> notes;
};

// Shadow congruence on the painted-tree rotation lattice.
inline CongruenceReport check_congruence_projection(int m, int n, int max_dim = kDefaultMaxDim) {
  CongruenceReport r;
  auto src = rotation_poset<PaintedTree>(m, n, max_dim);
  auto dst = rotation_poset<LightedShade>(m, n, max_dim);
  auto f = shadow_index_map(src, dst);
  const int N = src.poset.size(), M = dst.poset.size();
  std::vector<std::vector<int>> fiber(M);
  for (int i = 0; i < N; ++i) fiber[f[i]].push_back(i);
  std::vector<int> lo(M, -1), hi(M, -1);
  for (int s = 0; s < M; ++s) {
    if (fiber[s].empty()) {
      r.surjective = false;
      r.notes.push_back("empty fiber over " + dst.poset.key(s));
      continue;
    }
    std::vector<int> mins, maxs;
    for (int x : fiber[s]) {
      bool is_min = true, is_max = true;
      for (int y : fiber[s]) {
        if (src.poset.lt(y, x)) is_min = false;
        if (src.poset.lt(x, y)) is_max = false;
      }
      if (is_min) mins.push_back(x);
      if (is_max) maxs.push_back(x);
    }
    // A unique minimal element must also lie below the whole fiber.
    if (mins.size() != 1) r.fibers_have_unique_min = false;
    else {
      lo[s] = mins[0];
      if (src.poset.key(lo[s]) != fiber_min(dst.objects[s]).key()) {
        r.min_is_fiber_min = false;
        r.notes.push_back("fiber minimum differs from fiber_min over " + dst.poset.key(s));
      }
    }
    if (maxs.size() != 1) r.fibers_have_unique_max = false;
    else {
      hi[s] = maxs[0];
      if (src.poset.key(hi[s]) != fiber_max(dst.objects[s]).key()) {
        r.max_is_fiber_max = false;
        r.notes.push_back("fiber maximum differs from fiber_max over " + dst.poset.key(s));
      }
    }
  }
  if (!r.surjective) return r;
  for (auto [a, b] : src.poset.covers()) {
    if (r.fibers_have_unique_min && r.proj_down_order_preserving && !src.poset.leq(lo[f[a]], lo[f[b]])) {
      r.proj_down_order_preserving = false;
      r.proj_down_violation = {a, b};
    }
    if (r.fibers_have_unique_max && r.proj_up_order_preserving && !src.poset.leq(hi[f[a]], hi[f[b]])) {
      r.proj_up_order_preserving = false;
      r.proj_up_violation = {a, b};
    }
  }
  if (!r.fibers_have_unique_min) r.proj_down_order_preserving = false;
  if (!r.fibers_have_unique_max) r.proj_up_order_preserving = false;
  // Quotient order: X <= Y iff some x in X lies below some y in Y.
  std::vector<Bitset> below(M, Bitset(M));
  for (int x = 0; x < N; ++x)
    src.poset.up_set(x).for_each([&](std::size_t y) { below[f[x]].set(f[y]); });
  for (int s = 0; s < M && r.quotient_matches_target; ++s)
    for (int t = 0; t < M; ++t)
      if (below[s].test(t) != dst.poset.leq(s, t)) {
        r.quotient_matches_target = false;
        r.notes.push_back("quotient order differs at " + dst.poset.key(s) + " / " + dst.poset.key(t));
        break;
      }
  return r;
}

}  // namespace hochkit
