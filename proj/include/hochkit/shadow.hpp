#pragma once

#include "lighted_shade.hpp"
#include "painted_tree.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace hochkit {

// Arity sequence along the right branch: each right-branch node gives the tuple of leaf
// counts of its children other than the rightmost, lit by the cut through it.
inline LightedShade shadow(const PaintedTree& t) {
  std::vector<ShadeEntry> E;
  int v = 0;
  while (v != PaintedTree::kLeaf) {
    ShadeEntry e;
    const auto& ch = t.children(v);
    for (std::size_t i = 0; i + 1 < ch.size(); ++i) e.tuple.push_back(t.leaf_count_of_child(ch[i]));
    if (t.cut_of(v) >= 0) e.lights = t.parts()[t.cut_of(v)];
    E.push_back(std::move(e));
    v = ch.back();
  }
  return LightedShade(t.m(), t.n(), std::move(E));
}

namespace detail {

// Binary tree with a comb hanging left of each right-branch node.
inline PaintedTree fiber_extreme(const LightedShade& s, bool left_combs) {
  if (!s.is_unary()) throw std::invalid_argument("fiber extremes need a unary shade");
  LevelForm f;
  f.m = s.m();
  f.n = s.n();
  f.left.assign(f.n, -1);
  f.right.assign(f.n, -1);
  f.level.assign(f.n, 0);
  for (const auto& e : s.entries())
    if (!e.lights.empty()) f.labels.push_back(e.lights[0]);
  int cuts_above = 0, prev = -1, ps = 0;
  for (const auto& e : s.entries()) {
    if (!e.lights.empty()) {
      ++cuts_above;
      continue;
    }
    int x = e.tuple[0];
    ps += x;
    int node = ps - 1;  // inorder id of the right-branch node
    int lo = ps - x;    // ids lo .. node-1 form the comb
    f.level[node] = cuts_above;
    if (x > 1) {
      if (left_combs) {
        for (int c = lo; c < node - 1; ++c) f.left[c + 1] = c;
        f.left[node] = node - 1;
        for (int c = lo; c < node; ++c) f.level[c] = cuts_above;
      } else {
        for (int c = lo; c + 1 < node; ++c) f.right[c] = c + 1;
        f.left[node] = lo;
        for (int c = lo; c < node; ++c) f.level[c] = f.m;
      }
    }
    if (prev < 0) f.root = node;
    else f.right[prev] = node;
    prev = node;
  }
  return to_tree(f);
}

}  // namespace detail

// Rotation-minimal tree of the fiber: left combs cut at the level of their leaves.
inline PaintedTree fiber_min(const LightedShade& s) { return detail::fiber_extreme(s, true); }
// Rotation-maximal tree of the fiber: right combs below every cut.
inline PaintedTree fiber_max(const LightedShade& s) { return detail::fiber_extreme(s, false); }

// Shadow singleton test on the shade side: every singleton is (1), except that (2) is
// also allowed below the last cut.
inline bool is_singleton_shadow(const LightedShade& s) {
  if (!s.is_unary()) return false;
  int last_cut = -1;
  for (int q = 0; q < s.size(); ++q)
    if (s.is_cut(q)) last_cut = q;
  for (int q = 0; q < s.size(); ++q) {
    if (s.is_cut(q)) continue;
    int v = s.entries()[q].tuple[0];
    if (v == 1) continue;
    if (v == 2 && q > last_cut) continue;
    return false;
  }
  return true;
}

// Singleton test on the tree side: each binary node is on the right branch, or is below
// the last cut with its parent on the right branch.
inline bool is_singleton_tree(const PaintedTree& t) {
  if (!t.is_binary()) return false;
  std::vector<bool> on_branch(t.node_count(), false);
  for (int v = 0; v != PaintedTree::kLeaf; v = t.children(v).back()) on_branch[v] = true;
  std::vector<int> cuts_above(t.node_count(), 0);
  for (int v = 1; v < t.node_count(); ++v) {
    int p = t.parent(v);
    cuts_above[v] = cuts_above[p] + (t.cut_of(p) >= 0 ? 1 : 0);
  }
  for (int v = 0; v < t.node_count(); ++v) {
    if (t.arity(v) != 2 || on_branch[v]) continue;
    bool below_last = cuts_above[v] == t.m();
    int p = t.parent(v);
    if (!(below_last && p >= 0 && on_branch[p])) return false;
  }
  return true;
}

}  // namespace hochkit
