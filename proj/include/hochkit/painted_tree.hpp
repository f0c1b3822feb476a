#pragma once

#include "common.hpp"
#include "numeric.hpp"
#include "preposet.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hochkit {

// An m-painted n-tree: a planar rooted tree with n+1 leaves whose unary nodes all sit
// on one of the k horizontal cuts, together with an ordered partition of [m] into k
// blocks labelling the cuts. Node 0 is the root and nodes are numbered in preorder;
// cuts and parts are listed bottom-to-top.
class PaintedTree {
 public:
  static constexpr int kLeaf = -1;

  PaintedTree(int m, int n, std::vector<std::vector<int>> children, std::vector<std::vector<int>> cuts,
              std::vector<std::vector<int>> parts)
      : m_(m), n_(n) {
    check_parameters(m, n);
    build(std::move(children), std::move(cuts), std::move(parts));
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return m_ + n_; }
  int node_count() const { return static_cast<int>(children_.size()); }
  const std::vector<int>& children(int v) const { return children_[v]; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<std::vector<int>>& cuts() const { return cuts_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  int cut_count() const { return static_cast<int>(cuts_.size()); }
  // Index (bottom-to-top) of the cut through v, or -1.
  int cut_of(int v) const { return cut_of_[v]; }
  // Inorder gap labels carried by v; gap g separates leaves g and g+1.
  const std::vector<int>& labels(int v) const { return labels_[v]; }
  int leaf_count(int v) const { return leaves_[v]; }
  int leaf_count_of_child(int c) const { return c == kLeaf ? 1 : leaves_[c]; }
  int arity(int v) const { return static_cast<int>(children_[v].size()); }

  int rank() const {
    int in_cuts = 0;
    for (auto& c : cuts_) in_cuts += static_cast<int>(c.size());
    return m_ + n_ - node_count() - cut_count() + in_cuts;
  }

  bool is_binary() const { return rank() == 0; }

  Preposet preposet() const {
    int N = node_count(), k = cut_count();
    auto vert = [&](int v) { return cut_of_[v] >= 0 ? N + cut_of_[v] : v; };
    std::vector<std::uint32_t> up(N + k, 0);
    for (int c = 0; c < k; ++c)
      for (int lab : parts_[c]) up[N + c] |= std::uint32_t{1} << (lab - 1);
    for (int v = 0; v < N; ++v)
      for (int g : labels_[v]) up[vert(v)] |= std::uint32_t{1} << (m_ + g - 1);
    std::vector<std::uint32_t> own = up;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 1; v < N; ++v) {
        auto before = up[vert(v)];
        up[vert(v)] |= up[vert(parent_[v])];
        if (up[vert(v)] != before) changed = true;
      }
    }
    Preposet p(m_ + n_);
    for (int x = 0; x < N + k; ++x)
      for (int e = 0; e < m_ + n_; ++e)
        if ((own[x] >> e) & 1u)
          for (int f = 0; f < m_ + n_; ++f)
            if ((up[x] >> f) & 1u) p.add(e + 1, f + 1);
    return p;
  }

  // Canonical serialization; also the ordering key.
  std::string key() const {
    std::string s;
    std::function<void(int)> rec = [&](int v) {
      s += '(';
      if (cut_of_[v] >= 0) s += std::to_string(cut_of_[v]) + ':';
      for (int c : children_[v]) {
        if (c == kLeaf) s += '*';
        else rec(c);
      }
      s += ')';
    };
    rec(0);
    s += '|';
    for (std::size_t c = 0; c < parts_.size(); ++c) {
      if (c) s += '/';
      for (std::size_t i = 0; i < parts_[c].size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[c][i]);
      }
    }
    return s;
  }

  friend bool operator==(const PaintedTree& a, const PaintedTree& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.children_ == b.children_ && a.cuts_ == b.cuts_ &&
           a.parts_ == b.parts_;
  }
  friend bool operator<(const PaintedTree& a, const PaintedTree& b) { return a.key() < b.key(); }

 private:
  void build(std::vector<std::vector<int>> children, std::vector<std::vector<int>> cuts,
             std::vector<std::vector<int>> parts) {
    int N = static_cast<int>(children.size());
    if (N == 0) throw std::invalid_argument("painted tree needs at least one node");
    std::vector<int> par(N, -2);
    par[0] = -1;
    for (int v = 0; v < N; ++v) {
      if (children[v].empty()) throw std::invalid_argument("internal node without children");
      for (int c : children[v]) {
        if (c == kLeaf) continue;
        if (c <= 0 || c >= N) throw std::invalid_argument("child id out of range");
        if (par[c] != -2) throw std::invalid_argument("node with two parents");
        par[c] = v;
      }
    }
    for (int v = 1; v < N; ++v)
      if (par[v] == -2) throw std::invalid_argument("node not attached to the root");

    std::vector<int> cut_of(N, -1);
    for (std::size_t c = 0; c < cuts.size(); ++c) {
      if (cuts[c].empty()) throw std::invalid_argument("empty cut");
      for (int v : cuts[c]) {
        if (v < 0 || v >= N) throw std::invalid_argument("cut node out of range");
        if (cut_of[v] != -1) throw std::invalid_argument("node on two cuts");
        cut_of[v] = static_cast<int>(c);
      }
    }

    // Preorder renumbering; also rejects cycles.
    std::vector<int> order, newid(N, -1);
    std::function<void(int)> pre = [&](int v) {
      if (newid[v] != -1) throw std::invalid_argument("cycle in tree");
      newid[v] = static_cast<int>(order.size());
      order.push_back(v);
      if (static_cast<int>(order.size()) > N) throw std::invalid_argument("cycle in tree");
      for (int c : children[v])
        if (c != kLeaf) pre(c);
    };
    pre(0);
    if (static_cast<int>(order.size()) != N) throw std::invalid_argument("disconnected tree");

    children_.assign(N, {});
    cut_of_.assign(N, -1);
    parent_.assign(N, -1);
    for (int i = 0; i < N; ++i) {
      int v = order[i];
      for (int c : children[v]) children_[i].push_back(c == kLeaf ? kLeaf : newid[c]);
      cut_of_[i] = cut_of[v];
      if (par[v] >= 0) parent_[i] = newid[par[v]];
    }

    int k = static_cast<int>(cuts.size());
    cuts_.assign(k, {});
    for (int i = 0; i < N; ++i)
      if (cut_of_[i] >= 0) cuts_[cut_of_[i]].push_back(i);

    // Parts: an ordered partition of [m] matching the cuts.
    if (static_cast<int>(parts.size()) != k) throw std::invalid_argument("parts and cuts differ in number");
    if (m_ == 0 && k != 0) throw std::invalid_argument("cuts require m >= 1");
    if (m_ > 0 && k == 0) throw std::invalid_argument("m >= 1 requires at least one cut");
    std::vector<bool> seen(m_ + 1, false);
    for (auto& p : parts) {
      if (p.empty()) throw std::invalid_argument("empty part");
      std::sort(p.begin(), p.end());
      for (int x : p) {
        if (x < 1 || x > m_ || seen[x]) throw std::invalid_argument("parts are not a partition of [m]");
        seen[x] = true;
      }
    }
    for (int x = 1; x <= m_; ++x)
      if (!seen[x]) throw std::invalid_argument("parts are not a partition of [m]");
    parts_ = std::move(parts);

    // Leaves, labels, cut crossing order and unary painting.
    leaves_.assign(N, 0);
    labels_.assign(N, {});
    int seen_leaves = 0;
    std::vector<int> path;
    std::function<void(int)> walk = [&](int v) {
      if (cut_of_[v] >= 0) path.push_back(cut_of_[v]);
      if (children_[v].size() == 1 && cut_of_[v] < 0) throw std::invalid_argument("unpainted unary node");
      int before = seen_leaves;
      for (std::size_t i = 0; i < children_[v].size(); ++i) {
        int c = children_[v][i];
        if (c == kLeaf) {
          ++seen_leaves;
          if (static_cast<int>(path.size()) != k) throw std::invalid_argument("leaf path misses a cut");
          for (int t = 0; t < k; ++t)
            if (path[t] != k - 1 - t) throw std::invalid_argument("cuts cross or repeat");
        } else {
          walk(c);
        }
        if (i + 1 < children_[v].size()) labels_[v].push_back(seen_leaves);
      }
      leaves_[v] = seen_leaves - before;
      if (cut_of_[v] >= 0) path.pop_back();
    };
    walk(0);
    if (seen_leaves != n_ + 1) throw std::invalid_argument("tree must have n+1 leaves");
  }

  int m_, n_;
  std::vector<std::vector<int>> children_;
  std::vector<int> parent_;
  std::vector<int> cut_of_;
  std::vector<std::vector<int>> cuts_;
  std::vector<std::vector<int>> parts_;
  std::vector<int> leaves_;
  std::vector<std::vector<int>> labels_;
};

namespace detail {

// Editable tree, frozen into a validated PaintedTree (unreachable nodes are dropped).
struct MutableTree {
  int m = 0, n = 0;
  std::vector<std::vector<int>> children;
  std::vector<int> cut_of;
  std::vector<std::vector<int>> parts;

  static MutableTree from(const PaintedTree& t) {
    MutableTree mt;
    mt.m = t.m();
    mt.n = t.n();
    for (int v = 0; v < t.node_count(); ++v) {
      mt.children.push_back(t.children(v));
      mt.cut_of.push_back(t.cut_of(v));
    }
    mt.parts = t.parts();
    return mt;
  }

  int add(std::vector<int> ch, int cut) {
    children.push_back(std::move(ch));
    cut_of.push_back(cut);
    return static_cast<int>(children.size()) - 1;
  }

  PaintedTree freeze() const {
    std::vector<int> newid(children.size(), -1), order;
    std::function<void(int)> pre = [&](int v) {
      newid[v] = static_cast<int>(order.size());
      order.push_back(v);
      for (int c : children[v])
        if (c != PaintedTree::kLeaf) pre(c);
    };
    pre(0);
    std::vector<std::vector<int>> ch(order.size());
    std::vector<std::vector<int>> cuts(parts.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      int v = order[i];
      for (int c : children[v]) ch[i].push_back(c == PaintedTree::kLeaf ? c : newid[c]);
      if (cut_of[v] >= 0) cuts[cut_of[v]].push_back(static_cast<int>(i));
    }
    return PaintedTree(m, n, std::move(ch), std::move(cuts), parts);
  }
};

}  // namespace detail

// Binary painted tree in level form. Binary nodes are identified with their inorder
// label minus one; level[v] counts the cuts above v; labels lists cut labels top-to-bottom.
struct LevelForm {
  int m = 0, n = 0;
  int root = -1;  // -1 when n == 0
  std::vector<int> left, right;
  std::vector<int> level;
  std::vector<int> labels;

  int effective_level(int c) const { return c < 0 ? m : level[c]; }
  friend bool operator==(const LevelForm&, const LevelForm&) = default;
};

inline PaintedTree to_tree(const LevelForm& f) {
  detail::MutableTree mt;
  mt.m = f.m;
  mt.n = f.n;
  mt.parts.assign(f.m, {});
  for (int t = 1; t <= f.m; ++t) mt.parts[f.m - t] = {f.labels[t - 1]};
  mt.add({}, -1);  // placeholder root, replaced below
  // Chain of unary nodes for cuts from..to (top-to-bottom indices), ending at `bottom`.
  auto chain = [&](int from, int to, int bottom) {
    int cur = bottom;
    for (int t = to; t >= from; --t) cur = mt.add({cur}, f.m - t);
    return cur;
  };
  std::function<int(int, int)> rec = [&](int v, int plevel) -> int {
    if (v < 0) return chain(plevel + 1, f.m, PaintedTree::kLeaf);
    int l = rec(f.left[v], f.level[v]);
    int r = rec(f.right[v], f.level[v]);
    int self = mt.add({l, r}, -1);
    return chain(plevel + 1, f.level[v], self);
  };
  int top = rec(f.root, 0);
  // Move the top node into slot 0.
  mt.children[0] = mt.children[top];
  mt.cut_of[0] = mt.cut_of[top];
  mt.children[top] = {PaintedTree::kLeaf};
  mt.cut_of[top] = -1;
  return mt.freeze();
}

inline LevelForm level_form(const PaintedTree& t) {
  if (!t.is_binary()) throw std::invalid_argument("level form needs a binary painted tree");
  LevelForm f;
  f.m = t.m();
  f.n = t.n();
  f.left.assign(f.n, -1);
  f.right.assign(f.n, -1);
  f.level.assign(f.n, 0);
  f.labels.assign(f.m, 0);
  for (int c = 0; c < t.cut_count(); ++c) f.labels[f.m - 1 - c] = t.parts()[c][0];
  // Returns the binary id reached from child slot c, or -1 for a leaf.
  std::function<int(int, int)> rec = [&](int c, int above) -> int {
    if (c == PaintedTree::kLeaf) return -1;
    if (t.arity(c) == 1) return rec(t.children(c)[0], above + 1);
    int id = t.labels(c)[0] - 1;
    f.level[id] = above;
    f.left[id] = rec(t.children(c)[0], above);
    f.right[id] = rec(t.children(c)[1], above);
    return id;
  };
  f.root = rec(0, 0);
  return f;
}

// Rotations of a binary painted tree that increase the orientation functional.
inline std::vector<Rotation<LevelForm>> level_form_rotations(const LevelForm& f) {
  std::vector<Rotation<LevelForm>> out;
  // (1) right rotation at y over its left child x on the same level.
  for (int y = 0; y < f.n; ++y) {
    int x = f.left[y];
    if (x < 0 || f.level[x] != f.level[y]) continue;
    LevelForm g = f;
    g.left[y] = f.right[x];
    g.right[x] = y;
    if (f.root == y) g.root = x;
    else
      for (int p = 0; p < f.n; ++p) {
        if (f.left[p] == y) g.left[p] = x;
        if (f.right[p] == y) g.right[p] = x;
      }
    out.push_back({std::move(g), 1});
  }
  // (2) a node moves below the next cut.
  for (int v = 0; v < f.n; ++v) {
    int t = f.level[v];
    if (t >= f.m) continue;
    if (f.effective_level(f.left[v]) > t && f.effective_level(f.right[v]) > t) {
      LevelForm g = f;
      g.level[v] = t + 1;
      out.push_back({std::move(g), 2});
    }
  }
  // (3) two adjacent cuts with no node between them exchange labels.
  for (int t = 1; t < f.m; ++t) {
    bool empty = true;
    for (int v = 0; v < f.n; ++v)
      if (f.level[v] == t) empty = false;
    if (!empty || f.labels[t] > f.labels[t - 1]) continue;
    LevelForm g = f;
    std::swap(g.labels[t], g.labels[t - 1]);
    out.push_back({std::move(g), 3});
  }
  return out;
}

inline std::vector<Rotation<PaintedTree>> rotations(const PaintedTree& t) {
  std::vector<Rotation<PaintedTree>> out;
  for (auto& r : level_form_rotations(level_form(t))) out.push_back({to_tree(r.target), r.move});
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.target < b.target; });
  return out;
}

// Objects of rank one more whose preposet properly contains this one (refinement covers).
inline std::vector<PaintedTree> refinement_covers_down(const PaintedTree& t) {
  using detail::MutableTree;
  std::vector<PaintedTree> out;
  const int N = t.node_count(), k = t.cut_count();
  auto is_node = [](int c) { return c != PaintedTree::kLeaf; };
  // (a) contract an unpainted internal edge.
  for (int v = 1; v < N; ++v) {
    if (t.cut_of(v) >= 0) continue;
    MutableTree mt = MutableTree::from(t);
    auto& pc = mt.children[t.parent(v)];
    auto it = std::find(pc.begin(), pc.end(), v);
    it = pc.erase(it);
    pc.insert(it, t.children(v).begin(), t.children(v).end());
    out.push_back(mt.freeze());
  }
  // (b) an unpainted node whose children all lie on one cut drops onto it.
  for (int v = 0; v < N; ++v) {
    if (t.cut_of(v) >= 0) continue;
    int c = -2;
    bool ok = true;
    for (int ch : t.children(v)) {
      if (!is_node(ch) || t.cut_of(ch) < 0 || (c != -2 && t.cut_of(ch) != c)) ok = false;
      else c = t.cut_of(ch);
    }
    if (!ok) continue;
    MutableTree mt = MutableTree::from(t);
    std::vector<int> merged;
    for (int ch : t.children(v))
      for (int g : t.children(ch)) merged.push_back(g);
    mt.children[v] = merged;
    mt.cut_of[v] = c;
    for (int ch : t.children(v)) mt.cut_of[ch] = -1;
    out.push_back(mt.freeze());
  }
  // (c) two consecutive cuts merge when they meet node by node.
  for (int i = 0; i + 1 < k; ++i) {
    bool ok = true;
    for (int u : t.cuts()[i + 1])
      for (int ch : t.children(u))
        if (!is_node(ch) || t.cut_of(ch) != i) ok = false;
    for (int u : t.cuts()[i])
      if (t.parent(u) < 0 || t.cut_of(t.parent(u)) != i + 1) ok = false;
    if (!ok) continue;
    MutableTree mt = MutableTree::from(t);
    for (int u : t.cuts()[i + 1]) {
      std::vector<int> merged;
      for (int ch : t.children(u))
        for (int g : t.children(ch)) merged.push_back(g);
      mt.children[u] = merged;
    }
    for (int v = 0; v < N; ++v) {
      if (t.cut_of(v) == i) mt.cut_of[v] = -1;
      else if (t.cut_of(v) == i + 1) mt.cut_of[v] = i;
      else if (t.cut_of(v) > i + 1) mt.cut_of[v] = t.cut_of(v) - 1;
    }
    auto& P = mt.parts;
    P[i].insert(P[i].end(), P[i + 1].begin(), P[i + 1].end());
    P.erase(P.begin() + i + 1);
    out.push_back(mt.freeze());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Preorder encoding of a painted tree shape. code: odd 2t-1 means on cut t (counted
// from the top), even 2t means strictly between cuts t and t+1; a leaf has code -1.
struct Token {
  int code;
  int arity;
};
using Encoding = std::vector<Token>;

class ShapeGenerator {
 public:
  explicit ShapeGenerator(int k) : k_(k) {}

  // All subtrees with L leaves hanging below a parent with code pcode.
  const std::vector<Encoding>& get(int L, int pcode, bool is_root) {
    auto key = std::make_tuple(L, pcode, is_root);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Encoding> res;
    bool leaf_ok = is_root ? (k_ == 0) : (pcode >= 2 * k_ - 1);
    if (L == 1 && leaf_ok) res.push_back({Token{-1, 0}});
    std::vector<int> codes;
    if (is_root) {
      codes = {0};
      if (k_ >= 1) codes.push_back(1);
    } else if (pcode % 2 == 0) {
      codes = {pcode, pcode + 1};
    } else {
      codes = {pcode + 1, pcode + 2};
    }
    for (int code : codes) {
      if (code > 2 * k_) continue;
      for (int a = (code % 2 ? 1 : 2); a <= L; ++a) {
        std::vector<int> comp(a, 1);
        compose(L, a, code, comp, 0, L - a, res);
      }
    }
    return memo_[key] = std::move(res);
  }

 private:
  // Distribute `extra` leaves over the a children, then take all products.
  void compose(int L, int a, int code, std::vector<int>& comp, int idx, int extra, std::vector<Encoding>& res) {
    if (idx == a - 1) {
      comp[idx] = 1 + extra;
      std::vector<const std::vector<Encoding>*> lists;
      for (int i = 0; i < a; ++i) {
        lists.push_back(&get(comp[i], code, false));
        if (lists.back()->empty()) return;
      }
      Encoding cur{Token{code, a}};
      product(lists, 0, cur, res);
      return;
    }
    for (int e = 0; e <= extra; ++e) {
      comp[idx] = 1 + e;
      compose(L, a, code, comp, idx + 1, extra - e, res);
    }
    (void)L;
  }
  static void product(const std::vector<const std::vector<Encoding>*>& lists, std::size_t i, Encoding& cur,
                      std::vector<Encoding>& res) {
    if (i == lists.size()) {
      res.push_back(cur);
      return;
    }
    for (const auto& e : *lists[i]) {
      std::size_t sz = cur.size();
      cur.insert(cur.end(), e.begin(), e.end());
      product(lists, i + 1, cur, res);
      cur.resize(sz);
    }
  }

  int k_;
  std::map<std::tuple<int, int, bool>, std::vector<Encoding>> memo_;
};

inline int encoding_rank(const Encoding& e, int m, int n, int k) {
  int nodes = 0, painted = 0;
  for (auto& t : e)
    if (t.code >= 0) {
      ++nodes;
      if (t.code % 2) ++painted;
    }
  return m + n - nodes - k + painted;
}

inline PaintedTree decode(const Encoding& e, int m, int n, int k, const std::vector<std::vector<int>>& blocks) {
  MutableTree mt;
  mt.m = m;
  mt.n = n;
  // blocks are given top-to-bottom; parts are stored bottom-to-top.
  mt.parts.assign(blocks.rbegin(), blocks.rend());
  std::size_t pos = 0;
  std::function<int()> rec = [&]() -> int {
    const Token& tok = e[pos++];
    if (tok.code < 0) return PaintedTree::kLeaf;
    int cut = tok.code % 2 ? k - (tok.code + 1) / 2 : -1;
    int id = mt.add({}, cut);
    std::vector<int> ch;
    for (int i = 0; i < tok.arity; ++i) ch.push_back(rec());
    mt.children[id] = ch;
    return id;
  };
  rec();
  return mt.freeze();
}

}  // namespace detail

// Visit every m-painted n-tree (optionally of one rank). Order is deterministic.
template <class F>
void for_each_painted_tree(int m, int n, std::optional<int> rank, F&& f) {
  check_parameters(m, n);
  if (rank) check_rank(m, n, *rank);
  int kmin = m == 0 ? 0 : 1;
  for (int k = kmin; k <= m; ++k) {
    detail::ShapeGenerator gen(k);
    const auto& shapes = gen.get(n + 1, 0, true);
    auto blocks = ordered_partitions(m, k);
    for (const auto& e : shapes) {
      if (rank && detail::encoding_rank(e, m, n, k) != *rank) continue;
      for (const auto& b : blocks) f(detail::decode(e, m, n, k, b));
    }
  }
}

// Counts by rank without building trees (each shape counted once per block assignment).
inline std::vector<BigInt> count_painted_trees_by_rank(int m, int n) {
  check_parameters(m, n);
  std::vector<BigInt> out(m + n, 0);
  int kmin = m == 0 ? 0 : 1;
  for (int k = kmin; k <= m; ++k) {
    detail::ShapeGenerator gen(k);
    BigInt mult = surjections(m, k);
    for (const auto& e : gen.get(n + 1, 0, true)) out[detail::encoding_rank(e, m, n, k)] += mult;
  }
  return out;
}

inline std::vector<PaintedTree> enum_painted_trees(int m, int n, std::optional<int> rank = std::nullopt,
                                                        int max_dim = kDefaultMaxDim) {
  check_bound(m, n, max_dim);
  std::vector<PaintedTree> out;
  for_each_painted_tree(m, n, rank, [&](PaintedTree t) { out.push_back(std::move(t)); });
  std::sort(out.begin(), out.end());
  return out;
}

// Binary painted trees built directly from level forms.
inline std::vector<PaintedTree> enumerate_binary_painted_trees(int m, int n, int max_dim = kDefaultMaxDim) {
  check_bound(m, n, max_dim);
  // All binary trees on inorder ids [lo, hi).
  struct Shape {
    int root;
    std::vector<std::pair<int, int>> lr;  // (left, right) per id in [lo, hi)
  };
  std::function<std::vector<Shape>(int, int)> shapes = [&](int lo, int hi) {
    std::vector<Shape> res;
    if (lo == hi) {
      res.push_back({-1, {}});
      return res;
    }
    for (int r = lo; r < hi; ++r)
      for (auto& L : shapes(lo, r))
        for (auto& R : shapes(r + 1, hi)) {
          Shape s{r, {}};
          s.lr.assign(hi - lo, {-1, -1});
          for (int i = lo; i < r; ++i) s.lr[i - lo] = L.lr[i - lo];
          for (int i = r + 1; i < hi; ++i) s.lr[i - lo] = R.lr[i - r - 1];
          s.lr[r - lo] = {L.root, R.root};
          res.push_back(std::move(s));
        }
    return res;
  };
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i + 1;
  std::vector<PaintedTree> out;
  for (auto& s : shapes(0, n)) {
    LevelForm f;
    f.m = m;
    f.n = n;
    f.root = s.root;
    f.left.resize(n);
    f.right.resize(n);
    for (int i = 0; i < n; ++i) std::tie(f.left[i], f.right[i]) = s.lr[i];
    f.level.assign(n, 0);
    // Levels are monotone from the root; enumerate in preorder.
    std::vector<int> pre, par(n, -1);
    std::function<void(int)> walk = [&](int v) {
      if (v < 0) return;
      pre.push_back(v);
      if (f.left[v] >= 0) par[f.left[v]] = v;
      if (f.right[v] >= 0) par[f.right[v]] = v;
      walk(f.left[v]);
      walk(f.right[v]);
    };
    walk(f.root);
    std::function<void(std::size_t)> lev = [&](std::size_t i) {
      if (i == pre.size()) {
        std::vector<int> p = perm;
        do {
          f.labels = p;
          out.push_back(to_tree(f));
        } while (std::next_permutation(p.begin(), p.end()));
        return;
      }
      int v = pre[i];
      int lo = par[v] < 0 ? 0 : f.level[par[v]];
      for (int h = lo; h <= m; ++h) {
        f.level[v] = h;
        lev(i + 1);
      }
    };
    lev(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hochkit
