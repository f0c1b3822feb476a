#pragma once

#include "bitset.hpp"
#include "lattices.hpp"
#include "numeric.hpp"
#include "objects.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

namespace hochkit {

using RationalPoint = std::vector<Rational>;

inline std::string to_string(const RationalPoint& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += to_string(x[i]);
  }
  return s + ")";
}

// The halfspace <x, 1_support> >= rhs; support is sorted and 1-based.
struct Halfspace {
  std::vector<int> support;
  Rational rhs;

  Rational evaluate(const RationalPoint& x) const {
    Rational s = 0;
    for (int i : support) s += x[i - 1];
    return s;
  }
  bool contains(const RationalPoint& x) const { return evaluate(x) >= rhs; }
  bool tight(const RationalPoint& x) const { return evaluate(x) == rhs; }

  std::string key() const {
    std::string s;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(support[i]);
    }
    return "{" + s + "}>=" + to_string(rhs);
  }
  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.support == b.support && a.rhs == b.rhs;
  }
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.support != b.support) return a.support < b.support;
    return a.rhs < b.rhs;
  }
};

// omega_i = d + 1 - 2i.
inline std::vector<int> omega(int d) {
  std::vector<int> w(d);
  for (int i = 1; i <= d; ++i) w[i - 1] = d + 1 - 2 * i;
  return w;
}

inline Rational dot(const RationalPoint& x, const std::vector<int>& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * w[i];
  return s;
}

inline RationalPoint minus(const RationalPoint& a, const RationalPoint& b) {
  RationalPoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// ---- vertices and facets ----

inline RationalPoint vertex_of_painted_tree(const PaintedTree& pt) {
  if (!pt.is_binary()) throw std::invalid_argument("vertex needs a binary painted tree");
  const LevelForm f = level_form(pt);
  const int m = f.m, n = f.n;
  RationalPoint a(m + n, 0);
  std::vector<int> leaves(n, 0);
  std::function<int(int)> count = [&](int c) -> int {
    if (c < 0) return 1;
    return leaves[c] = count(f.left[c]) + count(f.right[c]);
  };
  if (n > 0) count(f.root);
  for (int t = 0; t < m; ++t) {
    int below = m - t;
    for (int v = 0; v < n; ++v) below += f.level[v] > t;
    a[f.labels[t] - 1] = below;
  }
  auto lc = [&](int c) { return c < 0 ? 1 : leaves[c]; };
  for (int v = 0; v < n; ++v) a[m + v] = (m - f.level[v]) + lc(f.left[v]) * lc(f.right[v]);
  return a;
}

inline RationalPoint vertex_of_lighted_shade(const LightedShade& ls) {
  if (!ls.is_unary()) throw std::invalid_argument("vertex needs a unary lighted shade");
  const int m = ls.m(), n = ls.n(), d = m + n;
  RationalPoint a(d, 1);
  const auto& E = ls.entries();
  const int len = ls.size();
  // Suffix counts of cuts and singleton sums strictly below each position.
  std::vector<int> cuts_below(len + 1, 0), sum_below(len + 1, 0);
  for (int q = len - 1; q >= 0; --q) {
    cuts_below[q] = cuts_below[q + 1] + (q + 1 < len && ls.is_cut(q + 1) ? 1 : 0);
    sum_below[q] = sum_below[q + 1] + (q + 1 < len && !ls.is_cut(q + 1) ? E[q + 1].tuple[0] : 0);
  }
  for (int q = 0; q < len; ++q)
    if (ls.is_cut(q)) a[E[q].lights[0] - 1] = 1 + cuts_below[q] + sum_below[q];
  for (const auto& c : ls.cells()) {
    int s = c.value, p = c.ps;
    a[p - 1] = 1 + s * (d - p + cuts_below[c.entry]) + (s * (s - 1)) / 2;
  }
  return a;
}

inline Halfspace facet_of_painted_tree(const PaintedTree& pt) {
  const int m = pt.m();
  if (pt.rank() != pt.dim() - 2) throw std::invalid_argument("facet needs a painted tree of rank m+n-2");
  std::vector<int> A;
  for (int c = 0; c < pt.cut_count(); ++c)
    if (std::find(pt.cuts()[c].begin(), pt.cuts()[c].end(), 0) == pt.cuts()[c].end())
      A.insert(A.end(), pt.parts()[c].begin(), pt.parts()[c].end());
  Halfspace h;
  BigInt rhs = binomial(static_cast<int>(A.size()) + 1, 2);
  int total_b = 0;
  h.support = A;
  for (int v = 1; v < pt.node_count(); ++v) {
    if (pt.arity(v) == 1) continue;
    const auto& L = pt.labels(v);
    rhs += binomial(static_cast<int>(L.size()) + 1, 2);
    total_b += static_cast<int>(L.size());
    for (int l : L) h.support.push_back(l + m);
  }
  rhs += BigInt(static_cast<int>(A.size()) * total_b);
  std::sort(h.support.begin(), h.support.end());
  h.rhs = Rational(rhs);
  return h;
}

inline Halfspace facet_of_lighted_shade(const LightedShade& ls) {
  const int m = ls.m(), n = ls.n();
  if (ls.rank() != ls.dim() - 2) throw std::invalid_argument("facet needs a lighted shade of rank m+n-2");
  const auto& E = ls.entries();
  Halfspace h;
  for (int q = 1; q < ls.size(); ++q) h.support.insert(h.support.end(), E[q].lights.begin(), E[q].lights.end());
  const int a = static_cast<int>(h.support.size());
  int b = 0;
  if (ls.size() == 1) {
    const auto& t = E[0].tuple;
    auto it = std::find(t.begin(), t.end(), 2);
    if (it == t.end()) throw std::logic_error("single-tuple facet shade without a 2");
    h.support.push_back(m + static_cast<int>(it - t.begin()) + 1);
    b = 1;
  } else if (ls.size() == 2) {
    int q = static_cast<int>(E[0].tuple.size());
    for (int i = m + q + 1; i <= m + n; ++i) h.support.push_back(i);
    b = n - q;
  } else {
    throw std::logic_error("facet shades have one or two tuples");
  }
  std::sort(h.support.begin(), h.support.end());
  h.rhs = Rational(binomial(a + b + 1, 2));
  return h;
}

// ---- Minkowski parametrizations ----

enum class PolytopeKind { multiplihedron, hochschild, freehedron };

inline std::string to_string(PolytopeKind k) {
  switch (k) {
    case PolytopeKind::multiplihedron: return "multiplihedron";
    case PolytopeKind::hochschild: return "hochschild";
    default: return "freehedron";
  }
}

inline PolytopeKind parse_polytope_kind(const std::string& s) {
  if (s == "multiplihedron" || s == "painted") return PolytopeKind::multiplihedron;
  if (s == "hochschild" || s == "shade") return PolytopeKind::hochschild;
  if (s == "freehedron") return PolytopeKind::freehedron;
  throw std::invalid_argument("unknown polytope kind: " + s);
}

// Subsets of [d] are bit masks (bit i-1 for element i).
using SubsetMask = std::uint32_t;

inline std::vector<int> subset_elements(SubsetMask s) {
  std::vector<int> v;
  for (int i = 0; s >> i; ++i)
    if ((s >> i) & 1u) v.push_back(i + 1);
  return v;
}

inline std::string subset_key(SubsetMask s) {
  std::string k;
  for (int i : subset_elements(s)) {
    if (!k.empty()) k += ",";
    k += std::to_string(i);
  }
  return k;
}

inline SubsetMask interval_mask(int lo, int hi) {
  SubsetMask s = 0;
  for (int i = lo; i <= hi; ++i) s |= SubsetMask{1} << (i - 1);
  return s;
}

struct MinkowskiData {
  int d = 0;
  std::vector<BigInt> y;  // indexed by mask, entry 0 unused
  std::vector<BigInt> z;
};

// z_J = sum over I in J of y_I.
inline std::vector<BigInt> zeta_transform(std::vector<BigInt> f, int d) {
  for (int i = 0; i < d; ++i)
    for (SubsetMask s = 0; s < (SubsetMask{1} << d); ++s)
      if ((s >> i) & 1u) f[s] += f[s ^ (SubsetMask{1} << i)];
  return f;
}

// y_I = sum over J in I of (-1)^{|I - J|} z_J.
inline std::vector<BigInt> moebius_transform(std::vector<BigInt> f, int d) {
  for (int i = 0; i < d; ++i)
    for (SubsetMask s = 0; s < (SubsetMask{1} << d); ++s)
      if ((s >> i) & 1u) f[s] -= f[s ^ (SubsetMask{1} << i)];
  return f;
}

// Ambient dimension: m + n, except the freehedron on intervals of [n + 1].
inline int ambient_dim(PolytopeKind k, int m, int n) { return k == PolytopeKind::freehedron ? n + 1 : m + n; }

inline BigInt minkowski_y(PolytopeKind k, int m, int n, SubsetMask I) {
  const int card = std::popcount(I);
  const SubsetMask M = interval_mask(1, m), N = interval_mask(m + 1, m + n);
  auto is_interval_of_n = [&](SubsetMask s) {
    if (!s || (s & ~N)) return false;
    SubsetMask low = s & (~s + 1);
    return ((s + low) & s) == 0;  // contiguous run of bits
  };
  switch (k) {
    case PolytopeKind::multiplihedron:
      return ((card <= 2 && std::popcount(I & N) <= 1) || is_interval_of_n(I)) ? 1 : 0;
    case PolytopeKind::hochschild: {
      if (card == 1) return 1;
      if (card == 2 && !(I & ~M)) return 1;
      for (int j = 1; j <= n; ++j) {
        SubsetMask tail = interval_mask(m + j, m + n);
        if (I == tail) return n - j;
        for (int i = 1; i <= m; ++i)
          if (I == (tail | (SubsetMask{1} << (i - 1)))) return 1;
      }
      return 0;
    }
    default: {
      const int d = n + 1;
      int c = 0;
      for (int i = 1; i <= d; ++i) {
        if (I == interval_mask(1, i)) ++c;
        if (I == interval_mask(i, d)) ++c;
      }
      return c;
    }
  }
}

// Closed tight right hand sides (not defined for the freehedron).
inline BigInt minkowski_z_closed(PolytopeKind k, int m, int n, SubsetMask J) {
  const SubsetMask M = interval_mask(1, m);
  const int a = std::popcount(J & M);
  std::vector<int> rest;
  for (int e : subset_elements(J & ~M)) rest.push_back(e);
  if (k == PolytopeKind::multiplihedron) {
    BigInt z = binomial(a + 1, 2);
    int total = static_cast<int>(rest.size());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j + 1 < rest.size() && rest[j + 1] == rest[j] + 1) ++j;
      z += binomial(static_cast<int>(j - i + 1) + 1, 2);
      i = j + 1;
    }
    return z + BigInt(a * total);
  }
  if (k == PolytopeKind::hochschild) {
    int c = 0;
    if (!rest.empty() && rest.back() == m + n) {
      c = 1;
      for (int i = static_cast<int>(rest.size()) - 1; i > 0 && rest[i - 1] == rest[i] - 1; --i) ++c;
    }
    int b = static_cast<int>(rest.size()) - c;
    return binomial(a + c + 1, 2) + BigInt(b);
  }
  throw std::invalid_argument("no closed z formula for the freehedron");
}

inline MinkowskiData minkowski_data(PolytopeKind k, int m, int n) {
  if (k == PolytopeKind::freehedron) {
    if (n < 1) throw std::invalid_argument("freehedron needs n >= 1");
  } else {
    check_parameters(m, n);
  }
  MinkowskiData md;
  md.d = ambient_dim(k, m, n);
  if (md.d > 20) throw std::length_error("Minkowski tables above dimension 20 are not supported");
  const SubsetMask full = SubsetMask{1} << md.d;
  md.y.assign(full, 0);
  for (SubsetMask I = 1; I < full; ++I) md.y[I] = minkowski_y(k, m, n, I);
  md.z = zeta_transform(md.y, md.d);
  return md;
}

// Vertex of the sum of simplices y_I * conv(e_i, i in I) minimizing a functional whose
// increasing order on coordinates is `order`.
inline RationalPoint minkowski_vertex(const MinkowskiData& md, const std::vector<int>& order) {
  std::vector<int> pos(md.d + 1);
  for (int i = 0; i < md.d; ++i) pos[order[i]] = i;
  std::vector<BigInt> v(md.d, 0);
  for (SubsetMask I = 1; I < md.y.size(); ++I) {
    if (md.y[I] == 0) continue;
    int best = -1;
    for (int e : subset_elements(I))
      if (best < 0 || pos[e] < pos[best]) best = e;
    v[best - 1] += md.y[I];
  }
  RationalPoint r(md.d);
  for (int i = 0; i < md.d; ++i) r[i] = Rational(v[i]);
  return r;
}

// Vertices and edges of a Minkowski sum of simplices read off the braid fan: one
// point per chamber, edges between chambers across a wall when the points differ.
struct ChamberSkeleton {
  std::vector<RationalPoint> vertices;  // sorted
  std::vector<std::pair<int, int>> edges;
};

inline ChamberSkeleton chamber_skeleton(const MinkowskiData& md) {
  std::vector<int> order(md.d);
  std::iota(order.begin(), order.end(), 1);
  std::map<RationalPoint, int> id;
  std::vector<std::pair<RationalPoint, RationalPoint>> raw;
  do {
    RationalPoint v = minkowski_vertex(md, order);
    id.emplace(v, 0);
    for (int i = 0; i + 1 < md.d; ++i) {
      auto o = order;
      std::swap(o[i], o[i + 1]);
      RationalPoint w = minkowski_vertex(md, o);
      if (w != v) raw.emplace_back(v, w);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  ChamberSkeleton sk;
  for (auto& [v, i] : id) {
    i = static_cast<int>(sk.vertices.size());
    sk.vertices.push_back(v);
  }
  std::set<std::pair<int, int>> e;
  for (auto& [v, w] : raw) {
    int a = id.at(v), b = id.at(w);
    e.emplace(std::min(a, b), std::max(a, b));
  }
  sk.edges.assign(e.begin(), e.end());
  return sk;
}

// ---- polytope data indexed by objects ----

template <class T>
RationalPoint vertex_of(const T& obj) {
  if constexpr (std::is_same_v<T, PaintedTree>) return vertex_of_painted_tree(obj);
  else return vertex_of_lighted_shade(obj);
}

template <class T>
Halfspace facet_of(const T& obj) {
  if constexpr (std::is_same_v<T, PaintedTree>) return facet_of_painted_tree(obj);
  else return facet_of_lighted_shade(obj);
}

template <class T>
struct PolytopeData {
  int m = 0, n = 0;
  std::vector<T> vertex_objects;
  std::vector<RationalPoint> vertices;
  std::vector<T> facet_objects;
  std::vector<Halfspace> facets;
  std::vector<Bitset> tight;  // per vertex, the facets whose hyperplane contains it
};

template <class T>
PolytopeData<T> polytope_data(int m, int n, int max_dim = kDefaultMaxDim) {
  PolytopeData<T> P;
  P.m = m;
  P.n = n;
  P.vertex_objects = enum_rank_zero<T>(m, n, max_dim);
  const int d = m + n;
  if (d >= 2) {
    if constexpr (std::is_same_v<T, PaintedTree>) P.facet_objects = enum_painted_trees(m, n, d - 2, max_dim);
    else P.facet_objects = enum_lighted_shades(m, n, d - 2, max_dim);
  }
  for (auto& v : P.vertex_objects) P.vertices.push_back(vertex_of(v));
  for (auto& f : P.facet_objects) P.facets.push_back(facet_of(f));
  const int V = static_cast<int>(P.vertices.size()), F = static_cast<int>(P.facets.size());
  P.tight.assign(V, Bitset(F));
  parallel_for(V, [&](int i) {
    for (int j = 0; j < F; ++j)
      if (P.facets[j].tight(P.vertices[i])) P.tight[i].set(j);
  });
  return P;
}

// Edges of the polytope from its H-description: u, v adjacent iff no third vertex lies on
// every facet containing both.
template <class T>
std::vector<std::pair<int, int>> geometric_edges(const PolytopeData<T>& P) {
  const int V = static_cast<int>(P.vertices.size()), d = P.m + P.n;
  std::vector<std::vector<int>> adj(V);
  parallel_for(V, [&](int u) {
    for (int v = u + 1; v < V; ++v) {
      Bitset common = P.tight[u] & P.tight[v];
      if (static_cast<int>(common.count()) < d - 2) continue;
      bool edge = true;
      for (int w = 0; w < V && edge; ++w)
        if (w != u && w != v && common.subset_of(P.tight[w])) edge = false;
      if (edge) adj[u].push_back(v);
    }
  });
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < V; ++u)
    for (int v : adj[u]) out.emplace_back(u, v);
  return out;
}

// The skeleton oriented by increasing omega: arcs (from, to) between vertex indices.
struct OrientedSkeleton {
  std::vector<std::string> keys;
  std::vector<std::pair<int, int>> arcs;
  std::optional<std::pair<int, int>> tie;  // an edge orthogonal to omega, if any
};

inline OrientedSkeleton orient(const std::vector<std::string>& keys, const std::vector<RationalPoint>& pts,
                               const std::vector<std::pair<int, int>>& edges, int d) {
  OrientedSkeleton s;
  s.keys = keys;
  auto w = omega(d);
  for (auto [u, v] : edges) {
    Rational du = dot(pts[u], w), dv = dot(pts[v], w);
    if (du == dv) {
      if (!s.tie) s.tie = {u, v};
      continue;
    }
    s.arcs.emplace_back(du < dv ? u : v, du < dv ? v : u);
  }
  std::sort(s.arcs.begin(), s.arcs.end());
  return s;
}

template <class T>
OrientedSkeleton oriented_skeleton(int m, int n, int max_dim = kDefaultMaxDim) {
  auto P = polytope_data<T>(m, n, max_dim);
  return orient(detail::keys_of(P.vertex_objects), P.vertices, geometric_edges(P), m + n);
}

inline OrientedSkeleton oriented_skeleton(PolytopeKind k, int m, int n, int max_dim = kDefaultMaxDim) {
  if (k == PolytopeKind::multiplihedron) return oriented_skeleton<PaintedTree>(m, n, max_dim);
  if (k == PolytopeKind::hochschild) return oriented_skeleton<LightedShade>(m, n, max_dim);
  auto md = minkowski_data(k, m, n);
  auto sk = chamber_skeleton(md);
  std::vector<std::string> keys;
  for (auto& v : sk.vertices) keys.push_back(to_string(v));
  return orient(keys, sk.vertices, sk.edges, md.d);
}

// Reachability order of an acyclic arc set as a poset.
inline FinitePoset skeleton_poset(const OrientedSkeleton& s) {
  const int N = static_cast<int>(s.keys.size());
  std::vector<std::vector<int>> out(N);
  for (auto [a, b] : s.arcs) out[a].push_back(b);
  std::vector<Bitset> reach(N, Bitset(N));
  std::vector<int> state(N, 0);
  std::function<void(int)> dfs = [&](int x) {
    state[x] = 1;
    reach[x].set(x);
    for (int y : out[x]) {
      if (state[y] == 1) throw std::invalid_argument("oriented skeleton has a cycle");
      if (!state[y]) dfs(y);
      reach[x] |= reach[y];
    }
    state[x] = 2;
  };
  for (int x = 0; x < N; ++x)
    if (!state[x]) dfs(x);
  return FinitePoset::from_order(s.keys, [&](int a, int b) { return reach[a].test(b); });
}

// ---- certification ----

struct CertificationReport {
  std::string polytope;
  int m = 0, n = 0;
  int vertex_count = 0, facet_count = 0;
  bool on_hyperplane = true;
  bool inside_halfspaces = true;
  bool incidence_matches_refinement = true;
  bool edge_directions = true;
  bool move_formulas = true;  // per-move difference formulas (shades only)
  bool simple = true;          // every vertex on m+n-1 facets (checked for shades)
  bool fan_simplicial = true;
  bool fan_closed_under_faces = true;
  bool fan_complete = true;
  bool shadow_witness = true;
  bool z_matches_support = true;
  bool minkowski_vertices_match = true;
  bool moebius_roundtrip = true;
  std::vector<std::string> failures;

  bool certified() const {
    return on_hyperplane && inside_halfspaces && incidence_matches_refinement && edge_directions &&
           move_formulas && simple && fan_simplicial && fan_closed_under_faces && fan_complete &&
           shadow_witness && z_matches_support && minkowski_vertices_match && moebius_roundtrip;
  }
  void fail(bool& flag, const std::string& what) {
    if (flag && failures.size() < 20) failures.push_back(what);
    flag = false;
  }
};

namespace detail {

// Expected vertex difference of a shade rotation, from the three move formulas.
inline RationalPoint shade_move_difference(const LightedShade& s, const LightedShade& t, int move) {
  const int m = s.m(), n = s.n(), d = m + n;
  RationalPoint diff(d, 0);
  const auto& E = s.entries();
  const auto& F = t.entries();
  int q = 0;
  while (q < s.size() && q < t.size() && E[q] == F[q]) ++q;
  auto cuts_below = [&](int entry) {
    int c = 0;
    for (int r = entry + 1; r < s.size(); ++r) c += s.is_cut(r);
    return c;
  };
  auto ps_of_entry = [&](int entry) {
    for (auto& c : s.cells())
      if (c.entry == entry) return c.ps;
    return -1;
  };
  if (move == 1) {
    int sv = F[q].tuple[0], tv = F[q + 1].tuple[0];
    int p = ps_of_entry(q), cp = cuts_below(q);
    Rational lam = sv * (d - p + tv + cp) + (sv * (sv - 1)) / 2;
    diff[p - tv - 1] += lam;
    diff[p - 1] -= lam;
  } else if (move == 2) {
    // The singleton's value s scales e_c - e_p (the unit multiple holds for s = 1 only).
    int c = E[q + 1].lights[0], p = ps_of_entry(q), sv = E[q].tuple[0];
    diff[c - 1] += sv;
    diff[p - 1] -= sv;
  } else {
    int c = E[q].lights[0], c2 = E[q + 1].lights[0];
    diff[c2 - 1] += 1;
    diff[c - 1] -= 1;
  }
  return diff;
}

// All total orders of [d], as preposets.
inline std::vector<Preposet> total_orders(int d) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Preposet> out;
  do {
    Preposet q(d);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) q.add(p[i], p[j]);
    out.push_back(q);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

template <class T>
CertificationReport certify(int m, int n, int max_dim = kDefaultMaxDim) {
  constexpr bool painted = std::is_same_v<T, PaintedTree>;
  const PolytopeKind kind = painted ? PolytopeKind::multiplihedron : PolytopeKind::hochschild;
  CertificationReport r;
  r.polytope = to_string(kind);
  r.m = m;
  r.n = n;
  const int d = m + n;
  auto P = polytope_data<T>(m, n, max_dim);
  const int V = static_cast<int>(P.vertices.size()), F = static_cast<int>(P.facets.size());
  r.vertex_count = V;
  r.facet_count = F;
  std::vector<Preposet> vpre, fpre;
  for (auto& v : P.vertex_objects) vpre.push_back(v.preposet());
  for (auto& f : P.facet_objects) fpre.push_back(f.preposet());

  const Rational total = Rational(binomial(d + 1, 2));
  for (int i = 0; i < V; ++i) {
    Rational s = 0;
    for (auto& x : P.vertices[i]) s += x;
    if (s != total) r.fail(r.on_hyperplane, "vertex " + P.vertex_objects[i].key() + " off the hyperplane");
    for (int j = 0; j < F; ++j) {
      if (!P.facets[j].contains(P.vertices[i]))
        r.fail(r.inside_halfspaces,
               "vertex " + P.vertex_objects[i].key() + " violates " + P.facets[j].key());
      bool refines = fpre[j].contains(vpre[i]);
      if (refines != P.tight[i].test(j))
        r.fail(r.incidence_matches_refinement, "vertex " + P.vertex_objects[i].key() + " / facet " +
                                                   P.facet_objects[j].key() +
                                                   (refines ? ": refines but not tight" : ": tight but does not refine"));
    }
    if (!painted && static_cast<int>(P.tight[i].count()) != d - 1)
      r.fail(r.simple, "vertex " + P.vertex_objects[i].key() + " lies on " + std::to_string(P.tight[i].count()) +
                           " facets");
  }

  // Rotation edges: the difference is a positive multiple of e_i - e_j for the flipped pair.
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < V; ++i) idx[P.vertex_objects[i].key()] = i;
  for (int a = 0; a < V; ++a)
    for (auto& rot : rotations(P.vertex_objects[a])) {
      int b = idx.at(rot.target.key());
      auto diff = minus(P.vertices[b], P.vertices[a]);
      auto flip = flip_pair(vpre[a], vpre[b]);
      std::string where = P.vertex_objects[a].key() + " -> " + P.vertex_objects[b].key();
      if (!flip) {
        r.fail(r.edge_directions, "no flipped pair on " + where);
        continue;
      }
      auto [i, j] = *flip;
      bool ok = diff[i - 1] > 0 && diff[i - 1] == -diff[j - 1];
      for (int k = 1; k <= d && ok; ++k)
        if (k != i && k != j && diff[k - 1] != 0) ok = false;
      if (!ok) r.fail(r.edge_directions, "difference " + to_string(diff) + " on " + where);
      if constexpr (!painted) {
        if (detail::shade_move_difference(P.vertex_objects[a], rot.target, rot.move) != diff)
          r.fail(r.move_formulas, "move formula disagrees on " + where);
      }
    }

  // Fan checks.
  if constexpr (!painted) {
    auto all = enum_lighted_shades(m, n, std::nullopt, max_dim);
    std::unordered_map<Preposet, int, PreposetHash> cone;
    for (auto& s : all) cone.emplace(s.preposet(), s.rank());
    for (auto& s : all) {
      Preposet p = s.preposet();
      if (!p.hasse_is_forest()) r.fail(r.fan_simplicial, "Hasse diagram of " + s.key() + " has a cycle");
      auto cl = p.classes();
      for (auto [x, y] : p.hasse()) {
        Preposet q = p;
        q.add(cl[y][0], cl[x][0]);
        q.close();
        auto it = cone.find(q);
        if (it == cone.end() || it->second != s.rank() + 1)
          r.fail(r.fan_closed_under_faces, "contracting a Hasse edge of " + s.key() + " leaves the fan");
      }
    }
    // Every binary painted tree cone lies in exactly one unary shade cone, namely its
    // shadow's; cone inclusion is the reverse inclusion of relations.
    for (auto& t : enum_rank_zero<PaintedTree>(m, n, max_dim)) {
      Preposet pt = t.preposet();
      int hits = 0, hit = -1;
      for (int i = 0; i < V; ++i)
        if (pt.contains(vpre[i])) ++hits, hit = i;
      if (hits != 1 || P.vertex_objects[hit].key() != shadow(t).key())
        r.fail(r.shadow_witness, "painted tree " + t.key() + " lies in " + std::to_string(hits) + " shade cones");
    }
  }
  // Completeness: every chamber of the braid fan lies in exactly one maximal cone.
  if (d <= 8) {
    for (auto& o : detail::total_orders(d)) {
      int hits = 0;
      for (auto& p : vpre) hits += o.contains(p);
      if (hits != 1) r.fail(r.fan_complete, "a chamber lies in " + std::to_string(hits) + " maximal cones");
    }
  }

  // Minkowski data: z from y, the closed formula, and the support function agree.
  auto md = minkowski_data(kind, m, n);
  if (moebius_transform(md.z, d) != md.y) r.fail(r.moebius_roundtrip, "Moebius inversion does not return y");
  for (SubsetMask J = 1; J < (SubsetMask{1} << d); ++J) {
    BigInt closed = minkowski_z_closed(kind, m, n, J);
    std::optional<Rational> lo;
    for (auto& v : P.vertices) {
      Rational s = 0;
      for (int e : subset_elements(J)) s += v[e - 1];
      if (!lo || s < *lo) lo = s;
    }
    if (Rational(closed) != *lo || Rational(md.z[J]) != *lo)
      r.fail(r.z_matches_support, "z at {" + subset_key(J) + "}: closed " + closed.str() + ", from y " +
                                      md.z[J].str() + ", support " + to_string(*lo));
  }
  if (d <= 8) {
    auto sk = chamber_skeleton(md);
    auto mine = P.vertices;
    std::sort(mine.begin(), mine.end());
    if (mine != sk.vertices) r.fail(r.minkowski_vertices_match, "Minkowski vertices differ from the vertex formula");
  }
  return r;
}

inline CertificationReport certify_polytope(PolytopeKind k, int m, int n, int max_dim = kDefaultMaxDim) {
  if (k == PolytopeKind::multiplihedron) return certify<PaintedTree>(m, n, max_dim);
  if (k == PolytopeKind::hochschild) return certify<LightedShade>(m, n, max_dim);
  throw std::invalid_argument("certification covers the multiplihedron and the Hochschild polytope");
}

// ---- comparisons between the two families ----

struct FacetComparison {
  bool shade_subset_of_painted = true;
  bool shared_iff_tight_at_singleton = true;
  bool singleton_vertices_shared = true;
  int painted_facets = 0, shade_facets = 0, singleton_count = 0;
  std::vector<std::string> failures;
};

inline FacetComparison compare_facets(int m, int n, int max_dim = kDefaultMaxDim) {
  FacetComparison c;
  auto PT = polytope_data<PaintedTree>(m, n, max_dim);
  auto LS = polytope_data<LightedShade>(m, n, max_dim);
  c.painted_facets = static_cast<int>(PT.facets.size());
  c.shade_facets = static_cast<int>(LS.facets.size());
  std::set<Halfspace> shade(LS.facets.begin(), LS.facets.end());
  std::set<Halfspace> painted(PT.facets.begin(), PT.facets.end());
  for (auto& h : shade)
    if (!painted.count(h)) {
      c.shade_subset_of_painted = false;
      c.failures.push_back("shade facet " + h.key() + " is not a painted facet");
    }
  std::set<RationalPoint> shade_vertices(LS.vertices.begin(), LS.vertices.end());
  std::vector<RationalPoint> singles;
  for (std::size_t i = 0; i < PT.vertex_objects.size(); ++i)
    if (is_singleton(PT.vertex_objects[i])) {
      singles.push_back(PT.vertices[i]);
      if (PT.vertices[i] != vertex_of_lighted_shade(shadow(PT.vertex_objects[i])) ||
          !shade_vertices.count(PT.vertices[i])) {
        c.singleton_vertices_shared = false;
        c.failures.push_back("singleton " + PT.vertex_objects[i].key() + " is not a shade vertex");
      }
    }
  c.singleton_count = static_cast<int>(singles.size());
  for (auto& h : PT.facets) {
    bool tight = false;
    for (auto& v : singles) tight = tight || h.tight(v);
    if (tight != static_cast<bool>(shade.count(h))) {
      c.shared_iff_tight_at_singleton = false;
      c.failures.push_back("painted facet " + h.key() + (tight ? " is tight at a singleton but not shared"
                                                                : " is shared but tight at no singleton"));
    }
  }
  return c;
}

// The freehedron counterexample: the omega-oriented skeleton of the Minkowski sum of
// initial and final interval simplices.
struct FreehedronReport {
  int n = 0;
  int vertex_count = 0, edge_count = 0;
  bool has_tie = false;
  bool is_lattice = true;
  std::optional<std::pair<std::string, std::string>> joinless, meetless;
};

inline FreehedronReport freehedron_orientation(int n) {
  FreehedronReport r;
  r.n = n;
  auto s = oriented_skeleton(PolytopeKind::freehedron, 0, n);
  r.vertex_count = static_cast<int>(s.keys.size());
  r.edge_count = static_cast<int>(s.arcs.size()) + (s.tie ? 1 : 0);
  r.has_tie = s.tie.has_value();
  auto P = skeleton_poset(s);
  auto w = lattice_witness(P);
  r.is_lattice = P.is_bounded() && w.all_meets && w.all_joins;
  if (w.joinless) r.joinless = std::make_pair(P.key(w.joinless->first), P.key(w.joinless->second));
  if (w.meetless) r.meetless = std::make_pair(P.key(w.meetless->first), P.key(w.meetless->second));
  return r;
}

// Vertices of the parallelotope sum_{i < n} [e_i, e_{i+1}], translated into the hyperplane.
inline std::vector<RationalPoint> parallelotope_vertices(int n) {
  std::vector<RationalPoint> out;
  const Rational shift = (Rational(binomial(n + 1, 2)) - (n - 1)) / n;
  for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
    RationalPoint v(n, shift);
    for (int i = 0; i + 1 < n; ++i) v[((s >> i) & 1u) ? i + 1 : i] += 1;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// True when no translation carries one point set onto the other.
inline bool differ_up_to_translation(std::vector<RationalPoint> a, std::vector<RationalPoint> b) {
  if (a.size() != b.size()) return true;
  if (a.empty()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  auto t = minus(b[0], a[0]);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < t.size(); ++k)
      if (a[i][k] + t[k] != b[i][k]) return true;
  return false;
}

inline RationalPoint barycenter(const std::vector<RationalPoint>& pts) {
  RationalPoint c(pts.empty() ? 0 : pts[0].size(), 0);
  for (auto& p : pts)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  for (auto& x : c) x /= static_cast<int>(pts.size());
  return c;
}

}  // namespace hochkit
