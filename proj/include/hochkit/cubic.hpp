#pragma once

#include "lattices.hpp"
#include "objects.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hochkit {

// Integer coordinates (C_2, ..., C_d); the always-zero first coordinate is dropped.
using CubicVector = std::vector<int>;

inline std::string to_string(const CubicVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

// ---- Lehmer codes and bracket vectors ----

inline void check_permutation(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size() + 1, false);
  for (int x : perm) {
    if (x < 1 || x > static_cast<int>(perm.size()) || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

// L_j = #{i < j : i appears before j}, for j = 2..m.
inline CubicVector lehmer_code(const std::vector<int>& perm) {
  check_permutation(perm);
  const int m = static_cast<int>(perm.size());
  std::vector<int> pos(m + 1);
  for (int k = 0; k < m; ++k) pos[perm[k]] = k;
  CubicVector L;
  for (int j = 2; j <= m; ++j) {
    int c = 0;
    for (int i = 1; i < j; ++i) c += pos[i] < pos[j];
    L.push_back(c);
  }
  return L;
}

// B_j = leaves of the left subtree of the node with inorder label j, minus one; j = 2..n.
inline CubicVector bracket_vector(const PaintedTree& t) {
  if (t.m() != 0 || !t.is_binary()) throw std::invalid_argument("bracket vector needs a binary tree with m = 0");
  CubicVector B(t.n(), 0);
  for (int v = 0; v < t.node_count(); ++v)
    for (int g : t.labels(v)) B[g - 1] = t.leaf_count_of_child(t.children(v)[0]) - 1;
  B.erase(B.begin());
  return B;
}

// C_j = #{i < j : i strictly below j in the preposet}, j = 2..m+n, read literally. Two
// tree nodes become comparable through a cut (x below the cut, the cut below y), and
// then a rotation can move two coordinates at once; see cubic_vector_painted.
inline CubicVector cubic_vector_painted_transitive(const PaintedTree& t) {
  if (!t.is_binary()) throw std::invalid_argument("cubic vector needs a binary painted tree");
  auto p = t.preposet();
  CubicVector C;
  for (int j = 2; j <= t.dim(); ++j) {
    int c = 0;
    for (int i = 1; i < j; ++i) c += p.strictly_less(i, j);
    C.push_back(c);
  }
  return C;
}

// Same count, except that two tree nodes are compared in the tree only (i below j when
// i is a descendant of j): cut coordinates give the Lehmer code of the cut order, and
// the coordinate of node j is the number of cuts below it plus its bracket entry.
inline CubicVector cubic_vector_painted(const PaintedTree& t) {
  if (!t.is_binary()) throw std::invalid_argument("cubic vector needs a binary painted tree");
  auto p = t.preposet();
  const int m = t.m();
  std::vector<int> left(t.n() + 1, 0);
  for (int v = 0; v < t.node_count(); ++v)
    for (int g : t.labels(v)) left[g] = t.leaf_count_of_child(t.children(v)[0]) - 1;
  CubicVector C;
  for (int j = 2; j <= t.dim(); ++j) {
    int c = 0;
    for (int i = 1; i <= std::min(j - 1, m); ++i) c += p.strictly_less(i, j);
    if (j > m) c += left[j - m];
    C.push_back(c);
  }
  return C;
}

// Cut labels of a binary painted tree from the lowest cut to the highest.
inline std::vector<int> cut_order(const PaintedTree& t) {
  std::vector<int> out;
  for (auto& part : t.parts()) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// ---- Hochschild words ----

struct HochschildWord {
  std::vector<int> perm;  // cut labels of the shade, lowest cut first
  std::vector<int> word;  // letters in {0, ..., m+1}
  friend bool operator==(const HochschildWord&, const HochschildWord&) = default;
};

inline std::string to_string(const HochschildWord& h) {
  return "[" + to_string(CubicVector(h.perm)) + "|" + to_string(CubicVector(h.word)) + "]";
}

// Empty when w is an (m, n)-word, else the violated clause.
inline std::string word_violation(int m, const std::vector<int>& w) {
  for (int x : w)
    if (x < 0 || x > m + 1) return "letter outside {0, ..., m+1}";
  if (!w.empty() && w[0] == m + 1) return "first letter equals m+1";
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= 1 && w[i] <= m)
      for (std::size_t j = 0; j < i; ++j)
        if (w[j] < w[i]) return "letter " + std::to_string(w[i]) + " at position " + std::to_string(i + 1) +
                                   " preceded by the smaller letter " + std::to_string(w[j]);
  return {};
}

inline bool is_word(int m, const std::vector<int>& w) { return word_violation(m, w).empty(); }

// All (m, n)-words in lexicographic order.
inline std::vector<std::vector<int>> words(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(w);
      return;
    }
    for (int x = 0; x <= m + 1; ++x) {
      if (i == 0 && x == m + 1) continue;
      if (x >= 1 && x <= m) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) ok = w[j] >= x;
        if (!ok) continue;
      }
      w[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Reading top to bottom, each singleton (s) contributes the number of cuts below it
// followed by s-1 copies of m+1.
inline HochschildWord shade_to_word(const LightedShade& s) {
  if (!s.is_unary()) throw std::invalid_argument("Hochschild words need a unary shade");
  HochschildWord h;
  const int m = s.m();
  int cuts_below = s.cut_count();
  for (int q = 0; q < s.size(); ++q) {
    auto& e = s.entries()[q];
    if (s.is_cut(q)) --cuts_below;
    for (int x : e.tuple) {
      h.word.push_back(cuts_below);
      for (int k = 1; k < x; ++k) h.word.push_back(m + 1);
    }
  }
  for (int q = s.size() - 1; q >= 0; --q)
    for (int l : s.entries()[q].lights) h.perm.push_back(l);
  return h;
}

// Places the m cuts and, for each maximal block i (m+1)^(s-1) of w, a singleton (s)
// with exactly i cuts below it.
inline LightedShade word_to_shade(int m, const HochschildWord& h) {
  if (static_cast<int>(h.perm.size()) != m) throw std::invalid_argument("permutation length differs from m");
  check_permutation(h.perm);
  if (auto v = word_violation(m, h.word); !v.empty()) throw std::invalid_argument("not an (m, n)-word: " + v);
  const int n = static_cast<int>(h.word.size());
  std::vector<std::vector<int>> blocks(m + 1);  // blocks[i]: sizes with i cuts below, in order
  for (int p = 0; p < n;) {
    int i = h.word[p], s = 1;
    while (p + s < n && h.word[p + s] == m + 1) ++s;
    blocks[i].push_back(s);
    p += s;
  }
  std::vector<ShadeEntry> entries;
  for (int i = m; i >= 0; --i) {
    for (int s : blocks[i]) entries.push_back({{s}, {}});
    if (i > 0) entries.push_back({{}, {h.perm[i - 1]}});
  }
  return LightedShade(m, n, std::move(entries));
}

// Lehmer block of the cut permutation followed by the word.
inline CubicVector cubic_vector_of_word(const HochschildWord& h) {
  CubicVector c = lehmer_code(h.perm);
  c.insert(c.end(), h.word.begin(), h.word.end());
  return c;
}

inline CubicVector cubic_vector_shade(const LightedShade& s) { return cubic_vector_of_word(shade_to_word(s)); }

inline CubicVector cubic_vector(const PaintedTree& t) { return cubic_vector_painted(t); }
inline CubicVector cubic_vector(const LightedShade& s) { return cubic_vector_shade(s); }

// The (m, n)-words ordered componentwise; keys are the comma-joined letters.
inline FinitePoset word_poset(int m, int n) {
  auto ws = words(m, n);
  std::vector<std::string> keys;
  for (auto& w : ws) keys.push_back(to_string(CubicVector(w)));
  return FinitePoset::from_order(std::move(keys), [&](int a, int b) {
    for (int i = 0; i < n; ++i)
      if (ws[a][i] > ws[b][i]) return false;
    return true;
  });
}

// ---- cubic realizations and subdivisions ----

struct Box {
  CubicVector lo, hi;
  int dim() const {
    int d = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) d += lo[i] < hi[i];
    return d;
  }
  bool contains(const CubicVector& x) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
  }
  bool contains(const Box& b) const { return contains(b.lo) && contains(b.hi); }
  friend bool operator==(const Box&, const Box&) = default;
  friend bool operator<(const Box& a, const Box& b) { return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi); }
};

inline std::optional<Box> intersect(const Box& a, const Box& b) {
  Box r{a.lo, a.hi};
  for (std::size_t i = 0; i < a.lo.size(); ++i) {
    r.lo[i] = std::max(a.lo[i], b.lo[i]);
    r.hi[i] = std::min(a.hi[i], b.hi[i]);
    if (r.lo[i] > r.hi[i]) return std::nullopt;
  }
  return r;
}

inline std::string to_string(const Box& b) { return "[" + to_string(b.lo) + " .. " + to_string(b.hi) + "]"; }

struct CubicReport {
  int vertex_count = 0, face_count = 0;
  bool coordinates_in_range = true;
  bool injective = true;
  bool single_coordinate_decreasing = true;
  bool extremes_span_bounding_box = true;
  bool boundary_contained = true;
  bool face_boxes_ordered = true;      // C(max) <= C(min) and the face's vertices lie in its box
  bool subcubes_on_boundary = true;    // every corner of a proper face box is on the boundary
  bool dimensions_match = true;        // box dimension = face dimension
  bool inclusion_matches_faces = true; // box inclusion iff face inclusion
  bool boundary_covered = true;
  bool intersections_closed = true;
  std::vector<std::string> failures;

  bool realization_ok() const {
    return coordinates_in_range && injective && single_coordinate_decreasing && extremes_span_bounding_box &&
           boundary_contained;
  }
  bool subdivision_ok() const {
    return face_boxes_ordered && subcubes_on_boundary && dimensions_match && inclusion_matches_faces &&
           boundary_covered && intersections_closed;
  }
  bool ok() const { return realization_ok() && subdivision_ok(); }
  void fail(bool& flag, const std::string& msg) {
    flag = false;
    if (failures.size() < 20) failures.push_back(msg);
  }
};

namespace detail {

inline bool coordinates_in_range(const PaintedTree& t, const CubicVector& c) {
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] < 0 || c[k] > static_cast<int>(k) + 1) return false;
  return static_cast<int>(c.size()) == t.dim() - 1;
}

inline bool coordinates_in_range(const LightedShade& s, const CubicVector& c) {
  const int m = s.m(), lehmer = std::max(0, m - 1);
  if (static_cast<int>(c.size()) != lehmer + s.n()) return false;
  for (int k = 0; k < lehmer; ++k)
    if (c[k] < 0 || c[k] > k + 1) return false;
  for (int k = lehmer; k < static_cast<int>(c.size()); ++k)
    if (c[k] < 0 || c[k] > m + 1) return false;
  return true;
}

// On the boundary of the box relative to its affine hull.
inline bool on_relative_boundary(const Box& box, const CubicVector& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (box.lo[i] < box.hi[i] && (x[i] == box.lo[i] || x[i] == box.hi[i])) return true;
  return false;
}

}  // namespace detail

// Checks the cubic realization of the rotation lattice and the cubic subdivision given
// by the boxes [C(max F), C(min F)] of all faces F.
template <class T>
CubicReport verify_cubic_realization(int m, int n, bool check_subdivision = true, int max_dim = kDefaultMaxDim) {
  CubicReport r;
  auto rot = rotation_poset<T>(m, n, max_dim);
  const int V = rot.poset.size();
  r.vertex_count = V;
  std::vector<CubicVector> C(V);
  for (int i = 0; i < V; ++i) {
    C[i] = cubic_vector(rot.objects[i]);
    if (!detail::coordinates_in_range(rot.objects[i], C[i]))
      r.fail(r.coordinates_in_range, "coordinates out of range at " + rot.poset.key(i));
  }
  std::map<CubicVector, int> seen;
  for (int i = 0; i < V; ++i)
    if (auto [it, fresh] = seen.emplace(C[i], i); !fresh)
      r.fail(r.injective, "same cubic vector " + to_string(C[i]) + " for " + rot.poset.key(it->second) + " and " +
                              rot.poset.key(i));
  for (auto [a, b] : rot.poset.covers()) {
    int changed = 0;
    bool decreasing = true;
    for (std::size_t k = 0; k < C[a].size(); ++k)
      if (C[a][k] != C[b][k]) {
        ++changed;
        decreasing = decreasing && C[a][k] > C[b][k];
      }
    if (changed != 1 || !decreasing)
      r.fail(r.single_coordinate_decreasing, "cover " + rot.poset.key(a) + " -> " + rot.poset.key(b) + ": " +
                                                 to_string(C[a]) + " -> " + to_string(C[b]));
  }
  const std::size_t D = C.empty() ? 0 : C[0].size();
  Box bound{CubicVector(D, 0), CubicVector(D, 0)};
  if (V > 0) bound = {C[0], C[0]};
  for (auto& c : C)
    for (std::size_t k = 0; k < D; ++k) {
      bound.lo[k] = std::min(bound.lo[k], c[k]);
      bound.hi[k] = std::max(bound.hi[k], c[k]);
    }
  auto bot = rot.poset.bottom(), top = rot.poset.top();
  if (!bot || !top || !(Box{C[*top], C[*bot]} == bound))
    r.fail(r.extremes_span_bounding_box, "bounding box " + to_string(bound) + " is not spanned by the extremes");
  if (bound.dim() > 0)
    for (int i = 0; i < V; ++i)
      if (!detail::on_relative_boundary(bound, C[i]))
        r.fail(r.boundary_contained, "interior point " + to_string(C[i]) + " for " + rot.poset.key(i));
  if (!check_subdivision) return r;

  // Faces, their vertex sets and boxes.
  auto faces = enum_all<T>(m, n, max_dim);
  const int F = static_cast<int>(faces.size());
  r.face_count = F;
  std::vector<Preposet> vpre, fpre;
  for (auto& v : rot.objects) vpre.push_back(v.preposet());
  for (auto& f : faces) fpre.push_back(f.preposet());
  const int full_rank = m + n - 1;
  std::vector<Box> box(F);
  std::vector<int> fdim(F);
  std::mutex mu;
  parallel_for(F, [&](int f) {
    fdim[f] = faces[f].rank();
    std::vector<int> members;
    for (int i = 0; i < V; ++i)
      if (fpre[f].contains(vpre[i])) members.push_back(i);
    int lo = -1, hi = -1;
    for (int x : members) {
      bool is_min = true, is_max = true;
      for (int y : members) {
        if (!rot.poset.leq(x, y)) is_min = false;
        if (!rot.poset.leq(y, x)) is_max = false;
      }
      if (is_min) lo = x;
      if (is_max) hi = x;
    }
    std::lock_guard<std::mutex> lock(mu);
    if (lo < 0 || hi < 0) {
      r.fail(r.face_boxes_ordered, "face " + faces[f].key() + " has no unique rotation min/max");
      box[f] = bound;
      return;
    }
    box[f] = {C[hi], C[lo]};
    for (std::size_t k = 0; k < D; ++k)
      if (box[f].lo[k] > box[f].hi[k]) r.fail(r.face_boxes_ordered, "face " + faces[f].key() + " box is reversed");
    for (int x : members)
      if (!box[f].contains(C[x]))
        r.fail(r.face_boxes_ordered, "vertex " + rot.poset.key(x) + " outside the box of " + faces[f].key());
  });
  for (int f = 0; f < F; ++f) {
    if (box[f].dim() != fdim[f])
      r.fail(r.dimensions_match, "face " + faces[f].key() + " of dimension " + std::to_string(fdim[f]) + " has box " +
                                     to_string(box[f]));
    if (fdim[f] == full_rank) {
      if (!(box[f] == bound)) r.fail(r.subcubes_on_boundary, "full face box differs from the bounding box");
      continue;
    }
    // Corners of a proper face box lie on the boundary.
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < D; ++k)
      if (box[f].lo[k] < box[f].hi[k]) free.push_back(k);
    for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
      CubicVector corner = box[f].lo;
      for (std::size_t b = 0; b < free.size(); ++b)
        if ((mask >> b) & 1u) corner[free[b]] = box[f].hi[free[b]];
      if (!bound.contains(corner) || !detail::on_relative_boundary(bound, corner)) {
        r.fail(r.subcubes_on_boundary, "corner " + to_string(corner) + " of " + faces[f].key() + " not on boundary");
        break;
      }
    }
  }
  // Inclusion of boxes against inclusion of faces, and intersections.
  std::set<Box> proper;
  for (int f = 0; f < F; ++f)
    if (fdim[f] != full_rank) proper.insert(box[f]);
  parallel_for(F, [&](int f) {
    for (int g = 0; g < F; ++g) {
      bool face_le = fpre[g].contains(fpre[f]);
      bool box_le = box[g].contains(box[f]);
      if (face_le != box_le) {
        std::lock_guard<std::mutex> lock(mu);
        r.fail(r.inclusion_matches_faces, "faces " + faces[f].key() + " / " + faces[g].key() +
                                              (face_le ? " nested but boxes not" : " not nested but boxes are"));
      }
      if (g <= f || fdim[f] == full_rank || fdim[g] == full_rank) continue;
      auto x = intersect(box[f], box[g]);
      if (!x) continue;
      bool nested = box[f].contains(box[g]) || box[g].contains(box[f]);
      bool ok = proper.count(*x) && (nested || x->dim() < std::min(box[f].dim(), box[g].dim()));
      if (!ok) {
        std::lock_guard<std::mutex> lock(mu);
        r.fail(r.intersections_closed, "intersection of " + faces[f].key() + " and " + faces[g].key() + " is " +
                                           to_string(*x));
      }
    }
  });
  // Coverage: every cell of the integer grid on the boundary has a representative with
  // coordinates in (1/2)Z; test those points (doubled) against the proper boxes.
  std::vector<int> lo2(D), hi2(D), x2(D);
  for (std::size_t k = 0; k < D; ++k) {
    lo2[k] = 2 * bound.lo[k];
    hi2[k] = 2 * bound.hi[k];
  }
  std::vector<Box> pboxes(proper.begin(), proper.end());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (!r.boundary_covered) return;
    if (k == D) {
      bool boundary = false;
      for (std::size_t i = 0; i < D; ++i)
        if (lo2[i] < hi2[i] && (x2[i] == lo2[i] || x2[i] == hi2[i])) boundary = true;
      if (!boundary) return;
      for (auto& b : pboxes) {
        bool in = true;
        for (std::size_t i = 0; i < D && in; ++i) in = 2 * b.lo[i] <= x2[i] && x2[i] <= 2 * b.hi[i];
        if (in) return;
      }
      std::string pt;
      for (std::size_t i = 0; i < D; ++i) pt += (i ? "," : "") + std::to_string(x2[i]) + "/2";
      r.fail(r.boundary_covered, "boundary point (" + pt + ") not covered");
      return;
    }
    for (x2[k] = lo2[k]; x2[k] <= hi2[k]; ++x2[k]) rec(k + 1);
  };
  if (bound.dim() > 0) rec(0);
  return r;
}

inline CubicReport verify_cubic_realization(ObjectKind kind, int m, int n, bool check_subdivision = true,
                                            int max_dim = kDefaultMaxDim) {
  if (kind == ObjectKind::painted_tree) return verify_cubic_realization<PaintedTree>(m, n, check_subdivision, max_dim);
  return verify_cubic_realization<LightedShade>(m, n, check_subdivision, max_dim);
}

// The shade rotation lattice transported to Hochschild words, with the fiber check of
// the projection (perm, word) -> perm: every permutation carries the full word set.
struct WordBijectionReport {
  bool round_trip = true;
  bool words_valid = true;
  bool count_matches = true;
  bool fibers_full = true;
  std::vector<std::string> failures;
  bool ok() const { return round_trip && words_valid && count_matches && fibers_full; }
};

inline WordBijectionReport verify_word_bijection(int m, int n, int max_dim = kDefaultMaxDim) {
  WordBijectionReport r;
  auto note = [&](bool& flag, const std::string& s) {
    flag = false;
    if (r.failures.size() < 20) r.failures.push_back(s);
  };
  auto shades = enum_rank_zero<LightedShade>(m, n, max_dim);
  auto all_words = words(m, n);
  std::set<std::vector<int>> word_set(all_words.begin(), all_words.end());
  std::map<std::vector<int>, std::set<std::vector<int>>> fiber;
  std::set<std::string> images;
  for (auto& s : shades) {
    auto h = shade_to_word(s);
    if (!is_word(m, h.word)) note(r.words_valid, s.key() + " -> invalid word " + to_string(h));
    fiber[h.perm].insert(h.word);
    images.insert(to_string(h));
    try {
      if (!(word_to_shade(m, h) == s)) note(r.round_trip, s.key() + " -> " + to_string(h) + " -> other shade");
    } catch (const std::exception& e) {
      note(r.round_trip, s.key() + ": " + e.what());
    }
  }
  // Words back to shades and again to words.
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i + 1;
  BigInt expected = 0;
  do {
    for (auto& w : all_words) {
      expected += 1;
      HochschildWord h{perm, w};
      if (!(shade_to_word(word_to_shade(m, h)) == h)) note(r.round_trip, to_string(h) + " does not round-trip");
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (BigInt(shades.size()) != expected || images.size() != shades.size())
    note(r.count_matches, "unary shades " + std::to_string(shades.size()) + " vs words " + expected.str());
  for (auto& [p, ws] : fiber)
    if (ws != word_set) note(r.fibers_full, "fiber over " + to_string(CubicVector(p)) + " misses words");
  return r;
}

// The relation between Hochschild words described without a closed form: (sigma, v) is
// below (tau, w) when tau is reached from sigma by cut swaps, each adding an inversion, and
// v is carried to w through lower and lower words, the swap of the cuts at positions i,
// i+1 happening at a word without the letter i. Words go down along rotations here (the
// cubic coordinates decrease along covers), so the chain runs v >= h_1 >= ... >= w.
// Compared against the rotation order through shade_to_word; a documented conjecture
// check, not a definition.
struct WordRelationReport {
  int pairs = 0;                     // comparable pairs in the rotation order
  bool relation_within_order = true; // relation implies rotation order
  bool order_within_relation = true; // rotation order implies relation
  std::vector<std::string> failures;
  bool agrees() const { return relation_within_order && order_within_relation; }
};

inline WordRelationReport check_word_relation(int m, int n, int max_dim = kDefaultMaxDim) {
  WordRelationReport r;
  auto rot = rotation_poset<LightedShade>(m, n, max_dim);
  const int V = rot.poset.size();
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
  std::vector<HochschildWord> hw(V);
  for (int i = 0; i < V; ++i) {
    hw[i] = shade_to_word(rot.objects[i]);
    index[{hw[i].perm, hw[i].word}] = i;
  }
  auto ws = words(m, n);
  // One step: lower a single letter to any value keeping a word, or swap adjacent cuts.
  auto steps = [&](const HochschildWord& h) {
    std::vector<int> out;
    for (auto& w : ws) {
      bool below = w != h.word;
      for (int k = 0; k < n && below; ++k) below = w[k] <= h.word[k];
      if (below) out.push_back(index.at({h.perm, w}));
    }
    for (int i = 1; i < m; ++i) {
      if (h.perm[i - 1] > h.perm[i]) continue;
      if (std::find(h.word.begin(), h.word.end(), i) != h.word.end()) continue;
      auto p = h.perm;
      std::swap(p[i - 1], p[i]);
      out.push_back(index.at({p, h.word}));
    }
    return out;
  };
  for (int a = 0; a < V; ++a) {
    std::vector<bool> seen(V, false);
    std::vector<int> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : steps(hw[x]))
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    for (int b = 0; b < V; ++b) {
      bool le = rot.poset.leq(a, b);
      r.pairs += le;
      if (seen[b] && !le) {
        r.relation_within_order = false;
        if (r.failures.size() < 20) r.failures.push_back("related but not ordered: " + to_string(hw[a]) + " " + to_string(hw[b]));
      }
      if (le && !seen[b]) {
        r.order_within_relation = false;
        if (r.failures.size() < 20) r.failures.push_back("ordered but not related: " + to_string(hw[a]) + " " + to_string(hw[b]));
      }
    }
  }
  return r;
}

}  // namespace hochkit
