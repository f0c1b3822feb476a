#include <hochkit/objects.hpp>

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

using namespace hochkit;

namespace hochkit {
void PrintTo(const PaintedTree& t, std::ostream* os) { *os << t.key(); }
void PrintTo(const LightedShade& s, std::ostream* os) { *os << s.key(); }
}  // namespace hochkit

namespace {

const int L = PaintedTree::kLeaf;

PaintedTree left_comb(int n) {
  std::vector<std::vector<int>> ch(n);
  for (int v = 0; v < n; ++v) ch[v] = v + 1 < n ? std::vector<int>{v + 1, L} : std::vector<int>{L, L};
  return PaintedTree(0, n, ch, {}, {});
}

PaintedTree right_comb(int n) {
  std::vector<std::vector<int>> ch(n);
  for (int v = 0; v < n; ++v) ch[v] = v + 1 < n ? std::vector<int>{L, v + 1} : std::vector<int>{L, L};
  return PaintedTree(0, n, ch, {}, {});
}

LightedShade shade(int m, int n, std::vector<ShadeEntry> e) { return LightedShade(m, n, std::move(e)); }

std::set<std::string> keys(const auto& v) {
  std::set<std::string> s;
  for (auto& x : v) s.insert(x.key());
  return s;
}

// All (m, n) with 1 <= m + n <= bound.
std::vector<std::pair<int, int>> sizes(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int d = 1; d <= bound; ++d)
    for (int m = 0; m <= d; ++m) out.emplace_back(m, d - m);
  return out;
}

// Preposet of a painted tree from scratch: inorder labels, cut classes merged, every
// node below its parent, transitive closure by Floyd-Warshall.
Preposet tree_preposet_oracle(const PaintedTree& t) {
  const int m = t.m(), d = t.dim(), N = t.node_count();
  std::vector<int> cls(N);
  std::iota(cls.begin(), cls.end(), 0);
  for (auto& c : t.cuts())
    for (int v : c) cls[v] = c.front();
  std::vector<int> node_of(d + 1, -1);
  int next = m + 1;
  std::function<void(int)> inorder = [&](int v) {
    const auto& ch = t.children(v);
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (ch[i] != L) inorder(ch[i]);
      if (i + 1 < ch.size()) node_of[next++] = v;
    }
  };
  inorder(0);
  for (std::size_t c = 0; c < t.cuts().size(); ++c)
    for (int i : t.parts()[c]) node_of[i] = t.cuts()[c].front();
  std::vector<std::vector<bool>> up(N, std::vector<bool>(N, false));
  for (int v = 0; v < N; ++v) {
    up[cls[v]][cls[v]] = true;
    if (t.parent(v) >= 0) up[cls[v]][cls[t.parent(v)]] = true;
  }
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (up[i][k] && up[k][j]) up[i][j] = true;
  Preposet p(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      if (up[cls[node_of[i]]][cls[node_of[j]]]) p.add(i, j);
  return p;
}

// Preposet of a shade straight from the four defining clauses.
Preposet shade_preposet_oracle(const LightedShade& s) {
  const int m = s.m(), d = s.dim();
  Preposet p(d);
  const auto& cells = s.cells();
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (s.position_of_light(i) >= s.position_of_light(j)) p.add(i, j);
  for (auto& x : cells)
    for (auto& y : cells)
      if (x.entry >= y.entry)
        for (int k = x.ps - x.value + 1; k <= x.ps; ++k) p.add(k, y.ps);
  for (int i = 1; i <= m; ++i)
    for (auto& x : cells) {
      if (x.entry <= s.position_of_light(i)) p.add(i, x.ps);
      if (x.entry >= s.position_of_light(i))
        for (int k = x.ps - x.value + 1; k <= x.ps; ++k) p.add(k, i);
    }
  return p.close();
}

}  // namespace

// ---- enumeration ----

TEST(Enumerate, PaintedVertexCounts) {
  EXPECT_EQ(enum_painted_trees(1, 3, 0).size(), 21u);
  EXPECT_EQ(enum_painted_trees(1, 0, 0).size(), 1u);
  EXPECT_EQ(enum_painted_trees(2, 0, 0).size(), 2u);
  EXPECT_EQ(enum_painted_trees(3, 0, 0).size(), 6u);
  EXPECT_EQ(enum_painted_trees(0, 4, 0).size(), 14u);
}

TEST(Enumerate, ShadeCounts) {
  EXPECT_EQ(enum_lighted_shades(1, 3, 0).size(), 12u);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enum_lighted_shades(0, n, 0).size(), std::size_t{1} << (n - 1));
  EXPECT_EQ(enum_lighted_shades(1, 3).size(), 39u);
}

TEST(Enumerate, RejectsBadInput) {
  EXPECT_THROW(enum_painted_trees(0, 0), std::invalid_argument);
  EXPECT_THROW(enum_lighted_shades(0, 0), std::invalid_argument);
  EXPECT_THROW(enum_painted_trees(1, 2, 3), std::invalid_argument);
  EXPECT_THROW(enum_lighted_shades(1, 2, -1), std::invalid_argument);
  EXPECT_THROW(enum_painted_trees(4, 5), std::length_error);
}

TEST(Enumerate, CanonicalOrderWithoutDuplicates) {
  for (auto [m, n] : sizes(5)) {
    auto P = enum_painted_trees(m, n);
    auto S = enum_lighted_shades(m, n);
    EXPECT_EQ(keys(P).size(), P.size());
    EXPECT_EQ(keys(S).size(), S.size());
    EXPECT_TRUE(std::is_sorted(P.begin(), P.end()));
    EXPECT_TRUE(std::is_sorted(S.begin(), S.end()));
  }
}

TEST(Enumerate, RankFilterAgreesWithFullList) {
  for (auto [m, n] : sizes(5)) {
    auto all = enum_painted_trees(m, n);
    for (int r = 0; r < m + n; ++r) {
      std::size_t c = std::count_if(all.begin(), all.end(), [&](auto& t) { return t.rank() == r; });
      EXPECT_EQ(enum_painted_trees(m, n, r).size(), c);
    }
    auto sh = enum_lighted_shades(m, n);
    for (int r = 0; r < m + n; ++r) {
      std::size_t c = std::count_if(sh.begin(), sh.end(), [&](auto& s) { return s.rank() == r; });
      EXPECT_EQ(enum_lighted_shades(m, n, r).size(), c);
    }
  }
}

TEST(Enumerate, BinaryGeneratorMatchesRankZero) {
  for (auto [m, n] : sizes(6)) {
    EXPECT_EQ(keys(enumerate_binary_painted_trees(m, n)), keys(enum_painted_trees(m, n, 0))) << m << "," << n;
    EXPECT_EQ(keys(enumerate_unary_shades(m, n)), keys(enum_lighted_shades(m, n, 0))) << m << "," << n;
  }
}

// ---- construction invariants ----

TEST(PaintedTreeInvariants, RejectsMalformedCuts) {
  // A cut missing the path to the right leaf.
  EXPECT_THROW(PaintedTree(1, 1, {{1, L}, {L}}, {{1}}, {{1}}), std::invalid_argument);
  // A unary node on no cut.
  EXPECT_THROW(PaintedTree(1, 0, {{1}, {L}}, {{0}}, {{1}}), std::invalid_argument);
  // Parts not a partition.
  EXPECT_THROW(PaintedTree(2, 0, {{1}, {L}}, {{1}, {0}}, {{1}, {1}}), std::invalid_argument);
  // Unary node without paint.
  EXPECT_THROW(PaintedTree(0, 0 + 1, {{1, L}, {L}}, {}, {}), std::invalid_argument);
}

TEST(PaintedTreeInvariants, EnumeratedTreesSatisfyCutRules) {
  for (auto [m, n] : sizes(5))
    for (auto& t : enum_painted_trees(m, n)) {
      EXPECT_EQ(t.m(), m);
      int k = t.cut_count();
      if (m == 0) EXPECT_EQ(k, 0);
      else EXPECT_TRUE(1 <= k && k <= m);
      // every root-to-leaf path meets each cut once, and lower cuts come later on the path
      std::function<void(int, std::vector<int>)> walk = [&](int v, std::vector<int> seen) {
        if (t.cut_of(v) >= 0) seen.push_back(t.cut_of(v));
        if (t.arity(v) == 1) EXPECT_GE(t.cut_of(v), 0) << t.key();
        for (int c : t.children(v)) {
          if (c == L) {
            std::vector<int> expect(k);
            std::iota(expect.rbegin(), expect.rend(), 0);
            EXPECT_EQ(seen, expect) << t.key();
          } else {
            walk(c, seen);
          }
        }
      };
      walk(0, {});
    }
}

TEST(ShadeInvariants, RejectsMalformed) {
  EXPECT_THROW(shade(0, 3, {{{2}, {}}}), std::invalid_argument);
  EXPECT_THROW(shade(1, 1, {{{1}, {}}, {{}, {}}}), std::invalid_argument);
  EXPECT_THROW(shade(2, 1, {{{1}, {1}}}), std::invalid_argument);
  EXPECT_THROW(shade(1, 1, {{{0, 1}, {1}}}), std::invalid_argument);
}

// ---- preposets ----

TEST(Preposet, LeftCombIsChain) {
  auto p = left_comb(3).preposet();
  EXPECT_TRUE(p.strictly_less(1, 2));
  EXPECT_TRUE(p.strictly_less(2, 3));
  EXPECT_TRUE(p.strictly_less(1, 3));
  EXPECT_TRUE(p.is_total_order());
}

TEST(Preposet, SingleCut) {
  auto all = enum_painted_trees(1, 0);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].preposet().size(), 1);
  EXPECT_TRUE(all[0].preposet().leq(1, 1));
}

TEST(Preposet, OneOneGivesBothTotalOrders) {
  auto v = enum_painted_trees(1, 1, 0);
  ASSERT_EQ(v.size(), 2u);
  bool a = v[0].preposet().strictly_less(1, 2), b = v[1].preposet().strictly_less(1, 2);
  EXPECT_NE(a, b);
  for (auto& t : v) EXPECT_TRUE(t.preposet().is_total_order());
}

TEST(Preposet, ShadeExamples) {
  auto p3 = shade(0, 3, {{{3}, {}}}).preposet();
  EXPECT_TRUE(p3.leq(1, 3));
  EXPECT_TRUE(p3.leq(2, 3));
  EXPECT_FALSE(p3.leq(3, 1));
  EXPECT_FALSE(p3.leq(1, 2));
  EXPECT_FALSE(p3.leq(2, 1));
  EXPECT_EQ(p3.pair_count(), 2);

  auto p111 = shade(0, 3, {{{1, 1, 1}, {}}}).preposet();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_TRUE(p111.leq(i, j));

  auto p21 = shade(0, 3, {{{2, 1}, {}}}).preposet();
  EXPECT_TRUE(p21.strictly_less(1, 2));
  EXPECT_TRUE(p21.strictly_less(1, 3));
  EXPECT_TRUE(p21.equivalent(2, 3));
}

TEST(PreposetProperty, TreePreposetMatchesOracle) {
  for (auto [m, n] : sizes(5))
    for (auto& t : enum_painted_trees(m, n)) EXPECT_EQ(t.preposet(), tree_preposet_oracle(t)) << t.key();
}

TEST(PreposetProperty, ShadePreposetMatchesClauses) {
  for (auto [m, n] : sizes(6))
    for (auto& s : enum_lighted_shades(m, n)) EXPECT_EQ(s.preposet(), shade_preposet_oracle(s)) << s.key();
}

TEST(PreposetProperty, ClassesCountIsCodimension) {
  for (auto [m, n] : sizes(5)) {
    for (auto& t : enum_painted_trees(m, n))
      EXPECT_EQ(static_cast<int>(t.preposet().classes().size()), m + n - t.rank()) << t.key();
    for (auto& s : enum_lighted_shades(m, n))
      EXPECT_EQ(static_cast<int>(s.preposet().classes().size()), m + n - s.rank()) << s.key();
  }
}

TEST(PreposetProperty, PaintLabelsFollowMuTopToBottom) {
  for (auto [m, n] : sizes(5)) {
    if (m == 0) continue;
    for (auto& t : enum_painted_trees(m, n)) {
      auto p = t.preposet();
      std::vector<int> cut(m + 1);
      for (std::size_t c = 0; c < t.parts().size(); ++c)
        for (int i : t.parts()[c]) cut[i] = static_cast<int>(c);
      // cuts are listed bottom-to-top; lower cuts are smaller
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) EXPECT_EQ(p.leq(i, j), cut[i] <= cut[j]) << t.key();
    }
    for (auto& s : enum_lighted_shades(m, n)) {
      auto p = s.preposet();
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          EXPECT_EQ(p.leq(i, j), s.position_of_light(i) >= s.position_of_light(j)) << s.key();
    }
  }
}

TEST(PreposetProperty, ShadeHasseIsForest) {
  for (auto [m, n] : sizes(6))
    for (auto& s : enum_lighted_shades(m, n)) {
      auto p = s.preposet();
      EXPECT_TRUE(p.hasse_is_forest()) << s.key();
      if (s.is_unary()) EXPECT_EQ(static_cast<int>(p.hasse().size()), m + n - 1) << s.key();
    }
}

// ---- rank ----

TEST(Rank, Examples) {
  EXPECT_EQ(rank(shade(0, 3, {{{1, 1, 1}, {}}})), 2);
  EXPECT_EQ(rank(shade(0, 3, {{{2, 1}, {}}})), 1);
  EXPECT_EQ(rank(shade(1, 2, {{{}, {1}}, {{1}, {}}, {{1}, {}}})), 0);
  EXPECT_EQ(rank(left_comb(4)), 0);
}

TEST(Rank, PaintedFormula) {
  for (auto [m, n] : sizes(5))
    for (auto& t : enum_painted_trees(m, n)) {
      int in_cuts = 0;
      for (auto& c : t.cuts()) in_cuts += static_cast<int>(c.size());
      EXPECT_EQ(t.rank(), m + n - t.node_count() - t.cut_count() + in_cuts) << t.key();
    }
}

// ---- refinement covers ----

TEST(RefinementCovers, ShadeExamples) {
  EXPECT_EQ(keys(refinement_covers_down(shade(0, 3, {{{3}, {}}}))), (std::set<std::string>{"(1,2)", "(2,1)"}));
  EXPECT_EQ(keys(refinement_covers_down(shade(0, 3, {{{1}, {}}, {{2}, {}}}))),
            (std::set<std::string>{"(1,2)", "(1) (1,1)"}));
}

TEST(RefinementCovers, CutJoinMove) {
  // two stacked unary cuts at (2, 0): the cover list merges them into one cut
  PaintedTree t(2, 0, {{1}, {L}}, {{1}, {0}}, {{1}, {2}});
  auto down = refinement_covers_down(t);
  ASSERT_EQ(down.size(), 1u);
  EXPECT_EQ(down[0].cut_count(), 1);
  EXPECT_EQ(down[0].parts()[0], (std::vector<int>{1, 2}));
}

TEST(RefinementCoversProperty, CoversGrowPreposetAndRank) {
  for (auto [m, n] : sizes(5)) {
    for (auto& t : enum_painted_trees(m, n))
      for (auto& c : refinement_covers_down(t)) {
        EXPECT_EQ(c.rank(), t.rank() + 1);
        EXPECT_TRUE(c.preposet().contains(t.preposet()));
        EXPECT_NE(c.preposet(), t.preposet());
      }
    for (auto& s : enum_lighted_shades(m, n))
      for (auto& c : refinement_covers_down(s)) {
        EXPECT_EQ(c.rank(), s.rank() + 1);
        EXPECT_TRUE(c.preposet().contains(s.preposet()));
        EXPECT_NE(c.preposet(), s.preposet());
      }
  }
}

// Preposet containment between objects one rank apart is exactly a cover move.
TEST(RefinementCoversProperty, CoversAreAllContainmentsOneRankUp) {
  for (auto [m, n] : sizes(4)) {
    auto P = enum_painted_trees(m, n);
    for (auto& a : P) {
      auto down = keys(refinement_covers_down(a));
      for (auto& b : P)
        if (b.rank() == a.rank() + 1)
          EXPECT_EQ(b.preposet().contains(a.preposet()), down.count(b.key()) > 0) << a.key() << " " << b.key();
    }
    auto S = enum_lighted_shades(m, n);
    for (auto& a : S) {
      auto down = keys(refinement_covers_down(a));
      for (auto& b : S)
        if (b.rank() == a.rank() + 1)
          EXPECT_EQ(b.preposet().contains(a.preposet()), down.count(b.key()) > 0) << a.key() << " " << b.key();
    }
  }
}

// ---- rotations ----

TEST(Rotation, ShadeSplitSuccessors) {
  auto succ = rotation_successors(shade(0, 3, {{{3}, {}}}));
  EXPECT_EQ(keys(succ), (std::set<std::string>{"(1) (2)", "(2) (1)"}));
}

TEST(Rotation, CutLabelSwapGoesOneWay) {
  auto a = shade(2, 0, {{{}, {1}}, {{}, {2}}});
  auto b = shade(2, 0, {{{}, {2}}, {{}, {1}}});
  bool ab = keys(rotation_successors(a)).count(b.key()) > 0;
  bool ba = keys(rotation_successors(b)).count(a.key()) > 0;
  EXPECT_NE(ab, ba);
  // the lower label must be the smaller one before the swap
  EXPECT_TRUE(ba);
}

TEST(Rotation, RejectsPositiveRank) {
  EXPECT_THROW(rotations(shade(0, 3, {{{2, 1}, {}}})), std::invalid_argument);
  EXPECT_THROW(rotations(enum_painted_trees(1, 2, 1).front()), std::invalid_argument);
}

TEST(RotationProperty, ShadeGraphIsRegular) {
  for (auto [m, n] : sizes(6)) {
    auto V = enum_lighted_shades(m, n, 0);
    std::map<std::string, int> deg;
    for (auto& s : V)
      for (auto& t : rotation_successors(s)) {
        ++deg[s.key()];
        ++deg[t.key()];
      }
    for (auto& s : V) EXPECT_EQ(deg[s.key()], m + n - 1) << s.key();
  }
}

TEST(RotationProperty, EachRotationFlipsOnePair) {
  for (auto [m, n] : sizes(6)) {
    for (auto& t : enum_painted_trees(m, n, 0))
      for (auto& r : rotation_successors(t)) {
        EXPECT_TRUE(r.is_binary());
        EXPECT_TRUE(flip_pair(t.preposet(), r.preposet()).has_value()) << t.key() << " -> " << r.key();
      }
    for (auto& s : enum_lighted_shades(m, n, 0))
      for (auto& r : rotation_successors(s)) {
        EXPECT_TRUE(r.is_unary());
        EXPECT_TRUE(flip_pair(s.preposet(), r.preposet()).has_value()) << s.key() << " -> " << r.key();
      }
  }
}

// Conversely, every flip from a smaller to a larger pair is a listed rotation.
TEST(RotationProperty, FlipsAreRotations) {
  for (auto [m, n] : sizes(5)) {
    auto P = enum_painted_trees(m, n, 0);
    for (auto& a : P) {
      auto succ = keys(rotation_successors(a));
      for (auto& b : P) EXPECT_EQ(flip_pair(a.preposet(), b.preposet()).has_value(), succ.count(b.key()) > 0);
    }
    auto S = enum_lighted_shades(m, n, 0);
    for (auto& a : S) {
      auto succ = keys(rotation_successors(a));
      for (auto& b : S) EXPECT_EQ(flip_pair(a.preposet(), b.preposet()).has_value(), succ.count(b.key()) > 0);
    }
  }
}

// ---- shadow ----

TEST(Shadow, Combs) {
  EXPECT_EQ(shadow(right_comb(3)).key(), "(1) (1) (1)");
  EXPECT_EQ(shadow(left_comb(3)).key(), "(3)");
}

TEST(Shadow, ImageIsCompositions) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> img;
    for (auto& t : enum_painted_trees(0, n, 0)) img.insert(shadow(t).key());
    EXPECT_EQ(img.size(), std::size_t{1} << (n - 1));
  }
}

TEST(ShadowProperty, PreservesParametersAndContainsTree) {
  for (auto [m, n] : sizes(5))
    for (auto& t : enum_painted_trees(m, n)) {
      auto s = shadow(t);
      EXPECT_EQ(s.m(), m);
      EXPECT_EQ(s.n(), n);
      // fans: the shade cone contains the tree cone, so the relations go the other way
      EXPECT_TRUE(t.preposet().contains(s.preposet())) << t.key();
      // the cut order is kept: labels in the same block stay together
      for (auto& part : t.parts())
        for (int i : part) EXPECT_EQ(s.position_of_light(i), s.position_of_light(part.front()));
    }
}

// The shadow is the shade with the most relations among those the tree's preposet
// contains; for binary trees it is the only such shade.
TEST(ShadowProperty, ShadowIsLargestContainedShade) {
  for (auto [m, n] : sizes(5)) {
    auto S = enum_lighted_shades(m, n);
    for (auto& t : enum_painted_trees(m, n)) {
      auto sh = shadow(t);
      int contained = 0;
      for (auto& s : S)
        if (t.preposet().contains(s.preposet())) {
          ++contained;
          EXPECT_TRUE(sh.preposet().contains(s.preposet())) << t.key() << " vs " << s.key();
        }
      if (t.is_binary()) EXPECT_EQ(contained, 1) << t.key();
    }
  }
}

// ---- fibers ----

// The fiber of ((n)) is every tree whose root has a leaf as right child; its extremes
// put a left comb or a right comb on the n leaves of the root's left subtree.
TEST(Fiber, SingleTupleExtremes) {
  for (int n = 2; n <= 5; ++n) {
    auto s = shade(0, n, {{{n}, {}}});
    EXPECT_EQ(fiber_min(s), left_comb(n));
    std::vector<std::vector<int>> ch(n);
    ch[0] = {1, L};
    for (int v = 1; v < n; ++v) ch[v] = v + 1 < n ? std::vector<int>{L, v + 1} : std::vector<int>{L, L};
    EXPECT_EQ(fiber_max(s), PaintedTree(0, n, ch, {}, {}));
    EXPECT_NE(shadow(right_comb(n)), s);
  }
}

TEST(Fiber, AllOnesIsRightComb) {
  std::vector<ShadeEntry> e(4, ShadeEntry{{1}, {}});
  auto s = shade(0, 4, e);
  EXPECT_EQ(fiber_min(s), right_comb(4));
  EXPECT_EQ(fiber_max(s), right_comb(4));
}

TEST(Fiber, RejectsNonUnary) {
  EXPECT_THROW(fiber_min(shade(0, 3, {{{2, 1}, {}}})), std::invalid_argument);
  EXPECT_THROW(fiber_max(shade(0, 3, {{{2, 1}, {}}})), std::invalid_argument);
}

TEST(FiberProperty, RoundTrip) {
  for (auto [m, n] : sizes(6))
    for (auto& s : enum_lighted_shades(m, n, 0)) {
      EXPECT_TRUE(fiber_min(s).is_binary());
      EXPECT_TRUE(fiber_max(s).is_binary());
      EXPECT_EQ(shadow(fiber_min(s)), s) << s.key();
      EXPECT_EQ(shadow(fiber_max(s)), s) << s.key();
    }
}

// ---- singletons ----

TEST(Singleton, Counts) {
  auto count = [](int m, int n) {
    int c = 0;
    for (auto& t : enum_painted_trees(m, n, 0)) c += is_singleton(t);
    return c;
  };
  EXPECT_EQ(count(1, 3), 7);
  EXPECT_EQ(count(0, 4), 5);
  EXPECT_EQ(count(2, 2), 14);
}

TEST(Singleton, LeftCombIsNot) {
  for (int n = 3; n <= 6; ++n) EXPECT_FALSE(is_singleton(left_comb(n)));
  EXPECT_TRUE(is_singleton(right_comb(4)));
}

TEST(Singleton, RejectsNonBinary) {
  EXPECT_THROW(is_singleton(enum_painted_trees(0, 3, 1).front()), std::invalid_argument);
}

TEST(SingletonProperty, CharacterizationsAgreeWithFiberSize) {
  for (auto [m, n] : sizes(6)) {
    auto T = enum_painted_trees(m, n, 0);
    std::map<std::string, int> fiber;
    for (auto& t : T) ++fiber[shadow(t).key()];
    for (auto& t : T) {
      bool alone = fiber[shadow(t).key()] == 1;
      EXPECT_EQ(is_singleton(t), alone) << t.key();
      EXPECT_EQ(is_singleton_tree(t), alone) << t.key();
      EXPECT_EQ(is_singleton_shadow(shadow(t)), alone) << t.key();
    }
  }
}
