#include <hochkit/cubic.hpp>
#include <hochkit/enumeration.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace hochkit;

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

std::vector<std::pair<int, int>> sizes(int lo, int hi) {
  std::vector<std::pair<int, int>> out;
  for (int d = lo; d <= hi; ++d)
    for (int m = 0; m <= d; ++m) out.emplace_back(m, d - m);
  return out;
}

// Lehmer entries from inversions counted over positions rather than values.
CubicVector lehmer_oracle(const std::vector<int>& perm) {
  const int m = static_cast<int>(perm.size());
  CubicVector out;
  for (int j = 2; j <= m; ++j) {
    int before = 0;
    for (int k = 0; perm[k] != j; ++k) before += perm[k] < j;
    out.push_back(before);
  }
  return out;
}

// Triwords: letters 0, 1, 2, first letter not 2, and no 0 before any 1.
std::vector<std::vector<int>> triwords(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 0);
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    for (int i = 0, c = code; i < n; ++i, c /= 3) w[n - 1 - i] = c % 3;
    if (n > 0 && w[0] == 2) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (w[i] == 1)
        for (int j = 0; j < i; ++j) ok = ok && w[j] != 0;
    if (ok) out.push_back(w);
  }
  return out;
}

int differing_coordinates(const CubicVector& a, const CubicVector& b, int& sign) {
  int k = 0;
  sign = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) {
      ++k;
      sign = b[i] < a[i] ? -1 : 1;
    }
  return k;
}

}  // namespace

TEST(Lehmer, IdentityAndReverse) {
  EXPECT_EQ(lehmer_code({1, 2, 3, 4}), (CubicVector{1, 2, 3}));
  EXPECT_EQ(lehmer_code({4, 3, 2, 1}), (CubicVector{0, 0, 0}));
  EXPECT_EQ(lehmer_code({1}), CubicVector{});
  EXPECT_THROW(lehmer_code({1, 1}), std::invalid_argument);
}

TEST(Lehmer, MatchesOracleAndIsBijective) {
  for (int m = 1; m <= 6; ++m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 1);
    std::set<CubicVector> seen;
    do {
      auto c = lehmer_code(p);
      EXPECT_EQ(c, lehmer_oracle(p));
      for (std::size_t k = 0; k < c.size(); ++k) EXPECT_LE(c[k], static_cast<int>(k) + 1);
      seen.insert(c);
    } while (std::next_permutation(p.begin(), p.end()));
    long f = 1;
    for (int k = 2; k <= m; ++k) f *= k;
    EXPECT_EQ(static_cast<long>(seen.size()), f);
  }
}

TEST(Bracket, Combs) {
  EXPECT_EQ(bracket_vector(left_comb(3)), (CubicVector{1, 2}));
  EXPECT_EQ(bracket_vector(right_comb(3)), (CubicVector{0, 0}));
  EXPECT_EQ(bracket_vector(left_comb(5)), (CubicVector{1, 2, 3, 4}));
}

TEST(PaintedVector, OneOneHasBothValues) {
  std::set<CubicVector> vs;
  for (auto& t : enum_painted_trees(1, 1, 0)) vs.insert(cubic_vector(t));
  EXPECT_EQ(vs, (std::set<CubicVector>{{0}, {1}}));
}

TEST(PaintedVector, SpecializesToLehmerAndBracket) {
  for (int m = 1; m <= 5; ++m)
    for (auto& t : enum_painted_trees(m, 0, 0)) EXPECT_EQ(cubic_vector(t), lehmer_code(cut_order(t))) << t.key();
  for (int n = 1; n <= 6; ++n)
    for (auto& t : enum_painted_trees(0, n, 0)) EXPECT_EQ(cubic_vector(t), bracket_vector(t)) << t.key();
}

// The literal count through the preposet agrees with the tree-only count when there are
// no cuts or no nodes, and breaks the one-coordinate property once both are present.
TEST(PaintedVector, LiteralTransitiveCountFailsAtOneThree) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 0}, {0, 4}})
    for (auto& t : enum_painted_trees(m, n, 0)) EXPECT_EQ(cubic_vector_painted_transitive(t), cubic_vector(t));
  auto rot = rotation_poset<PaintedTree>(1, 3);
  bool multi = false;
  for (auto [a, b] : rot.poset.covers()) {
    int sign;
    multi = multi || differing_coordinates(cubic_vector_painted_transitive(rot.objects[a]),
                                           cubic_vector_painted_transitive(rot.objects[b]), sign) != 1;
  }
  EXPECT_TRUE(multi);
}

TEST(Words, ViolationMessages) {
  EXPECT_EQ(word_violation(1, {0, 2, 1}), "letter 1 at position 3 preceded by the smaller letter 0");
  EXPECT_EQ(word_violation(1, {2, 0}), "first letter equals m+1");
  EXPECT_EQ(word_violation(1, {3}), "letter outside {0, ..., m+1}");
  EXPECT_EQ(word_violation(2, {2, 1, 0, 3}), "");
  EXPECT_THROW(word_to_shade(1, {{1}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(word_to_shade(2, {{1}, {0}}), std::invalid_argument);
}

TEST(Words, MOneWordsAreTriwords) {
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(words(1, n), triwords(n)) << n;
  EXPECT_EQ(words(1, 3).size(), 12u);
}

TEST(Words, BijectionWithUnaryShades) {
  for (auto [m, n] : sizes(1, 7)) {
    auto r = verify_word_bijection(m, n);
    EXPECT_TRUE(r.ok()) << m << "," << n << ": " << (r.failures.empty() ? "" : r.failures[0]);
  }
}

TEST(Words, ShadeExamples) {
  // all cuts above one singleton: every letter after the first is m+1
  LightedShade top(2, 3, {{{}, {1}}, {{}, {2}}, {{3}, {}}});
  auto h = shade_to_word(top);
  EXPECT_EQ(h.word, (std::vector<int>{0, 3, 3}));
  EXPECT_EQ(h.perm, (std::vector<int>{2, 1}));
  LightedShade bottom(1, 2, {{{1}, {}}, {{1}, {}}, {{}, {1}}});
  EXPECT_EQ(shade_to_word(bottom).word, (std::vector<int>{1, 1}));
  EXPECT_EQ(cubic_vector(bottom), (CubicVector{1, 1}));
}

TEST(CubicVectors, InjectiveInRangeOneCoordinatePerCover) {
  for (auto [m, n] : sizes(1, 6)) {
    for (auto kind : {ObjectKind::painted_tree, ObjectKind::lighted_shade}) {
      auto r = verify_cubic_realization(kind, m, n, false);
      EXPECT_TRUE(r.coordinates_in_range) << m << "," << n;
      EXPECT_TRUE(r.injective) << m << "," << n;
      EXPECT_TRUE(r.single_coordinate_decreasing) << m << "," << n;
    }
  }
}

// Independent of the report: along every rotation exactly one coordinate changes, and it drops.
TEST(CubicVectors, RotationsDecreaseOneCoordinate) {
  for (auto [m, n] : sizes(1, 5)) {
    for (auto& t : enum_painted_trees(m, n, 0))
      for (auto& u : rotation_successors(t)) {
        int sign;
        EXPECT_EQ(differing_coordinates(cubic_vector(t), cubic_vector(u), sign), 1) << t.key() << " -> " << u.key();
        EXPECT_EQ(sign, -1);
      }
    for (auto& s : enum_lighted_shades(m, n, 0))
      for (auto& u : rotation_successors(s)) {
        int sign;
        EXPECT_EQ(differing_coordinates(cubic_vector(s), cubic_vector(u), sign), 1) << s.key() << " -> " << u.key();
        EXPECT_EQ(sign, -1);
      }
  }
}

TEST(CubicSubdivision, SmallCases) {
  auto p = verify_cubic_realization(ObjectKind::painted_tree, 1, 3);
  EXPECT_TRUE(p.ok()) << (p.failures.empty() ? "" : p.failures[0]);
  EXPECT_EQ(BigInt(p.vertex_count), *table_value(TableId::painted_vertices, 1, 3));
  for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 2}, {2, 1}}) {
    auto s = verify_cubic_realization(ObjectKind::lighted_shade, m, n);
    EXPECT_TRUE(s.ok()) << m << "," << n << ": " << (s.failures.empty() ? "" : s.failures[0]);
  }
}

TEST(Box, IntersectAndContain) {
  Box a{{0, 0}, {2, 1}}, b{{1, 1}, {3, 1}};
  auto c = intersect(a, b);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (Box{{1, 1}, {2, 1}}));
  EXPECT_EQ(c->dim(), 1);
  EXPECT_TRUE(a.contains(*c));
  EXPECT_FALSE(intersect(a, Box{{3, 0}, {3, 1}}).has_value());
}

// With words read downward, the swap-path relation between Hochschild words is the rotation order.
TEST(Words, SwapPathRelationIsRotationOrder) {
  for (auto [m, n] : sizes(1, 5)) {
    auto r = check_word_relation(m, n);
    EXPECT_TRUE(r.agrees()) << m << "," << n << ": " << (r.failures.empty() ? "" : r.failures[0]);
  }
  EXPECT_EQ(check_word_relation(1, 3).pairs, 53);
}
