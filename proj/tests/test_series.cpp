#include <hochkit/series.hpp>

#include <gtest/gtest.h>

using namespace hochkit;

namespace {

// Plane trees without unary nodes, by leaves and internal nodes. F counts ordered
// forests of at least one tree, F = P + P*F, and a tree with l >= 2 leaves is a root
// over a forest of at least two trees.
std::vector<std::vector<BigInt>> plane_trees(int L) {
  std::vector<std::vector<BigInt>> P(L + 1, std::vector<BigInt>(L + 1, 0)), F = P;
  // Forests of at least two trees with l leaves and i internal nodes.
  auto multi = [&](int l, int i) {
    BigInt f = 0;
    for (int a = 1; a < l; ++a)
      for (int j = 0; j <= i; ++j) f += P[a][j] * F[l - a][i - j];
    return f;
  };
  for (int l = 1; l <= L; ++l) {
    for (int i = 0; i <= L; ++i) P[l][i] = l == 1 ? BigInt(i == 0 ? 1 : 0) : i >= 1 ? multi(l, i - 1) : BigInt(0);
    for (int i = 0; i <= L; ++i) F[l][i] = P[l][i] + multi(l, i);
  }
  return P;
}

}  // namespace

TEST(Series, ArithmeticAndInverse) {
  auto Y = gf::y(6, 0), I = gf::one(6, 0);
  auto inv = (I - Y).inverse();
  for (int j = 0; j <= 6; ++j) EXPECT_EQ(inv.coeff(0, j, 0), 1);
  EXPECT_EQ((inv * (I - Y)), I);
  EXPECT_THROW(Y.inverse(), std::domain_error);
}

TEST(Series, CompositionNeedsZeroConstantTerm) {
  auto Y = gf::y(5, 0), I = gf::one(5, 0);
  EXPECT_THROW(Y.compose_y(I + Y), std::domain_error);
  auto sq = (Y * Y).compose_y(Y + Y * Y);  // (y+y^2)^2 = y^2 + 2y^3 + y^4
  EXPECT_EQ(sq.coeff(0, 2, 0), 1);
  EXPECT_EQ(sq.coeff(0, 3, 0), 2);
  EXPECT_EQ(sq.coeff(0, 4, 0), 1);
  EXPECT_EQ(sq.coeff(0, 5, 0), 0);
}

TEST(Series, CatalanFunctionalEquation) {
  auto C = gf::catalan(12);
  EXPECT_EQ(C, gf::y(12, 0) + C * C);
  // Catalan numbers by the convolution recurrence.
  std::vector<BigInt> cat(13, 0);
  cat[0] = 1;
  for (int k = 1; k <= 12; ++k)
    for (int i = 0; i < k; ++i) cat[k] += cat[i] * cat[k - 1 - i];
  for (int l = 1; l <= 12; ++l) EXPECT_EQ(C.coeff(0, l, 0), Rational(cat[l - 1])) << l;
}

TEST(Series, CatalanIterateComposes) {
  auto C = gf::catalan(9);
  EXPECT_EQ(gf::catalan_iterate(2, 9), C.compose_y(C));
  EXPECT_EQ(gf::catalan_iterate(3, 9), C.compose_y(C.compose_y(C)));
  EXPECT_THROW(gf::catalan_iterate(0, 9), std::invalid_argument);
}

TEST(Series, SchroederFunctionalEquationAndPlaneTrees) {
  const int L = 9;
  auto S = gf::schroeder(L, L);
  auto Y = gf::y(L, L), Z = gf::z(L, L), I = gf::one(L, L);
  auto zero = TruncatedSeries(0, L, L);
  EXPECT_EQ((Z + I) * S * S - (I + Y * Z) * S + Y, zero);
  auto P = plane_trees(L);
  for (int l = 1; l <= L; ++l)
    for (int p = 0; p <= L; ++p) {
      int internal = l - 1 - p;
      BigInt expect = internal >= 0 ? P[l][internal] : BigInt(0);
      if (l == 1) expect = p == 0 ? 1 : 0;
      EXPECT_EQ(S.coeff(0, l, p), Rational(expect)) << "leaves " << l << " rank " << p;
    }
}

TEST(Series, SchroederSetZToOneGivesLittleSchroeder) {
  std::vector<long long> little{1, 1, 3, 11, 45, 197, 903};  // by leaves 1..7
  auto S = gf::schroeder(7, 7);
  for (int l = 1; l <= 7; ++l) {
    Rational tot = 0;
    for (int p = 0; p <= 7; ++p) tot += S.coeff(0, l, p);
    EXPECT_EQ(tot, Rational(little[l - 1]));
  }
}
