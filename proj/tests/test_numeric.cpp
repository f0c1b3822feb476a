#include <hochkit/numeric.hpp>
#include <hochkit/bitset.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace hochkit;

namespace {

// Pascal's triangle, independent of the multiplicative formula.
std::vector<std::vector<long long>> pascal(int N) {
  std::vector<std::vector<long long>> c(N + 1, std::vector<long long>(N + 1, 0));
  for (int n = 0; n <= N; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}

// k! S(m, k) via the Stirling recurrence S(m,k) = k S(m-1,k) + S(m-1,k-1).
long long surjections_by_stirling(int m, int k) {
  std::vector<std::vector<long long>> S(m + 1, std::vector<long long>(k + 1, 0));
  S[0][0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= k; ++j) S[i][j] = j * S[i - 1][j] + S[i - 1][j - 1];
  long long f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return S[m][k] * f;
}

}  // namespace

TEST(Numeric, BinomialMatchesPascal) {
  auto c = pascal(30);
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(binomial(n, k), BigInt(c[n][k])) << n << " " << k;
      EXPECT_EQ(binom64(n, k), c[n][k]);
    }
  EXPECT_EQ(binomial(4, 7), 0);
}

TEST(Numeric, Factorial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
}

TEST(Numeric, SurjectionsMatchStirling) {
  for (int m = 0; m <= 10; ++m)
    for (int k = 0; k <= m; ++k) EXPECT_EQ(surjections(m, k), BigInt(surjections_by_stirling(m, k))) << m << "," << k;
  EXPECT_EQ(surjections(3, 2), 6);
  EXPECT_EQ(surjections(2, 3), 0);
}

TEST(Numeric, OrderedPartitions) {
  for (int m = 0; m <= 6; ++m)
    for (int k = 0; k <= m; ++k) {
      auto ps = ordered_partitions(m, k);
      EXPECT_EQ(BigInt(ps.size()), surjections(m, k));
      std::set<std::vector<std::vector<int>>> uniq(ps.begin(), ps.end());
      EXPECT_EQ(uniq.size(), ps.size());
      for (auto& p : ps) {
        std::vector<int> all;
        for (auto& b : p) {
          EXPECT_FALSE(b.empty());
          all.insert(all.end(), b.begin(), b.end());
        }
        std::sort(all.begin(), all.end());
        for (int i = 0; i < m; ++i) EXPECT_EQ(all[i], i + 1);
      }
    }
}

TEST(Numeric, RationalStrings) {
  EXPECT_EQ(to_string(Rational(3, 6)), "1/2");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(rational_from_string("6/4"), Rational(3, 2));
  EXPECT_EQ(rational_from_string("-7"), Rational(-7));
}

TEST(Bitset, Basics) {
  Bitset a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  EXPECT_EQ(a.count(), 3u);
  EXPECT_TRUE(b.subset_of(a));
  EXPECT_FALSE(a.subset_of(b));
  EXPECT_EQ(a.highest(), 129);
  EXPECT_EQ(a.lowest(), 0);
  EXPECT_EQ((a & b).count(), 1u);
  a.reset(129);
  EXPECT_EQ(a.highest(), 64);
  std::vector<std::size_t> seen;
  a.for_each([&](std::size_t i) { seen.push_back(i); });
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 64}));
}
