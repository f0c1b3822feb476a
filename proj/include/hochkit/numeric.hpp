#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hochkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// "3" or "p/q" in lowest terms.
inline std::string to_string(const Rational& v) {
  const BigInt& num = boost::multiprecision::numerator(v);
  const BigInt& den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// C(n, k) with the conventions C(n, k) = 0 for k < 0 or k > n >= 0 and C(-1, -1) = 1.
inline BigInt binomial(int n, int k) {
  if (n == -1 && k == -1) return 1;
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::int64_t binom64(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of surjections from an m-set onto a k-set.
inline BigInt surjections(int m, int k) {
  BigInt r = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt t = binomial(k, j);
    BigInt p = 1;
    for (int e = 0; e < m; ++e) p *= (k - j);
    if (j % 2) r -= t * p;
    else r += t * p;
  }
  return r;
}

// Every ordered set partition of {1..m} into k nonempty blocks, each block sorted.
inline std::vector<std::vector<std::vector<int>>> ordered_partitions(int m, int k) {
  std::vector<std::vector<std::vector<int>>> out;
  if (k == 0) {
    if (m == 0) out.push_back({});
    return out;
  }
  std::vector<int> assign(m, 0);
  while (true) {
    std::vector<std::vector<int>> blocks(k);
    for (int i = 0; i < m; ++i) blocks[assign[i]].push_back(i + 1);
    bool ok = true;
    for (auto& b : blocks)
      if (b.empty()) ok = false;
    if (ok) out.push_back(std::move(blocks));
    int pos = 0;
    while (pos < m && assign[pos] == k - 1) assign[pos++] = 0;
    if (pos == m) break;
    ++assign[pos];
  }
  return out;
}

}  // namespace hochkit
