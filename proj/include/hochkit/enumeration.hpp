#pragma once

#include "objects.hpp"
#include "series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hochkit {

// ---- closed formulas ----

inline BigInt surjection_count(int m, int k) {
  if (k < 0 || m < 0) throw std::invalid_argument("negative argument");
  if (k > m) return 0;
  return surjections(m, k);
}

// m! [y^(n+1)] C^(m+1)(y).
inline BigInt count_binary_painted_trees(int m, int n) {
  check_parameters(m, n);
  auto c = gf::catalan_iterate(m + 1, n + 1);
  return factorial(m) * boost::multiprecision::numerator(c.coeff(0, n + 1, 0));
}

inline BigInt count_facet_objects(ObjectKind kind, int m, int n) {
  check_parameters(m, n);
  BigInt two_m = BigInt(1) << m, two_n = BigInt(1) << n;
  if (kind == ObjectKind::painted_tree) return binomial(n + 1, 2) - 1 + two_m * two_n - two_n;
  return (two_m + 1) * (n + 1) - 4 + (n == 0 ? 1 : 0);
}

// m! sum_l C(m+l, m) C(n-1, l-1); the l = 0 term (C(-1,-1) = 1) carries the n = 0 case.
inline BigInt count_unary_lighted_shades(int m, int n) {
  check_parameters(m, n);
  BigInt s = 0;
  for (int l = 0; l <= n; ++l) s += binomial(m + l, m) * binomial(n - 1, l - 1);
  return factorial(m) * s;
}

// Number of sequences of 1s and 2s summing to s.
inline BigInt one_two_sequences(int s) {
  if (s < 0) return 0;
  BigInt a = 1, b = 1;  // phi(0), phi(1)
  for (int i = 1; i <= s; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

// m! sum_k multichoose(m, k) phi(n - k): k singletons (1) placed among the m cuts
// and a 1/2-sequence of total n - k below the last cut.
inline BigInt count_singletons(int m, int n) {
  check_parameters(m, n);
  BigInt s = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt choose = k == 0 ? BigInt(1) : binomial(m + k - 1, k);
    s += choose * one_two_sequences(n - k);
  }
  return factorial(m) * s;
}

// ---- generating functions ----

// Coefficient table [n][p] of rank-p objects, read from the face generating function.
inline std::vector<std::vector<BigInt>> face_counts_from_gf(ObjectKind kind, int m, int n_max) {
  std::vector<std::vector<BigInt>> out(n_max + 1);
  const int nz = m + n_max;
  if (kind == ObjectKind::painted_tree) {
    auto s = gf::painted_faces(m, n_max + 1, nz);
    for (int n = 0; n <= n_max; ++n)
      for (int p = 0; p <= nz; ++p) out[n].push_back(boost::multiprecision::numerator(s.coeff(0, n + 1, p)));
  } else {
    auto s = gf::shade_faces(m, n_max, nz);
    for (int n = 0; n <= n_max; ++n)
      for (int p = 0; p <= nz; ++p) out[n].push_back(boost::multiprecision::numerator(s.coeff(0, n, p)));
  }
  return out;
}

// Face series with x recording m: coefficient of x^m y^n z^p (painted trees shifted so
// that y^n counts n-trees) for m <= m_max, n <= n_max.
inline TruncatedSeries face_generating_function(ObjectKind kind, int m_max, int n_max) {
  const int nz = m_max + n_max;
  TruncatedSeries r(m_max, n_max, nz);
  for (int m = 0; m <= m_max; ++m) {
    auto t = face_counts_from_gf(kind, m, n_max);
    for (int n = 0; n <= n_max; ++n)
      for (int p = 0; p < static_cast<int>(t[n].size()); ++p)
        if (m + n > 0) r.at(m, n, p) = Rational(t[n][p]);
  }
  return r;
}

// ---- exhaustive counts ----

inline std::vector<BigInt> exhaustive_rank_counts(ObjectKind kind, int m, int n) {
  std::vector<BigInt> out(m + n, 0);
  if (kind == ObjectKind::painted_tree)
    for_each_painted_tree(m, n, std::nullopt, [&](const PaintedTree& t) { out[t.rank()] += 1; });
  else
    for_each_lighted_shade(m, n, std::nullopt, [&](const LightedShade& s) { out[s.rank()] += 1; });
  return out;
}

// Singletons counted twice: by the tree-side predicate and by fiber sizes of the shadow.
struct SingletonCounts {
  BigInt by_predicate = 0;
  BigInt by_fiber_size = 0;
};

inline SingletonCounts exhaustive_singletons(int m, int n) {
  SingletonCounts c;
  std::map<std::string, int> fiber;
  for_each_painted_tree(m, n, 0, [&](const PaintedTree& t) {
    if (is_singleton_tree(t)) c.by_predicate += 1;
    ++fiber[shadow(t).key()];
  });
  for (auto& [k, v] : fiber)
    if (v == 1) c.by_fiber_size += 1;
  return c;
}

// ---- appendix tables ----

enum class TableId {
  painted_vertices = 1,
  painted_facets,
  painted_faces,
  shade_vertices,
  shade_facets,
  shade_faces,
  singletons
};

inline std::string to_string(TableId t) {
  switch (t) {
    case TableId::painted_vertices: return "multiplihedron vertices";
    case TableId::painted_facets: return "multiplihedron facets";
    case TableId::painted_faces: return "multiplihedron faces";
    case TableId::shade_vertices: return "hochschild vertices";
    case TableId::shade_facets: return "hochschild facets";
    case TableId::shade_faces: return "hochschild faces";
    default: return "shadow singletons";
  }
}

inline const std::vector<TableId>& all_tables() {
  static const std::vector<TableId> t{TableId::painted_vertices, TableId::painted_facets, TableId::painted_faces,
                                      TableId::shade_vertices,   TableId::shade_facets,   TableId::shade_faces,
                                      TableId::singletons};
  return t;
}

// Printed rows m = 0..9; row m lists columns n = 0, 1, ... as far as printed. The
// (0, 0) cell is blank in every table and stored as -1.
inline const std::vector<std::vector<long long>>& table_fixture(TableId t) {
  static const std::map<TableId, std::vector<std::vector<long long>>> data{
      {TableId::painted_vertices,
       {{-1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862},
        {1, 2, 6, 21, 80, 322, 1348, 5814, 25674},
        {2, 6, 24, 108, 520, 2620, 13648, 72956},
        {6, 24, 120, 660, 3840, 23220, 144504},
        {24, 120, 720, 4680, 31920, 225120},
        {120, 720, 5040, 37800, 295680},
        {720, 5040, 40320, 342720},
        {5040, 40320, 362880},
        {40320, 362880},
        {362880}}},
      {TableId::painted_facets,
       {{-1, 1, 2, 5, 9, 14, 20, 27, 35, 44},
        {1, 2, 6, 13, 25, 46, 84, 155, 291},
        {2, 6, 14, 29, 57, 110, 212, 411},
        {6, 14, 30, 61, 121, 238, 468},
        {14, 30, 62, 125, 249, 494},
        {30, 62, 126, 253, 505},
        {62, 126, 254, 509},
        {126, 254, 510},
        {254, 510},
        {510}}},
      {TableId::painted_faces,
       {{-1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049},
        {1, 3, 13, 67, 381, 2311, 14681, 96583, 653049},
        {3, 13, 75, 497, 3583, 27393, 218871, 1810373},
        {13, 75, 541, 4375, 38073, 349423, 3341753},
        {75, 541, 4683, 44681, 454855, 4859697},
        {541, 4683, 47293, 519847, 6055401},
        {4683, 47293, 545835, 6790697},
        {47293, 545835, 7087261},
        {545835, 7087261},
        {7087261}}},
      {TableId::shade_vertices,
       {{-1, 1, 2, 4, 8, 16, 32, 64, 128, 256},
        {2, 2, 5, 12, 28, 64, 144, 320, 704},
        {6, 6, 18, 50, 132, 336, 832, 2016},
        {24, 24, 84, 264, 774, 2160, 5808},
        {120, 120, 480, 1680, 5400, 16344},
        {720, 720, 3240, 12480, 43560},
        {5040, 5040, 25200, 105840},
        {40320, 40320, 221760},
        {362880, 362880},
        {3628800}}},
      {TableId::shade_facets,
       {{-1, 0, 2, 4, 6, 8, 10, 12, 14, 16},
        {0, 2, 5, 8, 11, 14, 17, 20, 23},
        {2, 6, 11, 16, 21, 26, 31, 36},
        {6, 14, 23, 32, 41, 50, 59},
        {14, 30, 47, 64, 81, 98},
        {30, 62, 95, 128, 161},
        {62, 126, 191, 256},
        {126, 254, 383},
        {254, 510},
        {510}}},
      {TableId::shade_faces,
       {{-1, 1, 3, 9, 27, 81, 243, 729, 2187, 6561},
        {1, 3, 11, 39, 135, 459, 1539, 5103, 16767},
        {3, 13, 57, 233, 909, 3429, 12609, 45441},
        {13, 75, 383, 1767, 7635, 31491, 125415},
        {75, 541, 3153, 16169, 76437, 341205},
        {541, 4683, 30671, 172839, 885795},
        {4683, 47293, 343857, 2110313},
        {47293, 545835, 4362383},
        {545835, 7087261},
        {7087261}}},
      {TableId::singletons,
       {{-1, 1, 2, 3, 5, 8, 13, 21, 34, 55},
        {1, 2, 4, 7, 12, 20, 33, 54, 88},
        {2, 6, 14, 28, 52, 92, 158, 266},
        {6, 24, 66, 150, 306, 582, 1056},
        {24, 120, 384, 984, 2208, 4536},
        {120, 720, 2640, 7560, 18600},
        {720, 5040, 20880, 66240},
        {5040, 40320, 186480},
        {40320, 362880},
        {362880}}},
  };
  return data.at(t);
}

inline std::optional<BigInt> table_value(TableId t, int m, int n) {
  const auto& rows = table_fixture(t);
  if (m < 0 || n < 0 || m >= static_cast<int>(rows.size()) || n >= static_cast<int>(rows[m].size()))
    return std::nullopt;
  long long v = rows[m][n];
  if (v < 0) return std::nullopt;
  return BigInt(v);
}

struct TableCell {
  TableId table;
  int m = 0, n = 0;
  BigInt expected = 0;
  std::optional<BigInt> exhaustive, closed_form, gf;
  bool ok = true;
};

struct TableReport {
  int bound = 0, exhaustive_bound = 0;
  std::vector<TableCell> cells;
  bool ok() const {
    for (auto& c : cells)
      if (!c.ok) return false;
    return true;
  }
  std::vector<const TableCell*> mismatches() const {
    std::vector<const TableCell*> out;
    for (auto& c : cells)
      if (!c.ok) out.push_back(&c);
    return out;
  }
};

// Recomputes every printed cell with m + n <= bound: the closed form and GF coefficient
// where one exists, and exhaustive generation when m + n <= exhaustive_bound. A cell
// passes when every computed value equals the printed one.
inline TableReport reproduce_tables(int bound, int exhaustive_bound = 7, const std::vector<TableId>& which = all_tables()) {
  TableReport rep;
  rep.bound = bound;
  rep.exhaustive_bound = exhaustive_bound;
  std::map<std::pair<int, int>, std::vector<BigInt>> ex_pt, ex_ls;
  std::map<std::pair<int, int>, SingletonCounts> ex_single;
  std::map<int, std::vector<std::vector<BigInt>>> gf_pt, gf_ls;
  auto gf_counts = [&](ObjectKind k, int m, int n) -> const std::vector<BigInt>& {
    auto& cache = k == ObjectKind::painted_tree ? gf_pt : gf_ls;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, face_counts_from_gf(k, m, std::max(0, bound - m))).first;
    return it->second[n];
  };
  auto exhaustive = [&](ObjectKind k, int m, int n) -> const std::vector<BigInt>& {
    auto& cache = k == ObjectKind::painted_tree ? ex_pt : ex_ls;
    auto it = cache.find({m, n});
    if (it == cache.end()) it = cache.emplace(std::make_pair(m, n), exhaustive_rank_counts(k, m, n)).first;
    return it->second;
  };
  for (TableId t : which)
    for (int m = 0; m <= bound; ++m)
      for (int n = 0; m + n <= bound; ++n) {
        auto expected = table_value(t, m, n);
        if (!expected) continue;
        TableCell c;
        c.table = t;
        c.m = m;
        c.n = n;
        c.expected = *expected;
        const int d = m + n;
        const bool ex = d <= exhaustive_bound;
        const ObjectKind kind = (t == TableId::painted_vertices || t == TableId::painted_facets ||
                                 t == TableId::painted_faces)
                                    ? ObjectKind::painted_tree
                                    : ObjectKind::lighted_shade;
        auto sum = [](const std::vector<BigInt>& v) {
          BigInt s = 0;
          for (auto& x : v) s += x;
          return s;
        };
        switch (t) {
          case TableId::painted_vertices:
          case TableId::shade_vertices:
            c.closed_form = kind == ObjectKind::painted_tree ? count_binary_painted_trees(m, n)
                                                             : count_unary_lighted_shades(m, n);
            c.gf = gf_counts(kind, m, n)[0];
            if (ex) c.exhaustive = exhaustive(kind, m, n)[0];
            break;
          case TableId::painted_facets:
          case TableId::shade_facets:
            c.closed_form = count_facet_objects(kind, m, n);
            c.gf = d >= 2 ? gf_counts(kind, m, n)[d - 2] : BigInt(0);
            if (ex) c.exhaustive = d >= 2 ? exhaustive(kind, m, n)[d - 2] : BigInt(0);
            break;
          case TableId::painted_faces:
          case TableId::shade_faces: {
            auto v = gf_counts(kind, m, n);
            c.gf = sum(v);
            if (ex) c.exhaustive = sum(exhaustive(kind, m, n));
            break;
          }
          case TableId::singletons: {
            c.closed_form = count_singletons(m, n);
            if (ex) {
              auto it = ex_single.find({m, n});
              if (it == ex_single.end()) it = ex_single.emplace(std::make_pair(m, n), exhaustive_singletons(m, n)).first;
              c.exhaustive = it->second.by_predicate;
              if (it->second.by_fiber_size != it->second.by_predicate) c.ok = false;
            }
            break;
          }
        }
        for (auto* v : {&c.exhaustive, &c.closed_form, &c.gf})
          if (*v && **v != c.expected) c.ok = false;
        rep.cells.push_back(std::move(c));
      }
  return rep;
}

}  // namespace hochkit
