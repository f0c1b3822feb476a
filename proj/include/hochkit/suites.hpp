#pragma once

// Verification suites shared by the CLI `verify` command and the acceptance tests.

#include "io.hpp"
#include "lattices.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace hochkit {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;     // counterexample or summary
  bool observation = false;  // reported, never fails the suite
};

struct SuiteResult {
  std::string suite;
  int bound = 0;
  std::vector<Check> checks;
  double seconds = 0;

  bool passed() const {
    for (auto& c : checks)
      if (!c.observation && !c.pass) return false;
    return true;
  }
  const Check* first_failure() const {
    for (auto& c : checks)
      if (!c.observation && !c.pass) return &c;
    return nullptr;
  }
  void add(std::string name, bool pass, std::string detail = {}, bool observation = false) {
    checks.push_back({std::move(name), pass, std::move(detail), observation});
  }
};

inline json to_json(const SuiteResult& r) {
  json checks = json::array();
  for (auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"observation", c.observation}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"bound", r.bound}, {"passed", r.passed()}, {"checks", checks}};
}

inline void write_text(std::ostream& os, const SuiteResult& r) {
  os << r.suite << " (bound " << r.bound << "): " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (auto& c : r.checks) {
    os << "  [" << (c.observation ? (c.pass ? "obs " : "obs!") : (c.pass ? " ok " : "FAIL")) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
}

inline std::string csv_field(const std::string& s) {
  std::string r = "\"";
  for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return r + "\"";
}

// One row per check: suite, bound, status (ok, FAIL, obs, obs!), check name, detail.
inline void write_csv_header(std::ostream& os) { os << "suite,bound,status,check,detail\n"; }

inline void write_csv(std::ostream& os, const SuiteResult& r) {
  for (auto& c : r.checks)
    os << r.suite << ',' << r.bound << ',' << (c.observation ? (c.pass ? "obs" : "obs!") : (c.pass ? "ok" : "FAIL"))
       << ',' << csv_field(c.name) << ',' << csv_field(c.detail) << '\n';
}

namespace detail {

inline std::string mn(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

template <class F>
void for_each_mn(int bound, F&& f) {
  for (int d = 1; d <= bound; ++d)
    for (int m = 0; m <= d; ++m) f(m, d - m);
}

template <class F>
SuiteResult timed(const std::string& name, int bound, F&& body) {
  SuiteResult r;
  r.suite = name;
  r.bound = bound;
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Collects failures over a sweep into a single check.
struct Sweep {
  bool pass = true;
  std::string first;
  int failures = 0;
  void fail(const std::string& s) {
    if (pass) first = s;
    pass = false;
    ++failures;
  }
  std::string detail(const std::string& ok_text) const {
    if (pass) return ok_text;
    return first + (failures > 1 ? " (+" + std::to_string(failures - 1) + " more)" : "");
  }
};

}  // namespace detail

// Criterion 1: printed table cells against exhaustive generation, closed forms and GFs.
inline SuiteResult tables_suite(int exhaustive_bound = 7, int formula_bound = 9) {
  return detail::timed("tables", exhaustive_bound, [&](SuiteResult& r) {
    auto rep = reproduce_tables(formula_bound, exhaustive_bound);
    for (TableId t : all_tables()) {
      detail::Sweep ex, three, formulas;
      int cells = 0;
      for (auto& c : rep.cells) {
        if (c.table != t) continue;
        ++cells;
        const int d = c.m + c.n;
        std::ostringstream os;
        os << detail::mn(c.m, c.n) << " printed " << c.expected;
        if (c.exhaustive) os << ", exhaustive " << *c.exhaustive;
        if (c.closed_form) os << ", closed form " << *c.closed_form;
        if (c.gf) os << ", GF " << *c.gf;
        if (d <= exhaustive_bound && (!c.exhaustive || *c.exhaustive != c.expected)) ex.fail(os.str());
        if (d <= 6 && !c.ok) three.fail(os.str());
        if ((c.closed_form && *c.closed_form != c.expected) || (c.gf && *c.gf != c.expected)) formulas.fail(os.str());
      }
      r.add(to_string(t) + ": exhaustive = printed, m+n <= " + std::to_string(exhaustive_bound), ex.pass,
            ex.detail(std::to_string(cells) + " cells"));
      r.add(to_string(t) + ": three-way agreement, m+n <= 6", three.pass, three.detail("ok"));
      r.add(to_string(t) + ": formulas = printed, all printed cells", formulas.pass, formulas.detail("ok"));
    }
    auto anchor = [&](const std::string& what, BigInt got, long long want) {
      r.add("anchor " + what, got == want, got.str() + " (expected " + std::to_string(want) + ")");
    };
    auto sum = [](const std::vector<BigInt>& v) {
      BigInt s = 0;
      for (auto& x : v) s += x;
      return s;
    };
    auto pt = exhaustive_rank_counts(ObjectKind::painted_tree, 1, 3);
    auto ls = exhaustive_rank_counts(ObjectKind::lighted_shade, 1, 3);
    anchor("multiplihedron (1,3) vertices", pt[0], 21);
    anchor("multiplihedron (1,3) facets", pt[2], 13);
    anchor("multiplihedron (1,3) faces", sum(pt), 67);
    anchor("hochschild (1,3) vertices", ls[0], 12);
    anchor("hochschild (1,3) facets", ls[2], 8);
    anchor("hochschild (1,3) faces", sum(ls), 39);
    anchor("singletons (1,3)", exhaustive_singletons(1, 3).by_predicate, 7);
    anchor("singletons (2,2)", exhaustive_singletons(2, 2).by_predicate, 14);
    detail::Sweep fe;
    for (int k = 1; k <= 12; ++k) {
      auto C = gf::catalan(k);
      if (!(C == gf::y(k, 0) + C * C)) fe.fail("Catalan equation fails at order " + std::to_string(k));
      auto S = gf::schroeder(k, k);
      auto Y = gf::y(k, k), Z = gf::z(k, k), I = gf::one(k, k);
      if (!((Z + I) * S * S - (I + Y * Z) * S + Y == TruncatedSeries(0, k, k)))
        fe.fail("Schroeder equation fails at order " + std::to_string(k));
    }
    r.add("functional equations C = y + C^2 and (z+1)S^2 - (1+yz)S + y = 0", fe.pass, fe.detail("orders 1..12"));
  });
}

// Criterion 2: rotation lattices.
inline SuiteResult lattice_suite(int bound = 6) {
  return detail::timed("lattice", bound, [&](SuiteResult& r) {
    detail::Sweep lat, reg, meet_sd, not_join_sd;
    std::string sd_table;
    detail::for_each_mn(bound, [&](int m, int n) {
      for (auto kind : {ObjectKind::painted_tree, ObjectKind::lighted_shade}) {
        FinitePoset p;
        try {
          p = build_rotation_poset(kind, m, n);
        } catch (const std::exception& e) {
          lat.fail(to_string(kind) + " " + detail::mn(m, n) + ": " + e.what());
          continue;
        }
        auto w = lattice_witness(p);
        if (!p.is_bounded() || !w.all_meets || !w.all_joins) {
          std::string why = !p.is_bounded() ? "not bounded"
                            : !w.all_meets ? "no meet of " + p.key(w.meetless->first) + ", " + p.key(w.meetless->second)
                                           : "no join of " + p.key(w.joinless->first) + ", " + p.key(w.joinless->second);
          lat.fail(to_string(kind) + " " + detail::mn(m, n) + ": " + why);
          continue;
        }
        if (kind == ObjectKind::lighted_shade) {
          for (int x = 0; x < p.size(); ++x) {
            int deg = static_cast<int>(p.upper_covers(x).size() + p.lower_covers(x).size());
            if (deg != m + n - 1) {
              reg.fail(detail::mn(m, n) + ": " + p.key(x) + " has degree " + std::to_string(deg));
              break;
            }
          }
        } else {
          bool msd = detail::semidistributive(p, true), jsd = detail::semidistributive(p, false);
          if (!msd) meet_sd.fail(detail::mn(m, n) + " is not meet-semidistributive");
          if (m >= 1 && jsd) not_join_sd.fail(detail::mn(m, n) + " is join-semidistributive");
          sd_table += (sd_table.empty() ? "" : " ") + detail::mn(m, n) + (msd ? "M" : "-") + (jsd ? "J" : "-");
        }
      }
    });
    r.add("both rotation digraphs are acyclic bounded lattices", lat.pass, lat.detail("all (m,n)"));
    r.add("shade rotation graph is (m+n-1)-regular", reg.pass, reg.detail("all (m,n)"));
    r.add("painted rotation lattice is meet-semidistributive", meet_sd.pass, meet_sd.detail("all (m,n)"));
    r.add("painted rotation lattice is not join-semidistributive for m >= 1", not_join_sd.pass,
          not_join_sd.detail("all (m,n)"));
    r.add("semidistributivity per (m,n): M = meet-SD, J = join-SD", true, sd_table, true);
  });
}

// Criterion 3: the shadow map on rotation lattices.
inline SuiteResult morphism_suite(int bound = 6) {
  return detail::timed("morphism", bound, [&](SuiteResult& r) {
    detail::Sweep meet, surj, fiber_min_ok, down;
    std::string join_cex, up_cex;
    detail::for_each_mn(bound, [&](int m, int n) {
      auto src = rotation_poset<PaintedTree>(m, n);
      auto dst = rotation_poset<LightedShade>(m, n);
      auto f = shadow_index_map(src, dst);
      auto mr = check_meet_morphism(f, src.poset, dst.poset);
      if (!mr.is_meet_morphism) {
        auto [x, y] = *mr.meet_counterexample;
        meet.fail(detail::mn(m, n) + ": " + src.poset.key(x) + ", " + src.poset.key(y));
      }
      if (!mr.is_join_morphism && m == 0 && n == 3) {
        auto [x, y] = *mr.join_counterexample;
        join_cex = src.poset.key(x) + " v " + src.poset.key(y);
      }
      auto c = check_congruence_projection(m, n);
      if (!c.surjective) surj.fail(detail::mn(m, n));
      if (!c.fibers_have_unique_min || !c.min_is_fiber_min)
        fiber_min_ok.fail(detail::mn(m, n) + (c.notes.empty() ? "" : ": " + c.notes[0]));
      if (!c.proj_down_order_preserving) down.fail(detail::mn(m, n));
      if (!c.proj_up_order_preserving && up_cex.empty() && c.proj_up_violation) {
        auto [a, b] = *c.proj_up_violation;
        up_cex = detail::mn(m, n) + ": cover " + src.poset.key(a) + " < " + src.poset.key(b);
      }
    });
    r.add("shadow is surjective", surj.pass, surj.detail("all (m,n)"));
    r.add("shadow is a meet-semilattice morphism", meet.pass, meet.detail("all (m,n)"));
    if (bound >= 3)
      r.add("join-morphism counterexample at (0,3)", !join_cex.empty(), join_cex.empty() ? "none found" : join_cex);
    r.add("each fiber has a unique minimum equal to fiber_min", fiber_min_ok.pass, fiber_min_ok.detail("all (m,n)"));
    r.add("projDown is order-preserving", down.pass, down.detail("all (m,n)"));
    r.add("projUp is not order-preserving", !up_cex.empty(), up_cex.empty() ? "order-preserving everywhere" : up_cex);
  });
}

// Criterion 4: polytope certification and the facet comparison.
inline SuiteResult geometry_suite(int bound = 6, int facet_bound = 5) {
  return detail::timed("geometry", bound, [&](SuiteResult& r) {
    detail::Sweep cert[2], facets;
    detail::for_each_mn(bound, [&](int m, int n) {
      int i = 0;
      for (auto k : {PolytopeKind::multiplihedron, PolytopeKind::hochschild}) {
        auto c = certify_polytope(k, m, n);
        if (!c.certified()) cert[i].fail(detail::mn(m, n) + ": " + (c.failures.empty() ? "?" : c.failures[0]));
        ++i;
      }
      if (m + n <= facet_bound) {
        auto fc = compare_facets(m, n);
        if (!fc.shade_subset_of_painted || !fc.shared_iff_tight_at_singleton || !fc.singleton_vertices_shared)
          facets.fail(detail::mn(m, n) + ": " + (fc.failures.empty() ? "?" : fc.failures[0]));
      }
    });
    r.add("multiplihedron certified (incidence, edge directions, fan, z, Minkowski)", cert[0].pass,
          cert[0].detail("all (m,n)"));
    r.add("hochschild polytope certified (incidence, edge directions and move formulas, fan, z, Minkowski)",
          cert[1].pass, cert[1].detail("all (m,n)"));
    r.add("shade facets are painted facets; shared ones are exactly those tight at a singleton, m+n <= " +
              std::to_string(facet_bound),
          facets.pass, facets.detail("all (m,n)"));
  });
}

// Criterion 5: omega-oriented skeletons against rotation digraphs; the freehedron.
inline SuiteResult skeleton_suite(int bound = 6, int freehedron_n = 3) {
  return detail::timed("skeleton", bound, [&](SuiteResult& r) {
    detail::Sweep iso[2];
    detail::for_each_mn(bound, [&](int m, int n) {
      int i = 0;
      for (auto k : {PolytopeKind::multiplihedron, PolytopeKind::hochschild}) {
        auto s = oriented_skeleton(k, m, n);
        auto p = build_rotation_poset(k == PolytopeKind::multiplihedron ? ObjectKind::painted_tree
                                                                        : ObjectKind::lighted_shade,
                                      m, n);
        std::set<std::pair<std::string, std::string>> a, b;
        for (auto [u, v] : s.arcs) a.emplace(s.keys[u], s.keys[v]);
        for (auto [u, v] : p.covers()) b.emplace(p.key(u), p.key(v));
        if (s.tie) iso[i].fail(detail::mn(m, n) + ": edge orthogonal to omega");
        else if (a != b) iso[i].fail(detail::mn(m, n) + ": arcs differ");
        ++i;
      }
    });
    r.add("multiplihedron omega-skeleton = painted rotation digraph", iso[0].pass, iso[0].detail("all (m,n)"));
    r.add("hochschild omega-skeleton = shade rotation digraph", iso[1].pass, iso[1].detail("all (m,n)"));
    auto fr = freehedron_orientation(freehedron_n);
    std::string info = std::to_string(fr.vertex_count) + " vertices, " + std::to_string(fr.edge_count) + " edges";
    r.add("freehedron n=" + std::to_string(freehedron_n) + " omega-orientation is not a lattice", !fr.is_lattice, info);
    r.add("freehedron join-less pair", fr.joinless.has_value(),
          fr.joinless ? fr.joinless->first + " | " + fr.joinless->second : "none");
    r.add("freehedron meet-less pair", fr.meetless.has_value(),
          fr.meetless ? fr.meetless->first + " | " + fr.meetless->second : "none");
  });
}

// Criterion 6: Hochschild words and cubic coordinates.
inline SuiteResult cubic_suite(int word_bound = 7, int realization_bound = 6, int subdivision_bound = 5) {
  return detail::timed("cubic", word_bound, [&](SuiteResult& r) {
    detail::Sweep words_ok, real[2], sub[2], lehmer, bracket;
    detail::for_each_mn(word_bound, [&](int m, int n) {
      auto w = verify_word_bijection(m, n);
      if (!w.ok()) words_ok.fail(detail::mn(m, n) + ": " + (w.failures.empty() ? "?" : w.failures[0]));
      if (n == 0)
        for (auto& t : enum_rank_zero<PaintedTree>(m, n))
          if (cubic_vector_painted(t) != lehmer_code(cut_order(t))) lehmer.fail(t.key());
      if (m == 0)
        for (auto& t : enum_rank_zero<PaintedTree>(m, n))
          if (cubic_vector_painted(t) != bracket_vector(t)) bracket.fail(t.key());
    });
    detail::for_each_mn(realization_bound, [&](int m, int n) {
      int i = 0;
      for (auto k : {ObjectKind::painted_tree, ObjectKind::lighted_shade}) {
        auto c = verify_cubic_realization(k, m, n, m + n <= subdivision_bound);
        std::string why = c.failures.empty() ? "?" : c.failures[0];
        if (!c.realization_ok()) real[i].fail(detail::mn(m, n) + ": " + why);
        else if (!c.subdivision_ok()) sub[i].fail(detail::mn(m, n) + ": " + why);
        ++i;
      }
    });
    r.add("word <-> shade round trip, fibers of (perm, word) -> perm are full, m+n <= " + std::to_string(word_bound),
          words_ok.pass, words_ok.detail("all (m,n)"));
    r.add("painted cubic vectors: in range, injective, one coordinate decreases per cover, on the boundary",
          real[0].pass, real[0].detail("m+n <= " + std::to_string(realization_bound)));
    r.add("shade cubic vectors: in range, injective, one coordinate decreases per cover, on the boundary",
          real[1].pass, real[1].detail("m+n <= " + std::to_string(realization_bound)));
    r.add("painted cubic subdivision realizes the face lattice", sub[0].pass,
          sub[0].detail("m+n <= " + std::to_string(subdivision_bound)));
    r.add("shade cubic subdivision realizes the face lattice", sub[1].pass,
          sub[1].detail("m+n <= " + std::to_string(subdivision_bound)));
    r.add("n = 0: cubic vector = Lehmer code of the cut order", lehmer.pass, lehmer.detail("ok"));
    r.add("m = 0: cubic vector = bracket vector", bracket.pass, bracket.detail("ok"));
  });
}

// Criterion 7: analytics observations; only the word-lattice property can fail.
inline SuiteResult analytics_suite(int bound = 6) {
  return detail::timed("analytics", bound, [&](SuiteResult& r) {
    auto observe = [&](int m, int n, bool want_extremal) {
      auto p = build_rotation_poset(ObjectKind::lighted_shade, m, n);
      auto a = lattice_analytics(p);
      std::string info = "extremal " + std::string(a.is_extremal ? "yes" : "no") + " (length " +
                         std::to_string(a.length) + ", " + std::to_string(a.join_irreducibles) + " join-irr, " +
                         std::to_string(a.meet_irreducibles) + " meet-irr), Coxeter " +
                         (a.coxeter_computed ? to_string(a.coxeter_polynomial) +
                                                   (a.coxeter_is_cyclotomic ? " cyclotomic" : " not cyclotomic")
                                             : std::string("skipped (too large)"));
      bool matches = want_extremal ? (a.is_extremal && a.coxeter_is_cyclotomic) : !a.is_extremal;
      r.add("shade rotation lattice " + detail::mn(m, n) + (want_extremal ? " extremal, cyclotomic" : " not extremal"),
            matches, info, true);
    };
    observe(1, 2, true);
    observe(1, 3, true);
    observe(2, 2, false);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
      auto a = lattice_analytics(build_rotation_poset(ObjectKind::lighted_shade, m, n));
      r.add("shade rotation lattice " + detail::mn(m, n) + " Coxeter polynomial not a product of cyclotomics",
            a.coxeter_computed && !a.coxeter_is_cyclotomic,
            a.coxeter_computed ? (a.coxeter_is_cyclotomic ? "cyclotomic" : "not cyclotomic") : "skipped", true);
    }
    detail::Sweep lat;
    detail::for_each_mn(bound, [&](int m, int n) {
      auto p = word_poset(m, n);
      if (!is_lattice(p)) lat.fail(detail::mn(m, n));
    });
    r.add("(m,n)-word poset is a lattice, m+n <= " + std::to_string(bound), lat.pass, lat.detail("all (m,n)"));
    detail::Sweep rel;
    detail::for_each_mn(bound, [&](int m, int n) {
      auto w = check_word_relation(m, n);
      if (!w.agrees()) rel.fail(detail::mn(m, n) + ": " + (w.failures.empty() ? "?" : w.failures[0]));
    });
    r.add("cut swaps at words missing the swapped position, with words decreasing, give the rotation order",
          rel.pass, rel.detail("all (m,n), m+n <= " + std::to_string(bound)), true);
  });
}

inline SuiteResult run_criterion(int k) {
  switch (k) {
    case 1: return tables_suite();
    case 2: return lattice_suite();
    case 3: return morphism_suite();
    case 4: return geometry_suite();
    case 5: return skeleton_suite();
    case 6: return cubic_suite();
    case 7: return analytics_suite();
    default: throw std::invalid_argument("criteria are numbered 1..7");
  }
}

}  // namespace hochkit
