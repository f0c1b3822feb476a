#pragma once

#include "cubic.hpp"
#include "enumeration.hpp"
#include "geometry.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace hochkit {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

enum class OutputFormat { json, dot, csv, text };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "dot") return OutputFormat::dot;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown format: " + s);
}

inline json to_json(const RationalPoint& x) {
  json a = json::array();
  for (auto& v : x) a.push_back(to_string(v));
  return a;
}

inline json to_json(const Halfspace& h) { return {{"support", h.support}, {"rhs", to_string(h.rhs)}}; }

// Children lists per node (preorder, leaves as -1), cut node sets and label parts, bottom to top.
inline json structure_json(const PaintedTree& t) {
  json ch = json::array();
  for (int v = 0; v < t.node_count(); ++v) ch.push_back(t.children(v));
  return {{"children", ch}, {"cuts", t.cuts()}, {"parts", t.parts()}};
}

// Entries top to bottom.
inline json structure_json(const LightedShade& s) {
  json a = json::array();
  for (auto& e : s.entries()) a.push_back({{"tuple", e.tuple}, {"lights", e.lights}});
  return a;
}

template <class T>
json object_json(const T& obj) {
  json j{{"key", obj.key()}, {"rank", obj.rank()}, {"preposet", obj.preposet().to_string()}};
  j[std::is_same_v<T, PaintedTree> ? "tree" : "entries"] = structure_json(obj);
  if (obj.rank() == 0) {
    j["vertex"] = to_json(vertex_of(obj));
    j["cubic_vector"] = cubic_vector(obj);
  }
  return j;
}

// ---- enumeration ----

template <class T>
json enumeration_json(ObjectKind kind, int m, int n, std::optional<int> rank, const std::vector<T>& objs) {
  json j{{"format_version", kFormatVersion}, {"kind", to_string(kind)}, {"m", m}, {"n", n}};
  j["rank"] = rank ? json(*rank) : json(nullptr);
  j["count"] = objs.size();
  json a = json::array();
  for (auto& o : objs) a.push_back(object_json(o));
  j["objects"] = std::move(a);
  return j;
}

template <class T>
void write_enumeration_csv(std::ostream& os, const std::vector<T>& objs) {
  os << "key,rank,cubic_vector\n";
  for (auto& o : objs) {
    os << '"' << o.key() << "\"," << o.rank() << ',';
    if (o.rank() == 0) os << '"' << to_string(cubic_vector(o)) << '"';
    os << '\n';
  }
}

// ---- graphs ----

inline std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

// Nodes in index order, then edges sorted; ids are n0, n1, ... with the key as label.
inline void write_dot(std::ostream& os, const std::string& name, const std::vector<std::string>& keys,
                      std::vector<std::pair<int, int>> edges) {
  std::sort(edges.begin(), edges.end());
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < keys.size(); ++i) os << "  n" << i << " [label=\"" << dot_escape(keys[i]) << "\"];\n";
  for (auto [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
}

inline void write_dot(std::ostream& os, const std::string& name, const FinitePoset& p) {
  write_dot(os, name, p.keys(), p.covers());
}

inline json poset_json(const std::string& name, const FinitePoset& p) {
  json nodes = p.keys();
  json edges = json::array();
  auto covers = p.covers();
  std::sort(covers.begin(), covers.end());
  for (auto [a, b] : covers) edges.push_back({a, b});
  return {{"format_version", kFormatVersion}, {"name", name}, {"nodes", nodes}, {"covers", edges}};
}

// ---- polytopes ----

inline json minkowski_json(const MinkowskiData& md) {
  json y = json::object(), z = json::object();
  for (SubsetMask s = 1; s < (SubsetMask{1} << md.d); ++s) {
    if (md.y[s] != 0) y[subset_key(s)] = md.y[s].str();
    z[subset_key(s)] = md.z[s].str();
  }
  return {{"y", y}, {"z", z}};
}

inline json certification_json(const CertificationReport& r) {
  return {{"certified", r.certified()},
          {"checks",
           {{"on_hyperplane", r.on_hyperplane},
            {"inside_halfspaces", r.inside_halfspaces},
            {"incidence_matches_refinement", r.incidence_matches_refinement},
            {"edge_directions", r.edge_directions},
            {"move_formulas", r.move_formulas},
            {"simple", r.simple},
            {"fan_simplicial", r.fan_simplicial},
            {"fan_closed_under_faces", r.fan_closed_under_faces},
            {"fan_complete", r.fan_complete},
            {"shadow_witness", r.shadow_witness},
            {"z_matches_support", r.z_matches_support},
            {"minkowski_vertices_match", r.minkowski_vertices_match},
            {"moebius_roundtrip", r.moebius_roundtrip}}},
          {"failures", r.failures}};
}

template <class T>
json polytope_json(PolytopeKind kind, const PolytopeData<T>& P, const CertificationReport& cert) {
  json verts = json::array(), facets = json::array();
  for (std::size_t i = 0; i < P.vertices.size(); ++i)
    verts.push_back({{"object", P.vertex_objects[i].key()}, {"coordinates", to_json(P.vertices[i])}});
  for (std::size_t i = 0; i < P.facets.size(); ++i) {
    json h = to_json(P.facets[i]);
    h["object"] = P.facet_objects[i].key();
    facets.push_back(std::move(h));
  }
  const int d = P.m + P.n;
  return {{"format_version", kFormatVersion},
          {"polytope", to_string(kind)},
          {"m", P.m},
          {"n", P.n},
          {"ambient_dimension", d},
          {"hyperplane", {{"sum", binomial(d + 1, 2).str()}}},
          {"vertices", verts},
          {"halfspaces", facets},
          {"minkowski", minkowski_json(minkowski_data(kind, P.m, P.n))},
          {"report", certification_json(cert)}};
}

inline json freehedron_json(int n) {
  auto md = minkowski_data(PolytopeKind::freehedron, 0, n);
  auto sk = chamber_skeleton(md);
  auto rep = freehedron_orientation(n);
  json verts = json::array();
  for (auto& v : sk.vertices) verts.push_back(to_json(v));
  json edges = json::array();
  for (auto [a, b] : sk.edges) edges.push_back({a, b});
  json orient{{"lattice", rep.is_lattice}, {"tie", rep.has_tie}};
  if (rep.joinless) orient["joinless_pair"] = {rep.joinless->first, rep.joinless->second};
  if (rep.meetless) orient["meetless_pair"] = {rep.meetless->first, rep.meetless->second};
  return {{"format_version", kFormatVersion},
          {"polytope", "freehedron"},
          {"n", n},
          {"ambient_dimension", md.d},
          {"vertices", verts},
          {"edges", edges},
          {"minkowski", minkowski_json(md)},
          {"omega_orientation", orient},
          {"note", rep.is_lattice ? "omega-oriented skeleton is a lattice"
                                  : "omega-oriented skeleton is not a lattice"}};
}

// ---- tables ----

// One CSV block per table, m rows and n columns; each cell is the recomputed value,
// with "!" appended where it differs from the printed one.
inline void write_tables_csv(std::ostream& os, const TableReport& rep) {
  std::map<TableId, std::map<std::pair<int, int>, const TableCell*>> by;
  for (auto& c : rep.cells) by[c.table][{c.m, c.n}] = &c;
  for (auto& [t, cells] : by) {
    os << "# " << to_string(t) << "\nm\\n";
    for (int n = 0; n <= rep.bound; ++n) os << ',' << n;
    os << '\n';
    for (int m = 0; m <= rep.bound; ++m) {
      os << m;
      for (int n = 0; n <= rep.bound; ++n) {
        os << ',';
        auto it = cells.find({m, n});
        if (it == cells.end()) continue;
        auto& c = *it->second;
        BigInt v = c.exhaustive ? *c.exhaustive : c.closed_form ? *c.closed_form : *c.gf;
        os << v.str();
        if (!c.ok) os << '!';
      }
      os << '\n';
    }
  }
}

inline json table_cell_json(const TableCell& c) {
  json j{{"table", to_string(c.table)}, {"m", c.m}, {"n", c.n}, {"printed", c.expected.str()}, {"ok", c.ok}};
  j["exhaustive"] = c.exhaustive ? json(c.exhaustive->str()) : json(nullptr);
  j["closed_form"] = c.closed_form ? json(c.closed_form->str()) : json(nullptr);
  j["generating_function"] = c.gf ? json(c.gf->str()) : json(nullptr);
  return j;
}

}  // namespace hochkit
