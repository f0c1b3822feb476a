// hochkit: enumerate painted trees and lighted shades, export polytopes and Hasse
// diagrams, and run the verification suites.
//
// Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.

#include <hochkit/hochkit.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace hochkit;

namespace {

constexpr int kExitOk = 0, kExitFailure = 1, kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string kind = "painted";
  int m = 0, n = 0;
  std::optional<int> rank;
  bool count_only = false;
  std::string format;
  std::string output;
  int bound = 5;
  bool unsafe_bound = false;
  std::string suite = "all";
  std::string order = "rotation";
};

int ceiling(const RunConfig& c) { return c.unsafe_bound ? 31 : kDefaultMaxDim; }

void check_mn(const RunConfig& c) {
  try {
    check_parameters(c.m, c.n);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (c.m + c.n > ceiling(c))
    throw UsageError("m + n = " + std::to_string(c.m + c.n) + " exceeds the safety ceiling " +
                     std::to_string(kDefaultMaxDim) + "; pass --unsafe-bound to override (object counts grow "
                     "superexponentially)");
  if (c.rank && (*c.rank < 0 || *c.rank > c.m + c.n - 1))
    throw UsageError("rank must lie in [0, m+n-1]");
}

ObjectKind object_kind(const std::string& s) {
  if (s == "painted" || s == "multiplihedron") return ObjectKind::painted_tree;
  if (s == "shade" || s == "hochschild") return ObjectKind::lighted_shade;
  throw UsageError("kind must be painted or shade (or multiplihedron / hochschild)");
}

OutputFormat format_or(const RunConfig& c, OutputFormat fallback, std::initializer_list<OutputFormat> allowed) {
  OutputFormat f = fallback;
  if (!c.format.empty()) {
    try {
      f = parse_output_format(c.format);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  for (auto a : allowed)
    if (a == f) return f;
  throw UsageError("format " + c.format + " is not available for this command");
}

// Builds the whole output in memory, then writes it once.
void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw IoError("cannot open " + c.output);
  f << text;
  f.close();
  if (!f) throw IoError("cannot write " + c.output);
}

template <class T>
std::string enumeration_text(ObjectKind kind, const RunConfig& c, OutputFormat fmt) {
  std::vector<T> objs;
  if constexpr (std::is_same_v<T, PaintedTree>) objs = enum_painted_trees(c.m, c.n, c.rank, ceiling(c));
  else objs = enum_lighted_shades(c.m, c.n, c.rank, ceiling(c));
  std::ostringstream os;
  if (c.count_only) {
    os << objs.size() << '\n';
    return os.str();
  }
  switch (fmt) {
    case OutputFormat::json: os << enumeration_json(kind, c.m, c.n, c.rank, objs).dump(2) << '\n'; break;
    case OutputFormat::csv: write_enumeration_csv(os, objs); break;
    default:
      for (auto& o : objs) os << o.key() << '\n';
  }
  return os.str();
}

int cmd_enumerate(const RunConfig& c) {
  auto kind = object_kind(c.kind);
  check_mn(c);
  auto fmt = format_or(c, OutputFormat::text, {OutputFormat::text, OutputFormat::json, OutputFormat::csv});
  emit(c, kind == ObjectKind::painted_tree ? enumeration_text<PaintedTree>(kind, c, fmt)
                                           : enumeration_text<LightedShade>(kind, c, fmt));
  return kExitOk;
}

template <class T>
int polytope_output(PolytopeKind kind, const RunConfig& c, OutputFormat fmt) {
  auto P = polytope_data<T>(c.m, c.n, ceiling(c));
  auto cert = certify_polytope(kind, c.m, c.n, ceiling(c));
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::json: os << polytope_json(kind, P, cert).dump(2) << '\n'; break;
    case OutputFormat::csv:
      os << "object,coordinates\n";
      for (std::size_t i = 0; i < P.vertices.size(); ++i)
        os << '"' << P.vertex_objects[i].key() << "\",\"" << to_string(P.vertices[i]) << "\"\n";
      break;
    case OutputFormat::dot: {
      auto s = oriented_skeleton<T>(c.m, c.n, ceiling(c));
      write_dot(os, to_string(kind) + " " + std::to_string(c.m) + "," + std::to_string(c.n), s.keys, s.arcs);
      break;
    }
    default:
      os << to_string(kind) << " (m,n) = (" << c.m << "," << c.n << ") in R^" << c.m + c.n << "\n";
      os << P.vertices.size() << " vertices, " << P.facets.size() << " halfspaces\n";
      os << "vertices:\n";
      for (std::size_t i = 0; i < P.vertices.size(); ++i)
        os << "  " << to_string(P.vertices[i]) << "  " << P.vertex_objects[i].key() << '\n';
      os << "halfspaces:\n";
      for (std::size_t i = 0; i < P.facets.size(); ++i)
        os << "  " << P.facets[i].key() << "  " << P.facet_objects[i].key() << '\n';
      os << "report: " << (cert.certified() ? "certified" : "NOT certified") << '\n';
      for (auto& f : cert.failures) os << "  " << f << '\n';
  }
  emit(c, os.str());
  if (!cert.certified()) {
    std::cerr << "certification failed: " << (cert.failures.empty() ? "" : cert.failures[0]) << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_polytope(const RunConfig& c) {
  PolytopeKind kind;
  try {
    kind = parse_polytope_kind(c.kind);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (kind == PolytopeKind::freehedron) {
    if (c.n < 1 || c.n + 1 > ceiling(c)) throw UsageError("freehedron needs 1 <= n < ceiling");
    auto fmt = format_or(c, OutputFormat::json, {OutputFormat::json, OutputFormat::text});
    auto j = freehedron_json(c.n);
    std::ostringstream os;
    if (fmt == OutputFormat::json) os << j.dump(2) << '\n';
    else {
      os << "freehedron n = " << c.n << " in R^" << c.n + 1 << ": " << j["vertices"].size() << " vertices, "
         << j["edges"].size() << " edges\n";
      for (auto& v : j["vertices"]) {
        os << "  (";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get<std::string>();
        os << ")\n";
      }
      os << "note: " << j["note"].get<std::string>() << '\n';
      if (j["omega_orientation"].contains("joinless_pair"))
        os << "  join-less pair: " << j["omega_orientation"]["joinless_pair"][0].get<std::string>() << " | "
           << j["omega_orientation"]["joinless_pair"][1].get<std::string>() << '\n';
      if (j["omega_orientation"].contains("meetless_pair"))
        os << "  meet-less pair: " << j["omega_orientation"]["meetless_pair"][0].get<std::string>() << " | "
           << j["omega_orientation"]["meetless_pair"][1].get<std::string>() << '\n';
    }
    emit(c, os.str());
    return kExitOk;
  }
  check_mn(c);
  auto fmt = format_or(c, OutputFormat::json,
                       {OutputFormat::json, OutputFormat::text, OutputFormat::csv, OutputFormat::dot});
  if (kind == PolytopeKind::multiplihedron) return polytope_output<PaintedTree>(kind, c, fmt);
  return polytope_output<LightedShade>(kind, c, fmt);
}

int cmd_verify(const RunConfig& c) {
  if (c.bound < 1) throw UsageError("bound must be positive");
  if (c.bound > ceiling(c))
    throw UsageError("bound " + std::to_string(c.bound) + " exceeds the safety ceiling " +
                     std::to_string(kDefaultMaxDim) + "; pass --unsafe-bound to override");
  auto fmt = format_or(c, OutputFormat::text, {OutputFormat::text, OutputFormat::json, OutputFormat::csv});
  const int b = c.bound;
  std::vector<SuiteResult> results;
  auto want = [&](const std::string& s) { return c.suite == s || c.suite == "all"; };
  if (c.suite != "all" && c.suite != "tables" && c.suite != "lattice" && c.suite != "morphism" && c.suite != "fan" &&
      c.suite != "cubic")
    throw UsageError("suite must be one of lattice, morphism, fan, cubic, tables, all");
  if (want("tables")) results.push_back(tables_suite(b, 9));
  if (want("lattice")) {
    results.push_back(lattice_suite(b));
    results.push_back(analytics_suite(b));
  }
  if (want("morphism")) results.push_back(morphism_suite(b));
  if (want("fan")) {
    results.push_back(geometry_suite(b, std::min(b, 5)));
    results.push_back(skeleton_suite(b));
  }
  if (want("cubic")) results.push_back(cubic_suite(b, b, std::min(b, 5)));
  bool ok = true;
  json report{{"format_version", kFormatVersion}, {"suite", c.suite}, {"bound", b}};
  json suites = json::array();
  std::ostringstream text, csv;
  write_csv_header(csv);
  for (auto& r : results) {
    ok = ok && r.passed();
    suites.push_back(to_json(r));
    write_text(text, r);
    write_csv(csv, r);
  }
  report["passed"] = ok;
  report["suites"] = suites;
  if (fmt == OutputFormat::json) {
    emit(c, report.dump(2) + "\n");
    std::cerr << text.str();
  } else if (fmt == OutputFormat::csv) {
    emit(c, csv.str());
  } else {
    std::cout << text.str();
    if (!c.output.empty()) emit(c, report.dump(2) + "\n");
  }
  if (!ok) {
    for (auto& r : results)
      if (auto f = r.first_failure()) {
        std::cerr << "first failure [" << r.suite << "] " << f->name << ": " << f->detail << '\n';
        break;
      }
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_hasse(const RunConfig& c) {
  auto fmt = format_or(c, OutputFormat::dot, {OutputFormat::dot, OutputFormat::json});
  FinitePoset p;
  std::string name;
  if (c.kind == "word") {
    if (c.m < 0 || c.n < 1 || c.m + c.n > ceiling(c)) throw UsageError("word lattice needs m >= 0, n >= 1");
    p = word_poset(c.m, c.n);
    name = "words " + std::to_string(c.m) + "," + std::to_string(c.n);
  } else {
    auto kind = object_kind(c.kind);
    check_mn(c);
    if (c.order == "rotation") p = build_rotation_poset(kind, c.m, c.n, ceiling(c));
    else if (c.order == "refinement") p = build_refinement_poset(kind, c.m, c.n, ceiling(c));
    else throw UsageError("order must be rotation or refinement");
    name = to_string(kind) + " " + c.order + " " + std::to_string(c.m) + "," + std::to_string(c.n);
  }
  std::ostringstream os;
  if (fmt == OutputFormat::json) os << poset_json(name, p).dump(2) << '\n';
  else write_dot(os, name, p);
  emit(c, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Painted trees, lighted shades, multiplihedra and Hochschild polytopes"};
  app.require_subcommand(1);
  RunConfig c;
  auto common = [&](CLI::App* s, bool with_rank, const std::string& kinds) {
    s->add_option("--kind", c.kind, kinds);
    s->add_option("--m", c.m, "number of cut labels");
    s->add_option("--n", c.n, "number of tree gaps / shade total");
    if (with_rank) s->add_option("--rank", c.rank, "restrict to one rank (0 = binary / unary)");
    s->add_option("--format", c.format, "json | dot | csv | text");
    s->add_option("--output", c.output, "write to this file instead of standard output");
    s->add_flag("--unsafe-bound", c.unsafe_bound, "allow m + n above the safety ceiling");
  };
  auto* e = app.add_subcommand("enumerate", "list objects in canonical order");
  common(e, true, "painted | shade (multiplihedron / hochschild accepted)");
  e->add_flag("--count-only", c.count_only, "print only the number of objects");
  auto* p = app.add_subcommand("polytope", "V- and H-description, Minkowski data and certification");
  common(p, false, "multiplihedron | hochschild | freehedron (painted / shade accepted)");
  auto* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("--suite", c.suite, "lattice | morphism | fan | cubic | tables | all");
  v->add_option("--bound", c.bound, "largest m + n to sweep");
  v->add_option("--format", c.format, "text | json | csv");
  v->add_option("--output", c.output, "write the report here (with text format: the JSON report)");
  v->add_flag("--unsafe-bound", c.unsafe_bound, "allow bounds above the safety ceiling");
  auto* h = app.add_subcommand("hasse", "Hasse diagram as DOT");
  common(h, false, "painted | shade | word");
  h->add_option("--order", c.order, "rotation | refinement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (e->parsed()) return cmd_enumerate(c);
    if (p->parsed()) {
      if (c.kind == "painted" && p->count("--kind") == 0) c.kind = "multiplihedron";
      return cmd_polytope(c);
    }
    if (v->parsed()) return cmd_verify(c);
    return cmd_hasse(c);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const IoError& err) {
    std::cerr << "I/O error: " << err.what() << '\n';
    return kExitFailure;
  } catch (const std::length_error& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitFailure;
  }
}
