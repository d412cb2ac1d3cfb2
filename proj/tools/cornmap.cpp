// cornmap: command-line front end. Exit status 0 on success, 1 when a
// verification fails, 2 on usage or input errors.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cornmap/builders.hpp"
#include "cornmap/enumerate.hpp"
#include "cornmap/io.hpp"
#include "cornmap/operators.hpp"
#include "cornmap/splitgraph.hpp"
#include "cornmap/symtype.hpp"
#include "json.hpp"
#include "verify/suite.hpp"

using namespace cornmap;
using nlohmann::ordered_json;

namespace {

struct Args {
  // build
  std::string kind;
  int rows = 4, cols = 4, n = 4, m = 3;
  // shared
  std::string map_path, corn_path, out;
  int j = 1;
  int index_bound = kDefaultIndexBound;
  int group_bound = kDefaultGroupBound;
  // op
  std::string op;
  // orbits
  std::string cell = "vertex";
  // corn enumerate
  bool transitive = false, symmetric = false;
  // symtype / split
  std::string group = "stab";
  bool dot = false, graph6 = false, verify = false;
  // verify suite
  std::vector<int> criteria;
  std::string census_map;
  bool json = false;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

void print(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

Topology load_map(const std::string& path) { return Topology(parse_map(read_file(path))); }

ordered_json corners_json(const Topology& t, const Corneration& l) {
  ordered_json out = ordered_json::array();
  for (const Corner& c : l.corners()) out.push_back({t.id(CellKind::Dart, c.a), t.id(CellKind::Dart, c.b)});
  return out;
}

ordered_json attributes_json(const DiagramAttributes& a) {
  ordered_json p = ordered_json::array();
  for (FacePattern x : a.patterns) p.push_back(to_string(x));
  return {{"nodes", a.node_count}, {"v_orbits", a.v_orbits}, {"e_orbits", a.e_orbits}, {"f_orbits", a.f_orbits},
          {"patterns", p},         {"local_type", to_string(a.local_type)}};
}

CellKind parse_cell(const std::string& s) {
  if (s == "vertex") return CellKind::Vertex;
  if (s == "edge") return CellKind::Edge;
  if (s == "face") return CellKind::Face;
  if (s == "dart") return CellKind::Dart;
  if (s == "wedge") return CellKind::Wedge;
  throw CLI::ValidationError("--cell", "unknown cell kind " + s);
}

// The group named by --group: "stab" is Aut(L); an integer k picks the k-th
// subgroup of Aut(L) of index <= the bound that is transitive on L.
SymGroup pick_group(const Topology& t, const Corneration& l, const Args& a) {
  const SymGroup stab = setwise_stabilizer(t, automorphism_group(t), l);
  if (a.group == "stab") return stab;
  int k = -1;
  try {
    k = std::stoi(a.group);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--group", "expected 'stab' or a subgroup number");
  }
  int seen = 0;
  for (const SymGroup& h : subgroups_up_to_index(stab, a.index_bound, a.group_bound))
    if (transitive_on_corners(t, h, l) && seen++ == k) return h;
  throw CLI::ValidationError("--group", "only " + std::to_string(seen) + " transitive subgroups");
}

int run_build(const Args& a) {
  FlagMap m;
  if (a.kind == "torus") m = build_torus_grid(a.rows, a.cols);
  else if (a.kind == "antiprism") m = build_antiprism(a.n);
  else if (a.kind == "tri-torus") m = build_triangular_torus(a.rows, a.cols);
  else if (a.kind == "dipole") m = build_dipole(a.m);
  else if (a.kind == "theta") m = build_theta();
  else if (a.kind == "cube") m = build_cube();
  else if (a.kind == "tetrahedron") m = build_tetrahedron();
  else if (a.kind == "asymmetric") m = build_asymmetric();
  else throw CLI::ValidationError("build", "unknown family " + a.kind);
  emit(write_map(m), a.out);
  return 0;
}

int run_info(const Args& a) {
  const Topology t = load_map(a.map_path);
  if (a.dot) {
    std::cout << export_dot(t, skeleton(t));
    return 0;
  }
  const SurfaceInfo s = euler_and_genus(t);
  std::vector<int> lengths;
  for (int f = 0; f < t.count(CellKind::Face); ++f) lengths.push_back(t.face_length(f));
  ordered_json j{{"name", t.map().name()},
                 {"flags", t.num_flags()},
                 {"vertices", t.count(CellKind::Vertex)},
                 {"edges", t.count(CellKind::Edge)},
                 {"faces", t.count(CellKind::Face)},
                 {"valence", t.uniform_valence() ? ordered_json(*t.uniform_valence()) : ordered_json(nullptr)},
                 {"face_lengths", lengths},
                 {"euler", s.euler},
                 {"orientable", s.orientable},
                 {"genus", s.genus},
                 {"face_bipartite", face_bipartite(t).has_value()},
                 {"vertex_bipartite", vertex_bipartite(t).has_value()}};
  print(j);
  return 0;
}

int run_op(const Args& a) {
  const FlagMap m = load_map(a.map_path).map();
  std::vector<FlagMap> out;
  if (a.op == "dual") out.push_back(dual(m));
  else if (a.op == "petrie") out.push_back(petrie(m));
  else if (a.op == "opp") out.push_back(opposite(m));
  else if (a.op == "hole") out = hole(m, a.j).maps;
  else throw CLI::ValidationError("op", "unknown operator " + a.op);
  if (out.size() == 1) {
    emit(write_map(out[0]), a.out);
  } else if (a.out.empty() || a.out == "-") {
    for (std::size_t k = 0; k < out.size(); ++k) std::cout << "# component " << k << "\n" << write_map(out[k]);
  } else {
    for (std::size_t k = 0; k < out.size(); ++k) write_file(a.out + "." + std::to_string(k), write_map(out[k]));
  }
  return 0;
}

int run_aut(const Args& a) {
  const Topology t = load_map(a.map_path);
  const SymGroup g = automorphism_group(t);
  ordered_json gens = ordered_json::array();
  for (int i : g.generators()) gens.push_back(g.element(i));
  print({{"order", g.order()},
         {"flag_orbits", orbit_count(flag_orbits(g))},
         {"reflexible", is_reflexible(t, g)},
         {"dart_transitive", transitive_on_darts(t, g)},
         {"generators", gens}});
  return 0;
}

int run_orbits(const Args& a) {
  const Topology t = load_map(a.map_path);
  const SymGroup g = automorphism_group(t);
  const CellKind kind = parse_cell(a.cell);
  const std::vector<int> labels = cell_orbits(g, t, kind);
  ordered_json counts;
  for (CellKind k : kAllCellKinds) counts[to_string(k)] = orbit_count(cell_orbits(g, t, k));
  counts["flag"] = orbit_count(flag_orbits(g));
  print({{"counts", counts}, {"cell", to_string(kind)}, {"labels", labels}});
  return 0;
}

int run_reflexibility(const Args& a) {
  const Topology t = load_map(a.map_path);
  const SymGroup g = automorphism_group(t);
  const Topology p(petrie(t.map()));
  const SymGroup pg = automorphism_group(p);
  auto half = [&](const Topology& x, const SymGroup& xg) -> ordered_json {
    auto h = face_reflexive_group(x, xg, a.group_bound);
    if (!h) return nullptr;
    return {{"order", h->order()}, {"index", xg.order() / h->order()}};
  };
  print({{"reflexible", is_reflexible(t, g)},
         {"face_bipartite", face_bipartite(t).has_value()},
         {"petrie_face_bipartite", face_bipartite(p).has_value()},
         {"half_reflexive_group", half(t, g)},
         {"petrie_half_reflexive_group", half(p, pg)}});
  return 0;
}

int run_corn_enumerate(const Args& a) {
  const Topology t = load_map(a.map_path);
  const SymGroup aut = automorphism_group(t);
  ordered_json list = ordered_json::array();
  int k = 0;
  for (const TransitiveCorneration& tc : enumerate_transitive_cornerations(t, aut, a.j, a.index_bound, a.group_bound)) {
    if ((a.transitive && !tc.transitive) || (a.symmetric && !tc.symmetric)) continue;
    if (!a.out.empty()) write_file(a.out + "." + std::to_string(k) + ".corn", write_corneration(t, tc.corneration));
    list.push_back({{"index", k++},
                    {"transitive", tc.transitive},
                    {"symmetric", tc.symmetric},
                    {"aut_order", tc.aut.order()},
                    {"corners", corners_json(t, tc.corneration)}});
  }
  print({{"j", a.j}, {"count", list.size()}, {"cornerations", list}});
  return 0;
}

int run_corn_classify(const Args& a) {
  const Topology t = load_map(a.map_path);
  const Corneration l = parse_corneration(read_file(a.corn_path), t);
  const SymGroup g = pick_group(t, l, a);
  const Classification c = classify(t, g, l);
  print({{"row", std::string(1, c.letter)},
         {"exact", c.exact},
         {"faces_differ", c.faces_differ},
         {"group_order", g.order()},
         {"attributes", attributes_json(c.attributes)}});
  return 0;
}

int run_symtype(const Args& a) {
  const Topology t = load_map(a.map_path);
  const Corneration l = parse_corneration(read_file(a.corn_path), t);
  const SymGroup g = pick_group(t, l, a);
  const Diagram d = symmetry_type_graph(t, g, l);
  if (a.dot) {
    std::cout << export_dot(d);
    return 0;
  }
  const DiagramCheck chk = satisfies_diagram_constraints(d);
  ordered_json shapes = ordered_json::array();
  for (Shape s : d.shape) shapes.push_back(s == Shape::Box ? "box" : "oval");
  ordered_json out{{"shapes", shapes},
                   {"adj0", d.adj[0]},
                   {"adj1", d.adj[1]},
                   {"adj2", d.adj[2]},
                   {"constraints_ok", chk.ok},
                   {"violated_rule", chk.rule}};
  if (transitive_on_corners(t, g, l) && l.width() == 1) {
    const Classification c = classify(t, g, l);
    out["row"] = std::string(1, c.letter);
    out["exact"] = c.exact;
    out["attributes"] = attributes_json(c.attributes);
  }
  print(out);
  return 0;
}

SplitKind parse_kind(const std::string& s) {
  if (s == "A") return SplitKind::A;
  if (s == "B") return SplitKind::B;
  if (s == "Ci") return SplitKind::Ci;
  if (s == "Cx") return SplitKind::Cx;
  throw CLI::ValidationError("--kind", "expected A, B, Ci or Cx");
}

int run_split(const Args& a) {
  const Topology t = load_map(a.map_path);
  const Corneration l = parse_corneration(read_file(a.corn_path), t);
  const SplitKind kind = parse_kind(a.kind);
  const std::vector<Corner> k = split_corners(t, l, kind);
  const SplitGraph s = split(t, l, k);
  if (a.dot) {
    std::cout << export_dot(t, s);
    return 0;
  }
  if (a.graph6) {
    std::cout << to_graph6(s) << "\n";
    return 0;
  }
  const auto val = s.valence();
  const LocalConnectivity lc = is_locally_connected(t, s);
  const int q = t.uniform_valence().value_or(0);
  const int j = l.width().value_or(0);
  const auto stated_val = predicted_valence(kind, q, j);
  const auto stated_lc = predicted_local_connectivity(kind, q, j);
  ordered_json out{{"kind", to_string(kind)},
                   {"vertices", s.size()},
                   {"edges", s.edges.size()},
                   {"valence", val ? ordered_json(*val) : ordered_json(nullptr)},
                   {"locally_connected", lc.ok},
                   {"witness_vertex", lc.witness_vertex},
                   {"connected", is_connected(s)},
                   {"stated_valence", stated_val ? ordered_json(*stated_val) : ordered_json(nullptr)},
                   {"stated_locally_connected", stated_lc ? ordered_json(*stated_lc) : ordered_json(nullptr)}};
  bool ok = true;
  if (a.verify) {
    const SymGroup g = setwise_stabilizer(t, automorphism_group(t), l);
    const TransitivityReport tr = verify_vertex_transitive(t, s, g, l, k);
    out["vertex_transitive"] = tr.ok;
    ok = tr.ok && val == stated_val && std::optional<bool>(lc.ok) == stated_lc;
    out["verified"] = ok;
  }
  print(out);
  return ok ? 0 : 1;
}

int run_verify(const Args& a) {
  verify::Options opt;
  opt.index_bound = a.index_bound;
  opt.group_bound = a.group_bound;
  opt.census_map = a.census_map;
  std::vector<int> ids = a.criteria;
  if (ids.empty())
    for (int i = 1; i <= verify::kCriterionCount; ++i) ids.push_back(i);
  verify::Harness h(opt);
  bool ok = true;
  ordered_json report = ordered_json::array();
  for (int id : ids) {
    const verify::CriterionResult r = h.run(id);
    ok = ok && r.status != verify::Status::Fail;
    if (a.json) {
      report.push_back({{"criterion", r.id},
                        {"title", r.title},
                        {"status", verify::to_string(r.status)},
                        {"checks", r.checks},
                        {"failures", r.failures},
                        {"details", r.details}});
    } else {
      std::cout << verify::summary_line(r) << "\n";
      for (const std::string& line : r.details) std::cout << "    " << line << "\n";
    }
  }
  if (a.json) print(report);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maps on surfaces, cornerations and split graphs"};
  app.require_subcommand(1);
  Args a;

  auto* build = app.add_subcommand("build", "write a map file for a named family");
  build->add_option("family", a.kind, "torus | antiprism | tri-torus | dipole | theta | cube | tetrahedron | asymmetric")
      ->required();
  build->add_option("--rows", a.rows);
  build->add_option("--cols", a.cols);
  build->add_option("--n", a.n, "antiprism size");
  build->add_option("--m", a.m, "dipole edge count");
  build->add_option("-o,--out", a.out);

  auto* info = app.add_subcommand("info", "cell counts and surface");
  info->add_option("map", a.map_path)->required()->check(CLI::ExistingFile);
  info->add_flag("--dot", a.dot, "skeleton as DOT");

  auto* op = app.add_subcommand("op", "apply dual, petrie, opp or hole");
  op->add_option("operator", a.op, "dual | petrie | opp | hole")->required();
  op->add_option("map", a.map_path)->required()->check(CLI::ExistingFile);
  op->add_option("--j", a.j, "hole width");
  op->add_option("-o,--out", a.out, "output file (components get .0, .1, ...)");

  for (auto [name, help] : {std::pair{"aut", "automorphism group"}, std::pair{"reflexibility", "reflexibility report"}}) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("map", a.map_path)->required()->check(CLI::ExistingFile);
    sc->add_option("--group-bound", a.group_bound);
  }
  auto* orbits = app.add_subcommand("orbits", "orbits of Aut(M) on cells");
  orbits->add_option("map", a.map_path)->required()->check(CLI::ExistingFile);
  orbits->add_option("--cell", a.cell, "vertex | edge | face | dart | wedge");

  auto* corn = app.add_subcommand("corn", "cornerations");
  corn->require_subcommand(1);
  auto* en = corn->add_subcommand("enumerate", "cornerations invariant under subgroups of small index");
  en->add_option("map", a.map_path)->required()->check(CLI::ExistingFile);
  en->add_option("--j", a.j)->required();
  en->add_flag("--transitive", a.transitive);
  en->add_flag("--symmetric", a.symmetric);
  en->add_option("--index-bound", a.index_bound);
  en->add_option("--group-bound", a.group_bound);
  en->add_option("-o,--out", a.out, "also write PREFIX.k.corn files");
  auto* cl = corn->add_subcommand("classify", "table row of a transitive wedge corneration");
  cl->add_option("map", a.map_path)->required()->check(CLI::ExistingFile);
  cl->add_option("corn", a.corn_path)->required()->check(CLI::ExistingFile);
  cl->add_option("--group", a.group, "stab (Aut(L)) or the number of a transitive subgroup");
  cl->add_option("--index-bound", a.index_bound);

  auto* st = app.add_subcommand("symtype", "symmetry-type graph");
  st->add_option("map", a.map_path)->required()->check(CLI::ExistingFile);
  st->add_option("corn", a.corn_path)->required()->check(CLI::ExistingFile);
  st->add_option("--group", a.group, "stab (Aut(L)) or the number of a transitive subgroup");
  st->add_option("--index-bound", a.index_bound);
  st->add_flag("--dot", a.dot);

  auto* sp = app.add_subcommand("split", "split graph constructions");
  sp->add_option("map", a.map_path)->required()->check(CLI::ExistingFile);
  sp->add_option("corn", a.corn_path)->required()->check(CLI::ExistingFile);
  sp->add_option("--kind", a.kind, "A | B | Ci | Cx")->required();
  auto* fmt = sp->add_option_group("format");
  fmt->add_flag("--dot", a.dot);
  fmt->add_flag("--graph6", a.graph6);
  fmt->require_option(0, 1);
  sp->add_flag("--verify", a.verify, "exit 1 unless the graph matches the stated valence and connectivity");

  auto* ver = app.add_subcommand("verify", "verification harness");
  ver->require_subcommand(1);
  auto* suite = ver->add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("-c,--criterion", a.criteria)->check(CLI::Range(1, verify::kCriterionCount));
  suite->add_option("--census-map", a.census_map)->check(CLI::ExistingFile);
  suite->add_option("--index-bound", a.index_bound);
  suite->add_option("--group-bound", a.group_bound);
  suite->add_flag("--json", a.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return run_build(a);
    if (info->parsed()) return run_info(a);
    if (op->parsed()) return run_op(a);
    if (app.got_subcommand("aut")) return run_aut(a);
    if (app.got_subcommand("reflexibility")) return run_reflexibility(a);
    if (orbits->parsed()) return run_orbits(a);
    if (en->parsed()) return run_corn_enumerate(a);
    if (cl->parsed()) return run_corn_classify(a);
    if (st->parsed()) return run_symtype(a);
    if (sp->parsed()) return run_split(a);
    if (suite->parsed()) return run_verify(a);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
