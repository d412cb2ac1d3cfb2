#include "verify/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "cornmap/builders.hpp"
#include "cornmap/corneration.hpp"
#include "cornmap/io.hpp"
#include "cornmap/operators.hpp"
#include "cornmap/splitgraph.hpp"
#include "cornmap/symtype.hpp"
#include "verify/oracles.hpp"

namespace cornmap::verify {

namespace {

// Collects expectations; failures are always listed, successes only as counts
// unless they carry information worth printing.
class Checker {
 public:
  bool expect(bool ok, const std::string& what, bool show_ok = false) {
    ++checks_;
    if (!ok) {
      ++failures_;
      lines_.push_back("FAIL " + what);
    } else if (show_ok) {
      lines_.push_back("ok   " + what);
    }
    return ok;
  }
  void note(const std::string& what) { lines_.push_back("     " + what); }

  CriterionResult finish(int id, std::string title, double seconds, double budget) && {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.seconds = seconds;
    r.budget_seconds = budget;
    if (budget > 0) {
      std::ostringstream os;
      os.precision(3);
      os << "runtime " << seconds << " s within " << budget << " s";
      expect(seconds <= budget, os.str());
    }
    r.checks = checks_;
    r.failures = failures_;
    r.status = failures_ == 0 ? Status::Pass : Status::Fail;
    r.details = std::move(lines_);
    return r;
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> lines_;
};

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string triple(int v, int e, int f) { return "(" + str(v) + "," + str(e) + "," + str(f) + ")"; }

oracle::CornerSet corner_set(const Topology& topo, const Corneration& l) {
  oracle::CornerSet out;
  for (const Corner& c : l.corners()) out.emplace_back(topo.id(CellKind::Dart, c.a), topo.id(CellKind::Dart, c.b));
  std::sort(out.begin(), out.end());
  return out;
}

// phi r_i = r'_i phi for all i, checked flag by flag.
bool is_flag_isomorphism(const FlagMap& a, const FlagMap& b, const Perm& phi) {
  if (a.size() != b.size() || static_cast<int>(phi.size()) != a.size() || !is_permutation(phi)) return false;
  for (int i = 0; i < 3; ++i)
    for (int f = 0; f < a.size(); ++f)
      if (phi[a.apply(i, f)] != b.apply(i, phi[f])) return false;
  return true;
}

bool isomorphic(const FlagMap& a, const FlagMap& b) {
  auto phi = is_isomorphic(a, b);
  return phi && is_flag_isomorphism(a, b, *phi);
}

bool same_system(const FlagMap& a, const FlagMap& b) {
  return a.r(0) == b.r(0) && a.r(1) == b.r(1) && a.r(2) == b.r(2);
}

// Cyclic edge-id sequence of every face of m (faces of P(M) are Petrie paths),
// each brought to its smallest rotation/reflection.
using EdgeCycle = std::vector<int>;

EdgeCycle canonical_cycle(EdgeCycle c) {
  EdgeCycle best = c;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t s = 0; s < c.size(); ++s) {
      std::rotate(c.begin(), c.begin() + 1, c.end());
      best = std::min(best, c);
    }
    std::reverse(c.begin(), c.end());
  }
  return best;
}

std::map<int, EdgeCycle> face_cycles(const FlagMap& m) {
  const auto edge = oracle::orbit_ids(m, {0, 2});
  const auto face = oracle::orbit_ids(m, {0, 1});
  std::map<int, EdgeCycle> out;
  for (int f = 0; f < m.size(); ++f) {
    if (out.count(face[f])) continue;
    EdgeCycle c;
    int g = f;
    do {
      c.push_back(edge[g]);
      g = m.apply(1, m.apply(0, g));
    } while (g != f);
    out[face[f]] = canonical_cycle(c);
  }
  return out;
}

std::multiset<EdgeCycle> circuit_cycles(const Topology& topo, const Corneration& l) {
  std::multiset<EdgeCycle> out;
  for (const Circuit& c : circuits_of(topo, l)) {
    EdgeCycle e;
    for (int x : c.edges) e.push_back(topo.id(CellKind::Edge, x));
    out.insert(canonical_cycle(e));
  }
  return out;
}

// One realization of a table row.
struct Instance {
  std::string label;
  char expect;  // row the construction is meant to realize
  Classification cls;
};

std::vector<Instance> table_instances() {
  std::vector<Instance> out;
  const Topology m(opposite(build_torus_grid(4, 4)));
  const SymGroup aut = automorphism_group(m);
  const Corneration l = green_wedge_corneration(m);
  const SymGroup aut_l = setwise_stabilizer(m, aut, l);
  const Topology pm(petrie(m.map()));
  const Corneration pl = transfer_petrie(pm, l);

  out.push_back({"opp({4,4}_{4,0}), green wedges, Aut(L)", 'a', classify(m, aut_l, l)});
  out.push_back({"P(opp({4,4}_{4,0})), green wedges, Aut(L)", 'f', classify(pm, aut_l, pl)});
  int k = 0;
  for (const SymGroup& h : subgroups_up_to_index(aut_l, 2)) {
    if (h.order() != aut_l.order() / 2 || !transitive_on_corners(m, h, l)) continue;
    ++k;
    Classification c = classify(m, h, l);
    Classification pc = classify(pm, h, pl);
    // Index-2 subgroups realize (b)-(e); the Petrie transfer moves (b)..(e) to (g)..(j).
    const char e = c.letter;
    const char pe = e == '?' ? '?' : static_cast<char>(e + 5);
    out.push_back({"opp({4,4}_{4,0}), green wedges, index-2 subgroup #" + str(k), e, std::move(c)});
    out.push_back({"P(opp({4,4}_{4,0})), green wedges, index-2 subgroup #" + str(k), pe, std::move(pc)});
  }
  const Topology an(build_antiprism(4));
  const Corneration la = antiprism_corneration(an);
  out.push_back({"4-antiprism L_4, Aut(L)", 'k', classify(an, setwise_stabilizer(an, automorphism_group(an), la), la)});
  const Topology tg(build_torus_grid(4, 5));
  const Corneration lt = torus_rows_corneration(tg, 4, 5);
  out.push_back({"4x5 torus grid rows, Aut(L)", 'l', classify(tg, setwise_stabilizer(tg, automorphism_group(tg), lt), lt)});
  return out;
}

std::string row_text(const TableRow& r) {
  DiagramAttributes a;
  a.v_orbits = r.v_orbits;
  a.e_orbits = r.e_orbits;
  a.f_orbits = r.f_orbits;
  a.patterns = r.patterns;
  a.local_type = r.local_type;
  return describe(a);
}

// Aut(L) of a j-corneration, carried to the single component of H_j(M), with
// L as a wedge-corneration there. nullopt when H_j(M) is disconnected.
struct HoleView {
  Topology topo;
  SymGroup group;
  Corneration l;
};
std::optional<HoleView> hole_view(const Topology& topo, const SymGroup& g, const Corneration& l, int j) {
  OperatorResult holed = hole(topo.map(), j);
  if (holed.maps.size() != 1) return std::nullopt;
  std::vector<Topology> comps{Topology(holed.maps[0])};
  std::vector<Corneration> ls = transfer_hole(topo, l, j, holed, comps);
  std::vector<int> to(topo.num_flags());
  for (int f = 0; f < topo.num_flags(); ++f) to[f] = holed.flag_correspondence[f].second;
  std::vector<Perm> elements;
  for (const Perm& p : g.elements()) {
    Perm q(p.size());
    for (int f = 0; f < topo.num_flags(); ++f) q[to[f]] = to[p[f]];
    elements.push_back(std::move(q));
  }
  return HoleView{comps[0], SymGroup(topo.num_flags(), std::move(elements)), ls[0]};
}

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

std::vector<SuiteMap> suite_maps() {
  std::vector<SuiteMap> out;
  out.push_back({"{4,4}_{4,0}", build_torus_grid(4, 4)});
  out.push_back({"opp({4,4}_{4,0})", opposite(build_torus_grid(4, 4))});
  for (int n = 3; n <= 6; ++n) out.push_back({"antiprism_" + str(n), build_antiprism(n)});
  for (int r = 3; r <= 6; ++r)
    for (int c = 3; c <= 6; ++c) {
      if (r == 4 && c == 4) continue;  // already present as {4,4}_{4,0}
      out.push_back({"torus_" + str(r) + "x" + str(c), build_torus_grid(r, c)});
    }
  out.push_back({"tri_torus_3x3", build_triangular_torus(3, 3)});
  return out;
}

Sweep build_sweep(const Options& opt) {
  Sweep s;
  s.maps = suite_maps();
  for (std::size_t i = 0; i < s.maps.size(); ++i) {
    s.topos.emplace_back(s.maps[i].map);
    s.auts.push_back(automorphism_group(s.topos.back()));
    s.petries.emplace_back(petrie(s.maps[i].map));
    const Topology& t = s.topos.back();
    const int q = *t.uniform_valence();
    for (int j = 1; 2 * j <= q; ++j)
      for (auto& tc : enumerate_transitive_cornerations(t, s.auts.back(), j, opt.index_bound, opt.group_bound))
        s.entries.push_back({static_cast<int>(i), j, std::move(tc)});
  }
  return s;
}

struct Harness::Cache {
  std::optional<Sweep> sweep;
};

Harness::Harness(Options opt) : opt_(std::move(opt)), cache_(std::make_unique<Cache>()) {}
Harness::~Harness() = default;

const Sweep& Harness::sweep() {
  if (!cache_->sweep) cache_->sweep = build_sweep(opt_);
  return *cache_->sweep;
}

namespace {

void expect_cells(Checker& ck, const std::string& name, const Topology& t, int v, int e, int f) {
  const auto counts = oracle::count_cells(t.map());
  const std::string want = triple(v, e, f);
  const std::string got = triple(t.count(CellKind::Vertex), t.count(CellKind::Edge), t.count(CellKind::Face));
  ck.expect(got == want, name + ": (V,E,F) = " + got + ", expected " + want);
  ck.expect(triple(counts.v, counts.e, counts.f) == got, name + ": orbit-count oracle agrees on (V,E,F)");
  ck.expect(euler_and_genus(t).euler == v - e + f && counts.euler() == v - e + f,
            name + ": Euler characteristic " + str(v - e + f));
}

CriterionResult criterion1() {
  const auto t0 = Clock::now();
  Checker ck;
  {
    const Topology t(build_torus_grid(4, 4));
    expect_cells(ck, "{4,4}_{4,0}", t, 16, 32, 16);
    const SymGroup aut = automorphism_group(t);
    ck.expect(aut.order() == 128, "{4,4}_{4,0}: |Aut| = " + str(aut.order()) + ", expected 128", true);
    ck.expect(is_reflexible(t, aut), "{4,4}_{4,0}: reflexible", true);
    ck.expect(face_bipartite(t).has_value() && oracle::face_two_colouring(t.map()).has_value(),
              "{4,4}_{4,0}: face-bipartite (library and backtracking oracle)", true);
    const Topology p(petrie(t.map()));
    bool all8 = true;
    for (int f = 0; f < p.count(CellKind::Face); ++f) all8 = all8 && p.face_length(f) == 8;
    ck.expect(all8, "{4,4}_{4,0}: every Petrie path has length 8", true);
  }
  {
    const Topology t(opposite(build_torus_grid(4, 4)));
    expect_cells(ck, "opp({4,4}_{4,0})", t, 8, 32, 16);
    ck.expect(t.uniform_valence() == 8, "opp: 8-valent", true);
    const SurfaceInfo s = euler_and_genus(t);
    ck.expect(s.orientable && oracle::orientable(t.map()) && s.genus == 5,
              "opp: orientable of genus " + str(s.genus) + ", expected 5", true);
    ck.expect(isomorphic(t.map(), petrie(t.map())), "opp: self-Petrie (P(opp) isomorphic to opp)", true);
  }
  for (int n = 3; n <= 6; ++n) {
    const Topology t(build_antiprism(n));
    expect_cells(ck, "antiprism_" + str(n), t, 2 * n, 4 * n, 2 * n + 2);
    ck.expect(euler_and_genus(t).orientable && euler_and_genus(t).genus == 0, "antiprism_" + str(n) + ": sphere");
  }
  for (int r = 3; r <= 6; ++r)
    for (int c = 3; c <= 6; ++c) {
      const Topology t(build_torus_grid(r, c));
      expect_cells(ck, "torus_" + str(r) + "x" + str(c), t, r * c, 2 * r * c, r * c);
      ck.expect(euler_and_genus(t).orientable && euler_and_genus(t).genus == 1,
                "torus_" + str(r) + "x" + str(c) + ": torus");
    }
  {
    const Topology t(build_triangular_torus(3, 3));
    expect_cells(ck, "tri_torus_3x3", t, 9, 27, 18);
  }
  ck.note("antiprisms 3..6 and torus grids 3..6 x 3..6 checked against V=2n,E=4n,F=2n+2 and V=rc,E=2rc,F=rc");
  return std::move(ck).finish(1, "suite maps build and validate", since(t0), 5);
}

CriterionResult criterion2() {
  const auto t0 = Clock::now();
  Checker ck;
  int n_maps = 0, degenerate_opp = 0;
  for (const SuiteMap& sm : suite_maps()) {
    ++n_maps;
    const FlagMap& m = sm.map;
    try {
      ck.expect(isomorphic(m, dual(dual(m))), sm.name + ": dual(dual(M)) isomorphic to M");
    } catch (const Error& e) {
      ck.expect(false, sm.name + ": dual failed: " + e.what());
    }
    ck.expect(isomorphic(m, petrie(petrie(m))), sm.name + ": P(P(M)) isomorphic to M");
    // The opposite can have loops; then both sides must be rejected alike.
    std::optional<FlagMap> opp, composed;
    try {
      opp = opposite(m);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateResult) throw;
    }
    try {
      composed = dual(petrie(dual(m)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateResult) throw;
    }
    if (!opp && !composed) {
      ++degenerate_opp;
      ck.expect(true, sm.name + ": opp(M) and dual(P(dual(M))) both have loops");
    } else {
      ck.expect(opp && composed && same_system(*opp, *composed),
                sm.name + ": opp(M) equals dual(P(dual(M))) flag for flag");
    }
    const OperatorResult h1 = hole(m, 1);
    ck.expect(h1.maps.size() == 1 && same_system(h1.maps[0], m), sm.name + ": H_1(M) = M");
  }
  ck.note(str(n_maps) + " suite maps: dual^2, P^2, opp = dual P dual, H_1 = id; " + str(degenerate_opp) +
          " have an opposite with loops, rejected by both routes");

  const FlagMap opp = opposite(build_torus_grid(4, 4));
  std::vector<FlagMap> twice;
  for (const FlagMap& c : hole(opp, 2).maps)
    for (const FlagMap& cc : hole(c, 2).maps) twice.push_back(cc);
  const std::vector<FlagMap> four = hole(opp, 4).maps;
  auto match = match_components(twice, four);
  bool verified = match.has_value();
  if (match)
    for (std::size_t i = 0; i < twice.size(); ++i) verified = verified && isomorphic(twice[i], four[(*match)[i]]);
  ck.expect(verified,
            "opp: H_2(H_2(M)) has " + str(twice.size()) + " components, H_4(M) has " + str(four.size()) +
                "; matched componentwise by isomorphism",
            true);
  return std::move(ck).finish(2, "operator identities", since(t0), 10);
}

CriterionResult criterion3() {
  const auto t0 = Clock::now();
  Checker ck;
  const Topology m(opposite(build_torus_grid(4, 4)));
  const SymGroup aut = automorphism_group(m);
  const Corneration l = green_wedge_corneration(m);
  const SymGroup aut_l = setwise_stabilizer(m, aut, l);
  ck.expect(transitive_on_corners(m, aut_l, l), "opp: green-wedge corneration is transitive", true);
  ck.expect(aut.order() == 2 * aut_l.order(),
            "opp: [Aut(M) : Aut(L)] = " + str(aut.order()) + "/" + str(aut_l.order()) + " = 2", true);

  const auto instances = table_instances();
  int index2 = 0;
  std::set<char> sub_rows;
  for (const Instance& in : instances)
    if (in.label.find("subgroup") != std::string::npos && in.label.rfind("opp", 0) == 0) {
      ++index2;
      sub_rows.insert(in.cls.letter);
    }
  ck.expect(index2 >= 4, str(index2) + " index-2 subgroups of Aut(L) are transitive on L (need >= 4)", true);
  ck.expect(sub_rows == std::set<char>{'b', 'c', 'd', 'e'},
            "they match rows " + std::string(sub_rows.begin(), sub_rows.end()) + " (need b, c, d, e)", true);

  std::map<char, bool> exact;
  for (const Instance& in : instances) {
    const Classification& c = in.cls;
    ck.expect(c.letter == in.expect, in.label + ": matches row (" + std::string(1, in.expect) + "), got (" +
                                         std::string(1, c.letter) + ")");
    ck.expect(satisfies_diagram_constraints(c.diagram).ok, in.label + ": symmetry-type graph passes the constraints");
    ck.expect(c.attributes == c.from_diagram, in.label + ": attributes measured on the map equal those read off its diagram");
    if (c.letter == '?') continue;
    exact[c.letter] = exact[c.letter] || c.exact;
  }
  for (const TableRow& row : table_rows()) {
    auto it = exact.find(row.letter);
    std::string measured;
    for (const Instance& in : instances)
      if (in.cls.letter == row.letter) measured = describe(in.cls.attributes);
    const bool ok = it != exact.end() && it->second;
    std::string msg = "row (" + std::string(1, row.letter) + ") printed " + row_text(row) + ", realized " +
                      (measured.empty() ? "never" : measured);
    if (!ok && !measured.empty()) {
      msg += " - differs only in face orbits";
      if (row.letter == 'b') msg += "; A-faces and E-faces cannot share an orbit of a group preserving L, so F >= 2";
    }
    ck.expect(ok, msg, true);
  }
  return std::move(ck).finish(3, "realization of the twelve table rows", since(t0), 60);
}

CriterionResult criterion4() {
  const auto t0 = Clock::now();
  Checker ck;
  const std::vector<Diagram> ds = enumerate_valid_diagrams();
  ck.expect(ds.size() == 12, "enumerate_valid_diagrams: " + str(ds.size()) + " diagrams up to isomorphism, expected 12",
            true);
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t k = i + 1; k < ds.size(); ++k)
      ck.expect(!diagram_isomorphic(ds[i], ds[k]), "diagrams " + str(i) + " and " + str(k) + " are not isomorphic");

  std::map<char, int> exact_hits, loose_hits;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const DiagramCheck chk = satisfies_diagram_constraints(ds[i]);
    ck.expect(chk.ok, "diagram " + str(i) + " passes the five constraints" + (chk.ok ? "" : ": " + chk.message));
    const DiagramAttributes a = diagram_attributes(ds[i]);
    std::string exact_rows, loose_rows;
    for (const TableRow& row : table_rows()) {
      if (matches_row(a, row, true)) {
        exact_rows += row.letter;
        ++exact_hits[row.letter];
      }
      if (matches_row(a, row, false)) {
        loose_rows += row.letter;
        ++loose_hits[row.letter];
      }
    }
    ck.expect(exact_rows.size() == 1, "diagram " + str(i) + " " + describe(a) + " matches row(s) {" + exact_rows +
                                          "} on all six columns, {" + loose_rows + "} ignoring face orbits",
              true);
  }
  for (const TableRow& row : table_rows()) {
    ck.expect(exact_hits[row.letter] == 1,
              "row (" + std::string(1, row.letter) + ") " + row_text(row) + " is the exact tuple of " +
                  str(exact_hits[row.letter]) + " diagram(s)");
  }
  bool loose_bijection = true;
  for (const TableRow& row : table_rows()) loose_bijection = loose_bijection && loose_hits[row.letter] == 1;
  ck.note(std::string("ignoring the face-orbit column the correspondence is ") +
          (loose_bijection ? "a bijection" : "not a bijection"));

  // Each enumerated diagram occurs as the symmetry-type graph of a concrete corneration.
  const auto instances = table_instances();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::string by;
    for (const Instance& in : instances)
      if (diagram_isomorphic(ds[i], in.cls.diagram)) {
        by = in.label;
        break;
      }
    ck.expect(!by.empty(), "diagram " + str(i) + " realized by " + (by.empty() ? "nothing" : by));
  }
  return std::move(ck).finish(4, "diagram enumeration", since(t0), 5);
}

}  // namespace

CriterionResult Harness::run(int id) {
  switch (id) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    default: break;
  }
  const auto t0 = Clock::now();
  Checker ck;

  if (id == 5) {
    const Sweep& s = sweep();
    int agree = 0, brute = 0;
    for (std::size_t i = 0; i < s.maps.size(); ++i) {
      const Topology& t = s.topos[i];
      const int q = *t.uniform_valence();
      const SymGroup petrie_aut = automorphism_group(s.petries[i]);
      const bool on_m = face_reflexive_group(t, s.auts[i], opt_.group_bound).has_value();
      const bool on_p = face_reflexive_group(s.petries[i], petrie_aut, opt_.group_bound).has_value();
      const bool reflexible = is_reflexible(t, s.auts[i]);
      const bool bip = face_bipartite(t).has_value() || face_bipartite(s.petries[i]).has_value();
      for (int j = 1; 2 * j <= q; ++j) {
        std::set<oracle::CornerSet> found;
        for (const SweepEntry& e : s.entries)
          if (e.map == static_cast<int>(i) && e.j == j && e.t.symmetric) found.insert(corner_set(t, e.t.corneration));
        const std::string where = s.maps[i].name + " j=" + str(j);
        if (2 * j == q) {
          ck.note(where + " (straight, outside the theorem): " + str(found.size()) + " symmetric");
          continue;
        }
        const bool predicate = j % 2 == 1 && (on_m || on_p);
        agree += ck.expect(!found.empty() == predicate, where + ": symmetric found " + str(found.size()) +
                                                            ", predicate " + (predicate ? "true" : "false"));
        if (reflexible)
          ck.expect(predicate == (j % 2 == 1 && bip), where + ": reflexible map, predicate agrees with face-bipartiteness of M or P(M)");
        if (auto all = oracle::all_j_cornerations(t.map(), j, opt_.brute_force_limit)) {
          ++brute;
          std::set<oracle::CornerSet> direct;
          for (const auto& cs : *all)
            if (oracle::symmetric_under(t.map(), s.auts[i].elements(), cs)) direct.insert(cs);
          ck.expect(direct == found, where + ": direct product enumeration of " + str(all->size()) +
                                         " cornerations finds " + str(direct.size()) + " symmetric, sweep " +
                                         str(found.size()));
        }
        if (predicate) {
          const SymmetricPair pair = symmetric_cornerations_from_coloring(t, s.auts[i], j, opt_.group_bound);
          for (const Corneration* c : {&pair.red, &pair.green})
            ck.expect(oracle::symmetric_under(t.map(), s.auts[i].elements(), corner_set(t, *c)),
                      where + ": colour-class corneration built from the half-reflexive group is symmetric");
        }
      }
    }
    ck.note(str(agree) + " (map, j < q/2) pairs agree with the predicate; " + str(brute) +
            " of them also enumerated directly");
    return std::move(ck).finish(5, "symmetric cornerations iff j odd and half-reflexible", since(t0), 120);
  }

  if (id == 6) {
    const Sweep& s = sweep();
    int n = 0, n_sym = 0;
    for (const SweepEntry& e : s.entries) {
      const Topology& t = s.topos[e.map];
      const int q = *t.uniform_valence();
      if (!e.t.transitive || 2 * e.j >= q) continue;
      ++n;
      const Corneration& l = e.t.corneration;
      const std::string where = s.maps[e.map].name + " j=" + str(e.j) + " #" + str(n);
      ck.expect(l.width() == e.j, where + ": uniform");
      const int index = s.auts[e.map].order() / e.t.aut.order();
      ck.expect(index == 1 || index == 2 || index == 4, where + ": [Aut(M) : Aut(L)] = " + str(index));
      std::set<LocalType> types;
      for (int v = 0; v < t.count(CellKind::Vertex); ++v) {
        const LocalAction act = local_action_group(t, e.t.aut, v);
        types.insert(act.type);
        const LocalCorneration lc = local_corneration(t, l, v);
        if (e.j % 2 == 1) {
          ck.expect(lc.cls == LocalClass::StandardOdd, where + ": vertex " + str(v) + " local corneration " + to_string(lc.cls));
        } else {
          ck.expect(e.j % 4 == 2 && lc.cls == LocalClass::StandardEven && act.type == LocalType::QD,
                    where + ": vertex " + str(v) + " local corneration " + to_string(lc.cls) + ", action " + to_string(act.type));
        }
      }
      const LocalType type = *types.begin();
      ck.expect(types.size() == 1 && type != LocalType::Other, where + ": local action " + to_string(type) + " at every vertex");
      if (!e.t.symmetric) continue;
      ++n_sym;
      ck.expect(e.j % 2 == 1, where + ": symmetric with odd j");
      ck.expect(type == LocalType::HD, where + ": symmetric with local action HD");
      std::optional<HoleView> view;
      if (e.j == 1) view = HoleView{t, e.t.aut, l};
      else view = hole_view(t, e.t.aut, l, e.j);
      if (!view) {
        ck.note(where + ": H_j(M) disconnected, row not determined");
        continue;
      }
      const Classification c = classify(view->topo, view->group, view->l);
      ck.expect(c.letter == 'a' || c.letter == 'f',
                where + ": symmetric, classifies as row (" + std::string(1, c.letter) + ")" + (e.j > 1 ? " on H_j(M)" : ""));
    }
    ck.note(str(n) + " transitive cornerations with j < q/2, " + str(n_sym) + " symmetric");
    return std::move(ck).finish(6, "local actions and local cornerations", since(t0), 0);
  }

  if (id == 7) {
    const Sweep& s = sweep();
    std::map<int, int> configs;
    for (const SweepEntry& e : s.entries) {
      if (!e.t.transitive || e.j != 1) continue;
      const Topology& t = s.topos[e.map];
      const std::string where = s.maps[e.map].name + " wedge corneration";
      const FacePatternReport fp = face_patterns(t, e.t.corneration);
      ++configs[fp.configuration];
      ck.expect(fp.configuration >= 1 && fp.configuration <= 4, where + ": configuration " + str(fp.configuration));
      const auto circuits = circuit_cycles(t, e.t.corneration);
      if (fp.configuration == 1) {
        const auto faces = face_cycles(t.map());
        const auto colouring = oracle::face_two_colouring(t.map());
        bool ok = false;
        if (colouring)
          for (int colour = 0; colour < 2; ++colour) {
            std::multiset<EdgeCycle> cls;
            for (auto [f, c] : *colouring)
              if (c == colour) cls.insert(faces.at(f));
            ok = ok || cls == circuits;
          }
        ck.expect(ok, where + ": circuits are the boundaries of one face colour class");
      } else if (fp.configuration == 2) {
        std::multiset<EdgeCycle> paths;
        for (const auto& [f, c] : face_cycles(s.petries[e.map].map())) paths.insert(c);
        // Every edge lies on two Petrie paths, so the circuits are half of them.
        ck.expect(std::includes(paths.begin(), paths.end(), circuits.begin(), circuits.end()),
                  where + ": every circuit is a Petrie path");
      }
    }
    for (auto [c, n] : configs) ck.note("configuration " + str(c) + ": " + str(n) + " transitive wedge cornerations");
    return std::move(ck).finish(7, "face configurations of wedge cornerations", since(t0), 0);
  }

  if (id == 8) {
    const Sweep& s = sweep();
    // (q, j, kind) -> measured valences, stated, model, count
    struct Row {
      std::set<int> measured;
      std::set<bool> lc;
      std::set<int> old_degree, new_degree;  // distinct neighbours through old / new edges
      int stated = 0;
      bool stated_lc = false;
      std::optional<oracle::LocalSplit> model;
      int count = 0;
    };
    std::map<std::tuple<int, int, int>, Row> rows;
    for (const SweepEntry& e : s.entries) {
      if (!e.t.transitive) continue;
      const Topology& t = s.topos[e.map];
      const Corneration& l = e.t.corneration;
      const int q = *t.uniform_valence();
      const std::string where = s.maps[e.map].name + " j=" + str(e.j);
      std::vector<SplitKind> kinds;
      if (2 * e.j == q) {
        if (!transitive_on_darts(t, s.auts[e.map])) continue;  // the straight theorem assumes a dart-transitive map
        kinds = {SplitKind::B};
      } else {
        kinds = {SplitKind::A};
        if (e.j >= 2) kinds.insert(kinds.end(), {SplitKind::B, SplitKind::Ci, SplitKind::Cx});
      }
      for (SplitKind kind : kinds) {
        const std::vector<Corner> k = split_corners(t, l, kind);
        const SplitGraph g = split(t, l, k);
        const auto val = g.valence();
        const bool lc = is_locally_connected(t, g).ok;
        const std::string what = where + " " + to_string(kind);
        ck.expect(!lc || is_connected(g), what + ": locally connected implies connected");
        ck.expect(verify_vertex_transitive(t, g, e.t.aut, l, k).ok, what + ": Aut(L) acts vertex-transitively");
        Row& r = rows[{q, e.j, static_cast<int>(kind)}];
        r.measured.insert(val ? *val : -1);
        r.lc.insert(lc);
        std::vector<std::set<int>> old_nb(g.size()), new_nb(g.size());
        for (const SplitEdge& se : g.edges) {
          if (se.is_old()) old_nb[se.u].insert(se.v), old_nb[se.v].insert(se.u);
          if (se.is_new()) new_nb[se.u].insert(se.v), new_nb[se.v].insert(se.u);
        }
        for (int x = 0; x < g.size(); ++x) {
          r.old_degree.insert(static_cast<int>(old_nb[x].size()));
          r.new_degree.insert(static_cast<int>(new_nb[x].size()));
        }
        r.stated = *predicted_valence(kind, q, e.j);
        r.stated_lc = *predicted_local_connectivity(kind, q, e.j);
        r.model = oracle::local_split_model(kind, q, e.j);
        ++r.count;
      }
    }
    for (const auto& [key, r] : rows) {
      const auto [q, j, kind] = key;
      const std::string head = "q=" + str(q) + " j=" + str(j) + " " + to_string(static_cast<SplitKind>(kind)) + " (" +
                               str(r.count) + " cornerations)";
      auto join = [](const auto& xs) {
        std::string out;
        for (auto v : xs) out += (out.empty() ? "" : "/") + str(v);
        return out;
      };
      const std::string model = r.model ? str(r.model->valence) : "n/a";
      ck.expect(r.measured == std::set<int>{r.stated},
                head + ": valence measured " + join(r.measured) + " (old " + join(r.old_degree) + " + new " +
                    join(r.new_degree) + "), stated " + str(r.stated) + ", local count " + model,
                true);
      ck.expect(r.lc == std::set<bool>{r.stated_lc}, head + ": locally connected " +
                                                         (r.lc.size() == 1 ? (*r.lc.begin() ? "yes" : "no") : "mixed") +
                                                         ", stated " + (r.stated_lc ? "yes" : "no"));
      // The local count assumes the two old edges of a corner reach different
      // corners; compare the part it actually models.
      ck.expect(r.model && r.new_degree == std::set<int>{r.model->valence - 2} &&
                    r.lc == std::set<bool>{r.model->locally_connected},
                head + ": new-edge degree and local connectivity agree with the local count");
    }
    // The corollary on cubic splits, as stated, next to the measurements.
    std::set<std::pair<int, int>> seen;
    for (const SweepEntry& e : s.entries) {
      const Topology& t = s.topos[e.map];
      const int q = *t.uniform_valence();
      if (!e.t.transitive || !seen.insert({q, e.j}).second) continue;
      for (const CubicLine& line : cubic_filter(t, e.t.corneration))
        ck.note("q=" + str(q) + " j=" + str(e.j) + " " + line.corollary + ": corollary " +
                (line.corollary_says_cubic ? "cubic" : "not cubic") + ", theorem " +
                (line.theorem_says_cubic ? "cubic" : "not cubic") + ", measured " +
                (line.defined ? (line.valence ? str(*line.valence) : "irregular") : "undefined"));
    }
    return std::move(ck).finish(8, "split-graph valence, local connectivity, transitivity", since(t0), 60);
  }

  if (id == 9) {
    struct Case {
      std::string name;
      FlagMap map;
      std::vector<int> js;
    };
    const std::vector<Case> cases{{"theta", build_theta(), {1}},
                                  {"antiprism_3", build_antiprism(3), {1, 2}},
                                  {"dipole_4", build_dipole(4), {1, 2}},
                                  {"torus_3x3", build_torus_grid(3, 3), {1, 2}}};
    for (const Case& c : cases) {
      const Topology t(c.map);
      for (int j : c.js) {
        std::set<oracle::CornerSet> lib;
        for (const Corneration& l : enumerate_invariant_cornerations(t, trivial_group(t.num_flags()), j))
          lib.insert(corner_set(t, l));
        const auto brute = oracle::all_j_cornerations(c.map, j, SIZE_MAX);
        const std::set<oracle::CornerSet> direct(brute->begin(), brute->end());
        ck.expect(lib == direct, c.name + " j=" + str(j) + ": exact cover finds " + str(lib.size()) +
                                     ", per-vertex product finds " + str(direct.size()),
                  true);
      }
    }
    return std::move(ck).finish(9, "exact cover against per-vertex brute force", since(t0), 0);
  }

  if (id == 10) {
    if (opt_.census_map.empty()) {
      CriterionResult r;
      r.id = 10;
      r.title = "connected but not locally connected split (needs --census-map)";
      r.status = Status::Skip;
      r.details.push_back("     no census map supplied");
      return r;
    }
    const Topology t(parse_map(read_file(opt_.census_map)));
    const SymGroup aut = automorphism_group(t);
    bool found = false;
    for (const TransitiveCorneration& tc : enumerate_transitive_cornerations(t, aut, 3, opt_.index_bound, opt_.group_bound)) {
      if (!tc.transitive) continue;
      for (SplitKind kind : {SplitKind::A, SplitKind::B, SplitKind::Ci, SplitKind::Cx}) {
        try {
          const SplitGraph g = build_split(t, tc.corneration, kind);
          const bool conn = is_connected(g), lc = is_locally_connected(t, g).ok;
          ck.note(std::string(to_string(kind)) + ": connected " + (conn ? "yes" : "no") + ", locally connected " +
                  (lc ? "yes" : "no"));
          found = found || (conn && !lc);
        } catch (const Error& err) {
          if (err.code() != ErrorCode::WidthOutOfRange) throw;
        }
      }
    }
    ck.expect(found, "some 3-uniform split construction is connected but not locally connected", true);
    return std::move(ck).finish(10, "connected but not locally connected split", since(t0), 0);
  }

  throw Error(ErrorCode::SyntaxError, "no criterion " + str(id));
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "criterion " << r.id << ": " << to_string(r.status) << "  " << r.title << "  (" << r.seconds << " s";
  if (r.budget_seconds > 0) os << ", budget " << static_cast<int>(r.budget_seconds) << " s";
  if (r.status != Status::Skip) os << ", " << r.failures << "/" << r.checks << " checks failed";
  os << ")";
  return os.str();
}

}  // namespace cornmap::verify
