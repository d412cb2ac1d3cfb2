#include "cornmap/symtype.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cornmap {

std::string describe(const DiagramAttributes& a) {
  std::ostringstream os;
  os << "(" << a.v_orbits << "," << a.e_orbits << "," << a.f_orbits << ",{";
  bool first = true;
  for (FacePattern p : a.patterns) {
    os << (first ? "" : ",") << to_string(p);
    first = false;
  }
  os << "}," << to_string(a.local_type) << ")";
  return os.str();
}

const std::vector<TableRow>& table_rows() {
  using P = FacePattern;
  using L = LocalType;
  static const std::vector<TableRow> rows{
      {'a', 1, 1, 2, {P::A, P::E}, L::HD}, {'b', 1, 1, 1, {P::A, P::E}, L::HC}, {'c', 1, 2, 2, {P::A, P::E}, L::HC},
      {'d', 1, 1, 2, {P::A, P::E}, L::QD}, {'e', 1, 2, 3, {P::A, P::E}, L::QD}, {'f', 1, 1, 1, {P::B}, L::HD},
      {'g', 1, 1, 1, {P::B}, L::HC},       {'h', 1, 2, 2, {P::B}, L::HC},       {'i', 1, 1, 1, {P::B}, L::QD},
      {'j', 1, 2, 2, {P::B}, L::QD},       {'k', 1, 2, 2, {P::C, P::E}, L::QD}, {'l', 1, 2, 1, {P::D}, L::HC},
  };
  return rows;
}

const TableRow& table_row(char letter) {
  for (const TableRow& r : table_rows())
    if (r.letter == letter) return r;
  throw std::out_of_range(std::string("no table row ") + letter);
}

bool matches_row(const DiagramAttributes& a, const TableRow& row, bool with_faces) {
  return a.v_orbits == row.v_orbits && a.e_orbits == row.e_orbits && (!with_faces || a.f_orbits == row.f_orbits) &&
         a.patterns == row.patterns && a.local_type == row.local_type;
}

Diagram symmetry_type_graph(const Topology& topo, const SymGroup& g, const Corneration& l) {
  for (int s : g.generators())
    if (!preserves(topo, g.element(s), l)) throw Error(ErrorCode::GroupDoesNotPreserveL, "group moves L");
  const std::vector<int> orbit = flag_orbits(g);
  const int k = orbit_count(orbit);
  Diagram d;
  d.shape.assign(k, Shape::Oval);
  for (int c = 0; c < 3; ++c) d.adj[c].assign(k, -1);
  std::vector<char> in_wedge(topo.count(CellKind::Wedge), 0);
  for (int w = 0; w < topo.count(CellKind::Wedge); ++w) in_wedge[w] = l.contains(wedge_corner(topo, w));
  for (int f = 0; f < topo.num_flags(); ++f) {
    const int x = orbit[f];
    if (in_wedge[topo.cell_of(CellKind::Wedge, f)]) d.shape[x] = Shape::Box;
    for (int c = 0; c < 3; ++c) d.adj[c][x] = orbit[topo.map().apply(c, f)];
  }
  return d;
}

namespace {

bool is_involution(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0 || p[i] >= static_cast<int>(p.size()) || p[p[i]] != static_cast<int>(i)) return false;
  return true;
}

int components(const Diagram& d, int c1, int c2) {
  std::vector<int> parent(d.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (int x = 0; x < d.size(); ++x)
    for (int c : {c1, c2}) parent[root(x)] = root(d.adj[c][x]);
  int n = 0;
  for (int x = 0; x < d.size(); ++x) n += root(x) == x;
  return n;
}

}  // namespace

DiagramCheck satisfies_diagram_constraints(const Diagram& d) {
  const int n = d.size();
  for (int c = 0; c < 3; ++c)
    if (static_cast<int>(d.adj[c].size()) != n || !is_involution(d.adj[c]))
      return {false, 1, "colour " + std::to_string(c) + " is not an involution on the nodes"};
  if (n != 2 && n != 4) return {false, 1, std::to_string(n) + " nodes"};
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < 3; ++c) parent[root(x)] = root(d.adj[c][x]);
  for (int x = 0; x < n; ++x)
    if (root(x) != root(0)) return {false, 1, "disconnected"};
  for (int x = 0; x < n; ++x) {
    if (d.adj[2][x] == x) return {false, 2, "2-semiedge at node " + std::to_string(x)};
    if (d.shape[d.adj[2][x]] == d.shape[x]) return {false, 2, "2-edge joins equal shapes"};
  }
  for (int x = 0; x < n; ++x)
    if (d.shape[d.adj[1][x]] != d.shape[x]) return {false, 3, "1-edge joins different shapes"};
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (d.shape[x] == Shape::Box && d.shape[y] == Shape::Box && d.adj[1][x] != y)
        return {false, 4, "boxes " + std::to_string(x) + " and " + std::to_string(y) + " are not 1-adjacent"};
  for (int x = 0; x < n; ++x)
    if (d.adj[0][d.adj[2][d.adj[0][d.adj[2][x]]]] != x) return {false, 5, "0-2 walk of length 4 is open"};
  return {};
}

DiagramAttributes diagram_attributes(const Diagram& d) {
  DiagramAttributes a;
  a.node_count = d.size();
  a.v_orbits = components(d, 1, 2);
  a.e_orbits = components(d, 0, 2);
  a.f_orbits = components(d, 0, 1);
  // walking a face moves by r0 r1 from wedge to wedge
  std::vector<char> seen(d.size(), 0);
  for (int x = 0; x < d.size(); ++x) {
    if (seen[x]) continue;
    std::vector<bool> word;
    for (int y = x; !seen[y]; y = d.adj[0][d.adj[1][y]]) {
      seen[y] = 1;
      word.push_back(d.shape[y] == Shape::Box);
    }
    a.patterns.insert(classify_pattern(word));
  }
  bool semiedge1 = false;
  for (int x = 0; x < d.size(); ++x) semiedge1 = semiedge1 || d.adj[1][x] == x;
  if (d.size() == 2) a.local_type = LocalType::HD;
  else if (d.size() == 4) a.local_type = semiedge1 ? LocalType::QD : LocalType::HC;
  return a;
}

namespace {

Diagram relabel(const Diagram& d, const std::vector<int>& to) {
  Diagram out;
  out.shape.assign(d.size(), Shape::Box);
  for (int c = 0; c < 3; ++c) out.adj[c].assign(d.size(), -1);
  for (int x = 0; x < d.size(); ++x) {
    out.shape[to[x]] = d.shape[x];
    for (int c = 0; c < 3; ++c) out.adj[c][to[x]] = to[d.adj[c][x]];
  }
  return out;
}

auto encode(const Diagram& d) {
  std::vector<int> code;
  for (Shape s : d.shape) code.push_back(s == Shape::Box ? 0 : 1);
  for (int c = 0; c < 3; ++c) code.insert(code.end(), d.adj[c].begin(), d.adj[c].end());
  return code;
}

}  // namespace

std::optional<std::vector<int>> diagram_isomorphic(const Diagram& a, const Diagram& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> to(a.size());
  std::iota(to.begin(), to.end(), 0);
  do {
    if (relabel(a, to) == b) return to;
  } while (std::next_permutation(to.begin(), to.end()));
  return std::nullopt;
}

Diagram canonical_form(const Diagram& d) {
  std::vector<int> to(d.size());
  std::iota(to.begin(), to.end(), 0);
  Diagram best = d;
  auto best_code = encode(d);
  do {
    Diagram r = relabel(d, to);
    auto code = encode(r);
    if (code < best_code) {
      best = std::move(r);
      best_code = std::move(code);
    }
  } while (std::next_permutation(to.begin(), to.end()));
  return best;
}

std::vector<Diagram> enumerate_valid_diagrams() {
  std::vector<Diagram> out;
  for (int n : {2, 4}) {
    // all involutions on n points
    std::vector<std::vector<int>> invs;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do
      if (is_involution(p)) invs.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    for (int mask = 0; mask < (1 << n); ++mask) {
      Diagram d;
      for (int x = 0; x < n; ++x) d.shape.push_back((mask >> x) & 1 ? Shape::Oval : Shape::Box);
      for (const auto& a0 : invs)
        for (const auto& a1 : invs)
          for (const auto& a2 : invs) {
            d.adj = {a0, a1, a2};
            if (!satisfies_diagram_constraints(d).ok) continue;
            Diagram c = canonical_form(d);
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
          }
    }
  }
  std::sort(out.begin(), out.end(), [](const Diagram& a, const Diagram& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return encode(a) < encode(b);
  });
  return out;
}

Classification classify_attributes(const DiagramAttributes& a) {
  Classification out;
  out.attributes = a;
  for (const TableRow& row : table_rows())
    if (matches_row(a, row, true)) {
      out.letter = row.letter;
      out.exact = true;
      return out;
    }
  for (const TableRow& row : table_rows())
    if (matches_row(a, row, false)) {
      out.letter = row.letter;
      out.faces_differ = true;
      return out;
    }
  return out;
}

Classification classify(const Topology& topo, const SymGroup& g, const Corneration& l) {
  if (l.width() != 1) throw Error(ErrorCode::NotWedgeCorneration, "classification needs a 1-uniform corneration");
  if (!transitive_on_corners(topo, g, l)) throw Error(ErrorCode::NotTransitive, "group is not transitive on L");
  Diagram d = symmetry_type_graph(topo, g, l);

  DiagramAttributes a;
  a.node_count = d.size();
  a.v_orbits = orbit_count(cell_orbits(g, topo, CellKind::Vertex));
  a.e_orbits = orbit_count(cell_orbits(g, topo, CellKind::Edge));
  a.f_orbits = orbit_count(cell_orbits(g, topo, CellKind::Face));
  for (FacePattern p : face_patterns(topo, l).per_face) a.patterns.insert(p);
  std::optional<LocalType> t;
  for (int v = 0; v < topo.count(CellKind::Vertex); ++v) {
    LocalType tv = local_action_group(topo, g, v).type;
    if (!t) t = tv;
    else if (*t != tv) t = LocalType::Other;
  }
  a.local_type = t.value_or(LocalType::Other);

  Classification out = classify_attributes(a);
  out.from_diagram = diagram_attributes(d);
  out.diagram = std::move(d);
  return out;
}

}  // namespace cornmap
