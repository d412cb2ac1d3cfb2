#include "cornmap/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cornmap {

namespace {

struct CoverSearch {
  const std::vector<std::vector<int>>& rows;
  std::vector<std::vector<int>> rows_of_col;
  std::vector<char> col_used;
  std::vector<int> chosen;
  std::vector<std::vector<int>> solutions;
  std::size_t limit;

  bool row_free(int r) const {
    for (int c : rows[r])
      if (col_used[c]) return false;
    return true;
  }

  void run() {
    if (solutions.size() >= limit) return;
    int best = -1;
    std::size_t best_count = SIZE_MAX;
    for (int c = 0; c < static_cast<int>(col_used.size()); ++c) {
      if (col_used[c]) continue;
      std::size_t k = 0;
      for (int r : rows_of_col[c]) k += row_free(r);
      if (k < best_count) {
        best = c;
        best_count = k;
      }
    }
    if (best < 0) {
      std::vector<int> sol = chosen;
      std::sort(sol.begin(), sol.end());
      solutions.push_back(std::move(sol));
      return;
    }
    for (int r : rows_of_col[best]) {
      if (!row_free(r)) continue;
      for (int c : rows[r]) col_used[c] = 1;
      chosen.push_back(r);
      run();
      chosen.pop_back();
      for (int c : rows[r]) col_used[c] = 0;
      if (solutions.size() >= limit) return;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> exact_cover(int n_columns, const std::vector<std::vector<int>>& rows,
                                          std::size_t limit) {
  CoverSearch s{rows, std::vector<std::vector<int>>(n_columns), std::vector<char>(n_columns, 0), {}, {}, limit};
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c : rows[r]) s.rows_of_col[c].push_back(static_cast<int>(r));
  s.run();
  return s.solutions;
}

std::vector<Corneration> enumerate_invariant_cornerations(const Topology& topo, const SymGroup& h, int j,
                                                          std::size_t limit) {
  if (!is_subgroup_of_aut(topo, h)) throw Error(ErrorCode::GroupNotSubgroup, "group is not a group of map symmetries");
  if (!topo.uniform_valence()) throw Error(ErrorCode::NonUniformValence, "enumeration needs uniform valence");
  const std::vector<Corner> corners = all_j_corners(topo, j);
  const int nc = static_cast<int>(corners.size());

  // rows: H-orbits of j-corners
  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s : h.generators())
    for (int i = 0; i < nc; ++i) {
      Corner img = corner_image(topo, h.element(s), corners[i]);
      int k = static_cast<int>(std::lower_bound(corners.begin(), corners.end(), img) - corners.begin());
      int a = root(i), b = root(k);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> orbit_members;
  std::vector<int> orbit_of_root(nc, -1);
  for (int i = 0; i < nc; ++i) {
    int r = root(i);
    if (orbit_of_root[r] < 0) {
      orbit_of_root[r] = static_cast<int>(orbit_members.size());
      orbit_members.emplace_back();
    }
    orbit_members[orbit_of_root[r]].push_back(i);
  }

  // columns: H-orbits of darts; an orbit of corners covering some dart twice
  // can never be part of a corneration
  const std::vector<int> dart_orbit = cell_orbits(h, topo, CellKind::Dart);
  const int ncols = orbit_count(dart_orbit);
  std::vector<std::vector<int>> rows;
  std::vector<int> row_orbit;
  std::vector<int> cover(topo.count(CellKind::Dart), 0);
  for (std::size_t o = 0; o < orbit_members.size(); ++o) {
    std::fill(cover.begin(), cover.end(), 0);
    bool simple = true;
    std::set<int> cols;
    for (int i : orbit_members[o])
      for (int d : {corners[i].a, corners[i].b}) {
        if (++cover[d] > 1) simple = false;
        cols.insert(dart_orbit[d]);
      }
    if (!simple) continue;
    rows.emplace_back(cols.begin(), cols.end());
    row_orbit.push_back(static_cast<int>(o));
  }

  std::vector<Corneration> out;
  for (const auto& sol : exact_cover(ncols, rows, limit)) {
    std::vector<Corner> chosen;
    for (int r : sol)
      for (int i : orbit_members[row_orbit[r]]) chosen.push_back(corners[i]);
    out.emplace_back(topo, std::move(chosen));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TransitiveCorneration> enumerate_transitive_cornerations(const Topology& topo, const SymGroup& aut, int j,
                                                                     int index_bound, int group_bound) {
  std::set<Corneration> found;
  for (const SymGroup& h : subgroups_up_to_index(aut, index_bound, group_bound))
    for (Corneration& l : enumerate_invariant_cornerations(topo, h, j)) found.insert(std::move(l));
  std::vector<TransitiveCorneration> out;
  for (const Corneration& l : found) {
    TransitiveCorneration t{l, setwise_stabilizer(topo, aut, l)};
    t.transitive = transitive_on_corners(topo, t.aut, l);
    t.symmetric = transitive_on_darts(topo, t.aut);
    out.push_back(std::move(t));
  }
  return out;
}

SymmetricPair symmetric_cornerations_from_coloring(const Topology& topo, const SymGroup& aut, int j,
                                                   int group_bound) {
  const auto q = topo.uniform_valence();
  if (!q) throw Error(ErrorCode::NonUniformValence, "needs uniform valence");
  if (j % 2 == 0 || 2 * j >= *q)
    throw Error(ErrorCode::WidthOutOfRange, "needs odd j < q/2 (j = " + std::to_string(j) + ")");

  SymmetricPair out;
  if (auto g = face_reflexive_group(topo, aut, group_bound)) {
    out.group = std::move(*g);
  } else {
    // Aut(P(M)) and Aut(M) are the same flag permutations
    Topology ptopo(petrie(topo.map()));
    auto gp = face_reflexive_group(ptopo, aut, group_bound);
    if (!gp) throw Error(ErrorCode::NoHalfReflexiveGroup, "no half-reflexive subgroup for the map or its Petrie dual");
    out.on_petrie = true;
    out.group = std::move(*gp);
  }

  const std::vector<int> colour = flag_orbits(out.group);
  std::vector<Corner> red, green;
  for (const Corner& c : all_j_corners(topo, j)) {
    auto [w1, w2] = interior_boundary_wedges(topo, c);
    const int c1 = colour[topo.id(CellKind::Wedge, w1)];
    const int c2 = colour[topo.id(CellKind::Wedge, w2)];
    if (c1 != c2) continue;
    (c1 == 0 ? red : green).push_back(c);
  }
  out.red = Corneration(topo, std::move(red));
  out.green = Corneration(topo, std::move(green));
  return out;
}

Corneration transfer_petrie(const Topology& petrie_topo, const Corneration& l) {
  return Corneration(petrie_topo, l.corners());
}

std::vector<Corneration> transfer_hole(const Topology& topo, const Corneration& l, int j,
                                       const OperatorResult& holed, const std::vector<Topology>& components) {
  if (l.width() != j) throw Error(ErrorCode::WidthMismatch, "corneration width differs from the hole order");
  std::vector<std::vector<Corner>> parts(components.size());
  for (const Corner& c : l.corners()) {
    CornerShape s = corner_shape(topo, c);
    const int first = topo.dart_at(c.vertex, s.start);
    const int last = topo.dart_at(c.vertex, s.start + s.width);
    auto [comp, f1] = holed.flag_correspondence[topo.dart_flag(first, true)];
    auto [comp2, f2] = holed.flag_correspondence[topo.dart_flag(last, false)];
    if (comp != comp2) throw Error(ErrorCode::WidthMismatch, "corner split across components");
    const Topology& t = components[comp];
    parts[comp].push_back(make_corner(t, t.cell_of(CellKind::Dart, f1), t.cell_of(CellKind::Dart, f2)));
  }
  std::vector<Corneration> out;
  for (std::size_t i = 0; i < components.size(); ++i) out.emplace_back(components[i], std::move(parts[i]));
  return out;
}

}  // namespace cornmap
