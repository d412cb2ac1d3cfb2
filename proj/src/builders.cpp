#include "cornmap/builders.hpp"

#include <map>
#include <utility>

#include "cornmap/topology.hpp"

namespace cornmap {

namespace {

[[noreturn]] void inconsistent(const std::string& what) { throw Error(ErrorCode::InconsistentRotation, what); }

}  // namespace

FlagMap from_rotation_system(const std::vector<std::vector<int>>& rotations, const std::vector<bool>& twisted,
                             std::string name) {
  if (rotations.empty()) inconsistent("no vertices");
  int n_darts = 0;
  int max_edge = -1;
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    if (rotations[v].empty()) inconsistent("vertex " + std::to_string(v) + " has no darts");
    n_darts += static_cast<int>(rotations[v].size());
    for (int e : rotations[v]) {
      if (e < 0) inconsistent("negative edge label");
      max_edge = std::max(max_edge, e);
    }
  }
  const int n_edges = max_edge + 1;
  if (2 * n_edges != n_darts) inconsistent("edge labels are not dense or do not occur exactly twice");
  if (!twisted.empty() && static_cast<int>(twisted.size()) != n_edges) inconsistent("twist list has wrong length");

  // ends[e] = the (vertex, position) pairs holding edge e
  std::vector<std::vector<std::pair<int, int>>> ends(n_edges);
  std::vector<int> offset(rotations.size() + 1, 0);
  for (std::size_t v = 0; v < rotations.size(); ++v) {
    const auto& rot = rotations[v];
    offset[v + 1] = offset[v] + 2 * static_cast<int>(rot.size());
    for (std::size_t k = 0; k < rot.size(); ++k) ends[rot[k]].emplace_back(static_cast<int>(v), static_cast<int>(k));
  }
  for (int e = 0; e < n_edges; ++e) {
    if (ends[e].size() != 2) inconsistent("edge " + std::to_string(e) + " does not have exactly two darts");
    if (ends[e][0].first == ends[e][1].first) inconsistent("edge " + std::to_string(e) + " is a loop");
  }

  const int n = 2 * n_darts;
  Perm r0(n), r1(n), r2(n);
  auto flag = [&](int v, int k, int s) {
    const int q = static_cast<int>(rotations[v].size());
    return offset[v] + 2 * (((k % q) + q) % q) + s;
  };
  for (std::size_t vi = 0; vi < rotations.size(); ++vi) {
    const int v = static_cast<int>(vi);
    const int q = static_cast<int>(rotations[v].size());
    for (int k = 0; k < q; ++k) {
      r2[flag(v, k, 0)] = flag(v, k, 1);
      r2[flag(v, k, 1)] = flag(v, k, 0);
      r1[flag(v, k, 0)] = flag(v, k + 1, 1);
      r1[flag(v, k + 1, 1)] = flag(v, k, 0);
    }
  }
  for (int e = 0; e < n_edges; ++e) {
    auto [v, k] = ends[e][0];
    auto [w, m] = ends[e][1];
    const bool twist = !twisted.empty() && twisted[e];
    for (int s = 0; s < 2; ++s) {
      const int t = twist ? s : 1 - s;
      r0[flag(v, k, s)] = flag(w, m, t);
      r0[flag(w, m, t)] = flag(v, k, s);
    }
  }
  FlagMap map(std::move(r0), std::move(r1), std::move(r2), std::move(name));
  require_valid(map);
  return map;
}

FlagMap from_neighbour_rotation(const std::vector<std::vector<int>>& neighbours, std::string name) {
  std::map<std::pair<int, int>, int> label;
  std::vector<std::vector<int>> rotations(neighbours.size());
  for (std::size_t v = 0; v < neighbours.size(); ++v) {
    for (int w : neighbours[v]) {
      if (w < 0 || w >= static_cast<int>(neighbours.size())) inconsistent("neighbour out of range");
      const std::pair<int, int> key = std::minmax(static_cast<int>(v), w);
      auto [it, fresh] = label.try_emplace(key, static_cast<int>(label.size()));
      (void)fresh;
      rotations[v].push_back(it->second);
    }
  }
  return from_rotation_system(rotations, {}, std::move(name));
}

FlagMap build_torus_grid(int rows, int cols) {
  if (rows < 2 || cols < 2) throw Error(ErrorCode::DegenerateParameters, "torus grid needs rows, cols >= 2");
  auto h = [&](int x, int i) { return x * cols + ((i % cols) + cols) % cols; };
  auto vert = [&](int x, int i) { return rows * cols + (((x % rows) + rows) % rows) * cols + i; };
  std::vector<std::vector<int>> rot(rows * cols);
  for (int x = 0; x < rows; ++x)
    for (int i = 0; i < cols; ++i) rot[x * cols + i] = {h(x, i), vert(x, i), h(x, i - 1), vert(x - 1, i)};
  return from_rotation_system(rot, {}, "torus_" + std::to_string(rows) + "x" + std::to_string(cols));
}

FlagMap build_antiprism(int n) {
  if (n < 3) throw Error(ErrorCode::DegenerateParameters, "antiprism needs n >= 3");
  auto t = [&](int i) { return ((i % n) + n) % n; };
  auto b = [&](int i) { return n + ((i % n) + n) % n; };
  const std::string name = "antiprism_" + std::to_string(n);
  for (int orientation = 0; orientation < 2; ++orientation) {
    std::vector<std::vector<int>> nb(2 * n);
    for (int i = 0; i < n; ++i) {
      nb[t(i)] = {t(i - 1), t(i + 1), b(i), b(i - 1)};
      nb[b(i)] = {b(i + 1), b(i - 1), t(i), t(i + 1)};
      if (orientation == 1) std::swap(nb[b(i)][1], nb[b(i)][3]);
    }
    FlagMap m = from_neighbour_rotation(nb, name);
    if (Topology(m).count(CellKind::Face) == 2 * n + 2) return m;
  }
  throw Error(ErrorCode::InconsistentRotation, "antiprism rotation does not close up");
}

FlagMap build_cube() {
  std::vector<std::vector<int>> nb(8);
  for (int v = 0; v < 8; ++v) {
    const int parity = __builtin_popcount(v) % 2;
    nb[v] = parity == 0 ? std::vector<int>{v ^ 1, v ^ 2, v ^ 4} : std::vector<int>{v ^ 1, v ^ 4, v ^ 2};
  }
  return from_neighbour_rotation(nb, "cube");
}

FlagMap build_tetrahedron() { return from_neighbour_rotation({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}, "tetrahedron"); }

FlagMap build_dipole(int m) {
  if (m < 2) throw Error(ErrorCode::DegenerateParameters, "dipole needs at least two edges");
  std::vector<int> fwd(m), back(m);
  for (int e = 0; e < m; ++e) {
    fwd[e] = e;
    back[e] = m - 1 - e;
  }
  return from_rotation_system({fwd, back}, {}, "dipole_" + std::to_string(m));
}

FlagMap build_theta() { return build_dipole(3).renamed("theta"); }

FlagMap build_triangular_torus(int rows, int cols) {
  if (rows < 3 || cols < 3) throw Error(ErrorCode::DegenerateParameters, "triangular torus needs rows, cols >= 3");
  auto id = [&](int x, int i) { return (((x % rows) + rows) % rows) * cols + ((i % cols) + cols) % cols; };
  static const int dir[6][2] = {{0, 1}, {1, 1}, {1, 0}, {0, -1}, {-1, -1}, {-1, 0}};
  std::vector<std::vector<int>> nb(rows * cols);
  for (int x = 0; x < rows; ++x)
    for (int i = 0; i < cols; ++i)
      for (const auto& d : dir) nb[id(x, i)].push_back(id(x + d[0], i + d[1]));
  return from_neighbour_rotation(nb, "tri_torus_" + std::to_string(rows) + "x" + std::to_string(cols));
}

FlagMap build_asymmetric() {
  return from_neighbour_rotation({{1, 2, 4, 3}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}},
                                 "asymmetric_k5");
}

}  // namespace cornmap
