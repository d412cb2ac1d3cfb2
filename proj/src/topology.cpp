#include "cornmap/topology.hpp"

#include <algorithm>
#include <numeric>

namespace cornmap {

const char* to_string(CellKind kind) noexcept {
  switch (kind) {
    case CellKind::Vertex: return "vertex";
    case CellKind::Edge: return "edge";
    case CellKind::Face: return "face";
    case CellKind::Dart: return "dart";
    case CellKind::Wedge: return "wedge";
  }
  return "?";
}

namespace {

std::vector<int> generators_of(CellKind kind) {
  switch (kind) {
    case CellKind::Vertex: return {1, 2};
    case CellKind::Edge: return {0, 2};
    case CellKind::Face: return {0, 1};
    case CellKind::Dart: return {2};
    case CellKind::Wedge: return {1};
  }
  return {};
}

}  // namespace

Topology::Topology(FlagMap map) : map_(std::move(map)) {
  require_valid(map_);
  const int n = map_.size();

  // Scanning flags in increasing order numbers each orbit at its smallest flag.
  for (CellKind kind : kAllCellKinds) {
    const int k = idx(kind);
    const std::vector<int> gens = generators_of(kind);
    std::vector<int>& owner = cell_of_[k];
    owner.assign(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < n; ++s) {
      if (owner[s] >= 0) continue;
      const int c = static_cast<int>(orbits.size());
      std::vector<int> orbit{s};
      owner[s] = c;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (int g : gens) {
          int t = map_.apply(g, orbit[i]);
          if (owner[t] < 0) {
            owner[t] = c;
            orbit.push_back(t);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      first_flag_[k].push_back(s);
      orbits.push_back(std::move(orbit));
    }
    orbit_offset_[k].assign(1, 0);
    for (const auto& o : orbits) {
      orbit_flags_[k].insert(orbit_flags_[k].end(), o.begin(), o.end());
      orbit_offset_[k].push_back(static_cast<int>(orbit_flags_[k].size()));
    }
  }

  const int nv = count(CellKind::Vertex);
  const int nd = count(CellKind::Dart);
  const int nw = count(CellKind::Wedge);
  dart_vertex_.assign(nd, -1);
  dart_position_.assign(nd, -1);
  dart_flags_.assign(nd, {-1, -1});
  wedge_vertex_.assign(nw, -1);
  wedge_position_.assign(nw, -1);
  rot_offset_.assign(1, 0);
  for (int v = 0; v < nv; ++v) {
    const int size = static_cast<int>(flags_of(CellKind::Vertex, v).size());
    const int q = size / 2;
    std::vector<int> seq(size);
    seq[0] = id(CellKind::Vertex, v);
    for (int i = 1; i < size; ++i) seq[i] = map_.apply(i % 2 == 1 ? 1 : 2, seq[i - 1]);
    for (int k = 0; k < q; ++k) {
      const int d = cell_of(CellKind::Dart, seq[2 * k]);
      const int w = cell_of(CellKind::Wedge, seq[2 * k]);
      rot_darts_.push_back(d);
      rot_wedges_.push_back(w);
      dart_vertex_[d] = v;
      dart_position_[d] = k;
      dart_flags_[d] = {seq[2 * k], seq[(2 * k + size - 1) % size]};
      wedge_vertex_[w] = v;
      wedge_position_[w] = k;
    }
    rot_flags_.insert(rot_flags_.end(), seq.begin(), seq.end());
    rot_offset_.push_back(static_cast<int>(rot_darts_.size()));
  }
  for (int v = 0; v < nv; ++v) {
    const int q = valence(v);
    if (v == 0) uniform_valence_ = q;
    else if (uniform_valence_ && *uniform_valence_ != q) uniform_valence_.reset();
  }

  opposite_dart_.assign(nd, -1);
  for (int d = 0; d < nd; ++d) opposite_dart_[d] = cell_of(CellKind::Dart, map_.apply(0, id(CellKind::Dart, d)));
  const int ne = count(CellKind::Edge);
  edge_darts_.assign(ne, {-1, -1});
  for (int e = 0; e < ne; ++e) {
    int d = cell_of(CellKind::Dart, id(CellKind::Edge, e));
    edge_darts_[e] = std::minmax(d, opposite_dart_[d]);
  }

  // Face boundary walk: r0 r1 moves a flag to the next wedge of the same face.
  const int nf = count(CellKind::Face);
  face_offset_.assign(1, 0);
  for (int f = 0; f < nf; ++f) {
    const int p = static_cast<int>(flags_of(CellKind::Face, f).size()) / 2;
    int g = id(CellKind::Face, f);
    for (int i = 0; i < p; ++i) {
      face_wedges_.push_back(cell_of(CellKind::Wedge, g));
      g = map_.apply(0, map_.apply(1, g));
    }
    face_offset_.push_back(static_cast<int>(face_wedges_.size()));
  }
}

std::optional<int> Topology::index_of(CellKind kind, int cell_id) const {
  if (cell_id < 0 || cell_id >= num_flags()) return std::nullopt;
  const int c = cell_of(kind, cell_id);
  if (id(kind, c) != cell_id) return std::nullopt;
  return c;
}

std::span<const int> Topology::flags_of(CellKind kind, int index) const {
  const int k = idx(kind);
  const int* base = orbit_flags_[k].data();
  return {base + orbit_offset_[k][index], base + orbit_offset_[k][index + 1]};
}

std::span<const int> Topology::rotation(int vertex) const {
  return {rot_darts_.data() + rot_offset_[vertex], rot_darts_.data() + rot_offset_[vertex + 1]};
}

std::span<const int> Topology::rotation_wedges(int vertex) const {
  return {rot_wedges_.data() + rot_offset_[vertex], rot_wedges_.data() + rot_offset_[vertex + 1]};
}

std::span<const int> Topology::rotation_flags(int vertex) const {
  return {rot_flags_.data() + 2 * rot_offset_[vertex], rot_flags_.data() + 2 * rot_offset_[vertex + 1]};
}

int Topology::dart_at(int vertex, int position) const {
  const int q = valence(vertex);
  return rotation(vertex)[((position % q) + q) % q];
}

int Topology::dart_flag(int dart, bool forward) const { return dart_flags_[dart][forward ? 0 : 1]; }

std::span<const int> Topology::face_wedges(int face) const {
  return {face_wedges_.data() + face_offset_[face], face_wedges_.data() + face_offset_[face + 1]};
}

std::pair<int, int> Topology::edge_vertices(int edge) const {
  auto [a, b] = edge_darts_[edge];
  return std::minmax(dart_vertex_[a], dart_vertex_[b]);
}

std::vector<Cell> cells(const Topology& topo, CellKind kind) {
  std::vector<Cell> out;
  out.reserve(topo.count(kind));
  for (int c = 0; c < topo.count(kind); ++c) {
    auto flags = topo.flags_of(kind, c);
    out.push_back(Cell{kind, topo.id(kind, c), std::vector<int>(flags.begin(), flags.end())});
  }
  return out;
}

Skeleton skeleton(const Topology& topo) {
  Skeleton s;
  for (int v = 0; v < topo.count(CellKind::Vertex); ++v) s.vertices.push_back(topo.id(CellKind::Vertex, v));
  for (int e = 0; e < topo.count(CellKind::Edge); ++e) {
    s.edges.push_back(topo.id(CellKind::Edge, e));
    auto [a, b] = topo.edge_vertices(e);
    s.endpoints.emplace_back(topo.id(CellKind::Vertex, a), topo.id(CellKind::Vertex, b));
  }
  return s;
}

SurfaceInfo euler_and_genus(const Topology& topo) {
  SurfaceInfo info;
  info.euler = topo.count(CellKind::Vertex) - topo.count(CellKind::Edge) + topo.count(CellKind::Face);
  const FlagMap& m = topo.map();
  std::vector<int> side(m.size(), -1);
  side[0] = 0;
  std::vector<int> stack{0};
  info.orientable = true;
  while (!stack.empty() && info.orientable) {
    int f = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      int g = m.apply(i, f);
      if (side[g] < 0) {
        side[g] = 1 - side[f];
        stack.push_back(g);
      } else if (side[g] == side[f]) {
        info.orientable = false;
        break;
      }
    }
  }
  info.genus = info.orientable ? (2 - info.euler) / 2 : 2 - info.euler;
  return info;
}

namespace {

// 2-colours the cells of `kind`, where `across` moves a flag into the adjacent cell.
std::optional<std::vector<int>> two_colour(const Topology& topo, CellKind kind, int across) {
  const int n = topo.count(kind);
  std::vector<int> colour(n, -1);
  colour[topo.cell_of(kind, 0)] = 0;
  std::vector<int> stack{topo.cell_of(kind, 0)};
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int f : topo.flags_of(kind, c)) {
      int d = topo.cell_of(kind, topo.map().apply(across, f));
      if (colour[d] < 0) {
        colour[d] = 1 - colour[c];
        stack.push_back(d);
      } else if (colour[d] == colour[c]) {
        return std::nullopt;
      }
    }
  }
  return colour;
}

}  // namespace

std::optional<std::vector<int>> face_bipartite(const Topology& topo) { return two_colour(topo, CellKind::Face, 2); }

std::optional<std::vector<int>> vertex_bipartite(const Topology& topo) {
  return two_colour(topo, CellKind::Vertex, 0);
}

int order_mod(long long a, int n) {
  long long g = std::gcd(a < 0 ? -a : a, static_cast<long long>(n));
  return static_cast<int>(n / g);
}

std::vector<int> rotation_at_vertex(const Topology& topo, int vertex) {
  std::vector<int> out;
  for (int d : topo.rotation(vertex)) out.push_back(topo.id(CellKind::Dart, d));
  return out;
}

}  // namespace cornmap
