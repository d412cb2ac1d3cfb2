#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cornmap/flag_map.hpp"

namespace cornmap {

enum class CellKind { Vertex = 0, Edge = 1, Face = 2, Dart = 3, Wedge = 4 };

inline constexpr std::array<CellKind, 5> kAllCellKinds{CellKind::Vertex, CellKind::Edge, CellKind::Face,
                                                       CellKind::Dart, CellKind::Wedge};

const char* to_string(CellKind kind) noexcept;

/// An incidence cell as an orbit of flags. The id is the smallest flag in the
/// orbit, which is stable and independent of traversal order.
struct Cell {
  CellKind kind;
  int id;
  std::vector<int> flags;  // ascending
};

struct Skeleton {
  std::vector<int> vertices;                     // vertex ids
  std::vector<int> edges;                        // edge ids
  std::vector<std::pair<int, int>> endpoints;    // per edge, vertex ids (first < second)
};

struct SurfaceInfo {
  int euler = 0;
  bool orientable = false;
  int genus = 0;  // orientable genus, or number of cross-caps when non-orientable
};

/// The cell structure of a validated flag map.
///
/// Cells of each kind are numbered densely (the "index") in increasing order of
/// their canonical id, so index order and id order agree. Every vertex carries
/// its rotation: darts 0..q-1 in cyclic order starting at the vertex's smallest
/// flag and moving by r1 first, together with the wedge between consecutive
/// darts k and k+1.
class Topology {
 public:
  explicit Topology(FlagMap map);  // throws Error if the map is invalid

  const FlagMap& map() const noexcept { return map_; }
  int num_flags() const noexcept { return map_.size(); }

  int count(CellKind kind) const { return static_cast<int>(first_flag_[idx(kind)].size()); }
  int cell_of(CellKind kind, int flag) const { return cell_of_[idx(kind)][flag]; }
  int id(CellKind kind, int index) const { return first_flag_[idx(kind)][index]; }
  std::optional<int> index_of(CellKind kind, int id) const;
  std::span<const int> flags_of(CellKind kind, int index) const;

  int valence(int vertex) const { return static_cast<int>(rotation(vertex).size()); }
  std::optional<int> uniform_valence() const { return uniform_valence_; }
  int face_length(int face) const { return static_cast<int>(face_wedges(face).size()); }

  /// Darts around a vertex in cyclic order.
  std::span<const int> rotation(int vertex) const;
  /// wedge k joins rotation darts k and k+1.
  std::span<const int> rotation_wedges(int vertex) const;
  /// The 2q flags around a vertex in traversal order; flag 2k lies in dart k
  /// and faces dart k+1, flag 2k+1 lies in dart k+1 and faces dart k.
  std::span<const int> rotation_flags(int vertex) const;

  int dart_vertex(int dart) const { return dart_vertex_[dart]; }
  int dart_edge(int dart) const { return cell_of(CellKind::Edge, id(CellKind::Dart, dart)); }
  int dart_position(int dart) const { return dart_position_[dart]; }
  /// The dart at the other end of the same edge.
  int opposite_dart(int dart) const { return opposite_dart_[dart]; }
  int dart_at(int vertex, int position) const;
  /// Flag of `dart` that faces rotation position +1 (forward) or -1 (backward).
  int dart_flag(int dart, bool forward) const;

  int wedge_vertex(int wedge) const { return wedge_vertex_[wedge]; }
  int wedge_position(int wedge) const { return wedge_position_[wedge]; }
  int wedge_face(int wedge) const { return cell_of(CellKind::Face, id(CellKind::Wedge, wedge)); }

  /// Wedges of a face in boundary-walk order.
  std::span<const int> face_wedges(int face) const;

  /// The two darts of an edge, ascending.
  std::pair<int, int> edge_darts(int edge) const { return edge_darts_[edge]; }
  std::pair<int, int> edge_vertices(int edge) const;

 private:
  static int idx(CellKind kind) { return static_cast<int>(kind); }

  FlagMap map_;
  std::array<std::vector<int>, 5> cell_of_;
  std::array<std::vector<int>, 5> first_flag_;
  std::array<std::vector<int>, 5> orbit_offset_;
  std::array<std::vector<int>, 5> orbit_flags_;

  std::vector<int> rot_offset_;
  std::vector<int> rot_darts_;
  std::vector<int> rot_wedges_;
  std::vector<int> rot_flags_;
  std::vector<int> dart_vertex_, dart_position_, opposite_dart_;
  std::vector<std::array<int, 2>> dart_flags_;  // {forward, backward}
  std::vector<int> wedge_vertex_, wedge_position_;
  std::vector<int> face_offset_, face_wedges_;
  std::vector<std::pair<int, int>> edge_darts_;
  std::optional<int> uniform_valence_;
};

std::vector<Cell> cells(const Topology& topo, CellKind kind);
Skeleton skeleton(const Topology& topo);
SurfaceInfo euler_and_genus(const Topology& topo);

/// Proper 2-colourings of the face-adjacency and vertex-adjacency graphs, indexed
/// by face / vertex index, with the cell containing flag 0 coloured 0.
std::optional<std::vector<int>> face_bipartite(const Topology& topo);
std::optional<std::vector<int>> vertex_bipartite(const Topology& topo);

/// Additive order of a in Z_n, i.e. n / gcd(n, a).
int order_mod(long long a, int n);

/// Canonical rotation at a vertex, as canonical dart ids.
std::vector<int> rotation_at_vertex(const Topology& topo, int vertex);

}  // namespace cornmap
