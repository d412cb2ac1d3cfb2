#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cornmap/symmetry.hpp"
#include "cornmap/topology.hpp"

namespace cornmap {

/// An unordered pair of distinct darts at one vertex. Darts are dense dart
/// indices (whose order agrees with canonical dart ids), stored ascending.
struct Corner {
  int vertex = -1;
  int a = -1;
  int b = -1;

  auto operator<=>(const Corner&) const = default;
};

Corner make_corner(const Topology& topo, int d1, int d2);  // throws InvalidCorner

/// Geometry of a corner inside its vertex rotation. For a non-straight corner
/// the interior is the run of wedges start, ..., start + width - 1 and its
/// darts sit at positions start and start + width.
struct CornerShape {
  int q = 0;
  int width = 0;
  int start = 0;
  bool straight = false;
};

CornerShape corner_shape(const Topology& topo, const Corner& c);
std::vector<int> interior_wedges(const Topology& topo, const Corner& c);           // empty when straight
std::pair<int, int> interior_boundary_wedges(const Topology& topo, const Corner& c);  // StraightCornerHasNoSide
std::pair<int, int> exterior_boundary_wedges(const Topology& topo, const Corner& c);  // StraightCornerHasNoSide
/// The wedges containing either dart (up to four).
std::vector<int> boundary_wedges(const Topology& topo, const Corner& c);
/// The corner spanned by a wedge.
Corner wedge_corner(const Topology& topo, int wedge);
/// Image of a corner under a map symmetry.
Corner corner_image(const Topology& topo, const Perm& g, const Corner& c);

/// All corners of width exactly j, sorted.
std::vector<Corner> all_j_corners(const Topology& topo, int j);

enum class Alignment { Convex, Inflection, NotAligned };
const char* to_string(Alignment a) noexcept;
Alignment alignment(const Topology& topo, const Corner& c1, const Corner& c2);

/// A set of corners covering every dart exactly once, kept sorted.
class Corneration {
 public:
  Corneration() = default;
  /// Throws InvalidCorner / CornerationMismatch unless the corners form a corneration.
  Corneration(const Topology& topo, std::vector<Corner> corners);

  const std::vector<Corner>& corners() const noexcept { return corners_; }
  int size() const noexcept { return static_cast<int>(corners_.size()); }
  /// Corner index (into corners()) containing a dart.
  int corner_of_dart(int dart) const { return by_dart_[dart]; }
  /// The other dart of the corner containing `dart`.
  int mate(int dart) const;
  /// Common width, or nullopt when widths differ ("mixed").
  std::optional<int> width() const noexcept { return width_; }
  bool contains(const Corner& c) const;

  bool operator==(const Corneration& o) const { return corners_ == o.corners_; }
  auto operator<=>(const Corneration& o) const { return corners_ <=> o.corners_; }

 private:
  std::vector<Corner> corners_;
  std::vector<int> by_dart_;
  std::optional<int> width_;
};

struct CoverReport {
  bool ok = false;
  int witness_dart = -1;  // a dart covered zero or several times
  std::string message;
};
CoverReport is_corneration(const Topology& topo, const std::vector<Corner>& corners);

/// A closed walk with distinct edges, written as its leaving darts: d_i leaves
/// v_i along edge e_i and d_{i+1} leaves the far end of e_i.
struct Circuit {
  std::vector<int> darts;
  std::vector<int> edges;
  bool operator==(const Circuit&) const = default;
};
using CircuitDecomposition = std::vector<Circuit>;

/// Circuits traced by following corners; each is given in the orientation
/// that contains its smallest dart, starting there. Sorted by first dart.
CircuitDecomposition circuits_of(const Topology& topo, const Corneration& l);
Corneration corneration_of(const Topology& topo, const CircuitDecomposition& c);
/// Brings a circuit into the canonical orientation and rotation used by circuits_of.
Circuit canonical_circuit(const Topology& topo, const Circuit& c);

/// All j-corners not in L (L uniform with j < q/2).
std::vector<Corner> j_complement(const Topology& topo, const Corneration& l);

enum class LocalClass { StandardOdd, StandardEven, Other };
const char* to_string(LocalClass c) noexcept;

struct LocalCorneration {
  int vertex = -1;
  int width = 0;
  std::vector<int> starts;  // start positions of L's corners at the vertex, ascending
  LocalClass cls = LocalClass::Other;
  bool straight = false;
};
LocalCorneration local_corneration(const Topology& topo, const Corneration& l, int vertex);

enum class FacePattern { A, B, C, D, E, Other };
const char* to_string(FacePattern p) noexcept;
/// Classifies a cyclic in/out word (true = in-wedge).
FacePattern classify_pattern(const std::vector<bool>& word);

struct FacePatternReport {
  std::vector<FacePattern> per_face;
  int configuration = 0;  // 1..4, or 0 for none of them
};
/// Throws NotWedgeCorneration unless L is 1-uniform.
FacePatternReport face_patterns(const Topology& topo, const Corneration& l);

/// Wedges of the faces coloured like the face of flag 0 (face-bipartite maps).
Corneration green_wedge_corneration(const Topology& topo);
/// In every triangle, the two wedges at the edge shared with a non-triangle.
Corneration antiprism_corneration(const Topology& topo);
/// The alternating-rows corneration of a torus grid with an even number of rows.
Corneration torus_rows_corneration(const Topology& topo, int rows, int cols);

/// Elements of G mapping L onto itself.
SymGroup setwise_stabilizer(const Topology& topo, const SymGroup& g, const Corneration& l);
bool preserves(const Topology& topo, const Perm& g, const Corneration& l);
/// Orbit labels of G on the corners of L.
std::vector<int> corner_orbits(const Topology& topo, const SymGroup& g, const Corneration& l);
bool transitive_on_corners(const Topology& topo, const SymGroup& g, const Corneration& l);
bool transitive_on_darts(const Topology& topo, const SymGroup& g);

}  // namespace cornmap
