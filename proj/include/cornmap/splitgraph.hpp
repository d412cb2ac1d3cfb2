#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cornmap/corneration.hpp"
#include "cornmap/symmetry.hpp"

namespace cornmap {

/// An edge of a split graph. An edge produced both ways is kept once with
/// both origins recorded.
struct SplitEdge {
  int u = -1;  // indices into SplitGraph::vertices, u < v
  int v = -1;
  std::vector<int> old_from;     // map edges shared by the two corners
  std::vector<Corner> new_from;  // K-corners inducing the pair

  bool is_old() const noexcept { return !old_from.empty(); }
  bool is_new() const noexcept { return !new_from.empty(); }
};

struct SplitGraph {
  std::vector<Corner> vertices;  // the corners of L, in L's order
  std::vector<SplitEdge> edges;  // sorted by (u, v)

  int size() const noexcept { return static_cast<int>(vertices.size()); }
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  /// The common degree, or nullopt if the graph is not regular.
  std::optional<int> valence() const;
};

/// The split graph S(L, K). Throws KIntersectsL when K meets L.
SplitGraph split(const Topology& topo, const Corneration& l, const std::vector<Corner>& k);

enum class SplitKind { A, B, Ci, Cx };
const char* to_string(SplitKind k) noexcept;

/// The corner set K of each construction (sorted, without duplicates).
/// Throws WidthOutOfRange outside each construction's range of j.
std::vector<Corner> split_corners(const Topology& topo, const Corneration& l, SplitKind kind);
SplitGraph build_split(const Topology& topo, const Corneration& l, SplitKind kind);
SplitGraph graph_A(const Topology& topo, const Corneration& l);
SplitGraph graph_B(const Topology& topo, const Corneration& l);
SplitGraph graph_Ci(const Topology& topo, const Corneration& l);
SplitGraph graph_Cx(const Topology& topo, const Corneration& l);

struct LocalConnectivity {
  bool ok = true;
  int witness_vertex = -1;  // first map vertex whose corners induce a disconnected subgraph
};
LocalConnectivity is_locally_connected(const Topology& topo, const SplitGraph& s);
bool is_connected(const SplitGraph& s);

struct TransitivityReport {
  bool ok = false;
  std::string message;
};
/// Checks that G permutes L and K, acts on S by graph automorphisms and is
/// transitive on its vertices. Throws KNotInvariant when G moves K.
TransitivityReport verify_vertex_transitive(const Topology& topo, const SplitGraph& s, const SymGroup& g,
                                            const Corneration& l, const std::vector<Corner>& k);

struct CubicLine {
  SplitKind kind;
  bool defined = false;          // j lies in the construction's range
  std::optional<int> valence;    // measured
  std::string corollary;         // the cubic criterion as stated for this construction
  bool corollary_says_cubic = false;
  bool theorem_says_cubic = false;  // prediction from the valence theorem for this construction
};
/// Which constructions are cubic for a transitive j-uniform L.
std::vector<CubicLine> cubic_filter(const Topology& topo, const Corneration& l);

/// Valence claimed for a construction on a transitive corneration, as the
/// valence theorems state it, or nullopt outside their hypotheses. Some of
/// these statements disagree with a direct count; see README.
std::optional<int> predicted_valence(SplitKind kind, int q, int j);
/// Local connectivity predicted by the gcd criteria, or nullopt.
std::optional<bool> predicted_local_connectivity(SplitKind kind, int q, int j);

/// graph6 encoding (no trailing newline).
std::string to_graph6(const SplitGraph& s);
std::string to_graph6(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace cornmap
