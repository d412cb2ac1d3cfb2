#pragma once

// Brute-force reference computations. They read the raw flag system and share
// no code with the library's topology, symmetry or enumeration layers, so an
// agreement between the two is evidence rather than a tautology.

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cornmap/flag_map.hpp"
#include "cornmap/splitgraph.hpp"

namespace cornmap::oracle {

/// Orbit label (smallest flag of the orbit) of every flag under the subgroup
/// generated by the listed involutions.
std::vector<int> orbit_ids(const FlagMap& m, std::initializer_list<int> gens);

struct Counts {
  int v = 0, e = 0, f = 0;
  int euler() const { return v - e + f; }
};
Counts count_cells(const FlagMap& m);
bool orientable(const FlagMap& m);

/// Face 2-colouring by trying both colours for each face in turn
/// (faces are adjacent when they share an edge). Keyed by face id.
std::optional<std::vector<std::pair<int, int>>> face_two_colouring(const FlagMap& m);

/// Cyclic neighbour list around each vertex (by vertex id), read in one
/// global orientation. Orientable maps only.
std::vector<std::pair<int, std::vector<int>>> neighbour_rotations(const FlagMap& m);
/// Number of automorphisms of an orientable map with a simple skeleton,
/// counted as vertex permutations carrying rotations to rotations, either all
/// preserved or all reversed.
int aut_order_by_vertex_permutations(const FlagMap& m);

/// A corner as a pair of dart ids (smallest flag of each dart), ascending.
using DartPair = std::pair<int, int>;
using CornerSet = std::vector<DartPair>;  // sorted

/// Perfect matchings of Z_q into pairs {p, p + j}.
std::vector<std::vector<std::pair<int, int>>> local_matchings(int q, int j);

/// Every j-corneration, as the product of per-vertex matchings. nullopt when
/// the product would exceed `limit`.
std::optional<std::vector<CornerSet>> all_j_cornerations(const FlagMap& m, int j, std::size_t limit);

/// True if the symmetries in `aut` that map the corner set onto itself are
/// transitive on darts.
bool symmetric_under(const FlagMap& m, const std::vector<Perm>& aut, const CornerSet& l);

/// Valence and local connectivity of a split construction, counted on the
/// standard local corneration of Z_q: two old edges per corner plus the
/// distinct corners reached through K. Straight cornerations use all q/2
/// straight corners.
struct LocalSplit {
  int valence = 0;
  bool locally_connected = false;
};
std::optional<LocalSplit> local_split_model(SplitKind kind, int q, int j);

/// Subgroups generated by at most three elements of a group given by its
/// elements (closure by brute force), as sorted element-index sets.
std::set<std::vector<int>> small_subgroups(const std::vector<Perm>& elements, int max_index);

}  // namespace cornmap::oracle
