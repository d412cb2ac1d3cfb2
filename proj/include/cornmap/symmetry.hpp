#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cornmap/topology.hpp"

namespace cornmap {

inline constexpr int kDefaultGroupBound = 20000;
inline constexpr int kDefaultIndexBound = 4;

/// A group of map symmetries, materialized as flag permutations.
///
/// Map symmetries act semiregularly on flags, so an element is identified by
/// the image of flag 0. Elements are kept sorted by that image, which puts the
/// identity first and makes products a table lookup.
class SymGroup {
 public:
  SymGroup() = default;
  /// `elements` must be closed under composition; not checked here.
  SymGroup(int n_flags, std::vector<Perm> elements);

  int order() const noexcept { return static_cast<int>(elements_.size()); }
  int n_flags() const noexcept { return n_flags_; }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }

  /// Element index whose image of flag 0 is `flag`.
  std::optional<int> find_by_image0(int flag) const;
  std::optional<int> find(const Perm& g) const;
  bool contains(const Perm& g) const { return find(g).has_value(); }

  /// Index of element(a) after element(b), i.e. a o b.
  int multiply(int a, int b) const;
  int inverse(int a) const;

  /// A small generating set, chosen greedily in element order.
  const std::vector<int>& generators() const { return generators_; }

  /// Sub-group on the given element indices (must be closed).
  SymGroup subgroup(const std::vector<int>& indices) const;
  /// Sub-group generated by the given element indices.
  SymGroup generated_by(const std::vector<int>& indices) const;

  bool operator==(const SymGroup& other) const { return elements_ == other.elements_; }

 private:
  int n_flags_ = 0;
  std::vector<Perm> elements_;
  std::vector<int> slot_;  // image of flag 0 -> element index or -1
  std::vector<int> generators_;
};

/// All automorphisms of the map.
SymGroup automorphism_group(const Topology& topo);
SymGroup trivial_group(int n_flags);

/// True if g commutes with r0, r1 and r2.
bool is_map_symmetry(const FlagMap& map, const Perm& g);
/// True if every element is a symmetry of the map.
bool is_subgroup_of_aut(const Topology& topo, const SymGroup& g);

/// Orbit labels (dense, in order of first occurrence) of G on flags or cells.
std::vector<int> flag_orbits(const SymGroup& g);
std::vector<int> cell_orbits(const SymGroup& g, const Topology& topo, CellKind kind);
int orbit_count(const std::vector<int>& labels);

/// Image of a dart under a symmetry.
int dart_image(const Topology& topo, const Perm& g, int dart);

/// All subgroups of index <= k, up to equality, ordered by (index, element set).
/// Throws GroupTooLarge when |G| exceeds `group_bound`.
std::vector<SymGroup> subgroups_up_to_index(const SymGroup& g, int k, int group_bound = kDefaultGroupBound);

bool is_reflexible(const Topology& topo, const SymGroup& aut);
/// G has several flag orbits and every face lies inside one of them.
bool is_half_reflexive(const Topology& topo, const SymGroup& g);
/// First half-reflexive subgroup of index <= 2, or nullopt.
std::optional<SymGroup> face_reflexive_group(const Topology& topo, const SymGroup& aut,
                                             int group_bound = kDefaultGroupBound);
/// For a reflexible face-bipartite map, the subgroup preserving the face
/// colouring; nullopt when the map is not face-bipartite.
std::optional<SymGroup> colour_preserving_subgroup(const Topology& topo, const SymGroup& aut);

enum class LocalType { HD, HC, QD, Other };
const char* to_string(LocalType t) noexcept;

/// A dihedral symmetry of the positions 0..q-1: k -> shift + k (rotation) or
/// k -> shift - k (reflection).
struct PositionMap {
  bool reflection = false;
  int shift = 0;
  auto operator<=>(const PositionMap&) const = default;
};

struct LocalAction {
  int vertex = -1;
  int q = 0;
  std::vector<PositionMap> elements;  // sorted, duplicates removed
  LocalType type = LocalType::Other;
};

/// Action of the stabilizer G_v on the dart positions around v.
LocalAction local_action_group(const Topology& topo, const SymGroup& g, int vertex);
LocalType classify_local_action(const std::vector<PositionMap>& elements, int q);

}  // namespace cornmap
