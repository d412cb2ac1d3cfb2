#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cornmap/flag_map.hpp"

namespace cornmap {

/// Result of an operator that may disconnect the map. Components are ordered
/// by their smallest original flag; inside a component, flags are renumbered
/// in increasing order of the original flag.
struct OperatorResult {
  std::vector<FlagMap> maps;
  std::vector<std::pair<int, int>> flag_correspondence;  // original flag -> (component, flag)
};

/// Same flags, r0 and r2 exchanged. Throws DegenerateResult when the dual has a loop.
FlagMap dual(const FlagMap& map);
/// Same flags, r0 replaced by r0 r2; faces become Petrie paths.
FlagMap petrie(const FlagMap& map);
/// dual(petrie(dual(map))).
FlagMap opposite(const FlagMap& map);
/// The j-hole operator: r1 replaced by r1 (r2 r1)^(j-1), split into components.
OperatorResult hole(const FlagMap& map, int j);

/// A flag bijection phi with phi r_i = r'_i phi, or nullopt. The image of flag 0
/// is the smallest flag of b that works.
std::optional<Perm> is_isomorphic(const FlagMap& a, const FlagMap& b);

/// Pairs up two lists of maps by isomorphism; returns the matching
/// (index into b for each map of a) or nullopt.
std::optional<std::vector<int>> match_components(const std::vector<FlagMap>& a, const std::vector<FlagMap>& b);

/// Propagates phi(0) = image along r-words; nullopt when inconsistent.
std::optional<Perm> extend_flag_map(const FlagMap& a, const FlagMap& b, int image);

}  // namespace cornmap
