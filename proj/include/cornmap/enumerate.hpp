#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cornmap/corneration.hpp"
#include "cornmap/operators.hpp"
#include "cornmap/symmetry.hpp"

namespace cornmap {

/// Generic exact cover (Algorithm X). rows[i] lists the columns row i covers;
/// returns each solution as ascending row indices, in search order. Stops after
/// `limit` solutions.
std::vector<std::vector<int>> exact_cover(int n_columns, const std::vector<std::vector<int>>& rows,
                                          std::size_t limit = SIZE_MAX);

/// All j-uniform cornerations invariant under H, sorted.
std::vector<Corneration> enumerate_invariant_cornerations(const Topology& topo, const SymGroup& h, int j,
                                                          std::size_t limit = SIZE_MAX);

struct TransitiveCorneration {
  Corneration corneration;
  SymGroup aut;            // setwise stabilizer of L in Aut(M)
  bool transitive = false;  // Aut(L) transitive on the corners of L
  bool symmetric = false;   // Aut(L) transitive on darts
};

/// Every j-corneration invariant under some subgroup of Aut(M) of index <= k,
/// with its stabilizer and flags, sorted by corneration. With k >= 4 this
/// contains every transitive j-corneration.
std::vector<TransitiveCorneration> enumerate_transitive_cornerations(const Topology& topo, const SymGroup& aut, int j,
                                                                     int index_bound = kDefaultIndexBound,
                                                                     int group_bound = kDefaultGroupBound);

struct SymmetricPair {
  bool on_petrie = false;  // the half-reflexive group acts on P(M), not on M
  SymGroup group;
  Corneration red;    // interior boundary wedges in the orbit of flag 0
  Corneration green;
};

/// The two cornerations coloured by a half-reflexive group of M or P(M).
/// Throws WidthOutOfRange unless j is odd and j < q/2, and
/// NoHalfReflexiveGroup when neither map has one.
SymmetricPair symmetric_cornerations_from_coloring(const Topology& topo, const SymGroup& aut, int j,
                                                   int group_bound = kDefaultGroupBound);

/// Same corners on the Petrie dual (whose rotations agree with M's).
Corneration transfer_petrie(const Topology& petrie_topo, const Corneration& l);
/// j-corners of L become 1-corners of the components of hole(M, j).
std::vector<Corneration> transfer_hole(const Topology& topo, const Corneration& l, int j,
                                       const OperatorResult& holed, const std::vector<Topology>& components);

}  // namespace cornmap
