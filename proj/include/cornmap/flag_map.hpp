#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cornmap/errors.hpp"

namespace cornmap {

/// A permutation of {0, ..., n-1} stored as its image sequence.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& outer, const Perm& inner);  // outer after inner
Perm inverse(const Perm& p);
bool is_permutation(const Perm& p);

/// A map on a closed surface given by its flags and the three adjacency
/// involutions r0 (across the edge midpoint), r1 (across the face-center to
/// vertex side) and r2 (across the vertex to edge-midpoint side).
///
/// A FlagMap is a plain value: it is not validated on construction. Use
/// validate() or build a Topology, which refuses invalid systems.
class FlagMap {
 public:
  FlagMap() = default;
  FlagMap(Perm r0, Perm r1, Perm r2, std::string name = {});

  int size() const noexcept { return static_cast<int>(r_[0].size()); }
  const Perm& r(int i) const { return r_.at(i); }
  int apply(int i, int flag) const { return r_[i][flag]; }
  const std::string& name() const noexcept { return name_; }

  FlagMap renamed(std::string name) const;

  /// Renumbers flags: flag f of this map becomes flag relabel[f].
  FlagMap relabeled(const Perm& relabel) const;

  bool operator==(const FlagMap&) const = default;

 private:
  std::array<Perm, 3> r_;
  std::string name_;
};

struct ValidationReport {
  std::optional<ErrorCode> error;
  int witness = -1;  // a flag exhibiting the violation, -1 when not applicable
  std::string message;

  bool ok() const noexcept { return !error.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

/// Checks the flag-system axioms: fixed-point-free involutions, r0 r2 = r2 r0
/// with r0 r2 fixed-point free, no loops, connectivity, and n = 4|E| > 0.
ValidationReport validate(const FlagMap& map);

/// Throws Error with the violated axiom when validate() fails.
void require_valid(const FlagMap& map);

}  // namespace cornmap
