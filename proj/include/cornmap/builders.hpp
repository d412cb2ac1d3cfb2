#pragma once

#include <string>
#include <vector>

#include "cornmap/flag_map.hpp"

namespace cornmap {

/// Builds the flag system of an embedded graph from per-vertex cyclic edge
/// orders. `rotations[v]` lists edge labels 0..E-1 around v; each label must
/// occur exactly twice, at two distinct vertices. `twisted[e]` glues edge e
/// with a twist (non-orientable); empty means all untwisted.
///
/// Flags are numbered vertex by vertex, two per dart, so that
/// rotation_at_vertex() of the result reproduces the input order.
FlagMap from_rotation_system(const std::vector<std::vector<int>>& rotations,
                             const std::vector<bool>& twisted = {}, std::string name = {});

/// Same, for simple graphs given by cyclic neighbour lists.
FlagMap from_neighbour_rotation(const std::vector<std::vector<int>>& neighbours, std::string name = {});

/// rows x cols quadrangulated torus; vertex (x, i) is x * cols + i and its
/// rotation is right, down, left, up.
FlagMap build_torus_grid(int rows, int cols);
/// Sphere map with two n-gons joined by a band of 2n triangles; t_i = i, b_i = n + i.
FlagMap build_antiprism(int n);
FlagMap build_cube();
FlagMap build_tetrahedron();
/// Two vertices joined by m parallel edges (m = 3 is the theta map).
FlagMap build_dipole(int m);
FlagMap build_theta();
/// 6-valent triangulated torus on rows x cols vertices.
FlagMap build_triangular_torus(int rows, int cols);
/// A one-face genus-3 embedding of K5 with trivial automorphism group.
FlagMap build_asymmetric();

}  // namespace cornmap
