#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cornmap/flag_map.hpp"
#include "cornmap/builders.hpp"

namespace testing {

// Same map with its flags shuffled by a seeded permutation.
inline cornmap::FlagMap shuffled(const cornmap::FlagMap& m, unsigned seed) {
  cornmap::Perm p(m.size());
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return m.relabeled(p);
}

inline std::vector<cornmap::FlagMap> small_maps() {
  using namespace cornmap;
  return {build_tetrahedron(),    build_cube(),           build_theta(),          build_dipole(4),
          build_antiprism(3),     build_antiprism(5),     build_torus_grid(3, 3), build_torus_grid(4, 4),
          build_torus_grid(3, 5), build_triangular_torus(3, 3), build_asymmetric()};
}

}  // namespace testing
