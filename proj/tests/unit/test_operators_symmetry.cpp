#include <numeric>
#include <set>

#include "cornmap/builders.hpp"
#include "cornmap/operators.hpp"
#include "cornmap/symmetry.hpp"
#include "cornmap/topology.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "verify/oracles.hpp"

using namespace cornmap;

namespace {

bool same_perms(const FlagMap& a, const FlagMap& b) {
  return a.r(0) == b.r(0) && a.r(1) == b.r(1) && a.r(2) == b.r(2);
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("dual and petrie are involutions") {
    for (const FlagMap& m : testing::small_maps()) {
      CAPTURE(m.name());
      if (oracle::count_cells(m).f == 1) {
        CHECK_THROWS_AS(dual(m), Error);  // one face: every dual edge is a loop
        continue;
      }
      CHECK(same_perms(dual(dual(m)), m));
      CHECK(same_perms(petrie(petrie(m)), m));
      const auto c = oracle::count_cells(m), d = oracle::count_cells(dual(m));
      CHECK(d.v == c.f);
      CHECK(d.f == c.v);
      CHECK(d.e == c.e);
    }
  }

  TEST_CASE("petrie polygons") {
    // the cube has four hexagonal Petrie polygons, the tetrahedron three squares
    CHECK(oracle::count_cells(petrie(build_cube())).f == 4);
    CHECK(oracle::count_cells(petrie(build_tetrahedron())).f == 3);
    const Topology p(petrie(build_cube()));
    for (int f = 0; f < p.count(CellKind::Face); ++f) CHECK(p.face_length(f) == 6);
  }

  TEST_CASE("opposite keeps edges and faces") {
    const FlagMap m = build_torus_grid(4, 4);
    const FlagMap o = opposite(m);
    const auto c = oracle::count_cells(m), d = oracle::count_cells(o);
    CHECK(d.e == c.e);
    CHECK(d.f == c.f);
    CHECK(d.v == 8);
    CHECK(Topology(o).uniform_valence() == 8);
    CHECK(same_perms(o, dual(petrie(dual(m)))));
    // antiprism 4: the opposite has loops
    CHECK_THROWS_AS(opposite(build_antiprism(4)), Error);
  }

  TEST_CASE("hole operator") {
    for (const FlagMap& m : {build_torus_grid(4, 4), build_antiprism(4), build_cube(), build_dipole(6)}) {
      CAPTURE(m.name());
      const Topology t(m);
      const int q = *t.uniform_valence();
      const auto c = oracle::count_cells(m);
      const OperatorResult h1 = hole(m, 1);
      REQUIRE(h1.maps.size() == 1);
      CHECK(same_perms(h1.maps[0], m));
      // r1 (r2 r1)^(q-2) = r2 r1 r2, a mirror image
      const OperatorResult hq = hole(m, q - 1);
      REQUIRE(hq.maps.size() == 1);
      CHECK(is_isomorphic(hq.maps[0], m).has_value());
      for (int j = 1; j < q; ++j) {
        CAPTURE(j);
        const OperatorResult h = hole(m, j);
        int v = 0, e = 0, flags = 0;
        for (const FlagMap& x : h.maps) {
          const auto k = oracle::count_cells(x);
          v += k.v;
          e += k.e;
          flags += x.size();
        }
        // each vertex breaks into gcd(q, j) vertices of valence q / gcd(q, j)
        CHECK(v == c.v * std::gcd(q, j));
        CHECK(e == c.e);
        CHECK(flags == m.size());
        std::set<std::pair<int, int>> seen(h.flag_correspondence.begin(), h.flag_correspondence.end());
        CHECK(seen.size() == static_cast<std::size_t>(m.size()));
      }
    }
    CHECK_THROWS_AS(hole(build_cube(), 3), Error);
    CHECK_THROWS_AS(hole(build_cube(), 0), Error);
  }
}

TEST_SUITE("symmetry") {
  TEST_CASE("automorphism group orders") {
    CHECK(automorphism_group(Topology(build_tetrahedron())).order() == 24);
    CHECK(automorphism_group(Topology(build_cube())).order() == 48);
    CHECK(automorphism_group(Topology(build_torus_grid(4, 4))).order() == 128);
    CHECK(automorphism_group(Topology(build_antiprism(5))).order() == 20);
    CHECK(automorphism_group(Topology(build_asymmetric())).order() == 1);
    // the oracle walks vertex permutations, so keep to at most nine vertices
    for (const FlagMap& m : {build_tetrahedron(), build_cube(), build_antiprism(4), build_torus_grid(3, 3),
                             build_asymmetric()}) {
      CAPTURE(m.name());
      CHECK(automorphism_group(Topology(m)).order() == oracle::aut_order_by_vertex_permutations(m));
    }
  }

  TEST_CASE("automorphism groups are closed and invariant under relabelling") {
    for (const FlagMap& m : testing::small_maps()) {
      CAPTURE(m.name());
      const Topology t(m);
      const SymGroup g = automorphism_group(t);
      for (const Perm& p : g.elements()) CHECK(is_map_symmetry(m, p));
      for (int a = 0; a < g.order(); a += 3)
        for (int b = 0; b < g.order(); b += 5) CHECK(g.contains(compose(g.element(a), g.element(b))));
      CHECK(automorphism_group(Topology(testing::shuffled(m, 5))).order() == g.order());
    }
  }

  TEST_CASE("regular maps have one flag orbit") {
    for (const FlagMap& m : {build_tetrahedron(), build_cube(), build_torus_grid(4, 4), build_antiprism(3)}) {
      CAPTURE(m.name());
      const Topology t(m);
      const SymGroup g = automorphism_group(t);
      CHECK(orbit_count(flag_orbits(g)) == 1);
      CHECK(is_reflexible(t, g));
      CHECK(transitive_on_darts(t, g));
    }
    const Topology a(build_antiprism(5));
    const SymGroup g = automorphism_group(a);
    CHECK(orbit_count(cell_orbits(g, a, CellKind::Vertex)) == 1);
    CHECK(orbit_count(cell_orbits(g, a, CellKind::Face)) == 2);
    CHECK(orbit_count(cell_orbits(g, a, CellKind::Edge)) == 2);
  }

  TEST_CASE("subgroups of small index against brute-force closures") {
    for (const FlagMap& m : {build_tetrahedron(), build_cube(), build_antiprism(4)}) {
      CAPTURE(m.name());
      const SymGroup g = automorphism_group(Topology(m));
      std::set<std::vector<int>> mine;
      for (const SymGroup& h : subgroups_up_to_index(g, 4)) {
        std::vector<int> idx;
        for (const Perm& p : h.elements()) idx.push_back(*g.find(p));
        std::sort(idx.begin(), idx.end());
        mine.insert(idx);
      }
      CHECK(mine == oracle::small_subgroups(g.elements(), 4));
    }
  }
}
