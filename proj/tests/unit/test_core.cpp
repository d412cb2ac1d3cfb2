#include <tuple>

#include "cornmap/builders.hpp"
#include "cornmap/io.hpp"
#include "cornmap/operators.hpp"
#include "cornmap/topology.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "verify/oracles.hpp"

using namespace cornmap;

TEST_SUITE("core_flag_map") {
  TEST_CASE("validation rejects broken flag systems") {
    const FlagMap good = build_theta();
    CHECK(validate(good).ok());

    Perm r0 = good.r(0);
    std::swap(r0[0], r0[r0[0]]);  // r0 now fixes flag 0 and its old partner
    CHECK(validate(FlagMap(r0, good.r(1), good.r(2))).error.has_value());

    Perm bad = good.r(1);
    bad[0] = bad[1] = 0;
    CHECK(validate(FlagMap(good.r(0), bad, good.r(2))).error == ErrorCode::NotInvolution);

    // two disjoint copies of the theta graph
    const int n = good.size();
    std::array<Perm, 3> r;
    for (int i = 0; i < 3; ++i) {
      r[i].resize(2 * n);
      for (int f = 0; f < n; ++f) {
        r[i][f] = good.r(i)[f];
        r[i][n + f] = n + good.r(i)[f];
      }
    }
    CHECK(validate(FlagMap(r[0], r[1], r[2])).error == ErrorCode::Disconnected);
  }

  TEST_CASE("cell counts against hand counts and the orbit oracle") {
    // (V, E, F) worked out from the constructions
    const std::vector<std::tuple<FlagMap, int, int, int>> cases{
        {build_tetrahedron(), 4, 6, 4},        {build_cube(), 8, 12, 6},
        {build_theta(), 2, 3, 3},              {build_dipole(4), 2, 4, 4},
        {build_antiprism(5), 10, 20, 12},      {build_torus_grid(3, 5), 15, 30, 15},
        {build_triangular_torus(3, 3), 9, 27, 18}, {build_asymmetric(), 5, 10, 1}};
    for (const auto& [m, v, e, f] : cases) {
      CAPTURE(m.name());
      const Topology t(m);
      CHECK(t.count(CellKind::Vertex) == v);
      CHECK(t.count(CellKind::Edge) == e);
      CHECK(t.count(CellKind::Face) == f);
      CHECK(t.count(CellKind::Dart) == 2 * e);
      const auto o = oracle::count_cells(m);
      CHECK(o.v == v);
      CHECK(o.e == e);
      CHECK(o.f == f);
    }
  }

  TEST_CASE("surface, bipartiteness and rotations") {
    for (const FlagMap& m : testing::small_maps()) {
      CAPTURE(m.name());
      const Topology t(m);
      const SurfaceInfo s = euler_and_genus(t);
      CHECK(s.orientable == oracle::orientable(m));
      CHECK(s.euler == oracle::count_cells(m).euler());
      if (s.orientable) CHECK(s.euler == 2 - 2 * s.genus);
      CHECK(face_bipartite(t).has_value() == oracle::face_two_colouring(m).has_value());
      for (int v = 0; v < t.count(CellKind::Vertex); ++v) {
        const auto rot = t.rotation(v);
        CHECK(rot.size() == t.flags_of(CellKind::Vertex, v).size() / 2);
        for (std::size_t k = 0; k < rot.size(); ++k) CHECK(t.dart_vertex(rot[k]) == v);
      }
    }
    CHECK(euler_and_genus(Topology(build_asymmetric())).genus == 3);
    CHECK(euler_and_genus(Topology(build_torus_grid(4, 4))).genus == 1);
    CHECK(face_bipartite(Topology(build_torus_grid(4, 4))).has_value());
    CHECK_FALSE(face_bipartite(Topology(build_torus_grid(3, 3))).has_value());
  }

  TEST_CASE("cell index order follows canonical ids") {
    const Topology t(testing::shuffled(build_antiprism(4), 7));
    for (CellKind k : kAllCellKinds)
      for (int i = 1; i < t.count(k); ++i) CHECK(t.id(k, i - 1) < t.id(k, i));
  }
}

TEST_SUITE("builders_io") {
  TEST_CASE("builders reject degenerate parameters") {
    CHECK_THROWS_AS(build_torus_grid(1, 4), Error);
    CHECK_THROWS_AS(build_antiprism(2), Error);
    CHECK_THROWS_AS(build_dipole(1), Error);
    CHECK_THROWS_AS(from_rotation_system({{0, 0}}), Error);  // a loop
  }

  TEST_CASE("map files round-trip") {
    for (const FlagMap& m : testing::small_maps()) {
      CAPTURE(m.name());
      CHECK(parse_map(write_map(m)) == m);
      const FlagMap s = testing::shuffled(m, 11);
      CHECK(parse_map(write_map(s)) == s);
    }
    CHECK_THROWS_AS(parse_map("mapfile 1\nflags 4\nr0 0 1\n"), Error);
  }

  TEST_CASE("relabelled maps are isomorphic") {
    for (unsigned seed = 1; seed <= 3; ++seed)
      for (const FlagMap& m : testing::small_maps()) {
        CAPTURE(m.name());
        const FlagMap s = testing::shuffled(m, seed);
        CHECK(is_isomorphic(m, s).has_value());
        const auto a = oracle::count_cells(m), b = oracle::count_cells(s);
        CHECK(std::tie(a.v, a.e, a.f) == std::tie(b.v, b.e, b.f));
      }
    CHECK(is_isomorphic(build_torus_grid(3, 5), build_torus_grid(5, 3)).has_value());  // transpose
    CHECK_FALSE(is_isomorphic(build_torus_grid(4, 4), opposite(build_torus_grid(4, 4))).has_value());
  }
}
