#include <algorithm>

#include "cornmap/builders.hpp"
#include "cornmap/corneration.hpp"
#include "cornmap/enumerate.hpp"
#include "cornmap/io.hpp"
#include "cornmap/operators.hpp"
#include "cornmap/symmetry.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "verify/oracles.hpp"

using namespace cornmap;

namespace {

oracle::CornerSet as_set(const Topology& t, const Corneration& l) {
  oracle::CornerSet out;
  for (const Corner& c : l.corners()) {
    const int a = t.id(CellKind::Dart, c.a), b = t.id(CellKind::Dart, c.b);
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("cornerations") {
  TEST_CASE("green wedges of a face-bipartite map") {
    const Topology t(opposite(build_torus_grid(4, 4)));
    const Corneration l = green_wedge_corneration(t);
    CHECK(l.width() == 1);
    CHECK(l.size() == t.count(CellKind::Dart) / 2);
    CHECK(is_corneration(t, l.corners()).ok);
    for (int d = 0; d < t.count(CellKind::Dart); ++d) {
      CHECK(l.mate(l.mate(d)) == d);
      CHECK(l.mate(d) != d);
    }
    CHECK(parse_corneration(write_corneration(t, l), t) == l);
  }

  TEST_CASE("covers must be exact") {
    const Topology t(build_torus_grid(4, 4));
    const Corneration l = green_wedge_corneration(t);
    std::vector<Corner> twice = l.corners();
    twice.push_back(twice.front());
    CHECK_FALSE(is_corneration(t, twice).ok);
    std::vector<Corner> short_by_one(l.corners().begin() + 1, l.corners().end());
    CHECK_FALSE(is_corneration(t, short_by_one).ok);
    CHECK_THROWS_AS(Corneration(t, short_by_one), Error);
  }

  TEST_CASE("circuits round-trip") {
    for (const FlagMap& m : {opposite(build_torus_grid(4, 4)), build_torus_grid(4, 4), build_antiprism(4)}) {
      CAPTURE(m.name());
      const Topology t(m);
      const SymGroup aut = automorphism_group(t);
      for (const TransitiveCorneration& tc : enumerate_transitive_cornerations(t, aut, 1)) {
        const CircuitDecomposition c = circuits_of(t, tc.corneration);
        CHECK(corneration_of(t, c) == tc.corneration);
      }
    }
  }
}

TEST_SUITE("enumerate") {
  TEST_CASE("exact cover on a toy instance") {
    const auto covers = exact_cover(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}});
    CHECK(covers.size() == 2);
    CHECK(exact_cover(3, {{0, 1}, {1, 2}}).empty());
  }

  TEST_CASE("all cornerations against the per-vertex product") {
    const std::vector<std::pair<FlagMap, int>> cases{{build_antiprism(3), 1}, {build_antiprism(3), 2},
                                                     {build_torus_grid(3, 3), 1}, {build_dipole(4), 1},
                                                     {build_dipole(4), 2}, {build_theta(), 1}};
    for (const auto& [m, j] : cases) {
      CAPTURE(m.name());
      CAPTURE(j);
      const Topology t(m);
      const auto mine = enumerate_invariant_cornerations(t, trivial_group(m.size()), j);
      const auto ref = oracle::all_j_cornerations(m, j, 1 << 16);
      REQUIRE(ref.has_value());
      std::vector<oracle::CornerSet> got;
      for (const Corneration& l : mine) got.push_back(as_set(t, l));
      std::sort(got.begin(), got.end());
      std::vector<oracle::CornerSet> want = *ref;
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }

  TEST_CASE("symmetric flags agree with the brute-force check") {
    for (const FlagMap& m : {build_torus_grid(4, 4), build_antiprism(4), opposite(build_torus_grid(4, 4))}) {
      CAPTURE(m.name());
      const Topology t(m);
      const SymGroup aut = automorphism_group(t);
      for (int j : {1, 2}) {
        for (const TransitiveCorneration& tc : enumerate_transitive_cornerations(t, aut, j)) {
          CHECK(tc.symmetric == oracle::symmetric_under(m, aut.elements(), as_set(t, tc.corneration)));
          CHECK(tc.aut.order() == setwise_stabilizer(t, aut, tc.corneration).order());
        }
      }
    }
  }

  TEST_CASE("counts survive relabelling") {
    const FlagMap m = build_torus_grid(4, 4);
    for (unsigned seed : {2u, 3u}) {
      const FlagMap s = testing::shuffled(m, seed);
      for (int j : {1, 2}) {
        const Topology a(m), b(s);
        const auto x = enumerate_transitive_cornerations(a, automorphism_group(a), j);
        const auto y = enumerate_transitive_cornerations(b, automorphism_group(b), j);
        CHECK(x.size() == y.size());
        CHECK(std::count_if(x.begin(), x.end(), [](auto& c) { return c.symmetric; }) ==
              std::count_if(y.begin(), y.end(), [](auto& c) { return c.symmetric; }));
      }
    }
  }

  TEST_CASE("symmetric cornerations are locally standard") {
    const Topology t(build_torus_grid(4, 4));
    const SymGroup aut = automorphism_group(t);
    for (const TransitiveCorneration& tc : enumerate_transitive_cornerations(t, aut, 1)) {
      if (!tc.symmetric) continue;
      for (int v = 0; v < t.count(CellKind::Vertex); ++v)
        CHECK(local_corneration(t, tc.corneration, v).cls == LocalClass::StandardOdd);
    }
  }
}
