#include "cornmap/builders.hpp"
#include "cornmap/corneration.hpp"
#include "cornmap/enumerate.hpp"
#include "cornmap/operators.hpp"
#include "cornmap/splitgraph.hpp"
#include "cornmap/symmetry.hpp"
#include "cornmap/symtype.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "verify/oracles.hpp"

using namespace cornmap;

TEST_SUITE("symtype") {
  TEST_CASE("valid diagrams are canonical and distinct") {
    const auto ds = enumerate_valid_diagrams();
    REQUIRE_FALSE(ds.empty());
    for (std::size_t i = 0; i < ds.size(); ++i) {
      CHECK(satisfies_diagram_constraints(ds[i]).ok);
      CHECK(canonical_form(ds[i]) == canonical_form(canonical_form(ds[i])));
      CHECK(diagram_isomorphic(ds[i], ds[i]).has_value());
      for (std::size_t k = i + 1; k < ds.size(); ++k) CHECK_FALSE(diagram_isomorphic(ds[i], ds[k]).has_value());
    }
  }

  TEST_CASE("quotient size is the number of flag orbits") {
    const Topology t(opposite(build_torus_grid(4, 4)));
    const Corneration l = green_wedge_corneration(t);
    const SymGroup aut_l = setwise_stabilizer(t, automorphism_group(t), l);
    const Diagram d = symmetry_type_graph(t, aut_l, l);
    CHECK(d.size() == orbit_count(flag_orbits(aut_l)));
    CHECK(satisfies_diagram_constraints(d).ok);
    const Classification c = classify(t, aut_l, l);
    CHECK(c.letter == 'a');
    CHECK(c.exact);
    CHECK(c.attributes == c.from_diagram);
  }

  TEST_CASE("classification does not depend on flag labels") {
    const FlagMap m = build_torus_grid(4, 5);
    const FlagMap s = testing::shuffled(m, 9);
    const Topology a(m), b(s);
    const Corneration la = torus_rows_corneration(a, 4, 5);
    // carry L across through the explicit isomorphism
    const Perm phi = *is_isomorphic(m, s);
    std::vector<Corner> moved;
    auto image = [&](int dart) { return b.cell_of(CellKind::Dart, phi[a.id(CellKind::Dart, dart)]); };
    for (const Corner& c : la.corners()) moved.push_back(make_corner(b, image(c.a), image(c.b)));
    const Corneration lb(b, moved);
    const auto ca = classify(a, setwise_stabilizer(a, automorphism_group(a), la), la);
    const auto cb = classify(b, setwise_stabilizer(b, automorphism_group(b), lb), lb);
    CHECK(ca.letter == 'l');
    CHECK(ca.attributes == cb.attributes);
  }
}

TEST_SUITE("splitgraph") {
  TEST_CASE("graph6 encoding") {
    // upper-triangle bits column by column, six to a character, plus 63
    CHECK(to_graph6(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}) == "Cl");
    CHECK(to_graph6(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) == "C~");
    CHECK(to_graph6(1, {}) == "@");
    CHECK(to_graph6(2, {{0, 1}}) == "A_");
  }

  TEST_CASE("K may not meet L") {
    const Topology t(build_torus_grid(4, 4));
    const Corneration l = green_wedge_corneration(t);
    CHECK_THROWS_AS(split(t, l, l.corners()), Error);
  }

  TEST_CASE("split graphs against the local model") {
    const Topology t(opposite(build_torus_grid(4, 4)));
    const SymGroup aut = automorphism_group(t);
    const int q = *t.uniform_valence();
    for (int j = 1; j < q / 2; ++j) {
      for (const TransitiveCorneration& tc : enumerate_transitive_cornerations(t, aut, j)) {
        if (!tc.symmetric) continue;
        for (SplitKind kind : {SplitKind::A, SplitKind::B, SplitKind::Ci, SplitKind::Cx}) {
          CAPTURE(j);
          CAPTURE(to_string(kind));
          const auto model = oracle::local_split_model(kind, q, j);
          if (!model) continue;
          const std::vector<Corner> k = split_corners(t, tc.corneration, kind);
          const SplitGraph s = split(t, tc.corneration, k);
          CHECK(s.size() == tc.corneration.size());
          CHECK(std::is_sorted(s.edges.begin(), s.edges.end(),
                               [](const SplitEdge& x, const SplitEdge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); }));
          CHECK(is_locally_connected(t, s).ok == model->locally_connected);
          if (model->locally_connected) CHECK(is_connected(s));
          const SymGroup g = setwise_stabilizer(t, aut, tc.corneration);
          CHECK(verify_vertex_transitive(t, s, g, tc.corneration, k).ok);
        }
      }
    }
  }
}
