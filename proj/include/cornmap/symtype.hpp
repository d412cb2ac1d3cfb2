#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cornmap/corneration.hpp"
#include "cornmap/symmetry.hpp"

namespace cornmap {

enum class Shape { Box, Oval };

/// An edge-3-coloured pregraph with box/oval nodes. adj[c] is an involution on
/// the nodes: adj[c][x] == x is a semiedge of colour c at x, otherwise a
/// c-coloured edge. Each node of a quotient carries one dart per colour, so
/// loops cannot occur and are not represented.
struct Diagram {
  std::vector<Shape> shape;
  std::array<std::vector<int>, 3> adj;

  int size() const noexcept { return static_cast<int>(shape.size()); }
  bool operator==(const Diagram&) const = default;
};

struct DiagramAttributes {
  int node_count = 0;
  int v_orbits = 0;
  int e_orbits = 0;
  int f_orbits = 0;
  std::set<FacePattern> patterns;
  LocalType local_type = LocalType::Other;

  bool operator==(const DiagramAttributes&) const = default;
};

std::string describe(const DiagramAttributes& a);  // "(1,1,2,{A,E},HD)"

/// One row of the table of transitive corneration groups, as printed.
struct TableRow {
  char letter;
  int v_orbits, e_orbits, f_orbits;
  std::set<FacePattern> patterns;
  LocalType local_type;
};
const std::vector<TableRow>& table_rows();
const TableRow& table_row(char letter);
bool matches_row(const DiagramAttributes& a, const TableRow& row, bool with_faces = true);

/// Quotient of the flag graph by G, boxes being flags of in-wedges of L.
/// Throws GroupDoesNotPreserveL.
Diagram symmetry_type_graph(const Topology& topo, const SymGroup& g, const Corneration& l);

struct DiagramCheck {
  bool ok = true;
  int rule = 0;  // first violated rule, 1..5
  std::string message;
};
DiagramCheck satisfies_diagram_constraints(const Diagram& d);

/// Orbit counts, patterns and local type read off the diagram alone.
DiagramAttributes diagram_attributes(const Diagram& d);

/// Node bijection a -> b preserving shapes and coloured adjacency.
std::optional<std::vector<int>> diagram_isomorphic(const Diagram& a, const Diagram& b);
/// Smallest relabelling, so isomorphic diagrams have equal canonical forms.
Diagram canonical_form(const Diagram& d);

/// Every diagram on 2 or 4 nodes passing the five constraints, one per
/// isomorphism class, ordered by canonical form.
std::vector<Diagram> enumerate_valid_diagrams();

struct Classification {
  char letter = '?';            // '?' when no row matches
  bool exact = false;           // all six columns agree with the printed row
  bool faces_differ = false;    // matched on every column except face orbits
  DiagramAttributes attributes;  // measured on the map
  DiagramAttributes from_diagram;
  Diagram diagram;
};

/// Table row of a diagram's attributes: exact six-column match first, then a
/// match ignoring the face-orbit column.
Classification classify_attributes(const DiagramAttributes& a);

/// Throws NotTransitive unless G is transitive on L, and NotWedgeCorneration
/// unless L is 1-uniform.
Classification classify(const Topology& topo, const SymGroup& g, const Corneration& l);

}  // namespace cornmap
