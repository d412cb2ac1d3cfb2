#pragma once

#include <string>

#include "cornmap/corneration.hpp"
#include "cornmap/flag_map.hpp"
#include "cornmap/splitgraph.hpp"
#include "cornmap/symtype.hpp"
#include "cornmap/topology.hpp"

namespace cornmap {

// Map files:
//   mapfile 1
//   name <label>
//   flags <n>
//   r0: i0 i1 ...
//   r1: ...
//   r2: ...
// Corneration files:
//   cornfile 1
//   map <label>
//   j <width | mixed>
//   corner: dA dB        (canonical dart ids, i.e. smallest flag of the dart)
// Blank lines and lines starting with '#' are ignored.

std::string write_map(const FlagMap& map);
/// Throws SyntaxError on malformed text and ValidationError when the flag
/// system breaks a map axiom.
FlagMap parse_map(const std::string& text);

std::string write_corneration(const Topology& topo, const Corneration& l);
/// Throws SyntaxError, or CornerationMismatch when the corners do not fit the map.
Corneration parse_corneration(const std::string& text, const Topology& topo);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

std::string export_dot(const Topology& topo, const Skeleton& s);
std::string export_dot(const Diagram& d);
std::string export_dot(const Topology& topo, const SplitGraph& s);

}  // namespace cornmap
