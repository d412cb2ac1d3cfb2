#include "cornmap/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace cornmap {

namespace {

[[noreturn]] void syntax(int line, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(no, line.substr(first));
  }
  return out;
}

// Splits "key rest" or "key: rest".
std::pair<std::string, std::string> key_value(const std::string& line) {
  auto sp = line.find_first_of(" \t");
  std::string key = line.substr(0, sp);
  std::string rest = sp == std::string::npos ? "" : line.substr(line.find_first_not_of(" \t", sp));
  return {key, rest};
}

long long parse_int(int line, const std::string& tok) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    syntax(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) syntax(line, "expected an integer, got '" + tok + "'");
  return v;
}

std::vector<int> parse_ints(int line, const std::string& rest) {
  std::istringstream in(rest);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) out.push_back(static_cast<int>(parse_int(line, tok)));
  return out;
}

}  // namespace

std::string write_map(const FlagMap& map) {
  std::ostringstream os;
  os << "mapfile 1\n";
  os << "name " << (map.name().empty() ? "-" : map.name()) << "\n";
  os << "flags " << map.size() << "\n";
  for (int i = 0; i < 3; ++i) {
    os << "r" << i << ":";
    for (int x : map.r(i)) os << " " << x;
    os << "\n";
  }
  return os.str();
}

FlagMap parse_map(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty() || lines[0].second != "mapfile 1") syntax(lines.empty() ? 1 : lines[0].first, "expected 'mapfile 1'");
  std::string name;
  long long n = -1;
  std::array<std::optional<Perm>, 3> r;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    auto [key, rest] = key_value(line);
    if (key == "name") {
      name = rest == "-" ? "" : rest;
    } else if (key == "flags") {
      n = parse_int(no, rest);
      if (n <= 0) syntax(no, "flag count must be positive");
    } else if (key == "r0:" || key == "r1:" || key == "r2:") {
      const int k = key[1] - '0';
      if (r[k]) syntax(no, "duplicate " + key);
      r[k] = parse_ints(no, rest);
    } else {
      syntax(no, "unknown key '" + key + "'");
    }
  }
  if (n < 0) syntax(0, "missing 'flags'");
  for (int k = 0; k < 3; ++k) {
    if (!r[k]) syntax(0, "missing r" + std::to_string(k));
    if (static_cast<long long>(r[k]->size()) != n)
      syntax(0, "r" + std::to_string(k) + " has " + std::to_string(r[k]->size()) + " entries, expected " +
                    std::to_string(n));
    for (int x : *r[k])
      if (x < 0 || x >= n) syntax(0, "r" + std::to_string(k) + " image " + std::to_string(x) + " out of range");
  }
  FlagMap map(std::move(*r[0]), std::move(*r[1]), std::move(*r[2]), name);
  ValidationReport report = validate(map);
  if (!report.ok())
    throw Error(ErrorCode::ValidationError, std::string(to_string(*report.error)) + ": " + report.message);
  return map;
}

std::string write_corneration(const Topology& topo, const Corneration& l) {
  std::ostringstream os;
  os << "cornfile 1\n";
  os << "map " << (topo.map().name().empty() ? "-" : topo.map().name()) << "\n";
  os << "j ";
  if (l.width()) os << *l.width();
  else os << "mixed";
  os << "\n";
  for (const Corner& c : l.corners())
    os << "corner: " << topo.id(CellKind::Dart, c.a) << " " << topo.id(CellKind::Dart, c.b) << "\n";
  return os.str();
}

Corneration parse_corneration(const std::string& text, const Topology& topo) {
  auto lines = content_lines(text);
  if (lines.empty() || lines[0].second != "cornfile 1")
    syntax(lines.empty() ? 1 : lines[0].first, "expected 'cornfile 1'");
  std::optional<int> width;
  bool mixed = false;
  std::vector<Corner> corners;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, line] = lines[i];
    auto [key, rest] = key_value(line);
    if (key == "map") {
      // informational; the corners are checked against the supplied map
    } else if (key == "j") {
      if (rest == "mixed") mixed = true;
      else width = static_cast<int>(parse_int(no, rest));
    } else if (key == "corner:") {
      std::vector<int> ids = parse_ints(no, rest);
      if (ids.size() != 2) syntax(no, "a corner needs two dart ids");
      int d[2];
      for (int k = 0; k < 2; ++k) {
        auto idx = topo.index_of(CellKind::Dart, ids[k]);
        if (!idx) throw Error(ErrorCode::CornerationMismatch, "line " + std::to_string(no) + ": " +
                                                                   std::to_string(ids[k]) + " is not a dart id");
        d[k] = *idx;
      }
      try {
        corners.push_back(make_corner(topo, d[0], d[1]));
      } catch (const Error& e) {
        throw Error(ErrorCode::CornerationMismatch, "line " + std::to_string(no) + ": " + e.what());
      }
    } else {
      syntax(no, "unknown key '" + key + "'");
    }
  }
  Corneration l;
  try {
    l = Corneration(topo, std::move(corners));
  } catch (const Error& e) {
    throw Error(ErrorCode::CornerationMismatch, e.what());
  }
  if (width && l.width() != width) throw Error(ErrorCode::CornerationMismatch, "declared width does not match corners");
  if (mixed && l.width()) throw Error(ErrorCode::CornerationMismatch, "declared mixed but corners are uniform");
  return l;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::SyntaxError, "cannot write " + path);
  out << text;
}

std::string export_dot(const Topology& topo, const Skeleton& s) {
  std::ostringstream os;
  os << "graph skeleton {\n";
  for (int v : s.vertices) os << "  v" << v << ";\n";
  for (std::size_t e = 0; e < s.edges.size(); ++e)
    os << "  v" << s.endpoints[e].first << " -- v" << s.endpoints[e].second << " [label=\"e" << s.edges[e] << "\"];\n";
  os << "}\n";
  (void)topo;
  return os.str();
}

std::string export_dot(const Diagram& d) {
  static const char* style[3] = {"dotted", "solid", "bold"};
  std::ostringstream os;
  os << "graph diagram {\n";
  for (int x = 0; x < d.size(); ++x)
    os << "  n" << x << " [shape=" << (d.shape[x] == Shape::Box ? "box" : "ellipse") << "];\n";
  int aux = 0;
  for (int c = 0; c < 3; ++c)
    for (int x = 0; x < d.size(); ++x) {
      const int y = d.adj[c][x];
      if (y == x) {
        os << "  s" << aux << " [shape=point];\n";
        os << "  n" << x << " -- s" << aux++ << " [style=" << style[c] << ", label=\"" << c << "\"];\n";
      } else if (x < y) {
        os << "  n" << x << " -- n" << y << " [style=" << style[c] << ", label=\"" << c << "\"];\n";
      }
    }
  os << "}\n";
  return os.str();
}

std::string export_dot(const Topology& topo, const SplitGraph& s) {
  std::ostringstream os;
  os << "graph split {\n";
  for (int i = 0; i < s.size(); ++i) {
    const Corner& c = s.vertices[i];
    os << "  c" << i << " [label=\"" << topo.id(CellKind::Dart, c.a) << "," << topo.id(CellKind::Dart, c.b)
       << "\"];\n";
  }
  for (const SplitEdge& e : s.edges) {
    const char* kind = e.is_old() && e.is_new() ? "old+new" : e.is_old() ? "old" : "new";
    os << "  c" << e.u << " -- c" << e.v << " [kind=\"" << kind << "\", style=" << (e.is_old() ? "solid" : "dashed")
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cornmap
