#include "cornmap/splitgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cornmap {

std::vector<std::vector<int>> SplitGraph::adjacency() const {
  std::vector<std::vector<int>> adj(size());
  for (const SplitEdge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<int> SplitGraph::degrees() const {
  std::vector<int> deg(size(), 0);
  for (const SplitEdge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::optional<int> SplitGraph::valence() const {
  std::vector<int> deg = degrees();
  if (deg.empty()) return std::nullopt;
  for (int d : deg)
    if (d != deg[0]) return std::nullopt;
  return deg[0];
}

SplitGraph split(const Topology& topo, const Corneration& l, const std::vector<Corner>& k) {
  for (const Corner& c : k)
    if (l.contains(c)) throw Error(ErrorCode::KIntersectsL, "K and L share a corner");
  SplitGraph s;
  s.vertices = l.corners();
  std::map<std::pair<int, int>, SplitEdge> edges;
  auto edge = [&](int a, int b) -> SplitEdge& {
    auto key = std::minmax(a, b);
    SplitEdge& e = edges[key];
    e.u = key.first;
    e.v = key.second;
    return e;
  };
  for (int e = 0; e < topo.count(CellKind::Edge); ++e) {
    auto [d1, d2] = topo.edge_darts(e);
    edge(l.corner_of_dart(d1), l.corner_of_dart(d2)).old_from.push_back(e);
  }
  for (const Corner& c : k) {
    const int a = l.corner_of_dart(c.a);
    const int b = l.corner_of_dart(c.b);
    edge(a, b).new_from.push_back(c);
  }
  for (auto& [key, e] : edges) s.edges.push_back(std::move(e));
  return s;
}

const char* to_string(SplitKind k) noexcept {
  switch (k) {
    case SplitKind::A: return "A";
    case SplitKind::B: return "B";
    case SplitKind::Ci: return "Ci";
    case SplitKind::Cx: return "Cx";
  }
  return "?";
}

std::vector<Corner> split_corners(const Topology& topo, const Corneration& l, SplitKind kind) {
  const auto q = topo.uniform_valence();
  if (!q) throw Error(ErrorCode::NonUniformValence, "split constructions need uniform valence");
  if (!l.width()) throw Error(ErrorCode::WidthMismatch, "split constructions need a uniform corneration");
  const int j = *l.width();
  auto out_of_range = [&](const char* range) {
    throw Error(ErrorCode::WidthOutOfRange,
                std::string(to_string(kind)) + " needs " + range + " (j = " + std::to_string(j) + ", q = " +
                    std::to_string(*q) + ")");
  };
  std::set<Corner> k;
  switch (kind) {
    case SplitKind::A:
      if (2 * j >= *q) out_of_range("j < q/2");
      return j_complement(topo, l);
    case SplitKind::B:
      if (j < 2 || 2 * j > *q) out_of_range("2 <= j <= q/2");
      return all_j_corners(topo, 1);
    case SplitKind::Ci:
    case SplitKind::Cx:
      if (j < 2 || 2 * j >= *q) out_of_range("2 <= j < q/2");
      for (const Corner& c : l.corners()) {
        auto [w1, w2] = kind == SplitKind::Ci ? interior_boundary_wedges(topo, c) : exterior_boundary_wedges(topo, c);
        k.insert(wedge_corner(topo, w1));
        k.insert(wedge_corner(topo, w2));
      }
      return {k.begin(), k.end()};
  }
  return {};
}

SplitGraph build_split(const Topology& topo, const Corneration& l, SplitKind kind) {
  return split(topo, l, split_corners(topo, l, kind));
}

SplitGraph graph_A(const Topology& topo, const Corneration& l) { return build_split(topo, l, SplitKind::A); }
SplitGraph graph_B(const Topology& topo, const Corneration& l) { return build_split(topo, l, SplitKind::B); }
SplitGraph graph_Ci(const Topology& topo, const Corneration& l) { return build_split(topo, l, SplitKind::Ci); }
SplitGraph graph_Cx(const Topology& topo, const Corneration& l) { return build_split(topo, l, SplitKind::Cx); }

namespace {

bool connected_on(const std::vector<std::vector<int>>& adj, const std::vector<int>& nodes) {
  if (nodes.empty()) return true;
  std::set<int> allowed(nodes.begin(), nodes.end());
  std::set<int> seen{nodes[0]};
  std::vector<int> stack{nodes[0]};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (allowed.count(y) && seen.insert(y).second) stack.push_back(y);
  }
  return seen.size() == allowed.size();
}

}  // namespace

LocalConnectivity is_locally_connected(const Topology& topo, const SplitGraph& s) {
  auto adj = s.adjacency();
  std::vector<std::vector<int>> at(topo.count(CellKind::Vertex));
  for (int i = 0; i < s.size(); ++i) at[s.vertices[i].vertex].push_back(i);
  for (int v = 0; v < topo.count(CellKind::Vertex); ++v)
    if (!connected_on(adj, at[v])) return {false, v};
  return {};
}

bool is_connected(const SplitGraph& s) {
  std::vector<int> all(s.size());
  std::iota(all.begin(), all.end(), 0);
  return connected_on(s.adjacency(), all);
}

TransitivityReport verify_vertex_transitive(const Topology& topo, const SplitGraph& s, const SymGroup& g,
                                            const Corneration& l, const std::vector<Corner>& k) {
  std::set<Corner> kset(k.begin(), k.end());
  std::set<std::pair<int, int>> edge_set;
  for (const SplitEdge& e : s.edges) edge_set.emplace(e.u, e.v);
  for (int gi : g.generators()) {
    const Perm& p = g.element(gi);
    if (!preserves(topo, p, l)) return {false, "a group element does not preserve L"};
    for (const Corner& c : k)
      if (!kset.count(corner_image(topo, p, c))) throw Error(ErrorCode::KNotInvariant, "a group element moves K");
    for (const SplitEdge& e : s.edges) {
      int a = l.corner_of_dart(corner_image(topo, p, s.vertices[e.u]).a);
      int b = l.corner_of_dart(corner_image(topo, p, s.vertices[e.v]).a);
      if (!edge_set.count(std::minmax(a, b))) return {false, "a group element does not map edges to edges"};
    }
  }
  if (!transitive_on_corners(topo, g, l)) return {false, "group is not transitive on the vertices"};
  return {true, {}};
}

std::optional<int> predicted_valence(SplitKind kind, int q, int j) {
  const bool straight = 2 * j == q;
  switch (kind) {
    case SplitKind::A:
      if (j < 1 || 2 * j >= q) return std::nullopt;
      return 4 * j == q ? 3 : 4;
    case SplitKind::B:
      if (straight) return q == 4 ? 3 : 4;
      if (j < 2 || 2 * j > q) return std::nullopt;
      if (j % 2 == 1) return (q % 4 == 0 && j == q / 2 - 1) ? 5 : 6;
      return j == 2 ? 5 : 6;
    case SplitKind::Ci:
      if (j < 2 || 2 * j >= q) return std::nullopt;
      if (j % 2 == 1) return (q % 4 == 0 && j == q / 2 - 1) ? 3 : 4;
      return j == 2 ? 3 : 4;
    case SplitKind::Cx:
      if (j < 2 || 2 * j >= q) return std::nullopt;
      if (j % 2 == 1) return (q % 4 == 0 && j == q / 2 - 1) ? 3 : 4;
      return j == 2 ? 3 : 4;
  }
  return std::nullopt;
}

std::optional<bool> predicted_local_connectivity(SplitKind kind, int q, int j) {
  const bool straight = 2 * j == q;
  switch (kind) {
    case SplitKind::A:
      if (j < 1 || 2 * j >= q) return std::nullopt;
      return std::gcd(q, j) == 1;
    case SplitKind::B:
      if (straight) return true;
      if (j < 2 || 2 * j > q) return std::nullopt;
      return true;
    case SplitKind::Ci:
      if (j < 2 || 2 * j >= q) return std::nullopt;
      return j % 2 == 1 ? std::gcd(q, j - 1) == 2 : std::gcd(q, j - 2) == 4;
    case SplitKind::Cx:
      if (j < 2 || 2 * j >= q) return std::nullopt;
      return j % 2 == 1 ? std::gcd(q, j + 1) == 2 : std::gcd(q, j + 2) == 4;
  }
  return std::nullopt;
}

std::vector<CubicLine> cubic_filter(const Topology& topo, const Corneration& l) {
  const auto q = topo.uniform_valence();
  if (!q || !l.width()) throw Error(ErrorCode::WidthMismatch, "cubic filter needs uniform valence and width");
  const int j = *l.width();
  std::vector<CubicLine> out;
  for (SplitKind kind : {SplitKind::A, SplitKind::B, SplitKind::Ci, SplitKind::Cx}) {
    CubicLine line;
    line.kind = kind;
    switch (kind) {
      case SplitKind::A:
        line.corollary = "A(L) has valence 3 iff j = q/2";
        line.corollary_says_cubic = 2 * j == *q;
        break;
      case SplitKind::B:
        line.corollary = "B(L) has valence 3 iff j = q/4";
        line.corollary_says_cubic = 4 * j == *q;
        break;
      case SplitKind::Ci:
        line.corollary = "Ci(L) has valence 3 iff j = 2";
        line.corollary_says_cubic = j == 2;
        break;
      case SplitKind::Cx:
        line.corollary = "Cx(L) has valence 3 iff 4 | q and j = q/2 - 1";
        line.corollary_says_cubic = *q % 4 == 0 && j == *q / 2 - 1;
        break;
    }
    line.theorem_says_cubic = predicted_valence(kind, *q, j) == 3;
    try {
      line.valence = build_split(topo, l, kind).valence();
      line.defined = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::WidthOutOfRange) throw;
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::string to_graph6(int n, const std::vector<std::pair<int, int>>& edges) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  std::set<std::pair<int, int>> es;
  for (auto [a, b] : edges) es.insert(std::minmax(a, b));
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (es.count({i, j}) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

std::string to_graph6(const SplitGraph& s) {
  std::vector<std::pair<int, int>> edges;
  for (const SplitEdge& e : s.edges) edges.emplace_back(e.u, e.v);
  return to_graph6(s.size(), edges);
}

}  // namespace cornmap
