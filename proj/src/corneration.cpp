#include "cornmap/corneration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cornmap {

namespace {

int mod(int a, int q) { return ((a % q) + q) % q; }

}  // namespace

Corner make_corner(const Topology& topo, int d1, int d2) {
  const int nd = topo.count(CellKind::Dart);
  if (d1 < 0 || d2 < 0 || d1 >= nd || d2 >= nd) throw Error(ErrorCode::InvalidCorner, "dart out of range");
  if (d1 == d2) throw Error(ErrorCode::InvalidCorner, "corner needs two distinct darts");
  if (topo.dart_vertex(d1) != topo.dart_vertex(d2))
    throw Error(ErrorCode::InvalidCorner, "darts " + std::to_string(topo.id(CellKind::Dart, d1)) + " and " +
                                              std::to_string(topo.id(CellKind::Dart, d2)) + " are at different vertices");
  return Corner{topo.dart_vertex(d1), std::min(d1, d2), std::max(d1, d2)};
}

CornerShape corner_shape(const Topology& topo, const Corner& c) {
  CornerShape s;
  s.q = topo.valence(c.vertex);
  const int p1 = topo.dart_position(c.a);
  const int p2 = topo.dart_position(c.b);
  const int sep = mod(p2 - p1, s.q);
  if (sep <= s.q - sep) {
    s.start = p1;
    s.width = sep;
  } else {
    s.start = p2;
    s.width = s.q - sep;
  }
  s.straight = 2 * s.width == s.q;
  if (s.straight) s.start = std::min(p1, p2);
  return s;
}

std::vector<int> interior_wedges(const Topology& topo, const Corner& c) {
  CornerShape s = corner_shape(topo, c);
  std::vector<int> out;
  if (s.straight) return out;
  auto wedges = topo.rotation_wedges(c.vertex);
  for (int i = 0; i < s.width; ++i) out.push_back(wedges[mod(s.start + i, s.q)]);
  return out;
}

std::pair<int, int> interior_boundary_wedges(const Topology& topo, const Corner& c) {
  CornerShape s = corner_shape(topo, c);
  if (s.straight) throw Error(ErrorCode::StraightCornerHasNoSide, "straight corner has no interior");
  auto wedges = topo.rotation_wedges(c.vertex);
  return {wedges[s.start], wedges[mod(s.start + s.width - 1, s.q)]};
}

std::pair<int, int> exterior_boundary_wedges(const Topology& topo, const Corner& c) {
  CornerShape s = corner_shape(topo, c);
  if (s.straight) throw Error(ErrorCode::StraightCornerHasNoSide, "straight corner has no exterior side");
  auto wedges = topo.rotation_wedges(c.vertex);
  return {wedges[mod(s.start - 1, s.q)], wedges[mod(s.start + s.width, s.q)]};
}

std::vector<int> boundary_wedges(const Topology& topo, const Corner& c) {
  const int q = topo.valence(c.vertex);
  auto wedges = topo.rotation_wedges(c.vertex);
  std::set<int> out;
  for (int d : {c.a, c.b}) {
    const int p = topo.dart_position(d);
    out.insert(wedges[p]);
    out.insert(wedges[mod(p - 1, q)]);
  }
  return {out.begin(), out.end()};
}

Corner wedge_corner(const Topology& topo, int wedge) {
  const int v = topo.wedge_vertex(wedge);
  const int k = topo.wedge_position(wedge);
  return make_corner(topo, topo.dart_at(v, k), topo.dart_at(v, k + 1));
}

Corner corner_image(const Topology& topo, const Perm& g, const Corner& c) {
  return make_corner(topo, dart_image(topo, g, c.a), dart_image(topo, g, c.b));
}

std::vector<Corner> all_j_corners(const Topology& topo, int j) {
  int min_q = topo.valence(0);
  for (int v = 1; v < topo.count(CellKind::Vertex); ++v) min_q = std::min(min_q, topo.valence(v));
  if (j < 1 || 2 * j > min_q) {
    throw Error(ErrorCode::WidthOutOfRange,
                "width " + std::to_string(j) + " outside 1.." + std::to_string(min_q / 2));
  }
  std::vector<Corner> out;
  for (int v = 0; v < topo.count(CellKind::Vertex); ++v) {
    const int q = topo.valence(v);
    const int starts = 2 * j == q ? q / 2 : q;
    for (int p = 0; p < starts; ++p) out.push_back(make_corner(topo, topo.dart_at(v, p), topo.dart_at(v, p + j)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(Alignment a) noexcept {
  switch (a) {
    case Alignment::Convex: return "convex";
    case Alignment::Inflection: return "inflection";
    case Alignment::NotAligned: return "not-aligned";
  }
  return "?";
}

namespace {

// The flag of dart d (a dart of the corner) on the corner's interior side.
int interior_flag(const Topology& topo, const CornerShape& s, int d) {
  return topo.dart_flag(d, topo.dart_position(d) == s.start);
}

}  // namespace

Alignment alignment(const Topology& topo, const Corner& c1, const Corner& c2) {
  CornerShape s1 = corner_shape(topo, c1);
  CornerShape s2 = corner_shape(topo, c2);
  if (s1.straight || s2.straight) throw Error(ErrorCode::StraightCornerHasNoSide, "straight corners have no side");
  for (int d1 : {c1.a, c1.b})
    for (int d2 : {c2.a, c2.b}) {
      if (topo.opposite_dart(d1) != d2) continue;
      const FlagMap& m = topo.map();
      const int f1 = interior_flag(topo, s1, d1);
      const int f2 = interior_flag(topo, s2, d2);
      if (f2 == m.apply(0, f1)) return Alignment::Convex;
      if (f2 == m.apply(0, m.apply(2, f1))) return Alignment::Inflection;
    }
  return Alignment::NotAligned;
}

CoverReport is_corneration(const Topology& topo, const std::vector<Corner>& corners) {
  const int nd = topo.count(CellKind::Dart);
  std::vector<int> cover(nd, 0);
  for (const Corner& c : corners) {
    if (c.a < 0 || c.b < 0 || c.a >= nd || c.b >= nd || c.a == c.b || topo.dart_vertex(c.a) != c.vertex ||
        topo.dart_vertex(c.b) != c.vertex) {
      return {false, -1, "malformed corner"};
    }
    ++cover[c.a];
    ++cover[c.b];
  }
  for (int d = 0; d < nd; ++d) {
    if (cover[d] != 1) {
      return {false, d,
              "dart " + std::to_string(topo.id(CellKind::Dart, d)) + " is covered " + std::to_string(cover[d]) +
                  " times"};
    }
  }
  return {true, -1, {}};
}

Corneration::Corneration(const Topology& topo, std::vector<Corner> corners) : corners_(std::move(corners)) {
  std::sort(corners_.begin(), corners_.end());
  for (const Corner& c : corners_) make_corner(topo, c.a, c.b);  // throws InvalidCorner
  CoverReport r = is_corneration(topo, corners_);
  if (!r.ok) throw Error(ErrorCode::CornerationMismatch, r.message);
  by_dart_.assign(topo.count(CellKind::Dart), -1);
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    by_dart_[corners_[i].a] = static_cast<int>(i);
    by_dart_[corners_[i].b] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    const int w = corner_shape(topo, corners_[i]).width;
    if (i == 0) width_ = w;
    else if (width_ && *width_ != w) width_.reset();
  }
}

int Corneration::mate(int dart) const {
  const Corner& c = corners_[by_dart_[dart]];
  return c.a == dart ? c.b : c.a;
}

bool Corneration::contains(const Corner& c) const { return std::binary_search(corners_.begin(), corners_.end(), c); }

namespace {

std::vector<int> reversed_walk(const Topology& topo, const std::vector<int>& darts) {
  std::vector<int> out;
  for (auto it = darts.rbegin(); it != darts.rend(); ++it) out.push_back(topo.opposite_dart(*it));
  return out;
}

Circuit make_circuit(const Topology& topo, std::vector<int> darts) {
  Circuit c;
  c.darts = std::move(darts);
  for (int d : c.darts) c.edges.push_back(topo.dart_edge(d));
  return c;
}

}  // namespace

Circuit canonical_circuit(const Topology& topo, const Circuit& c) {
  std::vector<int> fwd = c.darts;
  std::vector<int> rev = reversed_walk(topo, fwd);
  std::vector<int>& pick = *std::min_element(fwd.begin(), fwd.end()) < *std::min_element(rev.begin(), rev.end())
                               ? fwd
                               : rev;
  std::rotate(pick.begin(), std::min_element(pick.begin(), pick.end()), pick.end());
  return make_circuit(topo, pick);
}

CircuitDecomposition circuits_of(const Topology& topo, const Corneration& l) {
  const int nd = topo.count(CellKind::Dart);
  std::vector<char> seen(nd, 0);
  CircuitDecomposition out;
  for (int s = 0; s < nd; ++s) {
    if (seen[s]) continue;
    std::vector<int> walk;
    for (int d = s; !seen[d]; d = l.mate(topo.opposite_dart(d))) {
      seen[d] = 1;
      walk.push_back(d);
    }
    // each circuit is traced once per direction; keep the one holding the smaller dart
    std::vector<int> rev = reversed_walk(topo, walk);
    if (*std::min_element(rev.begin(), rev.end()) < s) continue;
    out.push_back(make_circuit(topo, walk));
  }
  return out;
}

Corneration corneration_of(const Topology& topo, const CircuitDecomposition& c) {
  std::vector<Corner> corners;
  for (const Circuit& circ : c) {
    const int k = static_cast<int>(circ.darts.size());
    if (k < 2) throw Error(ErrorCode::CircuitTooShort, "circuit of length " + std::to_string(k));
    for (int i = 0; i < k; ++i)
      corners.push_back(make_corner(topo, topo.opposite_dart(circ.darts[i]), circ.darts[(i + 1) % k]));
  }
  return Corneration(topo, std::move(corners));
}

std::vector<Corner> j_complement(const Topology& topo, const Corneration& l) {
  if (!l.width()) throw Error(ErrorCode::WidthMismatch, "j-complement needs a uniform corneration");
  const int j = *l.width();
  if (!topo.uniform_valence()) throw Error(ErrorCode::NonUniformValence, "j-complement needs uniform valence");
  if (2 * j >= *topo.uniform_valence()) throw Error(ErrorCode::StraightHasNoComplement, "straight corneration");
  std::vector<Corner> out;
  for (const Corner& c : all_j_corners(topo, j))
    if (!l.contains(c)) out.push_back(c);
  return out;
}

const char* to_string(LocalClass c) noexcept {
  switch (c) {
    case LocalClass::StandardOdd: return "standard-odd";
    case LocalClass::StandardEven: return "standard-even";
    case LocalClass::Other: return "other";
  }
  return "?";
}

LocalCorneration local_corneration(const Topology& topo, const Corneration& l, int vertex) {
  LocalCorneration out;
  out.vertex = vertex;
  if (!l.width()) throw Error(ErrorCode::WidthMismatch, "local corneration needs a uniform corneration");
  const int q = topo.valence(vertex);
  const int j = *l.width();
  out.width = j;
  for (int d : topo.rotation(vertex)) {
    const Corner& c = l.corners()[l.corner_of_dart(d)];
    CornerShape s = corner_shape(topo, c);
    if (topo.dart_position(d) == s.start) out.starts.push_back(s.start);
  }
  std::sort(out.starts.begin(), out.starts.end());
  if (2 * j == q) {
    out.straight = true;
    return out;
  }

  std::set<int> odd_target, even_target;
  for (int i = 0; i < q; ++i) {
    if (i % 2 == 0) odd_target.insert(i);
    if (i % 4 == 0 || i % 4 == 3) even_target.insert(i);
  }
  // all 2q numberings: shift by s, optionally reversed
  for (int s = 0; s < q; ++s)
    for (int refl = 0; refl < 2; ++refl) {
      std::set<int> t;
      for (int i : out.starts) t.insert(refl ? mod(s - i - j, q) : mod(i - s, q));
      if (q % 2 == 0 && t == odd_target) {
        out.cls = LocalClass::StandardOdd;
        return out;
      }
      if (q % 4 == 0 && t == even_target) {
        out.cls = LocalClass::StandardEven;
        return out;
      }
    }
  return out;
}

const char* to_string(FacePattern p) noexcept {
  switch (p) {
    case FacePattern::A: return "A";
    case FacePattern::B: return "B";
    case FacePattern::C: return "C";
    case FacePattern::D: return "D";
    case FacePattern::E: return "E";
    case FacePattern::Other: return "Other";
  }
  return "?";
}

FacePattern classify_pattern(const std::vector<bool>& word) {
  const int p = static_cast<int>(word.size());
  const int ins = static_cast<int>(std::count(word.begin(), word.end(), true));
  if (ins == p) return FacePattern::A;
  if (ins == 0) return FacePattern::E;
  auto periodic = [&](const std::vector<bool>& tmpl) {
    const int t = static_cast<int>(tmpl.size());
    if (p % t != 0) return false;
    for (int r = 0; r < t; ++r) {
      bool ok = true;
      for (int i = 0; i < p && ok; ++i) ok = word[i] == tmpl[(i + r) % t];
      if (ok) return true;
    }
    return false;
  };
  if (periodic({true, false})) return FacePattern::B;
  if (periodic({true, true, false})) return FacePattern::C;
  if (periodic({true, true, false, false})) return FacePattern::D;
  return FacePattern::Other;
}

FacePatternReport face_patterns(const Topology& topo, const Corneration& l) {
  if (l.width() != 1) throw Error(ErrorCode::NotWedgeCorneration, "face patterns need a 1-uniform corneration");
  const int nf = topo.count(CellKind::Face);
  FacePatternReport out;
  for (int f = 0; f < nf; ++f) {
    std::vector<bool> word;
    for (int w : topo.face_wedges(f)) word.push_back(l.contains(wedge_corner(topo, w)));
    out.per_face.push_back(classify_pattern(word));
  }

  std::vector<std::set<int>> nbrs(nf);
  for (int f = 0; f < nf; ++f)
    for (int x : topo.flags_of(CellKind::Face, f)) nbrs[f].insert(topo.cell_of(CellKind::Face, topo.map().apply(2, x)));
  auto count = [&](FacePattern p) { return std::count(out.per_face.begin(), out.per_face.end(), p); };
  auto is = [&](int f, FacePattern p) { return out.per_face[f] == p; };
  const long a = count(FacePattern::A), b = count(FacePattern::B), c = count(FacePattern::C),
             d = count(FacePattern::D), e = count(FacePattern::E);

  if (a + e == nf && a > 0 && e > 0) {
    bool proper = true;
    for (int f = 0; f < nf && proper; ++f)
      for (int g : nbrs[f]) proper = proper && out.per_face[f] != out.per_face[g];
    if (proper) out.configuration = 1;
  } else if (b == nf) {
    out.configuration = 2;
  } else if (c + e == nf && c > 0 && e > 0) {
    bool ok = true;
    for (int f = 0; f < nf && ok; ++f) {
      if (is(f, FacePattern::E)) {
        for (int g : nbrs[f]) ok = ok && is(g, FacePattern::C);
      } else {
        bool has_c = false, has_e = false;
        for (int g : nbrs[f]) {
          has_c = has_c || is(g, FacePattern::C);
          has_e = has_e || is(g, FacePattern::E);
        }
        ok = has_c && has_e;
      }
    }
    if (ok) out.configuration = 3;
  } else if (d == nf) {
    out.configuration = 4;
  }
  return out;
}

Corneration green_wedge_corneration(const Topology& topo) {
  auto colour = face_bipartite(topo);
  if (!colour) throw Error(ErrorCode::ValidationError, "map is not face-bipartite");
  std::vector<Corner> corners;
  for (int f = 0; f < topo.count(CellKind::Face); ++f)
    if ((*colour)[f] == 0)
      for (int w : topo.face_wedges(f)) corners.push_back(wedge_corner(topo, w));
  return Corneration(topo, std::move(corners));
}

Corneration antiprism_corneration(const Topology& topo) {
  auto on_non_triangle = [&](int dart) {
    for (int x : topo.flags_of(CellKind::Edge, topo.dart_edge(dart)))
      if (topo.face_length(topo.cell_of(CellKind::Face, x)) != 3) return true;
    return false;
  };
  std::vector<Corner> corners;
  for (int f = 0; f < topo.count(CellKind::Face); ++f) {
    if (topo.face_length(f) != 3) continue;
    for (int w : topo.face_wedges(f)) {
      Corner c = wedge_corner(topo, w);
      if (on_non_triangle(c.a) || on_non_triangle(c.b)) corners.push_back(c);
    }
  }
  return Corneration(topo, std::move(corners));
}

Corneration torus_rows_corneration(const Topology& topo, int rows, int cols) {
  if (rows % 2 != 0) throw Error(ErrorCode::DegenerateParameters, "needs an even number of rows");
  if (topo.count(CellKind::Vertex) != rows * cols || topo.uniform_valence() != 4)
    throw Error(ErrorCode::DegenerateParameters, "map is not a rows x cols torus grid");
  std::vector<Corner> corners;
  for (int x = 0; x < rows; ++x)
    for (int i = 0; i < cols; ++i) {
      const int v = x * cols + i;
      // positions: 0 right, 1 down, 2 left, 3 up
      const int s = x % 2 == 0 ? 0 : 1;
      corners.push_back(make_corner(topo, topo.dart_at(v, s), topo.dart_at(v, s + 1)));
      corners.push_back(make_corner(topo, topo.dart_at(v, s + 2), topo.dart_at(v, s + 3)));
    }
  return Corneration(topo, std::move(corners));
}

bool preserves(const Topology& topo, const Perm& g, const Corneration& l) {
  for (const Corner& c : l.corners())
    if (!l.contains(corner_image(topo, g, c))) return false;
  return true;
}

SymGroup setwise_stabilizer(const Topology& topo, const SymGroup& g, const Corneration& l) {
  std::vector<int> keep;
  for (int i = 0; i < g.order(); ++i)
    if (preserves(topo, g.element(i), l)) keep.push_back(i);
  return g.subgroup(keep);
}

std::vector<int> corner_orbits(const Topology& topo, const SymGroup& g, const Corneration& l) {
  std::vector<int> parent(l.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s : g.generators())
    for (int i = 0; i < l.size(); ++i) {
      Corner img = corner_image(topo, g.element(s), l.corners()[i]);
      int k = l.corner_of_dart(img.a);
      int a = root(i), b = root(k);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> label(l.size());
  std::vector<int> dense(l.size(), -1);
  int next = 0;
  for (int i = 0; i < l.size(); ++i) {
    int r = root(i);
    if (dense[r] < 0) dense[r] = next++;
    label[i] = dense[r];
  }
  return label;
}

bool transitive_on_corners(const Topology& topo, const SymGroup& g, const Corneration& l) {
  return orbit_count(corner_orbits(topo, g, l)) == 1;
}

bool transitive_on_darts(const Topology& topo, const SymGroup& g) {
  return orbit_count(cell_orbits(g, topo, CellKind::Dart)) == 1;
}

}  // namespace cornmap
