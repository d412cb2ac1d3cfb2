#include "cornmap/operators.hpp"

#include <algorithm>

#include "cornmap/topology.hpp"

namespace cornmap {

namespace {

FlagMap checked(FlagMap m, const char* op) {
  ValidationReport report = validate(m);
  if (!report.ok()) {
    throw Error(ErrorCode::DegenerateResult, std::string(op) + " produced an invalid map: " + report.message);
  }
  return m;
}

}  // namespace

FlagMap dual(const FlagMap& map) {
  require_valid(map);
  return checked(FlagMap(map.r(2), map.r(1), map.r(0), map.name().empty() ? "" : "dual(" + map.name() + ")"),
                 "dual");
}

FlagMap petrie(const FlagMap& map) {
  require_valid(map);
  return checked(FlagMap(compose(map.r(0), map.r(2)), map.r(1), map.r(2),
                         map.name().empty() ? "" : "petrie(" + map.name() + ")"),
                 "petrie");
}

FlagMap opposite(const FlagMap& map) {
  FlagMap out = dual(petrie(dual(map)));
  return out.renamed(map.name().empty() ? "" : "opp(" + map.name() + ")");
}

OperatorResult hole(const FlagMap& map, int j) {
  Topology topo(map);
  const auto q = topo.uniform_valence();
  if (!q) throw Error(ErrorCode::NonUniformValence, "hole operator needs uniform valence");
  if (j < 1 || j >= *q) {
    throw Error(ErrorCode::WidthOutOfRange, "hole needs 1 <= j < q (j = " + std::to_string(j) +
                                                ", q = " + std::to_string(*q) + ")");
  }
  const int n = map.size();
  const Perm& r1 = map.r(1);
  const Perm& r2 = map.r(2);
  Perm r1j(n);
  for (int f = 0; f < n; ++f) {
    int g = f;
    for (int i = 0; i < j - 1; ++i) g = r2[r1[g]];
    r1j[f] = r1[g];
  }
  const std::array<const Perm*, 3> gens{&map.r(0), &r1j, &r2};

  OperatorResult out;
  out.flag_correspondence.assign(n, {-1, -1});
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(members.size());
    std::vector<int> orbit{s};
    comp[s] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const Perm* r : gens) {
        int t = (*r)[orbit[i]];
        if (comp[t] < 0) {
          comp[t] = c;
          orbit.push_back(t);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    for (std::size_t i = 0; i < orbit.size(); ++i) out.flag_correspondence[orbit[i]] = {c, static_cast<int>(i)};
    members.push_back(std::move(orbit));
  }
  for (std::size_t c = 0; c < members.size(); ++c) {
    const auto& orbit = members[c];
    std::array<Perm, 3> r;
    for (int i = 0; i < 3; ++i) {
      r[i].resize(orbit.size());
      for (std::size_t k = 0; k < orbit.size(); ++k) r[i][k] = out.flag_correspondence[(*gens[i])[orbit[k]]].second;
    }
    std::string name = map.name().empty() ? "" : "H" + std::to_string(j) + "(" + map.name() + ")";
    if (members.size() > 1 && !name.empty()) name += "#" + std::to_string(c);
    out.maps.push_back(checked(FlagMap(std::move(r[0]), std::move(r[1]), std::move(r[2]), name), "hole"));
  }
  return out;
}

std::optional<Perm> extend_flag_map(const FlagMap& a, const FlagMap& b, int image) {
  const int n = a.size();
  Perm phi(n, -1);
  phi[0] = image;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      int g = a.apply(i, f);
      int want = b.apply(i, phi[f]);
      if (phi[g] < 0) {
        phi[g] = want;
        stack.push_back(g);
      } else if (phi[g] != want) {
        return std::nullopt;
      }
    }
  }
  // a connected source reaches every flag; injectivity still has to be checked
  std::vector<char> hit(n, 0);
  for (int x : phi) {
    if (x < 0 || hit[x]) return std::nullopt;
    hit[x] = 1;
  }
  return phi;
}

std::optional<Perm> is_isomorphic(const FlagMap& a, const FlagMap& b) {
  if (a.size() != b.size()) return std::nullopt;
  Topology ta(a), tb(b);
  for (CellKind kind : {CellKind::Vertex, CellKind::Edge, CellKind::Face})
    if (ta.count(kind) != tb.count(kind)) return std::nullopt;
  for (int image = 0; image < b.size(); ++image) {
    if (auto phi = extend_flag_map(a, b, image)) return phi;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> match_components(const std::vector<FlagMap>& a, const std::vector<FlagMap>& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> match(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  // isomorphism is an equivalence, so greedy matching is exact
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (used[k] || !is_isomorphic(a[i], b[k])) continue;
      used[k] = 1;
      match[i] = static_cast<int>(k);
      break;
    }
    if (match[i] < 0) return std::nullopt;
  }
  return match;
}

}  // namespace cornmap
