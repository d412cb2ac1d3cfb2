#include "cornmap/symmetry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "cornmap/operators.hpp"

namespace cornmap {

SymGroup::SymGroup(int n_flags, std::vector<Perm> elements) : n_flags_(n_flags), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), [](const Perm& a, const Perm& b) { return a[0] < b[0]; });
  slot_.assign(n_flags_, -1);
  for (int i = 0; i < order(); ++i) slot_[elements_[i][0]] = i;

  // Greedy generators: take the first element outside the current closure.
  std::vector<char> in(order(), 0);
  for (int cand = 1; cand < order(); ++cand) {
    if (in[cand]) continue;
    generators_.push_back(cand);
    std::fill(in.begin(), in.end(), 0);
    in[0] = 1;
    std::vector<int> closure{0};
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (int s : generators_) {
        int y = multiply(closure[i], s);
        if (!in[y]) {
          in[y] = 1;
          closure.push_back(y);
        }
      }
  }
}

std::optional<int> SymGroup::find_by_image0(int flag) const {
  if (flag < 0 || flag >= n_flags_ || slot_[flag] < 0) return std::nullopt;
  return slot_[flag];
}

std::optional<int> SymGroup::find(const Perm& g) const {
  if (static_cast<int>(g.size()) != n_flags_) return std::nullopt;
  auto i = find_by_image0(g[0]);
  if (!i || elements_[*i] != g) return std::nullopt;
  return i;
}

int SymGroup::multiply(int a, int b) const { return slot_[elements_[a][elements_[b][0]]]; }

int SymGroup::inverse(int a) const {
  const Perm& g = elements_[a];
  for (int f = 0; f < n_flags_; ++f)
    if (g[f] == 0) return slot_[f];
  return -1;
}

SymGroup SymGroup::subgroup(const std::vector<int>& indices) const {
  std::vector<Perm> els;
  els.reserve(indices.size());
  for (int i : indices) els.push_back(elements_[i]);
  return SymGroup(n_flags_, std::move(els));
}

SymGroup SymGroup::generated_by(const std::vector<int>& indices) const {
  std::vector<char> in(order(), 0);
  std::vector<int> closure{0};
  in[0] = 1;
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (int s : indices) {
      int y = multiply(closure[i], s);
      if (!in[y]) {
        in[y] = 1;
        closure.push_back(y);
      }
    }
  std::sort(closure.begin(), closure.end());
  return subgroup(closure);
}

SymGroup automorphism_group(const Topology& topo) {
  const FlagMap& m = topo.map();
  std::vector<Perm> els;
  for (int image = 0; image < m.size(); ++image)
    if (auto phi = extend_flag_map(m, m, image)) els.push_back(std::move(*phi));
  return SymGroup(m.size(), std::move(els));
}

SymGroup trivial_group(int n_flags) { return SymGroup(n_flags, {identity_perm(n_flags)}); }

bool is_map_symmetry(const FlagMap& map, const Perm& g) {
  if (static_cast<int>(g.size()) != map.size() || !is_permutation(g)) return false;
  for (int i = 0; i < 3; ++i)
    for (int f = 0; f < map.size(); ++f)
      if (g[map.apply(i, f)] != map.apply(i, g[f])) return false;
  return true;
}

bool is_subgroup_of_aut(const Topology& topo, const SymGroup& g) {
  if (g.n_flags() != topo.num_flags()) return false;
  for (const Perm& p : g.elements())
    if (!is_map_symmetry(topo.map(), p)) return false;
  return true;
}

namespace {

std::vector<int> dense_labels(const std::vector<int>& root) {
  std::vector<int> label(root.size(), -1);
  std::map<int, int> seen;
  for (std::size_t i = 0; i < root.size(); ++i) {
    auto [it, fresh] = seen.try_emplace(root[i], static_cast<int>(seen.size()));
    (void)fresh;
    label[i] = it->second;
  }
  return label;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<int> flag_orbits(const SymGroup& g) {
  std::vector<int> parent = identity_perm(g.n_flags());
  for (int s : g.generators()) {
    const Perm& p = g.element(s);
    for (int f = 0; f < g.n_flags(); ++f) {
      int a = find_root(parent, f), b = find_root(parent, p[f]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (int f = 0; f < g.n_flags(); ++f) parent[f] = find_root(parent, f);
  return dense_labels(parent);
}

std::vector<int> cell_orbits(const SymGroup& g, const Topology& topo, CellKind kind) {
  const int n = topo.count(kind);
  std::vector<int> parent = identity_perm(n);
  for (int s : g.generators()) {
    const Perm& p = g.element(s);
    for (int c = 0; c < n; ++c) {
      int d = topo.cell_of(kind, p[topo.id(kind, c)]);
      int a = find_root(parent, c), b = find_root(parent, d);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (int c = 0; c < n; ++c) parent[c] = find_root(parent, c);
  return dense_labels(parent);
}

int orbit_count(const std::vector<int>& labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

int dart_image(const Topology& topo, const Perm& g, int dart) {
  return topo.cell_of(CellKind::Dart, g[topo.id(CellKind::Dart, dart)]);
}

namespace {

// Permutations of {0..m-1} with a multiplication table; used as homomorphic images.
struct SmallSym {
  int m;
  std::vector<std::vector<int>> perms;
  std::vector<std::vector<int>> table;  // table[a][b] = a o b
  std::vector<int> order;

  explicit SmallSym(int m_) : m(m_) {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    const int s = static_cast<int>(perms.size());
    table.assign(s, std::vector<int>(s));
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) {
        std::vector<int> c(m);
        for (int i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]];
        table[a][b] = index[c];
      }
    order.assign(s, 0);
    for (int a = 0; a < s; ++a) {
      int x = a, k = 1;
      while (x != 0) {
        x = table[x][a];
        ++k;
      }
      order[a] = k;
    }
  }
};

int element_order(const SymGroup& g, int a) {
  int x = a, k = 1;
  while (x != 0) {
    x = g.multiply(x, a);
    ++k;
  }
  return k;
}

}  // namespace

std::vector<SymGroup> subgroups_up_to_index(const SymGroup& g, int k, int group_bound) {
  if (g.order() > group_bound) {
    throw Error(ErrorCode::GroupTooLarge, "group of order " + std::to_string(g.order()) + " exceeds bound " +
                                              std::to_string(group_bound) + "; supply generators of a smaller group");
  }
  const std::vector<int>& gens = g.generators();
  std::vector<int> gen_order;
  for (int s : gens) gen_order.push_back(element_order(g, s));

  // Every subgroup H of index m is the point stabilizer of the transitive
  // action of G on the cosets of H; we enumerate those actions as
  // homomorphisms into S_m, defined on the generators.
  std::set<std::pair<int, std::vector<int>>> found;
  for (int m = 1; m <= k; ++m) {
    SmallSym sym(m);
    std::vector<std::vector<int>> choices(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (int a = 0; a < static_cast<int>(sym.perms.size()); ++a)
        if (gen_order[i] % sym.order[a] == 0) choices[i].push_back(a);

    std::vector<int> pick(gens.size(), 0);
    std::vector<int> phi(g.order());
    std::vector<int> queue;
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (choices[i].empty()) ok = false;
      if (!ok) break;

      // transitivity of the image on {0..m-1}
      std::vector<char> reach(m, 0);
      reach[0] = 1;
      std::vector<int> pts{0};
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t s = 0; s < gens.size(); ++s) {
          int y = sym.perms[choices[s][pick[s]]][pts[i]];
          if (!reach[y]) {
            reach[y] = 1;
            pts.push_back(y);
          }
        }
      if (static_cast<int>(pts.size()) == m) {
        std::fill(phi.begin(), phi.end(), -1);
        phi[0] = 0;
        queue.assign(1, 0);
        bool hom = true;
        for (std::size_t i = 0; i < queue.size() && hom; ++i) {
          int x = queue[i];
          for (std::size_t s = 0; s < gens.size(); ++s) {
            int y = g.multiply(x, gens[s]);
            int want = sym.table[phi[x]][choices[s][pick[s]]];
            if (phi[y] < 0) {
              phi[y] = want;
              queue.push_back(y);
            } else if (phi[y] != want) {
              hom = false;
              break;
            }
          }
        }
        if (hom) {
          std::vector<int> stab;
          for (int x = 0; x < g.order(); ++x)
            if (sym.perms[phi[x]][0] == 0) stab.push_back(x);
          found.emplace(m, std::move(stab));
        }
      }

      std::size_t i = 0;
      while (i < gens.size() && ++pick[i] == static_cast<int>(choices[i].size())) pick[i++] = 0;
      if (i == gens.size()) break;
    }
    if (gens.empty()) break;  // trivial group: only itself
  }
  if (gens.empty()) found.emplace(1, std::vector<int>{0});

  std::vector<SymGroup> out;
  for (const auto& [index, els] : found) out.push_back(g.subgroup(els));
  return out;
}

bool is_reflexible(const Topology& topo, const SymGroup& aut) { return aut.order() == topo.num_flags(); }

bool is_half_reflexive(const Topology& topo, const SymGroup& g) {
  std::vector<int> orb = flag_orbits(g);
  if (orbit_count(orb) < 2) return false;
  for (int f = 0; f < topo.count(CellKind::Face); ++f) {
    auto flags = topo.flags_of(CellKind::Face, f);
    for (int x : flags)
      if (orb[x] != orb[flags[0]]) return false;
  }
  return true;
}

std::optional<SymGroup> face_reflexive_group(const Topology& topo, const SymGroup& aut, int group_bound) {
  for (SymGroup& h : subgroups_up_to_index(aut, 2, group_bound))
    if (is_half_reflexive(topo, h)) return std::move(h);
  return std::nullopt;
}

std::optional<SymGroup> colour_preserving_subgroup(const Topology& topo, const SymGroup& aut) {
  auto colour = face_bipartite(topo);
  if (!colour) return std::nullopt;
  std::vector<int> keep;
  for (int i = 0; i < aut.order(); ++i)
    if ((*colour)[topo.cell_of(CellKind::Face, aut.element(i)[0])] == (*colour)[topo.cell_of(CellKind::Face, 0)])
      keep.push_back(i);
  return aut.subgroup(keep);
}

const char* to_string(LocalType t) noexcept {
  switch (t) {
    case LocalType::HD: return "HD";
    case LocalType::HC: return "HC";
    case LocalType::QD: return "QD";
    case LocalType::Other: return "Other";
  }
  return "?";
}

LocalAction local_action_group(const Topology& topo, const SymGroup& g, int vertex) {
  LocalAction out;
  out.vertex = vertex;
  out.q = topo.valence(vertex);
  auto seq = topo.rotation_flags(vertex);
  std::map<int, int> where;
  for (std::size_t i = 0; i < seq.size(); ++i) where[seq[i]] = static_cast<int>(i);
  std::set<PositionMap> elements;
  for (const Perm& p : g.elements()) {
    auto it = where.find(p[seq[0]]);
    if (it == where.end()) continue;  // does not fix the vertex
    const int t = it->second;
    // seq[2k] is the forward flag of dart k, seq[2k-1] its backward flag
    if (t % 2 == 0) elements.insert({false, t / 2});
    else elements.insert({true, ((t + 1) / 2) % out.q});
  }
  out.elements.assign(elements.begin(), elements.end());
  out.type = classify_local_action(out.elements, out.q);
  return out;
}

LocalType classify_local_action(const std::vector<PositionMap>& elements, int q) {
  if (q % 2 != 0) return LocalType::Other;
  std::set<int> rot, refl;
  for (const PositionMap& e : elements) (e.reflection ? refl : rot).insert(((e.shift % q) + q) % q);
  auto all_with = [&](int step, int residue) {
    std::set<int> s;
    for (int x = 0; x < q; ++x)
      if (x % step == residue) s.insert(x);
    return s;
  };
  if (rot == all_with(2, 0)) {
    if (refl.empty()) return LocalType::HC;
    if (refl == all_with(2, 1)) return LocalType::HD;
  }
  if (q % 4 == 0 && rot == all_with(4, 0) && (refl == all_with(4, 1) || refl == all_with(4, 3))) return LocalType::QD;
  return LocalType::Other;
}

}  // namespace cornmap
