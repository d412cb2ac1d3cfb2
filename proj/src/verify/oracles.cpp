#include "verify/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace cornmap::oracle {

std::vector<int> orbit_ids(const FlagMap& m, std::initializer_list<int> gens) {
  const int n = m.size();
  std::vector<int> id(n, -1);
  for (int s = 0; s < n; ++s) {
    if (id[s] != -1) continue;
    std::vector<int> stack{s};
    id[s] = s;  // s is the smallest unlabelled flag, hence the orbit minimum
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int g : gens) {
        int y = m.apply(g, x);
        if (id[y] == -1) {
          id[y] = s;
          stack.push_back(y);
        }
      }
    }
  }
  return id;
}

namespace {

int distinct(const std::vector<int>& ids) { return static_cast<int>(std::set<int>(ids.begin(), ids.end()).size()); }

int dart_id(const FlagMap& m, int f) { return std::min(f, m.apply(2, f)); }

}  // namespace

Counts count_cells(const FlagMap& m) {
  return {distinct(orbit_ids(m, {1, 2})), distinct(orbit_ids(m, {0, 2})), distinct(orbit_ids(m, {0, 1}))};
}

bool orientable(const FlagMap& m) {
  std::vector<int> colour(m.size(), -1);
  colour[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int g = 0; g < 3; ++g) {
      int y = m.apply(g, x);
      if (colour[y] == -1) {
        colour[y] = 1 - colour[x];
        stack.push_back(y);
      } else if (colour[y] == colour[x]) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<std::pair<int, int>>> face_two_colouring(const FlagMap& m) {
  const auto face = orbit_ids(m, {0, 1});
  // Two faces are adjacent across r2 (the other side of an edge at a vertex).
  std::map<int, std::set<int>> nbrs;
  for (int f = 0; f < m.size(); ++f) nbrs[face[f]].insert(face[m.apply(2, f)]);
  // Breadth-first order, so every face after the first meets a coloured one.
  std::vector<int> faces{face[0]};
  std::set<int> queued{face[0]};
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (int g : nbrs[faces[i]])
      if (queued.insert(g).second) faces.push_back(g);
  std::map<int, int> colour;
  // Backtracking over faces in id order; adjacent faces must differ.
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == faces.size()) return true;
    for (int c = 0; c < 2; ++c) {
      bool ok = true;
      for (int g : nbrs[faces[i]]) {
        auto it = colour.find(g);
        if (g == faces[i] || (it != colour.end() && it->second == c)) ok = false;
      }
      if (!ok) continue;
      colour[faces[i]] = c;
      if (go(i + 1)) return true;
      colour.erase(faces[i]);
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return std::vector<std::pair<int, int>>(colour.begin(), colour.end());
}

std::vector<std::pair<int, std::vector<int>>> neighbour_rotations(const FlagMap& m) {
  std::vector<int> colour(m.size(), -1);
  colour[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int g = 0; g < 3; ++g)
      if (colour[m.apply(g, x)] == -1) {
        colour[m.apply(g, x)] = 1 - colour[x];
        stack.push_back(m.apply(g, x));
      }
  }
  const auto vertex = orbit_ids(m, {1, 2});
  std::map<int, std::vector<int>> rot;
  for (int f = 0; f < m.size(); ++f) {
    if (colour[f] != 0 || rot.count(vertex[f])) continue;
    std::vector<int>& r = rot[vertex[f]];
    int g = f;
    do {
      r.push_back(vertex[m.apply(0, g)]);
      g = m.apply(2, m.apply(1, g));
    } while (g != f);
  }
  return {rot.begin(), rot.end()};
}

int aut_order_by_vertex_permutations(const FlagMap& m) {
  const auto rots = neighbour_rotations(m);
  const int n = static_cast<int>(rots.size());
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[rots[i].first] = i;
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i)
    for (int w : rots[i].second) rot[i].push_back(index[w]);

  auto same_cycle = [](std::vector<int> a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (a == b) return true;
      std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return false;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    for (bool reversed : {false, true}) {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        std::vector<int> image;
        for (int w : rot[v]) image.push_back(perm[w]);
        if (reversed) std::reverse(image.begin(), image.end());
        ok = same_cycle(image, rot[perm[v]]);
      }
      count += ok;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<std::vector<std::pair<int, int>>> local_matchings(int q, int j) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> partner(q, -1);
  std::vector<std::pair<int, int>> cur;
  std::function<void()> go = [&] {
    int p = 0;
    while (p < q && partner[p] != -1) ++p;
    if (p == q) {
      auto sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(sorted);
      return;
    }
    std::set<int> options{((p + j) % q + q) % q, ((p - j) % q + q) % q};
    for (int x : options) {
      if (x == p || partner[x] != -1) continue;
      partner[p] = x;
      partner[x] = p;
      cur.emplace_back(std::min(p, x), std::max(p, x));
      go();
      cur.pop_back();
      partner[p] = partner[x] = -1;
    }
  };
  go();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<CornerSet>> all_j_cornerations(const FlagMap& m, int j, std::size_t limit) {
  const auto vertex = orbit_ids(m, {1, 2});
  // Darts around each vertex, starting anywhere; the set of matchings does not
  // depend on where the numbering starts or which way it runs.
  std::vector<std::vector<int>> darts;
  std::set<int> seen;
  for (int f = 0; f < m.size(); ++f) {
    if (!seen.insert(vertex[f]).second) continue;
    std::vector<int> d;
    int g = f;
    do {
      d.push_back(dart_id(m, g));
      g = m.apply(2, m.apply(1, g));
    } while (g != f);
    darts.push_back(d);
  }
  std::vector<std::vector<CornerSet>> local;
  std::size_t total = 1;
  for (const auto& d : darts) {
    const int q = static_cast<int>(d.size());
    std::vector<CornerSet> options;
    if (j >= 1 && 2 * j <= q)
      for (const auto& mt : local_matchings(q, j)) {
        CornerSet cs;
        for (auto [a, b] : mt) cs.emplace_back(std::min(d[a], d[b]), std::max(d[a], d[b]));
        options.push_back(cs);
      }
    if (options.empty()) return std::vector<CornerSet>{};
    total *= options.size();
    if (total > limit) return std::nullopt;
    local.push_back(std::move(options));
  }
  std::vector<CornerSet> out;
  std::vector<std::size_t> pick(local.size(), 0);
  while (true) {
    CornerSet cs;
    for (std::size_t v = 0; v < local.size(); ++v) cs.insert(cs.end(), local[v][pick[v]].begin(), local[v][pick[v]].end());
    std::sort(cs.begin(), cs.end());
    out.push_back(std::move(cs));
    std::size_t v = 0;
    while (v < local.size() && ++pick[v] == local[v].size()) pick[v++] = 0;
    if (v == local.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool symmetric_under(const FlagMap& m, const std::vector<Perm>& aut, const CornerSet& l) {
  std::vector<int> mate(m.size(), -1);
  for (auto [a, b] : l) {
    mate[a] = b;
    mate[b] = a;
  }
  std::set<int> orbit;
  for (const Perm& g : aut) {
    bool keeps = true;
    for (auto [a, b] : l) {
      const int ga = dart_id(m, g[a]);
      const int gb = dart_id(m, g[b]);
      if (mate[ga] != gb) {
        keeps = false;
        break;
      }
    }
    if (keeps) orbit.insert(dart_id(m, g[l.front().first]));
  }
  return orbit.size() == 2 * l.size();
}

std::optional<LocalSplit> local_split_model(SplitKind kind, int q, int j) {
  const bool straight = 2 * j == q;
  std::vector<int> starts;
  if (straight) {
    if (kind != SplitKind::B) return std::nullopt;
    for (int i = 0; i < q / 2; ++i) starts.push_back(i);
  } else {
    if (j < 1 || 2 * j > q) return std::nullopt;
    if (kind != SplitKind::A && j < 2) return std::nullopt;
    if (j % 2 == 1 && q % 2 == 0) {
      for (int i = 0; i < q; i += 2) starts.push_back(i);
    } else if (j % 4 == 2 && q % 4 == 0) {
      for (int i = 0; i < q; ++i)
        if (i % 4 == 0 || i % 4 == 3) starts.push_back(i);
    } else {
      return std::nullopt;
    }
  }
  auto mod = [q](int x) { return ((x % q) + q) % q; };
  std::vector<int> corner_of(q, -1);
  for (std::size_t c = 0; c < starts.size(); ++c) {
    corner_of[mod(starts[c])] = static_cast<int>(c);
    corner_of[mod(starts[c] + j)] = static_cast<int>(c);
  }
  std::vector<std::pair<int, int>> k;
  switch (kind) {
    case SplitKind::A:
      for (int i = 0; i < q; ++i)
        if (!std::count(starts.begin(), starts.end(), i)) k.emplace_back(i, i + j);
      break;
    case SplitKind::B:
      for (int i = 0; i < q; ++i) k.emplace_back(i, i + 1);
      break;
    case SplitKind::Ci:
      for (int s : starts) {
        k.emplace_back(s, s + 1);
        k.emplace_back(s + j - 1, s + j);
      }
      break;
    case SplitKind::Cx:
      for (int s : starts) {
        k.emplace_back(s - 1, s);
        k.emplace_back(s + j, s + j + 1);
      }
      break;
  }
  const int n = static_cast<int>(starts.size());
  std::vector<std::set<int>> nb(n);
  for (auto [x, y] : k) {
    int a = corner_of[mod(x)], b = corner_of[mod(y)];
    if (a != b) {
      nb[a].insert(b);
      nb[b].insert(a);
    }
  }
  LocalSplit out;
  out.valence = 2 + static_cast<int>(nb[0].size());
  for (int c = 1; c < n; ++c)
    if (2 + static_cast<int>(nb[c].size()) != out.valence) out.valence = -1;
  std::set<int> seen{0};
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : nb[x])
      if (seen.insert(y).second) stack.push_back(y);
  }
  out.locally_connected = static_cast<int>(seen.size()) == n;
  return out;
}

std::set<std::vector<int>> small_subgroups(const std::vector<Perm>& elements, int max_index) {
  const int n = static_cast<int>(elements.size());
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[elements[i]] = i;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = index.at(compose(elements[a], elements[b]));
  auto closure = [&](std::vector<int> gens) {
    std::vector<char> in(n, 0);
    std::vector<int> members;
    int id = index.at(identity_perm(static_cast<int>(elements[0].size())));
    in[id] = 1;
    members.push_back(id);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int g : gens) {
        int y = mul[members[i]][g];
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  };
  std::set<std::vector<int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto ab = closure({a, b});
      for (int c = b; c < n; ++c) {
        if (std::binary_search(ab.begin(), ab.end(), c) && c != b) continue;
        auto h = closure({a, b, c});
        if (n / static_cast<int>(h.size()) <= max_index) out.insert(h);
      }
    }
  return out;
}

}  // namespace cornmap::oracle
