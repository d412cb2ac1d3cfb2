#include "cornmap/flag_map.hpp"

#include <numeric>
#include <sstream>

namespace cornmap {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& outer, const Perm& inner) {
  Perm out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

FlagMap::FlagMap(Perm r0, Perm r1, Perm r2, std::string name)
    : r_{std::move(r0), std::move(r1), std::move(r2)}, name_(std::move(name)) {}

FlagMap FlagMap::renamed(std::string name) const {
  FlagMap out = *this;
  out.name_ = std::move(name);
  return out;
}

FlagMap FlagMap::relabeled(const Perm& relabel) const {
  std::array<Perm, 3> r;
  for (int i = 0; i < 3; ++i) {
    r[i].assign(size(), 0);
    for (int f = 0; f < size(); ++f) r[i][relabel[f]] = relabel[r_[i][f]];
  }
  return FlagMap(std::move(r[0]), std::move(r[1]), std::move(r[2]), name_);
}

namespace {

ValidationReport fail(ErrorCode code, int witness, const std::string& message) {
  return ValidationReport{code, witness, message};
}

}  // namespace

ValidationReport validate(const FlagMap& map) {
  const int n = map.size();
  if (n <= 0 || n % 4 != 0) {
    std::ostringstream os;
    os << "flag count " << n << " is not a positive multiple of 4";
    return fail(ErrorCode::EdgeDegenerate, -1, os.str());
  }
  for (int i = 0; i < 3; ++i) {
    const Perm& r = map.r(i);
    if (static_cast<int>(r.size()) != n || !is_permutation(r)) {
      return fail(ErrorCode::NotInvolution, -1, "r" + std::to_string(i) + " is not a permutation of the flags");
    }
    for (int f = 0; f < n; ++f) {
      if (r[r[f]] != f) {
        return fail(ErrorCode::NotInvolution, f, "r" + std::to_string(i) + " is not an involution");
      }
      if (r[f] == f) {
        return fail(ErrorCode::FixedPointR, f, "r" + std::to_string(i) + " fixes a flag");
      }
    }
  }
  const Perm& r0 = map.r(0);
  const Perm& r1 = map.r(1);
  const Perm& r2 = map.r(2);
  for (int f = 0; f < n; ++f) {
    if (r0[r2[f]] != r2[r0[f]]) return fail(ErrorCode::R0R2NotCommuting, f, "r0 r2 != r2 r0");
    if (r0[r2[f]] == f) return fail(ErrorCode::EdgeDegenerate, f, "r0 r2 fixes a flag (semi-edge)");
  }

  // Connectivity and loops share one labelling of vertex orbits <r1, r2>.
  std::vector<int> vertex(n, -1);
  int nv = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (vertex[s] >= 0) continue;
    vertex[s] = nv;
    stack.push_back(s);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int g : {r1[f], r2[f]}) {
        if (vertex[g] < 0) {
          vertex[g] = nv;
          stack.push_back(g);
        }
      }
    }
    ++nv;
  }
  for (int f = 0; f < n; ++f) {
    if (vertex[f] == vertex[r0[f]]) return fail(ErrorCode::EdgeDegenerate, f, "edge is a loop");
  }

  std::vector<char> seen(n, 0);
  seen[0] = 1;
  stack.assign(1, 0);
  int reached = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      int g = map.apply(i, f);
      if (!seen[g]) {
        seen[g] = 1;
        ++reached;
        stack.push_back(g);
      }
    }
  }
  if (reached != n) {
    int witness = 0;
    while (seen[witness]) ++witness;
    return fail(ErrorCode::Disconnected, witness, "flags are not connected under <r0, r1, r2>");
  }
  return {};
}

void require_valid(const FlagMap& map) {
  ValidationReport report = validate(map);
  if (!report.ok()) {
    std::string what = report.message;
    if (report.witness >= 0) what += " (flag " + std::to_string(report.witness) + ")";
    if (!map.name().empty()) what = map.name() + ": " + what;
    throw Error(*report.error, what);
  }
}

}  // namespace cornmap
