#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cornmap/enumerate.hpp"
#include "cornmap/flag_map.hpp"
#include "cornmap/symmetry.hpp"
#include "cornmap/topology.hpp"

namespace cornmap::verify {

struct Options {
  int index_bound = kDefaultIndexBound;
  int group_bound = kDefaultGroupBound;
  std::size_t brute_force_limit = 1 << 16;  // largest corneration product enumerated directly
  std::string census_map;                  // map file for criterion 10; empty skips it
};

struct SuiteMap {
  std::string name;
  FlagMap map;
};
/// {4,4}_{4,0}, its opposite, antiprisms 3..6, torus grids 3..6 x 3..6 and the
/// 3 x 3 triangular torus.
std::vector<SuiteMap> suite_maps();

struct SweepEntry {
  int map = -1;  // index into Sweep::maps
  int j = 0;
  TransitiveCorneration t;
};

/// Every corneration invariant under a subgroup of index <= 4, for every suite
/// map and every 1 <= j <= q/2.
struct Sweep {
  std::vector<SuiteMap> maps;
  std::vector<Topology> topos;
  std::vector<SymGroup> auts;
  std::vector<Topology> petries;
  std::vector<SweepEntry> entries;
};
Sweep build_sweep(const Options& opt);

enum class Status { Pass, Fail, Skip };
const char* to_string(Status s) noexcept;

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::Fail;
  double seconds = 0;
  double budget_seconds = 0;  // 0 = no time limit
  int checks = 0;
  int failures = 0;
  std::vector<std::string> details;
};

inline constexpr int kCriterionCount = 10;

class Harness {
 public:
  explicit Harness(Options opt);
  ~Harness();
  Harness(const Harness&) = delete;
  Harness& operator=(const Harness&) = delete;

  CriterionResult run(int id);

 private:
  const Sweep& sweep();

  Options opt_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

/// "criterion 3: FAIL  <title>  (0.12 s, budget 60 s, 2/41 checks failed)"
std::string summary_line(const CriterionResult& r);

}  // namespace cornmap::verify
