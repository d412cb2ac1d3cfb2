// One line per acceptance criterion, followed by its evidence. Exit status is
// non-zero when any selected criterion fails.
#include <iostream>

#include "CLI11.hpp"
#include "verify/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  cornmap::verify::Options opt;
  bool quiet = false;
  app.add_option("-c,--criterion", only, "run only these criteria (1-10)")->check(CLI::Range(1, cornmap::verify::kCriterionCount));
  app.add_option("--census-map", opt.census_map, "map file for criterion 10")->check(CLI::ExistingFile);
  app.add_flag("-q,--quiet", quiet, "summary lines only");
  CLI11_PARSE(app, argc, argv);
  if (only.empty())
    for (int i = 1; i <= cornmap::verify::kCriterionCount; ++i) only.push_back(i);

  cornmap::verify::Harness harness(opt);
  bool ok = true;
  for (int id : only) {
    const auto r = harness.run(id);
    std::cout << cornmap::verify::summary_line(r) << "\n";
    if (!quiet)
      for (const auto& line : r.details) std::cout << "    " << line << "\n";
    ok = ok && r.status != cornmap::verify::Status::Fail;
  }
  return ok ? 0 : 1;
}
