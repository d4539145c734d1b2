// Runs every acceptance criterion at its stated tolerance; one line per criterion.

#include <cstdio>

#include "gvlab/harness.hpp"

int main() {
  using namespace gvlab;
  const SuiteResult res = run_suite(SweepConfig{});
  for (const auto& v : res.verdicts)
    std::printf("%-24s %-12s measured=%s bound=%s  %s\n", v.criterion.c_str(), to_string(v.status).c_str(),
                format_double(v.measured).c_str(), format_double(v.bound).c_str(), v.note.c_str());
  std::printf("pass=%d fail=%d inconclusive=%d\n", res.count(Status::pass), res.count(Status::fail),
              res.count(Status::inconclusive));
  return res.any_failed() ? 1 : 0;
}
