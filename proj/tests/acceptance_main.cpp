// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "qzf/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= 10; ++i) ids.push_back(i);

  int failed = 0;
  for (int id : ids) {
    const auto t0 = std::chrono::steady_clock::now();
    const qzf::CriterionResult r = qzf::run_criterion(id);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), s);
    if (!r.detail.empty()) std::printf("    %s\n", r.detail.c_str());
    failed += !r.pass;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
