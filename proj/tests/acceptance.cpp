// One line per acceptance criterion; nonzero exit if any fails.

#include <cstdio>

#include "lndfilt/selftest.hpp"

int main() {
  int failed = 0;
  lndfilt::run_selftest({}, [&](const lndfilt::CriterionResult& r) {
    if (!r.passed) ++failed;
    std::string limit = r.limit_seconds > 0 ? ", limit " + std::to_string(static_cast<int>(r.limit_seconds)) + " s" : "";
    std::printf("criterion %2d %s  %s: %s [%.3f s%s]\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(),
                r.detail.c_str(), r.seconds, limit.c_str());
    std::fflush(stdout);
  });
  return failed == 0 ? 0 : 1;
}
