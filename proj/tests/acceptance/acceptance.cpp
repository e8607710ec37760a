// Acceptance gate: one line per criterion, nonzero exit if any fails.
// All identities are exact; the only float tolerance (1e-6, criterion 10)
// lives in check_numeric_roots.

#include <cstdio>
#include <map>
#include <string>

#include "biclique/crosscheck.hpp"

namespace {

// Wall-clock ceilings in seconds, where the criterion states one.
const std::map<std::string, double> kTimeLimit = {{"1", 120.0}, {"2", 60.0}, {"8", 60.0}};

}  // namespace

int main() {
  using namespace biclique::crosscheck;
  const auto results = run_all(Budget::standard());
  int failed = 0;
  for (const auto& r : results) {
    bool ok = r.passed;
    std::string detail = r.detail;
    if (const auto limit = kTimeLimit.find(r.id); limit != kTimeLimit.end() && r.seconds > limit->second) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(limit->second)) + " s limit)";
    }
    if (!ok) ++failed;
    std::printf("[%s] criterion %-2s %s: %llu cases, %.2f s; %s\n", ok ? "PASS" : "FAIL", r.id.c_str(),
                r.title.c_str(), static_cast<unsigned long long>(r.cases), r.seconds, detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
