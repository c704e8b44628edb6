// Runs every lab check with the default configuration and prints one line
// per acceptance criterion. Criteria listed in kKnownRed fail by analysis
// (see README); they are printed as FAIL but do not fail the test run.
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "glab/lab/checks.hpp"

using namespace glab::lab;

namespace {

const std::set<int> kKnownRed = {10, 12, 14};
constexpr int kCriteria = 14;

}  // namespace

int main() {
  CheckReport report;
  try {
    report = run_all(LabConfig{});
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance run aborted: %s\n", e.what());
    return 1;
  }
  std::map<int, std::vector<const CheckEntry*>> by_criterion;
  for (const auto& e : report.entries) by_criterion[e.criterion].push_back(&e);

  int unexpected = 0;
  for (int c = 1; c <= kCriteria; ++c) {
    auto it = by_criterion.find(c);
    bool pass = it != by_criterion.end();
    std::string detail;
    double seconds = 0.0;
    if (pass) {
      for (const auto* e : it->second) {
        seconds += e->runtime_seconds;
        if (e->status != CheckStatus::pass) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += e->id + " " + to_string(e->status);
        if (e->status != CheckStatus::pass && !e->note.empty()) detail += " (" + e->note + ")";
        if (e->status == CheckStatus::fail && !e->counterexamples.empty()) {
          detail += " first: " + e->counterexamples.front();
        }
      }
    } else {
      detail = "no check registered";
    }
    const bool known = kKnownRed.count(c) > 0;
    std::printf("%s criterion %d [%.2fs]: %s%s\n", pass ? "PASS" : "FAIL", c, seconds, detail.c_str(),
                !pass && known ? " [known]" : "");
    if (!pass && !known) ++unexpected;
    if (pass && known) std::printf("note: criterion %d was expected to fail and passed\n", c);
  }
  for (const auto* e : by_criterion[0]) {
    std::printf("%s auxiliary %s [%.2fs]\n", e->status == CheckStatus::pass ? "PASS" : "FAIL",
                e->id.c_str(), e->runtime_seconds);
    if (e->status != CheckStatus::pass) ++unexpected;
  }
  std::printf("%d unexpected failure(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
