// Acceptance runner: executes every verification suite, prints one
// PASS/FAIL line per criterion, and exits nonzero if any failed.

#include <cstdio>

#include "frobex/verify.hpp"

int main() {
  bool all_pass = true;
  for (const frobex::CriterionResult& r : frobex::run_suite("all")) {
    all_pass = all_pass && r.pass;
    std::printf("%s %2d %-20s (%6.1fs) %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
