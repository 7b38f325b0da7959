#pragma once

// Named verification suites: each runs one of the ten acceptance checks
// and reports pass/fail with a witness on failure.

#include <string>
#include <vector>

namespace frobex {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts on success, first witness on failure
  double seconds = 0.0;
};

// Suite names in id order; "all" runs everything.
const std::vector<std::string>& suite_names();

// Runs one named suite, or all of them for "all".
std::vector<CriterionResult> run_suite(const std::string& name);

}  // namespace frobex
