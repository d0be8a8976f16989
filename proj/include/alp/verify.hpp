#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alp::verify {

struct Check {
  std::string name;
  double residual = 0;
  double threshold = 0;
  bool pass = false;
  std::string note;
};

std::vector<Check> suite_liealg();
std::vector<Check> suite_affine();
std::vector<Check> suite_fields();
std::vector<Check> suite_models();
std::vector<Check> suite_circulation(bool quick = false);

/// selector in {liealg, affine, fields, models, circulation, all}.
std::vector<Check> run_suite(const std::string& selector, bool quick = false);

/// Prints one line per check; returns 0 iff all pass.
int report(const std::vector<Check>& checks, std::ostream& os);

}  // namespace alp::verify
