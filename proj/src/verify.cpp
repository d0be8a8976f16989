#include "alp/verify.hpp"

#include <ostream>
#include <stdexcept>

namespace alp::verify {

std::vector<Check> suite_liealg() { return {}; }
std::vector<Check> suite_affine() { return {}; }
std::vector<Check> suite_fields() { return {}; }
std::vector<Check> suite_models() { return {}; }
std::vector<Check> suite_circulation(bool) { return {}; }

std::vector<Check> run_suite(const std::string& selector, bool quick) {
  std::vector<Check> out;
  auto append = [&](std::vector<Check> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  if (selector == "liealg" || selector == "all") append(suite_liealg());
  if (selector == "affine" || selector == "all") append(suite_affine());
  if (selector == "fields" || selector == "all") append(suite_fields());
  if (selector == "models" || selector == "all") append(suite_models());
  if (selector == "circulation" || selector == "all") append(suite_circulation(quick));
  if (out.empty() && selector != "all")
    throw std::invalid_argument("verify: unknown suite '" + selector + "'");
  return out;
}

int report(const std::vector<Check>& checks, std::ostream& os) {
  int failures = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "ok   " : "FAIL ") << c.name << "  residual=" << c.residual
       << "  threshold=" << c.threshold;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
    if (!c.pass) ++failures;
  }
  os << (failures == 0 ? "all checks passed" : "FAILURES: ") ;
  if (failures) os << failures;
  os << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace alp::verify
