#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace migsched {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::size_t random_instances = 1200;
  std::size_t stress_instances = 200;
  std::size_t pairing_instances = 500;
  std::size_t threads = 0;
};

/// Runs criteria 1 to 9 and returns one result each, in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "[PASS] 1 name (0.12 s): detail" per criterion.
void print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace migsched
