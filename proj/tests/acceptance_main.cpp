#include <algorithm>
#include <iostream>

#include "migsched/acceptance.hpp"

int main() {
  auto results = migsched::run_acceptance();
  migsched::print_acceptance(std::cout, results);
  bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  return ok ? 0 : 1;
}
