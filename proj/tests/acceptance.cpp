// One line per acceptance criterion; exits non-zero if any criterion fails.

#include <iostream>

#include "cdom/verify.hpp"

int main() {
  int failed = 0;
  cdom::run_acceptance([&](const cdom::CriterionResult& r) {
    std::cout << cdom::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (12 - failed) << "/12 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
