#pragma once

#include <string>
#include <vector>

namespace zeno::app {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fast built-in example checks across all modules.
std::vector<CheckResult> run_selftest();

}  // namespace zeno::app
