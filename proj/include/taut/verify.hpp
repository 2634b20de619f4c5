#ifndef TAUT_VERIFY_HPP
#define TAUT_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace taut {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double millis = 0.0;
};

/// "beta", "tables", "recursion", "chow", "identities", "pipeline".
const std::vector<std::string>& verify_suite_names();

/// Runs one suite, or every suite for "all". Results come back in a fixed
/// order. Throws std::invalid_argument on an unknown suite name.
/// `recursion_max_n` bounds the partition enumeration of the recursion suite.
std::vector<CheckResult> run_verify_suite(std::string_view suite, int recursion_max_n = 5);

} // namespace taut

#endif // TAUT_VERIFY_HPP
