#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lsym::verify {

struct Check {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string detail;
  bool passed() const noexcept { return cases > 0 && failures == 0; }
};

struct SuiteReport {
  std::string name;
  std::vector<Check> checks;
  double seconds = 0;
  bool passed() const noexcept;
};

struct Options {
  std::uint64_t seed = 1;
  int points = 20;
};

/// Names accepted by run_suite, in run order.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const Options& opts = {});

/// Parameter arrays x[i][c] in (0, 1] used by the factorization suites;
/// n and m cycle through 1..3.
std::vector<std::vector<std::vector<double>>> random_whirl_arrays(std::uint64_t seed, int count);

}  // namespace lsym::verify
