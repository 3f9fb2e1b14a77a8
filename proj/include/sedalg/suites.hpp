#pragma once
// Verification suites shared by the command line tool and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include "sedalg/report.hpp"

namespace sedalg {

struct SuiteOptions {
  int jobs = 1;
  // count printed invariants whose conjugate of Phi only flips term signs
  bool parity_relaxed = false;
  std::uint64_t seed = 1;
};

// table2, calibrations, census, invariants, automorphisms, closure
const std::vector<std::string>& suite_names();
// Also accepts "all". Throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opt);

// Titles of the fourteen acceptance criteria, index 1..14 (0 unused).
const std::vector<std::string>& criterion_titles();

}  // namespace sedalg
