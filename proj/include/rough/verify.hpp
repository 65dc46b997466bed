#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rough/approx.hpp"

namespace rough {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  ///< witness or summary
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

/// galois, ortho, thmdc, latticethms, algebra, completion.
const std::vector<std::string>& suite_names();

/// Runs one named suite; "all" is not accepted here. Throws
/// Error(InvalidArgument) for an unknown name.
SuiteReport run_suite(const ApproximationSpace& s, const std::string& name, std::size_t cap = kDefaultExhaustiveCap);

}  // namespace rough
