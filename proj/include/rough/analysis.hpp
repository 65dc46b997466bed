#pragma once

#include <cstddef>

#include "rough/io.hpp"

namespace rough {

/// Full pipeline report for a tolerance: relation summary, condition (C),
/// characterization, families, RS structure, completions and algebra.
/// `source` is copied into the report verbatim.
Json analysis_report(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap, const Json& source = {});

}  // namespace rough
