#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rough/families.hpp"

namespace rough {

/// Builds S ⊆ Y^↓ ∖ T with S^↑ ∪ T^↑ = Y and R(y) ⊄ S ∪ T for every y ∈ S,
/// following the parity argument. Requires Y ∈ ℘(U)^↑, T ⊆ Y^↓ and
/// |R(x)| ≥ 2 on Y ∖ T^↑; throws Error(PreconditionFailed) naming the clause.
/// Representatives are the least index in each class.
Subset construct_s(const ApproximationSpace& s, Subset y, Subset t);

/// Checks the three postconditions of construct_s; empty string when all hold.
std::string check_s(const ApproximationSpace& s, Subset y, Subset t, Subset result);

/// Intermediate sets of the meet construction.
struct MeetConstruction {
  Subset z;
  Subset t;  ///< (⋂H)^↓↑
  Subset y;  ///< (⋂ X^↑)^↓↑
  Subset s;
  Subset v;
  Subset q;
  Subset p;
};

/// Finds Z with Z^↓ = ⋂ X^↓ and Z^↑ = (⋂ X^↑)^↓↑ over X ∈ H. The result is
/// always verified; throws Error(ConstructionFailed) when the construction
/// does not produce such a Z (possible only outside its hypotheses).
MeetConstruction construct_meet_z(const ApproximationSpace& s, const std::vector<Subset>& h);

struct CompletenessReport {
  bool complete = false;
  /// RS closed under the binary product meets and joins of ℘(U)^↓ × ℘(U)^↑.
  bool closed_under_product_ops = false;
  std::string reason;
  /// Pair lacking a join (or meet) in RS when not complete.
  std::optional<std::pair<RoughPair, RoughPair>> witness;
};

/// Exhaustive decision whether RS is a (complete) lattice, cross-checked
/// against closure of RS under the product operations.
CompletenessReport rs_is_complete_lattice(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);

}  // namespace rough
