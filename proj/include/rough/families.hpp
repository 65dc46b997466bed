#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rough/approx.hpp"
#include "rough/poset.hpp"

namespace rough {

/// Distinct subsets of a universe in canonical order (cardinality, then
/// lexicographic on indices).
struct SubsetFamily {
  Universe universe;
  std::vector<Subset> members;

  std::size_t size() const { return members.size(); }
  bool contains(Subset s) const;
  std::optional<std::size_t> index_of(Subset s) const;
  /// Members ordered by inclusion, labelled with Universe::format.
  FinitePoset poset() const;
};

/// Sorts and deduplicates `members` into canonical order.
SubsetFamily make_family(Universe u, std::vector<Subset> members);

/// Ordered pair of subsets, compared coordinatewise.
struct RoughPair {
  Subset lo;
  Subset hi;
  friend bool operator==(RoughPair, RoughPair) = default;
};

inline bool pair_leq(RoughPair a, RoughPair b) { return a.lo.subset_of(b.lo) && a.hi.subset_of(b.hi); }
/// Canonical pair order: by first coordinate, then by second.
bool pair_canonical_less(RoughPair a, RoughPair b);
/// "(a,abc)" style rendering.
std::string format_pair(const Universe& u, RoughPair p);

/// Sorts and deduplicates pairs canonically.
std::vector<RoughPair> canonical_pairs(std::vector<RoughPair> pairs);
std::optional<std::size_t> index_of(const std::vector<RoughPair>& carrier, RoughPair p);

/// Coordinatewise order on `carrier`; the second coordinate is reversed when
/// `second_dual` is set (the ℘(U)^↓ × ℘(U)^↓-dual order).
FinitePoset pair_poset(const Universe& u, const std::vector<RoughPair>& carrier, bool second_dual = false);

/// ℘(U)^↓ = {X^↓ | X ⊆ U}; throws Error(CapExceeded) above `cap`.
SubsetFamily enumerate_down_family(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);
/// ℘(U)^↑ = {X^↑ | X ⊆ U}.
SubsetFamily enumerate_up_family(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);

/// RS = {(X^↓, X^↑) | X ⊆ U}, canonical order.
std::vector<RoughPair> enumerate_rs(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);

/// {(X^↓↑, X^↑↓) | X ⊆ U} listed in the order of `rs` (image of each pair).
std::vector<RoughPair> interior_closure_image(const ApproximationSpace& s, const std::vector<RoughPair>& rs);

/// Join in ℘(U)^↓: (⋃ members)^↑↓. Throws Error(NotInFamily).
Subset down_family_join(const ApproximationSpace& s, const std::vector<Subset>& members);
/// Meet in ℘(U)^↓: plain intersection (U for no members).
Subset down_family_meet(const ApproximationSpace& s, const std::vector<Subset>& members);
/// Join in ℘(U)^↑: plain union.
Subset up_family_join(const ApproximationSpace& s, const std::vector<Subset>& members);
/// Meet in ℘(U)^↑: (⋂ members)^↓↑.
Subset up_family_meet(const ApproximationSpace& s, const std::vector<Subset>& members);

/// Product lattice operations on ℘(U)^↓ × ℘(U)^↑.
RoughPair product_meet(const ApproximationSpace& s, RoughPair a, RoughPair b);
RoughPair product_join(const ApproximationSpace& s, RoughPair a, RoughPair b);

}  // namespace rough
