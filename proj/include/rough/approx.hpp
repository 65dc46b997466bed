#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "rough/relation.hpp"

namespace rough {

/// Raw approximations for an arbitrary relation (no tolerance check).
/// lower: {x | R(x) ⊆ X}; upper: {x | R(x) ∩ X ≠ ∅}.
Subset lower_approximation(const Relation& r, Subset x);
Subset upper_approximation(const Relation& r, Subset x);

/// Approximation operators of a tolerance. Construction rejects relations
/// that are not reflexive and symmetric.
class ApproximationSpace {
 public:
  explicit ApproximationSpace(Relation r);

  const Relation& relation() const { return r_; }
  const Universe& universe() const { return r_.universe(); }
  std::size_t size() const { return r_.size(); }
  Subset full() const { return r_.universe().full(); }
  Subset complement(Subset x) const { return x.complement(size()); }
  Subset neighborhood(std::size_t x) const { return r_.neighborhood(x); }

  Subset lower(Subset x) const;
  /// For a tolerance this is the image R(X).
  Subset upper(Subset x) const { return r_.image(x); }

  /// X ↦ X^↑↓, the closure operator whose fixpoints form ℘(U)^↓.
  Subset closure_updown(Subset x) const { return lower(upper(x)); }
  /// X ↦ X^↓↑, the interior operator whose fixpoints form ℘(U)^↑.
  Subset interior_downup(Subset x) const { return upper(lower(x)); }

  bool in_down_family(Subset a) const { return closure_updown(a) == a; }
  bool in_up_family(Subset a) const { return interior_downup(a) == a; }

  /// A^⊥ = (A^c)^↑ on ℘(U)^↑; throws Error(NotInFamily).
  Subset ortho_up(Subset a) const;
  /// A^⊤ = (A^c)^↓ on ℘(U)^↓; throws Error(NotInFamily).
  Subset ortho_down(Subset a) const;

  /// Elements whose neighborhood is exactly themselves.
  Subset singleton_core() const;

 private:
  Relation r_;
};

struct GaloisReport {
  bool reflexive_clause = true;  ///< x ∈ {x}^↑ for all x
  bool symmetric_clause = true;  ///< x ∈ {y}^↑ ⇒ y ∈ {x}^↑
  bool adjunction = true;        ///< X^↑ ⊆ Y ⇔ X ⊆ Y^↓ on all checked pairs
  std::uint64_t pairs_checked = 0;
  std::optional<std::string> witness;

  bool holds() const { return reflexive_clause && symmetric_clause && adjunction; }
};

/// Checks the Galois characterization of tolerance approximations. The
/// adjunction is swept over all subset pairs when 4^|U| <= `exhaustive_pairs`,
/// otherwise over `samples` random pairs drawn with `seed`.
GaloisReport verify_galois_characterization(const ApproximationSpace& s,
                                            std::uint64_t exhaustive_pairs = std::uint64_t{1} << 20,
                                            std::size_t samples = 20000, std::uint64_t seed = 1);

}  // namespace rough
