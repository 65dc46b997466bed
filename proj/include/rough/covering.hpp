#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rough/approx.hpp"
#include "rough/families.hpp"

namespace rough {

/// Nonempty subsets whose union is the universe, kept in canonical order.
class Covering {
 public:
  /// Throws Error(NotACovering) for an empty member or an uncovered element.
  Covering(Universe u, std::vector<Subset> members);

  const Universe& universe() const { return family_.universe; }
  const std::vector<Subset>& members() const { return family_.members; }
  const SubsetFamily& family() const { return family_; }
  std::size_t size() const { return family_.size(); }

 private:
  SubsetFamily family_;
};

/// Maximal cliques of the tolerance graph in canonical order. Each block is
/// checked to equal the intersection of its members' neighborhoods.
SubsetFamily blocks(const Relation& r);

/// Pairs sharing a member: ⋃ {X² | X ∈ h}.
Relation induced_tolerance(const Covering& h);

/// No member can be dropped without uncovering some element.
bool is_irredundant(const Covering& h);

/// The four equivalent clauses, evaluated independently.
struct Characterization {
  bool a = false;  ///< aRb ⇒ ∃c,d: aRc, bRd, R(d) ⊆ R(k) for all k ∈ R(c)
  bool b = false;  ///< aRb ⇒ ∃d: R(d) ⊆ R(a)∩R(b), R(d) ⊆ R(x) for all x R d
  bool c = false;  ///< aRb ⇒ ∃ block B, d ∈ B: a,b ∈ R(d) = B
  bool d = false;  ///< r is induced by an irredundant covering
  /// The blocks of the form R(d) when they form such a covering.
  std::optional<Covering> certificate;
  bool all_agree() const { return a == b && b == c && c == d; }
};

Characterization irredundant_covering_characterization(const Relation& r);

struct RepresentativeReport {
  /// (member, least d with R(d) = member) for every member that has one.
  std::vector<std::pair<Subset, std::size_t>> witnesses;
  /// First member without a witness.
  std::optional<Subset> failing_member;
  bool complete() const { return !failing_member; }
};

/// Throws Error(Mismatch) when r is not the tolerance induced by h.
RepresentativeReport representative_certificate(const Covering& h, const Relation& r);

/// ℋ_x = ⋃ {B ∈ h | x ∈ B}.
Subset covering_neighborhood(const Covering& h, std::size_t x);
/// {x | ℋ_x ⊆ X}.
Subset pomykala_lower(const Covering& h, Subset x);
/// ⋃ {B ∈ h | B ∩ X ≠ ∅}.
Subset pomykala_upper(const Covering& h, Subset x);

/// Inclusion-minimal members containing x, in member order.
std::vector<Subset> minimal_description(const Covering& h, std::size_t x);

struct BonikowskiApproximation {
  std::vector<Subset> bottom;    ///< members contained in X
  std::vector<Subset> boundary;  ///< md(x) over x ∈ X ∖ ⋃ bottom
  std::vector<Subset> top;       ///< bottom ∪ boundary
};

BonikowskiApproximation bonikowski_approximations(const Covering& h, Subset x);

/// The pairs (𝒞_*(X), 𝒞^*(X)) over all X, ordered coordinatewise by
/// inclusion of member families. Throws Error(CapExceeded).
FinitePoset bonikowski_poset(const Covering& h, std::size_t cap = kDefaultExhaustiveCap);

struct FamilyAtomsReport {
  std::vector<Subset> up_atoms;
  std::vector<Subset> down_atoms;
  /// Neighborhoods R(x) that are blocks, and their lower approximations.
  std::vector<Subset> expected_up_atoms;
  std::vector<Subset> expected_down_atoms;
  bool up_boolean = false;
  bool down_boolean = false;
  bool up_atomistic = false;
  bool down_atomistic = false;
  std::size_t up_size = 0;
  std::size_t down_size = 0;
  bool holds() const {
    return up_atoms == expected_up_atoms && down_atoms == expected_down_atoms && up_boolean && down_boolean &&
           up_atomistic && down_atomistic;
  }
};

/// Atoms and Boolean structure of ℘(U)^↑ and ℘(U)^↓. Throws
/// Error(PreconditionFailed) naming the failing clauses unless the
/// tolerance is induced by an irredundant covering.
FamilyAtomsReport family_atoms_check(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);

}  // namespace rough
