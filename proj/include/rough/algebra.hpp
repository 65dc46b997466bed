#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rough/families.hpp"

namespace rough {

/// Bounded lattice with a unary operation ∼. Involution and antitonicity are
/// not assumed; kleene_check reports them.
class DeMorganLattice {
 public:
  /// Throws Error(InvalidArgument) when `p` is not a bounded lattice or the
  /// map has the wrong size or range.
  DeMorganLattice(FinitePoset p, std::vector<std::size_t> negation);

  const FinitePoset& poset() const { return *poset_; }
  const LatticeOps& ops() const { return *ops_; }
  std::size_t size() const { return neg_.size(); }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t join(std::size_t a, std::size_t b) const { return ops_->join(a, b); }
  std::size_t meet(std::size_t a, std::size_t b) const { return ops_->meet(a, b); }
  bool leq(std::size_t a, std::size_t b) const { return ops_->leq(a, b); }
  std::size_t bottom() const { return ops_->bottom(); }
  std::size_t top() const { return ops_->top(); }
  const std::string& label(std::size_t a) const { return poset_->label(a); }

 private:
  std::shared_ptr<const FinitePoset> poset_;
  std::shared_ptr<const LatticeOps> ops_;
  std::vector<std::size_t> neg_;
};

struct KleeneReport {
  bool k1 = false;  ///< ∼∼a = a
  bool k2 = false;  ///< a ≤ b ⇔ ∼b ≤ ∼a
  bool k3 = false;  ///< a ∧ ∼a ≤ b ∨ ∼b
  bool distributive = false;
  std::optional<std::string> witness;
  bool axioms_hold() const { return k1 && k2 && k3; }
  /// Axioms plus distributivity.
  bool is_kleene_algebra() const { return axioms_hold() && distributive; }
};

KleeneReport kleene_check(const DeMorganLattice& l);

/// Greatest z with z ∧ a ≤ b, found by scanning; absent when none is greatest.
std::optional<std::size_t> relative_pseudocomplement(const DeMorganLattice& l, std::size_t a, std::size_t b);
/// ⋁{z | z ∧ a ≤ b}; agrees with the scan on distributive lattices only.
std::size_t pseudocomplement_join_formula(const DeMorganLattice& l, std::size_t a, std::size_t b);

/// a → b = a ⇒ (∼a ∨ b).
std::optional<std::size_t> weak_implication(const DeMorganLattice& l, std::size_t a, std::size_t b);

struct PairCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Every relative pseudocomplement exists.
PairCheck heyting_check(const DeMorganLattice& l);
/// Every weak implication exists.
PairCheck quasi_nelson_check(const DeMorganLattice& l);

struct NelsonCheck {
  bool holds = false;
  /// (a, b, c) with (a ∧ b) → c ≠ a → (b → c).
  std::optional<std::array<std::size_t, 3>> witness;
  std::string reason;
};

/// (a ∧ b) → c = a → (b → c) for all triples; false when some weak
/// implication is missing.
NelsonCheck nelson_equation_check(const DeMorganLattice& l);

struct AlgebraReport {
  KleeneReport kleene;
  PairCheck heyting;
  PairCheck quasi_nelson;
  NelsonCheck nelson;
};

AlgebraReport analyze_algebra(const DeMorganLattice& l);

/// RS with ∼(A, B) = (Bᶜ, Aᶜ); throws Error(InvalidArgument) when RS is not
/// a lattice.
DeMorganLattice rs_algebra(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);
/// I(RS) with ∼.
DeMorganLattice irs_algebra(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);
/// D(RS) with the swap (A, B) ↦ (B, A), ordered by ℘(U)^↓ × ℘(U)^↓-dual.
DeMorganLattice drs_algebra(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);
/// FC(RS) with the swap (α, β) ↦ (β, α).
DeMorganLattice fc_algebra(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);

}  // namespace rough
