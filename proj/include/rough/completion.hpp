#pragma once

#include <cstddef>
#include <vector>

#include "rough/families.hpp"

namespace rough {

/// Elements whose neighborhood is a singleton.
struct SingletonCore {
  Subset members;
};

SingletonCore singleton_core(const ApproximationSpace& s);

/// (A, B) ∈ ℘(U)^↓ × ℘(U)^↑ with A^↑ ⊆ B^↓ and 𝒮 ⊆ A ∪ Bᶜ.
bool in_increasing_representation(const ApproximationSpace& s, RoughPair p);
/// I(RS) in canonical order; contains RS.
std::vector<RoughPair> increasing_representation(const ApproximationSpace& s,
                                                 std::size_t cap = kDefaultExhaustiveCap);

/// ∼(A, B) = (Bᶜ, Aᶜ) on I(RS); throws Error(NotInCarrier).
RoughPair de_morgan_tilde(const ApproximationSpace& s, RoughPair p);
/// 𝔠(A, B) = (B, A) on D(RS); throws Error(NotInCarrier).
RoughPair de_morgan_swap(const ApproximationSpace& s, RoughPair p);

/// φ(A, B) = (A, Bᶜ).
RoughPair to_disjoint(const ApproximationSpace& s, RoughPair p);

/// (A, B) ∈ ℘(U)^↓ × ℘(U)^↓ with A^↑ ∩ B^↑ = ∅ and 𝒮 ⊆ A ∪ B.
bool in_disjoint_representation(const ApproximationSpace& s, RoughPair p);
/// dRS = {(X^↓, X^↑ᶜ)}, canonical order.
std::vector<RoughPair> disjoint_rs(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);
/// D(RS), canonical order.
std::vector<RoughPair> disjoint_representation(const ApproximationSpace& s,
                                               std::size_t cap = kDefaultExhaustiveCap);

struct DMCompletion {
  FinitePoset lattice;
  /// Cuts as down-sets of the input poset, in the order of `lattice`.
  std::vector<Bits> cuts;
  /// embedding[i] is the cut of the principal ideal of input point i.
  std::vector<std::size_t> embedding;
};

/// Dedekind–MacNeille completion by cuts: intersections of principal ideals,
/// together with the whole carrier.
DMCompletion dedekind_macneille(const FinitePoset& p);

struct Density {
  bool join_dense = false;
  bool meet_dense = false;
};

/// Whether every element of `sup` is a join (meet) of embedded elements.
Density density_check(const FinitePoset& sub, const FinitePoset& sup, const std::vector<std::size_t>& embedding);

/// Generators {(R(x)^↓, R(x)^↑) | x ∈ A} ∪ {(∅, R(x)) | x ∈ B^↓ ∖ A}, all
/// members of RS, whose join in I(RS) is (A, B). Throws Error(NotInCarrier)
/// when (A, B) ∉ I(RS), and Error(Mismatch) if the join check fails.
std::vector<RoughPair> join_generators(const ApproximationSpace& s, RoughPair p);

/// Join of pairs in ℘(U)^↓ × ℘(U)^↑ (bottom (∅, ∅) for none).
RoughPair product_join_of(const ApproximationSpace& s, const std::vector<RoughPair>& pairs);

}  // namespace rough
