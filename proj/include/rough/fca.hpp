#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rough/families.hpp"

namespace rough {

/// Formal context (G, M, I); rows[g] is the set of attributes of object g.
class Context {
 public:
  Context(Universe objects, Universe attributes, std::vector<Subset> rows);

  /// The complement context (U, U, Rᶜ) of a tolerance.
  static Context bridge(const Relation& r);

  const Universe& objects() const { return objects_; }
  const Universe& attributes() const { return attributes_; }
  const std::vector<Subset>& rows() const { return rows_; }
  bool incident(std::size_t g, std::size_t m) const { return rows_[g].contains(m); }
  Subset column(std::size_t m) const { return cols_[m]; }

  /// A′ for a set of objects: attributes shared by all of A.
  Subset derive_objects(Subset a) const;
  /// B′ for a set of attributes: objects having all of B.
  Subset derive_attributes(Subset b) const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  Universe objects_;
  Universe attributes_;
  std::vector<Subset> rows_;
  std::vector<Subset> cols_;
};

struct Concept {
  Subset extent;
  Subset intent;
  friend bool operator==(Concept, Concept) = default;
};

/// All concepts ordered canonically by extent. The sweep runs over the
/// smaller side; throws Error(CapExceeded) above `cap`.
std::vector<Concept> concepts(const Context& ctx, std::size_t cap = kDefaultExhaustiveCap);
/// Extent inclusion order, labelled by extents.
FinitePoset concept_poset(const Context& ctx, const std::vector<Concept>& cs);

/// (A, B)^△ = (Aᶜ″, Aᶜ′).
Concept weak_negation(const Context& ctx, Concept c);
/// (A, B)^▽ = (Bᶜ′, Bᶜ″).
Concept weak_opposition(const Context& ctx, Concept c);

/// Literal test: every (g, m) ∉ I has h, n with (g, n) ∉ I, (h, m) ∉ I and
/// h ∈ k″ for every k ∈ G ∖ {n}′. Throws Error(InvalidArgument) unless square.
bool condition_dagger(const Context& ctx);

/// Pair of concepts (α, β).
struct ConceptPair {
  Concept first;
  Concept second;
  friend bool operator==(const ConceptPair&, const ConceptPair&) = default;
};

/// FC(RS) = {(α, β) | β ≤ α^▽, 𝒮 ⊆ ext α ∪ ext β} over the bridge context,
/// ordered by extent of α and reverse extent of β. Listed in the canonical
/// order of their extent pairs.
std::vector<ConceptPair> fc_representation(const ApproximationSpace& s, std::size_t cap = kDefaultExhaustiveCap);
FinitePoset fc_poset(const ApproximationSpace& s, const std::vector<ConceptPair>& fc);

/// (A, B) ↦ ((A, A^⊤), (B, B^⊤)).
ConceptPair disjoint_to_concepts(const ApproximationSpace& s, RoughPair p);

/// Burmeister plain-text format: "B", blank, counts, names, X/. grid.
std::string to_burmeister(const Context& ctx, const std::string& name = "");
/// Throws Error(ParseError).
Context parse_burmeister(const std::string& text);

}  // namespace rough
