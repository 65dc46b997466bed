#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rough/subset.hpp"
#include "rough/universe.hpp"

namespace rough {

/// Default cap on |U| for operations that sweep all 2^|U| subsets.
inline constexpr std::size_t kDefaultExhaustiveCap = 20;

/// Throws Error(CapExceeded) when `n` exceeds `cap`.
void require_within_cap(std::size_t n, std::size_t cap, std::string_view what);

/// Binary relation on a finite universe, stored as neighborhoods R(x).
class Relation {
 public:
  Relation() = default;
  /// Empty relation on `u`.
  explicit Relation(Universe u);
  /// Neighborhood list indexed by element; every set must lie inside `u`.
  Relation(Universe u, std::vector<Subset> neighborhoods);

  static Relation identity(const Universe& u);
  static Relation full(const Universe& u);
  /// Symmetric, reflexive closure of the given undirected edges.
  static Relation tolerance_from_edges(const Universe& u,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  bool related(std::size_t x, std::size_t y) const { return nbr_[x].contains(y); }
  void add(std::size_t x, std::size_t y) { nbr_.at(x).insert(y); }

  Subset neighborhood(std::size_t x) const { return nbr_.at(x); }
  /// R(x) by label; throws Error(UnknownElement).
  Subset neighborhood(std::string_view x) const;
  const std::vector<Subset>& neighborhoods() const { return nbr_; }

  /// R(X): union of the neighborhoods of the members of X.
  Subset image(Subset x) const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_tolerance() const { return is_reflexive() && is_symmetric(); }
  bool is_equivalence() const { return is_tolerance() && is_transitive(); }

  /// Relation on the sub-universe X with neighborhoods R(x) ∩ X.
  Relation restrict(Subset x) const;

  /// Relational composition: (x, z) holds iff x R y and y S z for some y.
  Relation compose(const Relation& other) const;
  /// n-fold composition R^n (n >= 1).
  Relation power(unsigned n) const;
  /// Smallest transitive relation containing R; throws Error(NotATolerance)
  /// unless R is a tolerance (the result is then an equivalence).
  Relation transitive_closure() const;

  /// Number of unordered pairs {x, y}, x != y, that are related.
  std::size_t edge_count() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.universe_ == b.universe_ && a.nbr_ == b.nbr_;
  }

 private:
  Universe universe_;
  std::vector<Subset> nbr_;
};

/// Sequence of distinct elements, consecutive ones related.
struct Path {
  std::vector<std::size_t> nodes;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Breadth-first distances from a set X and their parity split.
struct ParityDecomposition {
  Subset closure;  ///< elements joined to X by some path
  Subset even;
  Subset odd;
  /// Minimal path length to X; set exactly on `closure`.
  std::vector<std::optional<unsigned>> distance;
};

/// Distances from X under R, restricted to paths inside `domain`.
/// Precondition: X ⊆ domain and R is symmetric on `domain`.
ParityDecomposition parity_within(const Relation& r, Subset domain, Subset x);

/// Parity decomposition over the whole universe; throws Error(NotATolerance).
ParityDecomposition parity_decomposition(const Relation& r, Subset x);

/// Components of the transitive closure of R restricted to `domain`, each as
/// a subset; ordered by least member.
std::vector<Subset> components_within(const Relation& r, Subset domain);

/// Outcome of the chord test on 5-node paths.
struct ConditionCResult {
  bool holds = true;
  std::optional<Path> witness;  ///< chordless path (a0..a4) when `holds` is false
};

/// Condition (C): every path of 5 distinct nodes has related nodes at index
/// distance >= 2. On failure returns the lexicographically least chordless
/// path. Throws Error(NotATolerance).
ConditionCResult satisfies_condition_c(const Relation& r);

/// True iff (R_X)^3 is transitive for every X ⊆ U (exhaustive).
/// Throws Error(CapExceeded) when |U| > cap, Error(NotATolerance).
bool r3_equivalence_everywhere(const Relation& r, std::size_t cap = kDefaultExhaustiveCap);

}  // namespace rough
