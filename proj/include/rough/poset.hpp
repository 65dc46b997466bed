#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rough {

/// Fixed-length bit vector used for up/down sets over a poset carrier.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t length() const { return n_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  std::size_t count() const;
  bool none() const;
  bool subset_of(const Bits& o) const;
  std::vector<std::size_t> indices() const;

  Bits& operator&=(const Bits& o);
  Bits& operator|=(const Bits& o);
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend bool operator==(const Bits&, const Bits&) = default;
  friend bool operator<(const Bits& a, const Bits& b) { return a.words_ < b.words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Finite partially ordered set with labelled points. The order is checked
/// for reflexivity, antisymmetry and transitivity at construction.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  const Bits& up_set(std::size_t a) const { return up_[a]; }
  const Bits& down_set(std::size_t a) const { return down_[a]; }

  /// Least element of a set of upper bounds, if one exists.
  std::optional<std::size_t> least_of(const Bits& set) const;
  std::optional<std::size_t> greatest_of(const Bits& set) const;

  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  /// Supremum/infimum of an arbitrary subset (empty set: bottom/top).
  std::optional<std::size_t> join_of(const std::vector<std::size_t>& xs) const;
  std::optional<std::size_t> meet_of(const std::vector<std::size_t>& xs) const;

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  /// Covering pairs (lower, upper) of the Hasse diagram, ordered by index.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::vector<std::size_t> atoms() const;

  FinitePoset dual() const;
  /// Induced suborder on the listed points (in the given order).
  FinitePoset induced(const std::vector<std::size_t>& points) const;

  friend bool same_order(const FinitePoset& a, const FinitePoset& b);

 private:
  std::vector<std::string> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

/// True when both posets have the same size and order matrix (labels ignored).
bool same_order(const FinitePoset& a, const FinitePoset& b);

/// Precomputed join/meet tables of a lattice.
class LatticeOps {
 public:
  /// Throws Error(InvalidArgument) when the poset is not a bounded lattice.
  explicit LatticeOps(const FinitePoset& p);

  const FinitePoset& poset() const { return *p_; }
  std::size_t size() const { return n_; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  bool leq(std::size_t a, std::size_t b) const { return p_->leq(a, b); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

 private:
  const FinitePoset* p_;
  std::size_t n_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

struct Classification {
  bool is_lattice = false;
  bool is_complete = false;  ///< finite: lattice with bounds
  bool is_distributive = false;
  bool is_modular = false;
  bool is_boolean = false;
  bool is_atomistic = false;
  std::optional<std::pair<std::size_t, std::size_t>> join_failure;
  std::optional<std::pair<std::size_t, std::size_t>> meet_failure;
  /// N5 as {bottom, a, c, b, top} with a < c and b the side element.
  std::optional<std::array<std::size_t, 5>> n5;
  /// Triple (x, y, z) with x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z).
  std::optional<std::array<std::size_t, 3>> distributivity_failure;
};

Classification classify(const FinitePoset& p);

/// Every pentagon sublattice, each as the sorted 5-tuple of its points.
std::vector<std::array<std::size_t, 5>> n5_sublattices(const FinitePoset& lattice);

/// True when the five points form a sublattice isomorphic to N5.
bool is_n5_sublattice(const FinitePoset& lattice, const std::array<std::size_t, 5>& points);

/// Backtracking search for an order-isomorphism p → q; result[i] is the image
/// of point i.
std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& p, const FinitePoset& q);

/// Checks that `map` is a bijection p → q with a ≤ b ⇔ map[a] ≤ map[b].
bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q, const std::vector<std::size_t>& map);

/// Graphviz rendering of the Hasse diagram; edges run from lower to upper.
std::string to_dot(const FinitePoset& p, const std::string& name);

}  // namespace rough
