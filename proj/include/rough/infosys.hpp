#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rough/covering.hpp"

namespace rough {

enum class SystemMode { Deterministic, Incomplete, Nondeterministic };

const char* to_string(SystemMode m);

/// One table entry: the null marker, or a nonempty set of values.
struct Cell {
  bool missing = false;
  std::vector<std::string> values;  ///< sorted, distinct

  bool is_single() const { return !missing && values.size() == 1; }
  friend bool operator==(const Cell&, const Cell&) = default;
};

class InformationSystem {
 public:
  /// Infers the mode; throws Error(ParseError) when null markers and value
  /// sets are mixed or a cell is empty.
  InformationSystem(Universe objects, std::vector<std::string> attributes, std::vector<std::vector<Cell>> cells);

  /// Header row of attribute names after an object-id column. Cells are a
  /// bare token, "*" or "∗", or "{v1|v2|...}". Throws Error(ParseError).
  static InformationSystem parse_csv(const std::string& text);

  const Universe& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  SystemMode mode() const { return mode_; }
  const Cell& cell(std::size_t x, std::size_t a) const { return cells_[x][a]; }

  /// Attribute indices for names; throws Error(UnknownElement).
  std::vector<std::size_t> attribute_indices(const std::vector<std::string>& names) const;
  std::vector<std::size_t> all_attributes() const;

 private:
  Universe objects_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<Cell>> cells_;
  SystemMode mode_ = SystemMode::Deterministic;
};

/// x ~ y iff on every attribute of B the values agree or one is missing.
/// Throws Error(ModeError) for nondeterministic systems.
Relation sim_tolerance(const InformationSystem& is, const std::vector<std::size_t>& b);

/// Objects with no missing value (incomplete) or only single values
/// (nondeterministic) on B.
Subset complete_elements(const InformationSystem& is, const std::vector<std::size_t>& b);

struct SimilarityCovering {
  Covering covering;
  bool irredundant = false;
  /// Whether the covering induces sim_B.
  bool induces_similarity = false;
};

/// {sim_B(x) | x complete}. Throws Error(PreconditionFailed) naming an object
/// with no similar complete object.
SimilarityCovering covering_hb(const InformationSystem& is, const std::vector<std::size_t>& b);

struct PotentialIndiscernibility {
  Relation relation;
  bool reflexive = false;
  /// Objects lacking a compatible complete witness, hence unrelated to themselves.
  Subset non_reflexive;
  /// Characterization clauses (b) and (c); evaluated only when reflexive.
  std::optional<bool> clause_b;
  std::optional<bool> clause_c;
};

/// x R_B y iff some complete c has a(c) ∈ a(x) ∩ a(y) for all a ∈ B.
/// Throws Error(ModeError) for systems with missing values.
PotentialIndiscernibility rb_tolerance(const InformationSystem& is, const std::vector<std::size_t>& b);

/// x ~ y iff a(x) = a(y) for some a ∈ B. Throws Error(ModeError) unless the
/// system is deterministic.
Relation wind_tolerance(const InformationSystem& is, const std::vector<std::size_t>& b);

}  // namespace rough
