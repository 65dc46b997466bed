#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rough/algebra.hpp"
#include "rough/covering.hpp"

namespace rough {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "rough-analysis/1";
inline constexpr const char* kCarrierSchema = "rough-carrier/1";

/// Reads a whole file; throws Error(ParseError) when it cannot be opened.
std::string read_file(const std::string& path);

/// {"universe": [...], "neighborhoods": {"x": [...], ...}}; elements without
/// an entry get an empty neighborhood. Throws Error(ParseError) or
/// Error(UnknownElement).
Relation parse_relation_json(const std::string& text);
Json relation_json(const Relation& r);

/// {"universe": [...], "members": [[...], ...]}.
Covering parse_covering_json(const std::string& text);
Json covering_json(const Covering& h);

Json subset_json(const Universe& u, Subset s);
Json family_json(const SubsetFamily& f);
Json pair_json(const Universe& u, RoughPair p);
Json classification_json(const FinitePoset& p, const Classification& c);
Json characterization_json(const Universe& u, const Characterization& ch);
Json algebra_json(const DeMorganLattice& l, const AlgebraReport& r);

/// Carrier dump; every pair is tagged "rs" when it is a rough set of `rs`
/// and "completion" otherwise.
Json carrier_json(const std::string& what, const Universe& u, const std::vector<RoughPair>& carrier,
                  const std::vector<RoughPair>& rs);

/// Flattens a JSON document into "path: value" lines.
std::string json_to_text(const Json& j);

}  // namespace rough
