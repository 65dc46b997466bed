#include "rough/infosys.hpp"

#include <algorithm>
#include <sstream>

#include "rough/error.hpp"

namespace rough {

const char* to_string(SystemMode m) {
  switch (m) {
    case SystemMode::Deterministic:
      return "deterministic";
    case SystemMode::Incomplete:
      return "incomplete";
    case SystemMode::Nondeterministic:
      return "nondeterministic";
  }
  return "unknown";
}

InformationSystem::InformationSystem(Universe objects, std::vector<std::string> attributes,
                                     std::vector<std::vector<Cell>> cells)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), cells_(std::move(cells)) {
  if (cells_.size() != objects_.size()) throw Error(ErrorKind::ParseError, "one row per object required");
  bool any_missing = false;
  bool any_set = false;
  for (std::size_t x = 0; x < cells_.size(); ++x) {
    if (cells_[x].size() != attributes_.size()) {
      throw Error(ErrorKind::ParseError, "row " + objects_.label(x) + " has the wrong number of cells");
    }
    for (auto& c : cells_[x]) {
      if (!c.missing && c.values.empty()) throw Error(ErrorKind::ParseError, "empty cell in row " + objects_.label(x));
      std::sort(c.values.begin(), c.values.end());
      c.values.erase(std::unique(c.values.begin(), c.values.end()), c.values.end());
      any_missing = any_missing || c.missing;
      any_set = any_set || c.values.size() > 1;
    }
  }
  if (any_missing && any_set) {
    throw Error(ErrorKind::ParseError, "missing values and value sets cannot appear in the same system");
  }
  mode_ = any_missing ? SystemMode::Incomplete : any_set ? SystemMode::Nondeterministic : SystemMode::Deterministic;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Cell parse_cell(const std::string& raw, std::size_t line) {
  if (raw == "*" || raw == "∗") return {true, {}};
  if (raw.empty()) throw Error(ErrorKind::ParseError, "empty cell on line " + std::to_string(line));
  if (raw.front() == '{') {
    if (raw.back() != '}') throw Error(ErrorKind::ParseError, "unterminated value set on line " + std::to_string(line));
    Cell c;
    for (auto& v : split(raw.substr(1, raw.size() - 2), '|')) {
      if (v.empty()) throw Error(ErrorKind::ParseError, "empty value in set on line " + std::to_string(line));
      c.values.push_back(v);
    }
    return c;
  }
  return {false, {raw}};
}

}  // namespace

InformationSystem InformationSystem::parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!trim(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty table");
  auto header = split(lines[0], ',');
  if (header.size() < 2) throw Error(ErrorKind::ParseError, "header needs an id column and at least one attribute");
  std::vector<std::string> attrs(header.begin() + 1, header.end());
  std::vector<std::string> ids;
  std::vector<std::vector<Cell>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split(lines[i], ',');
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(i + 1) + " has " + std::to_string(fields.size()) +
                                             " fields, expected " + std::to_string(header.size()));
    }
    ids.push_back(fields[0]);
    std::vector<Cell> row;
    for (std::size_t k = 1; k < fields.size(); ++k) row.push_back(parse_cell(fields[k], i + 1));
    rows.push_back(std::move(row));
  }
  return InformationSystem(Universe(ids), std::move(attrs), std::move(rows));
}

std::vector<std::size_t> InformationSystem::attribute_indices(const std::vector<std::string>& names) const {
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    auto it = std::find(attributes_.begin(), attributes_.end(), n);
    if (it == attributes_.end()) throw Error(ErrorKind::UnknownElement, "unknown attribute " + n);
    out.push_back(static_cast<std::size_t>(it - attributes_.begin()));
  }
  return out;
}

std::vector<std::size_t> InformationSystem::all_attributes() const {
  std::vector<std::size_t> out(attributes_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

namespace {

void require_nonempty(const std::vector<std::size_t>& b) {
  if (b.empty()) throw Error(ErrorKind::InvalidArgument, "attribute set must be nonempty");
}

}  // namespace

Relation sim_tolerance(const InformationSystem& is, const std::vector<std::size_t>& b) {
  require_nonempty(b);
  if (is.mode() == SystemMode::Nondeterministic) {
    throw Error(ErrorKind::ModeError, "similarity needs a system with single values or missing markers");
  }
  const std::size_t n = is.objects().size();
  std::vector<Subset> nbr(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const bool similar = std::all_of(b.begin(), b.end(), [&](std::size_t a) {
        const Cell& cx = is.cell(x, a);
        const Cell& cy = is.cell(y, a);
        return cx.missing || cy.missing || cx.values == cy.values;
      });
      if (similar) nbr[x].insert(y);
    }
  }
  return Relation(is.objects(), std::move(nbr));
}

Subset complete_elements(const InformationSystem& is, const std::vector<std::size_t>& b) {
  Subset out;
  for (std::size_t x = 0; x < is.objects().size(); ++x) {
    if (std::all_of(b.begin(), b.end(), [&](std::size_t a) { return is.cell(x, a).is_single(); })) out.insert(x);
  }
  return out;
}

SimilarityCovering covering_hb(const InformationSystem& is, const std::vector<std::size_t>& b) {
  const Relation sim = sim_tolerance(is, b);
  const Subset complete = complete_elements(is, b);
  for (std::size_t x = 0; x < sim.size(); ++x) {
    if (!sim.neighborhood(x).intersects(complete)) {
      throw Error(ErrorKind::PreconditionFailed,
                  "object " + is.objects().label(x) + " is not similar to any complete object");
    }
  }
  std::vector<Subset> members;
  for (auto c : complete) members.push_back(sim.neighborhood(c));
  SimilarityCovering out{Covering(is.objects(), std::move(members))};
  out.irredundant = is_irredundant(out.covering);
  out.induces_similarity = induced_tolerance(out.covering) == sim;
  return out;
}

PotentialIndiscernibility rb_tolerance(const InformationSystem& is, const std::vector<std::size_t>& b) {
  require_nonempty(b);
  if (is.mode() == SystemMode::Incomplete) {
    throw Error(ErrorKind::ModeError, "potential indiscernibility needs a system without missing markers");
  }
  const std::size_t n = is.objects().size();
  const Subset complete = complete_elements(is, b);
  // compatible[x]: complete objects whose values lie in x's value sets on B.
  std::vector<Subset> compatible(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (auto c : complete) {
      const bool fits = std::all_of(b.begin(), b.end(), [&](std::size_t a) {
        const auto& vs = is.cell(x, a).values;
        return std::binary_search(vs.begin(), vs.end(), is.cell(c, a).values.front());
      });
      if (fits) compatible[x].insert(c);
    }
  }
  std::vector<Subset> nbr(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (compatible[x].intersects(compatible[y])) nbr[x].insert(y);
    }
  }
  PotentialIndiscernibility out;
  out.relation = Relation(is.objects(), std::move(nbr));
  for (std::size_t x = 0; x < n; ++x) {
    if (!out.relation.related(x, x)) out.non_reflexive.insert(x);
  }
  out.reflexive = out.non_reflexive.empty();
  if (out.reflexive) {
    const auto ch = irredundant_covering_characterization(out.relation);
    out.clause_b = ch.b;
    out.clause_c = ch.c;
  }
  return out;
}

Relation wind_tolerance(const InformationSystem& is, const std::vector<std::size_t>& b) {
  require_nonempty(b);
  if (is.mode() != SystemMode::Deterministic) {
    throw Error(ErrorKind::ModeError, "weak indiscernibility needs a deterministic complete system");
  }
  const std::size_t n = is.objects().size();
  std::vector<Subset> nbr(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const bool agree =
          std::any_of(b.begin(), b.end(), [&](std::size_t a) { return is.cell(x, a).values == is.cell(y, a).values; });
      if (agree) nbr[x].insert(y);
    }
  }
  return Relation(is.objects(), std::move(nbr));
}

}  // namespace rough
