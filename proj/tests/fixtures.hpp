#pragma once

#include <string>
#include <vector>

#include "rough/covering.hpp"

namespace fixtures {

inline rough::Relation from_lists(const std::vector<std::string>& labels,
                                  const std::vector<std::vector<std::string>>& nbrs) {
  rough::Universe u(labels);
  std::vector<rough::Subset> sets;
  for (const auto& n : nbrs) sets.push_back(u.subset(n));
  return rough::Relation(u, sets);
}

/// Five-element path tolerance a-b-c-d-e.
inline rough::Relation r5() {
  return from_lists({"a", "b", "c", "d", "e"},
                    {{"a", "b"}, {"a", "b", "c"}, {"b", "c", "d"}, {"c", "d", "e"}, {"d", "e"}});
}

/// R(a) = {a,b}, R(b) = U, R(c) = {b,c}.
inline rough::Relation three() { return from_lists({"a", "b", "c"}, {{"a", "b"}, {"a", "b", "c"}, {"b", "c"}}); }

/// Nonempty subsets of {1,2,3}, related when they intersect.
inline rough::Universe simplex_universe() { return rough::Universe({"1", "2", "3", "12", "13", "23", "123"}); }

inline bool digit_in(const std::string& label, char d) { return label.find(d) != std::string::npos; }

inline rough::Relation simplex() {
  const auto u = simplex_universe();
  std::vector<rough::Subset> nbr(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      bool meet = false;
      for (char d : u.label(i)) meet = meet || digit_in(u.label(j), d);
      if (meet) nbr[i].insert(j);
    }
  }
  return rough::Relation(u, nbr);
}

/// K_i: the subsets containing i.
inline rough::Subset simplex_k(char i) {
  const auto u = simplex_universe();
  rough::Subset out;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (digit_in(u.label(j), i)) out.insert(j);
  }
  return out;
}

inline rough::Relation equivalence(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& classes) {
  rough::Universe u(labels);
  std::vector<rough::Subset> nbr(u.size());
  for (const auto& c : classes) {
    const auto s = u.subset(c);
    for (auto x : s) nbr[x] = s;
  }
  return rough::Relation(u, nbr);
}

}  // namespace fixtures
