#include "rough/relation.hpp"

#include <array>
#include <deque>
#include <string>

#include "rough/error.hpp"

namespace rough {

void require_within_cap(std::size_t n, std::size_t cap, std::string_view what) {
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded, std::string(what) + ": universe of " + std::to_string(n) +
                                            " elements exceeds the exhaustive cap of " +
                                            std::to_string(cap));
  }
}

namespace {

void require_tolerance(const Relation& r, std::string_view what) {
  if (!r.is_tolerance()) {
    throw Error(ErrorKind::NotATolerance, std::string(what) + " requires a tolerance relation");
  }
}

}  // namespace

Relation::Relation(Universe u) : universe_(std::move(u)), nbr_(universe_.size()) {}

Relation::Relation(Universe u, std::vector<Subset> neighborhoods)
    : universe_(std::move(u)), nbr_(std::move(neighborhoods)) {
  if (nbr_.size() != universe_.size()) {
    throw Error(ErrorKind::InvalidArgument, "neighborhood count does not match universe size");
  }
  const Subset all = universe_.full();
  for (std::size_t x = 0; x < nbr_.size(); ++x) {
    if (!nbr_[x].subset_of(all)) {
      throw Error(ErrorKind::UnknownElement,
                  "neighborhood of '" + universe_.label(x) + "' leaves the universe");
    }
  }
}

Relation Relation::identity(const Universe& u) {
  std::vector<Subset> n(u.size());
  for (std::size_t x = 0; x < u.size(); ++x) n[x] = Subset::singleton(x);
  return Relation(u, std::move(n));
}

Relation Relation::full(const Universe& u) {
  return Relation(u, std::vector<Subset>(u.size(), u.full()));
}

Relation Relation::tolerance_from_edges(const Universe& u,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Relation r = identity(u);
  for (auto [x, y] : edges) {
    r.nbr_.at(x).insert(y);
    r.nbr_.at(y).insert(x);
  }
  return r;
}

Subset Relation::neighborhood(std::string_view x) const { return nbr_[universe_.index(x)]; }

Subset Relation::image(Subset x) const {
  Subset out;
  for (auto i : x) out |= nbr_[i];
  return out;
}

bool Relation::is_reflexive() const {
  for (std::size_t x = 0; x < nbr_.size(); ++x) {
    if (!nbr_[x].contains(x)) return false;
  }
  return true;
}

bool Relation::is_symmetric() const {
  for (std::size_t x = 0; x < nbr_.size(); ++x) {
    for (auto y : nbr_[x]) {
      if (!nbr_[y].contains(x)) return false;
    }
  }
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t x = 0; x < nbr_.size(); ++x) {
    if (!image(nbr_[x]).subset_of(nbr_[x])) return false;
  }
  return true;
}

Relation Relation::restrict(Subset x) const {
  const std::vector<std::size_t> members = x.indices();
  std::vector<Subset> n(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Subset row = nbr_.at(members[i]) & x;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (row.contains(members[j])) n[i].insert(j);
    }
  }
  return Relation(universe_.sub(x), std::move(n));
}

Relation Relation::compose(const Relation& other) const {
  if (!(universe_ == other.universe_)) {
    throw Error(ErrorKind::InvalidArgument, "cannot compose relations on different universes");
  }
  std::vector<Subset> n(nbr_.size());
  for (std::size_t x = 0; x < nbr_.size(); ++x) n[x] = other.image(nbr_[x]);
  return Relation(universe_, std::move(n));
}

Relation Relation::power(unsigned n) const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "relational power requires n >= 1");
  Relation out = *this;
  for (unsigned k = 1; k < n; ++k) out = out.compose(*this);
  return out;
}

Relation Relation::transitive_closure() const {
  require_tolerance(*this, "transitive closure");
  std::vector<Subset> n(nbr_.size());
  for (const Subset comp : components_within(*this, universe_.full())) {
    for (auto x : comp) n[x] = comp;
  }
  return Relation(universe_, std::move(n));
}

std::size_t Relation::edge_count() const {
  std::size_t count = 0;
  for (std::size_t x = 0; x < nbr_.size(); ++x) {
    count += (nbr_[x] - Subset::full(x + 1)).size();
  }
  return count;
}

ParityDecomposition parity_within(const Relation& r, Subset domain, Subset x) {
  ParityDecomposition out;
  out.distance.assign(r.size(), std::nullopt);
  Subset frontier = x & domain;
  Subset seen = frontier;
  unsigned level = 0;
  while (!frontier.empty()) {
    for (auto i : frontier) out.distance[i] = level;
    (level % 2 == 0 ? out.even : out.odd) |= frontier;
    frontier = (r.image(frontier) & domain) - seen;
    seen |= frontier;
    ++level;
  }
  out.closure = seen;
  return out;
}

ParityDecomposition parity_decomposition(const Relation& r, Subset x) {
  require_tolerance(r, "parity decomposition");
  return parity_within(r, r.universe().full(), x);
}

std::vector<Subset> components_within(const Relation& r, Subset domain) {
  std::vector<Subset> out;
  Subset rest = domain;
  while (!rest.empty()) {
    const Subset comp = parity_within(r, domain, Subset::singleton(rest.first())).closure;
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

namespace {

// Depth-first search over paths in index order; stops at the first chordless
// 5-node path.
bool find_chordless(const Relation& r, std::array<std::size_t, 5>& path, std::size_t depth) {
  if (depth == 5) return true;
  const std::size_t last = path[depth - 1];
  Subset used;
  for (std::size_t k = 0; k < depth; ++k) used.insert(path[k]);
  for (auto next : r.neighborhood(last) - used) {
    bool chord = false;
    for (std::size_t k = 0; k + 1 < depth && !chord; ++k) chord = r.related(path[k], next);
    if (chord) continue;
    path[depth] = next;
    if (find_chordless(r, path, depth + 1)) return true;
  }
  return false;
}

}  // namespace

ConditionCResult satisfies_condition_c(const Relation& r) {
  require_tolerance(r, "condition (C)");
  std::array<std::size_t, 5> path{};
  for (std::size_t start = 0; start < r.size(); ++start) {
    path[0] = start;
    if (find_chordless(r, path, 1)) {
      return {false, Path{{path.begin(), path.end()}}};
    }
  }
  return {true, std::nullopt};
}

bool r3_equivalence_everywhere(const Relation& r, std::size_t cap) {
  require_tolerance(r, "R_X^3 sweep");
  require_within_cap(r.size(), cap, "R_X^3 sweep");
  const auto& nbr = r.neighborhoods();
  bool ok = true;
  for_each_subset(r.universe().full(), [&](Subset x) {
    if (!ok) return;
    // (R_X)^3 row for each member, computed with neighborhoods masked to X.
    std::array<Subset, kMaxUniverse> cube{};
    for (auto i : x) {
      Subset s = Subset::singleton(i);
      for (int step = 0; step < 3; ++step) {
        Subset next;
        for (auto j : s) next |= nbr[j] & x;
        s = next;
      }
      cube[i] = s;
    }
    for (auto i : x) {
      Subset two;
      for (auto j : cube[i]) two |= cube[j];
      if (!two.subset_of(cube[i])) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

}  // namespace rough
