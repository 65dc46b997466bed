#include "rough/covering.hpp"

#include <algorithm>
#include <functional>

#include "rough/error.hpp"

namespace rough {

Covering::Covering(Universe u, std::vector<Subset> members) {
  Subset covered;
  for (auto m : members) {
    if (m.empty()) throw Error(ErrorKind::NotACovering, "covering has an empty member");
    if (!m.subset_of(u.full())) throw Error(ErrorKind::NotACovering, "member outside the universe");
    covered |= m;
  }
  const Subset missing = u.full() - covered;
  if (!missing.empty()) {
    throw Error(ErrorKind::NotACovering, "element " + u.label(missing.first()) + " is not covered");
  }
  family_ = make_family(std::move(u), std::move(members));
}

SubsetFamily blocks(const Relation& r) {
  if (!r.is_tolerance()) throw Error(ErrorKind::NotATolerance, "blocks require a tolerance");
  const std::size_t n = r.size();
  std::vector<Subset> adj(n);
  for (std::size_t x = 0; x < n; ++x) adj[x] = r.neighborhood(x) - Subset::singleton(x);

  std::vector<Subset> out;
  std::function<void(Subset, Subset, Subset)> expand = [&](Subset clique, Subset cand, Subset excluded) {
    if (cand.empty() && excluded.empty()) {
      out.push_back(clique);
      return;
    }
    // Pivot with the most neighbours among the candidates.
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    for (auto u : cand | excluded) {
      const std::size_t k = (cand & adj[u]).size();
      if (!have || k > best) {
        pivot = u;
        best = k;
        have = true;
      }
    }
    for (auto v : cand - adj[pivot]) {
      expand(clique | Subset::singleton(v), cand & adj[v], excluded & adj[v]);
      cand.erase(v);
      excluded.insert(v);
    }
  };
  expand({}, r.universe().full(), {});

  for (auto b : out) {
    Subset meet = r.universe().full();
    for (auto x : b) meet &= r.neighborhood(x);
    if (meet != b) throw Error(ErrorKind::InvalidArgument, "block differs from the intersection of its neighborhoods");
  }
  return make_family(r.universe(), std::move(out));
}

Relation induced_tolerance(const Covering& h) {
  const auto& u = h.universe();
  std::vector<Subset> nbr(u.size());
  for (auto m : h.members()) {
    for (auto x : m) nbr[x] |= m;
  }
  return Relation(u, std::move(nbr));
}

bool is_irredundant(const Covering& h) {
  const auto& ms = h.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Subset rest;
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (j != i) rest |= ms[j];
    }
    if (h.universe().full().subset_of(rest)) return false;
  }
  return true;
}

namespace {

bool clause_a(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b : r.neighborhood(a)) {
      bool found = false;
      for (auto c : r.neighborhood(a)) {
        for (auto d : r.neighborhood(b)) {
          bool ok = true;
          for (auto k : r.neighborhood(c)) {
            if (!r.neighborhood(d).subset_of(r.neighborhood(k))) {
              ok = false;
              break;
            }
          }
          if (ok) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

bool clause_b(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b : r.neighborhood(a)) {
      const Subset both = r.neighborhood(a) & r.neighborhood(b);
      bool found = false;
      for (std::size_t d = 0; d < n && !found; ++d) {
        const Subset rd = r.neighborhood(d);
        if (!rd.subset_of(both)) continue;
        found = true;
        for (auto x : rd) {
          if (!rd.subset_of(r.neighborhood(x))) {
            found = false;
            break;
          }
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool clause_c(const Relation& r, const SubsetFamily& bl) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b : r.neighborhood(a)) {
      const Subset ab = Subset::singleton(a) | Subset::singleton(b);
      bool found = false;
      for (auto blk : bl.members) {
        if (!ab.subset_of(blk)) continue;
        for (auto d : blk) {
          if (r.neighborhood(d) == blk) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

Characterization irredundant_covering_characterization(const Relation& r) {
  if (!r.is_tolerance()) throw Error(ErrorKind::NotATolerance, "characterization requires a tolerance");
  Characterization ch;
  const auto bl = blocks(r);
  ch.a = clause_a(r);
  ch.b = clause_b(r);
  ch.c = clause_c(r, bl);

  std::vector<Subset> k;
  Subset covered;
  for (auto blk : bl.members) {
    for (std::size_t d = 0; d < r.size(); ++d) {
      if (r.neighborhood(d) == blk) {
        k.push_back(blk);
        covered |= blk;
        break;
      }
    }
  }
  if (covered == r.universe().full()) {
    Covering cov(r.universe(), k);
    if (induced_tolerance(cov) == r && is_irredundant(cov)) {
      ch.d = true;
      ch.certificate = std::move(cov);
    }
  }
  return ch;
}

RepresentativeReport representative_certificate(const Covering& h, const Relation& r) {
  if (!(induced_tolerance(h) == r)) {
    throw Error(ErrorKind::Mismatch, "relation is not the tolerance induced by the covering");
  }
  RepresentativeReport rep;
  for (auto m : h.members()) {
    std::optional<std::size_t> witness;
    for (auto d : m) {
      if (r.neighborhood(d) == m) {
        witness = d;
        break;
      }
    }
    if (witness) {
      rep.witnesses.emplace_back(m, *witness);
    } else if (!rep.failing_member) {
      rep.failing_member = m;
    }
  }
  return rep;
}

Subset covering_neighborhood(const Covering& h, std::size_t x) {
  Subset out;
  for (auto m : h.members()) {
    if (m.contains(x)) out |= m;
  }
  return out;
}

Subset pomykala_lower(const Covering& h, Subset x) {
  Subset out;
  for (std::size_t i = 0; i < h.universe().size(); ++i) {
    if (covering_neighborhood(h, i).subset_of(x)) out.insert(i);
  }
  return out;
}

Subset pomykala_upper(const Covering& h, Subset x) {
  Subset out;
  for (auto m : h.members()) {
    if (m.intersects(x)) out |= m;
  }
  return out;
}

std::vector<Subset> minimal_description(const Covering& h, std::size_t x) {
  std::vector<Subset> containing;
  for (auto m : h.members()) {
    if (m.contains(x)) containing.push_back(m);
  }
  std::vector<Subset> out;
  for (auto m : containing) {
    const bool minimal = std::none_of(containing.begin(), containing.end(),
                                      [&](Subset o) { return o != m && o.subset_of(m); });
    if (minimal) out.push_back(m);
  }
  return out;
}

BonikowskiApproximation bonikowski_approximations(const Covering& h, Subset x) {
  BonikowskiApproximation out;
  Subset inner;
  for (auto m : h.members()) {
    if (m.subset_of(x)) {
      out.bottom.push_back(m);
      inner |= m;
    }
  }
  std::vector<Subset> boundary;
  for (auto e : x - inner) {
    for (auto m : minimal_description(h, e)) boundary.push_back(m);
  }
  out.boundary = make_family(h.universe(), std::move(boundary)).members;
  out.top = make_family(h.universe(), [&] {
              auto all = out.bottom;
              all.insert(all.end(), out.boundary.begin(), out.boundary.end());
              return all;
            }()).members;
  return out;
}

FinitePoset bonikowski_poset(const Covering& h, std::size_t cap) {
  const auto& u = h.universe();
  require_within_cap(u.size(), cap, "enumerating covering approximations");
  if (h.size() > kMaxUniverse) throw Error(ErrorKind::CapExceeded, "too many covering members");
  // Families of members are encoded as bit sets over member indices.
  auto encode = [&](const std::vector<Subset>& fam) {
    Subset out;
    for (auto m : fam) out.insert(*h.family().index_of(m));
    return out;
  };
  std::vector<RoughPair> pairs;
  for_each_subset(u.full(), [&](Subset x) {
    const auto b = bonikowski_approximations(h, x);
    pairs.push_back({encode(b.bottom), encode(b.top)});
  });
  pairs = canonical_pairs(std::move(pairs));
  std::vector<std::string> labels;
  for (auto p : pairs) {
    std::string s = "(";
    for (auto i : p.lo) s += "[" + u.format(h.members()[i]) + "]";
    s += ",";
    for (auto i : p.hi) s += "[" + u.format(h.members()[i]) + "]";
    labels.push_back(s + ")");
  }
  return FinitePoset(std::move(labels), [&](std::size_t a, std::size_t b) { return pair_leq(pairs[a], pairs[b]); });
}

FamilyAtomsReport family_atoms_check(const ApproximationSpace& s, std::size_t cap) {
  const auto ch = irredundant_covering_characterization(s.relation());
  if (!ch.d) {
    std::string failed;
    for (auto [name, ok] : {std::pair{"a", ch.a}, {"b", ch.b}, {"c", ch.c}, {"d", ch.d}}) {
      if (!ok) failed += failed.empty() ? name : std::string(",") + name;
    }
    throw Error(ErrorKind::PreconditionFailed,
                "tolerance is not induced by an irredundant covering (failing clauses: " + failed + ")");
  }
  FamilyAtomsReport rep;
  const auto up = enumerate_up_family(s, cap);
  const auto down = enumerate_down_family(s, cap);
  const auto up_p = up.poset();
  const auto down_p = down.poset();
  for (auto i : up_p.atoms()) rep.up_atoms.push_back(up.members[i]);
  for (auto i : down_p.atoms()) rep.down_atoms.push_back(down.members[i]);

  const auto bl = blocks(s.relation());
  std::vector<Subset> expected_up;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (bl.contains(s.neighborhood(x))) expected_up.push_back(s.neighborhood(x));
  }
  rep.expected_up_atoms = make_family(s.universe(), expected_up).members;
  std::vector<Subset> expected_down;
  for (auto a : rep.expected_up_atoms) expected_down.push_back(s.lower(a));
  rep.expected_down_atoms = make_family(s.universe(), expected_down).members;
  rep.up_atoms = make_family(s.universe(), rep.up_atoms).members;
  rep.down_atoms = make_family(s.universe(), rep.down_atoms).members;

  const auto uc = classify(up_p);
  const auto dc = classify(down_p);
  rep.up_boolean = uc.is_boolean;
  rep.down_boolean = dc.is_boolean;
  rep.up_atomistic = uc.is_atomistic;
  rep.down_atomistic = dc.is_atomistic;
  rep.up_size = up.size();
  rep.down_size = down.size();
  return rep;
}

}  // namespace rough
