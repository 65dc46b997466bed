#include "rough/families.hpp"

#include <algorithm>

#include "rough/error.hpp"

namespace rough {

bool SubsetFamily::contains(Subset s) const { return index_of(s).has_value(); }

std::optional<std::size_t> SubsetFamily::index_of(Subset s) const {
  auto it = std::lower_bound(members.begin(), members.end(), s, CanonicalLess{});
  if (it == members.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

FinitePoset SubsetFamily::poset() const {
  std::vector<std::string> labels;
  for (auto m : members) labels.push_back(universe.format(m));
  return FinitePoset(std::move(labels),
                     [this](std::size_t a, std::size_t b) { return members[a].subset_of(members[b]); });
}

SubsetFamily make_family(Universe u, std::vector<Subset> members) {
  std::sort(members.begin(), members.end(), CanonicalLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {std::move(u), std::move(members)};
}

bool pair_canonical_less(RoughPair a, RoughPair b) {
  if (a.lo != b.lo) return canonical_less(a.lo, b.lo);
  return canonical_less(a.hi, b.hi);
}

std::string format_pair(const Universe& u, RoughPair p) {
  return "(" + u.format(p.lo) + "," + u.format(p.hi) + ")";
}

std::vector<RoughPair> canonical_pairs(std::vector<RoughPair> pairs) {
  std::sort(pairs.begin(), pairs.end(), pair_canonical_less);
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::optional<std::size_t> index_of(const std::vector<RoughPair>& carrier, RoughPair p) {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), p, pair_canonical_less);
  if (it == carrier.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - carrier.begin());
}

FinitePoset pair_poset(const Universe& u, const std::vector<RoughPair>& carrier, bool second_dual) {
  std::vector<std::string> labels;
  for (auto p : carrier) labels.push_back(format_pair(u, p));
  return FinitePoset(std::move(labels), [&](std::size_t a, std::size_t b) {
    const RoughPair x = carrier[a];
    const RoughPair y = carrier[b];
    return x.lo.subset_of(y.lo) && (second_dual ? y.hi.subset_of(x.hi) : x.hi.subset_of(y.hi));
  });
}

SubsetFamily enumerate_down_family(const ApproximationSpace& s, std::size_t cap) {
  require_within_cap(s.size(), cap, "enumerating lower approximations");
  std::vector<Subset> out;
  for_each_subset(s.full(), [&](Subset x) { out.push_back(s.lower(x)); });
  return make_family(s.universe(), std::move(out));
}

SubsetFamily enumerate_up_family(const ApproximationSpace& s, std::size_t cap) {
  require_within_cap(s.size(), cap, "enumerating upper approximations");
  std::vector<Subset> out;
  for_each_subset(s.full(), [&](Subset x) { out.push_back(s.upper(x)); });
  return make_family(s.universe(), std::move(out));
}

std::vector<RoughPair> enumerate_rs(const ApproximationSpace& s, std::size_t cap) {
  require_within_cap(s.size(), cap, "enumerating rough sets");
  std::vector<RoughPair> out;
  for_each_subset(s.full(), [&](Subset x) { out.push_back({s.lower(x), s.upper(x)}); });
  return canonical_pairs(std::move(out));
}

std::vector<RoughPair> interior_closure_image(const ApproximationSpace& s, const std::vector<RoughPair>& rs) {
  std::vector<RoughPair> out;
  out.reserve(rs.size());
  // X^↓↑ depends on X only through X^↓, and X^↑↓ only through X^↑.
  for (auto p : rs) out.push_back({s.upper(p.lo), s.lower(p.hi)});
  return out;
}

namespace {

void require_down(const ApproximationSpace& s, const std::vector<Subset>& members) {
  for (auto m : members) {
    if (!s.in_down_family(m)) {
      throw Error(ErrorKind::NotInFamily, s.universe().format(m) + " is not a lower approximation");
    }
  }
}

void require_up(const ApproximationSpace& s, const std::vector<Subset>& members) {
  for (auto m : members) {
    if (!s.in_up_family(m)) {
      throw Error(ErrorKind::NotInFamily, s.universe().format(m) + " is not an upper approximation");
    }
  }
}

Subset union_of(const std::vector<Subset>& members) {
  Subset out;
  for (auto m : members) out |= m;
  return out;
}

Subset intersection_of(const ApproximationSpace& s, const std::vector<Subset>& members) {
  Subset out = s.full();
  for (auto m : members) out &= m;
  return out;
}

}  // namespace

Subset down_family_join(const ApproximationSpace& s, const std::vector<Subset>& members) {
  require_down(s, members);
  return s.closure_updown(union_of(members));
}

Subset down_family_meet(const ApproximationSpace& s, const std::vector<Subset>& members) {
  require_down(s, members);
  return intersection_of(s, members);
}

Subset up_family_join(const ApproximationSpace& s, const std::vector<Subset>& members) {
  require_up(s, members);
  return union_of(members);
}

Subset up_family_meet(const ApproximationSpace& s, const std::vector<Subset>& members) {
  require_up(s, members);
  return s.interior_downup(intersection_of(s, members));
}

RoughPair product_meet(const ApproximationSpace& s, RoughPair a, RoughPair b) {
  return {a.lo & b.lo, s.interior_downup(a.hi & b.hi)};
}

RoughPair product_join(const ApproximationSpace& s, RoughPair a, RoughPair b) {
  return {s.closure_updown(a.lo | b.lo), a.hi | b.hi};
}

}  // namespace rough
