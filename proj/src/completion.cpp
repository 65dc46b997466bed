#include "rough/completion.hpp"

#include <algorithm>

#include "rough/error.hpp"

namespace rough {

SingletonCore singleton_core(const ApproximationSpace& s) { return {s.singleton_core()}; }

bool in_increasing_representation(const ApproximationSpace& s, RoughPair p) {
  if (!s.in_down_family(p.lo) || !s.in_up_family(p.hi)) return false;
  if (!s.upper(p.lo).subset_of(s.lower(p.hi))) return false;
  return s.singleton_core().subset_of(p.lo | s.complement(p.hi));
}

std::vector<RoughPair> increasing_representation(const ApproximationSpace& s, std::size_t cap) {
  const auto down = enumerate_down_family(s, cap);
  const auto up = enumerate_up_family(s, cap);
  const Subset core = s.singleton_core();
  std::vector<RoughPair> out;
  for (auto a : down.members) {
    const Subset a_up = s.upper(a);
    for (auto b : up.members) {
      if (a_up.subset_of(s.lower(b)) && core.subset_of(a | s.complement(b))) out.push_back({a, b});
    }
  }
  return canonical_pairs(std::move(out));
}

RoughPair de_morgan_tilde(const ApproximationSpace& s, RoughPair p) {
  if (!in_increasing_representation(s, p)) {
    throw Error(ErrorKind::NotInCarrier, format_pair(s.universe(), p) + " is not in I(RS)");
  }
  return {s.complement(p.hi), s.complement(p.lo)};
}

RoughPair de_morgan_swap(const ApproximationSpace& s, RoughPair p) {
  if (!in_disjoint_representation(s, p)) {
    throw Error(ErrorKind::NotInCarrier, format_pair(s.universe(), p) + " is not in D(RS)");
  }
  return {p.hi, p.lo};
}

RoughPair to_disjoint(const ApproximationSpace& s, RoughPair p) { return {p.lo, s.complement(p.hi)}; }

bool in_disjoint_representation(const ApproximationSpace& s, RoughPair p) {
  if (!s.in_down_family(p.lo) || !s.in_down_family(p.hi)) return false;
  if (s.upper(p.lo).intersects(s.upper(p.hi))) return false;
  return s.singleton_core().subset_of(p.lo | p.hi);
}

std::vector<RoughPair> disjoint_rs(const ApproximationSpace& s, std::size_t cap) {
  std::vector<RoughPair> out;
  for (auto p : enumerate_rs(s, cap)) out.push_back(to_disjoint(s, p));
  return canonical_pairs(std::move(out));
}

std::vector<RoughPair> disjoint_representation(const ApproximationSpace& s, std::size_t cap) {
  const auto down = enumerate_down_family(s, cap);
  std::vector<RoughPair> out;
  for (auto a : down.members) {
    for (auto b : down.members) {
      if (in_disjoint_representation(s, {a, b})) out.push_back({a, b});
    }
  }
  return canonical_pairs(std::move(out));
}

DMCompletion dedekind_macneille(const FinitePoset& p) {
  const std::size_t n = p.size();
  Bits whole(n);
  for (std::size_t i = 0; i < n; ++i) whole.set(i);

  std::vector<Bits> cuts;
  auto insert = [&](Bits b) {
    if (std::find(cuts.begin(), cuts.end(), b) == cuts.end()) cuts.push_back(std::move(b));
  };
  insert(whole);
  for (std::size_t i = 0; i < n; ++i) insert(p.down_set(i));
  // Close under pairwise intersection.
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) insert(cuts[i] & cuts[j]);
  }
  std::sort(cuts.begin(), cuts.end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });

  DMCompletion out;
  std::vector<std::string> labels;
  for (const auto& c : cuts) {
    std::string label = "{";
    bool first = true;
    for (auto i : c.indices()) {
      // Only the maximal points of a cut are listed.
      bool maximal = true;
      for (auto j : c.indices()) {
        if (p.less(i, j)) maximal = false;
      }
      if (!maximal) continue;
      label += (first ? "" : ",") + p.label(i);
      first = false;
    }
    labels.push_back(label + "}");
  }
  out.lattice = FinitePoset(std::move(labels), [&](std::size_t a, std::size_t b) { return cuts[a].subset_of(cuts[b]); });
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::find(cuts.begin(), cuts.end(), p.down_set(i));
    out.embedding.push_back(static_cast<std::size_t>(it - cuts.begin()));
  }
  out.cuts = std::move(cuts);
  return out;
}

Density density_check(const FinitePoset& sub, const FinitePoset& sup, const std::vector<std::size_t>& embedding) {
  if (embedding.size() != sub.size()) throw Error(ErrorKind::InvalidArgument, "embedding size differs from poset size");
  for (std::size_t a = 0; a < sub.size(); ++a) {
    for (std::size_t b = 0; b < sub.size(); ++b) {
      if (sub.leq(a, b) != sup.leq(embedding[a], embedding[b])) {
        throw Error(ErrorKind::InvalidArgument, "map is not an order-embedding");
      }
    }
  }
  Density d{true, true};
  for (std::size_t y = 0; y < sup.size(); ++y) {
    std::vector<std::size_t> below;
    std::vector<std::size_t> above;
    for (auto e : embedding) {
      if (sup.leq(e, y)) below.push_back(e);
      if (sup.leq(y, e)) above.push_back(e);
    }
    if (sup.join_of(below) != y) d.join_dense = false;
    if (sup.meet_of(above) != y) d.meet_dense = false;
  }
  return d;
}

RoughPair product_join_of(const ApproximationSpace& s, const std::vector<RoughPair>& pairs) {
  Subset lo;
  Subset hi;
  for (auto p : pairs) {
    lo |= p.lo;
    hi |= p.hi;
  }
  return {s.closure_updown(lo), hi};
}

std::vector<RoughPair> join_generators(const ApproximationSpace& s, RoughPair p) {
  const auto& u = s.universe();
  if (!in_increasing_representation(s, p)) {
    throw Error(ErrorKind::NotInCarrier, format_pair(u, p) + " is not in I(RS)");
  }
  std::vector<RoughPair> gens;
  for (auto x : p.lo) {
    const Subset rx = s.neighborhood(x);
    gens.push_back({s.lower(rx), s.upper(rx)});
  }
  for (auto x : s.lower(p.hi) - p.lo) gens.push_back({Subset{}, s.neighborhood(x)});

  // Each generator is the rough set of R(x) or of {x}.
  for (auto g : gens) {
    bool realized = false;
    for (std::size_t x = 0; x < s.size() && !realized; ++x) {
      const Subset rx = s.neighborhood(x);
      realized = (g == RoughPair{s.lower(rx), s.upper(rx)}) ||
                 (g == RoughPair{s.lower(Subset::singleton(x)), s.upper(Subset::singleton(x))});
    }
    if (!realized) throw Error(ErrorKind::Mismatch, "generator " + format_pair(u, g) + " is not a rough set");
  }
  if (!(product_join_of(s, gens) == p)) {
    throw Error(ErrorKind::Mismatch, "generators of " + format_pair(u, p) + " do not join to it");
  }
  return gens;
}

}  // namespace rough
