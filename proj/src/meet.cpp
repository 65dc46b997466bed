#include "rough/meet.hpp"

#include <unordered_set>

#include "rough/error.hpp"

namespace rough {

Subset construct_s(const ApproximationSpace& s, Subset y, Subset t) {
  const auto& u = s.universe();
  if (!s.in_up_family(y)) throw Error(ErrorKind::PreconditionFailed, "Y = " + u.format(y) + " is not in ℘(U)^↑");
  const Subset y_down = s.lower(y);
  if (!t.subset_of(y_down)) {
    throw Error(ErrorKind::PreconditionFailed, "T = " + u.format(t) + " is not contained in Y^↓");
  }
  const Subset t_up = s.upper(t);
  for (auto x : y - t_up) {
    if (s.neighborhood(x).size() < 2) {
      throw Error(ErrorKind::PreconditionFailed, "|R(" + u.label(x) + ")| < 2 for an element of Y ∖ T^↑");
    }
  }
  if (t_up == y) return {};

  const Subset w = y - t;
  const Subset boundary = y - y_down;
  // Classes of the transitive closure on Y ∖ T that avoid the boundary but
  // leave T^↑ each contribute one representative.
  std::vector<Subset> b_classes;
  for (auto comp : components_within(s.relation(), w)) {
    if (!comp.intersects(boundary) && !comp.subset_of(t_up)) b_classes.push_back(comp);
  }
  Subset c;
  for (auto cls : b_classes) c.insert((cls - t_up).first());

  const auto boundary_parity = parity_within(s.relation(), w, boundary);
  const auto c_parity = parity_within(s.relation(), w, c);
  return boundary_parity.odd | c_parity.odd;
}

std::string check_s(const ApproximationSpace& s, Subset y, Subset t, Subset result) {
  const auto& u = s.universe();
  if (!result.subset_of(s.lower(y) - t)) return "S ⊄ Y^↓ ∖ T";
  if ((s.upper(result) | s.upper(t)) != y) return "S^↑ ∪ T^↑ ≠ Y";
  for (auto x : result) {
    if (s.neighborhood(x).subset_of(result | t)) return "R(" + u.label(x) + ") ⊆ S ∪ T";
  }
  return {};
}

MeetConstruction construct_meet_z(const ApproximationSpace& s, const std::vector<Subset>& h) {
  MeetConstruction m;
  Subset common = s.full();
  Subset common_up = s.full();
  Subset common_down = s.full();
  for (auto x : h) {
    common &= x;
    common_up &= s.upper(x);
    common_down &= s.lower(x);
  }
  m.t = s.interior_downup(common);
  m.y = s.interior_downup(common_up);
  m.s = construct_s(s, m.y, m.t);

  const Subset st = m.s | m.t;
  for (auto v : m.t) {
    const Subset nv = s.neighborhood(v);
    if (!nv.subset_of(m.t) && nv.subset_of(st)) m.v.insert(v);
  }
  if (m.v.empty()) {
    m.z = st;
  } else {
    const Subset t_up = s.upper(m.t);
    for (auto v : m.v) {
      const Subset candidates = s.neighborhood(v) & (t_up - m.t);
      if (candidates.empty()) {
        throw Error(ErrorKind::ConstructionFailed, "no q_v for v = " + s.universe().label(v));
      }
      m.q.insert(candidates.first());
    }
    const Subset kept = m.s - m.q;
    const Subset blocked = s.upper(kept) | t_up;
    const Subset q_up = s.upper(m.q);
    for (auto p : m.y - blocked) {
      if (s.neighborhood(p).subset_of(q_up)) m.p.insert(p);
    }
    m.z = kept | m.t | m.p;
  }

  if (s.lower(m.z) != common_down || s.upper(m.z) != m.y) {
    throw Error(ErrorKind::ConstructionFailed,
                "Z = " + s.universe().format(m.z) + " does not realize the meet; the relation lies outside the "
                "hypotheses of the construction");
  }
  return m;
}

CompletenessReport rs_is_complete_lattice(const ApproximationSpace& s, std::size_t cap) {
  CompletenessReport rep;
  const auto rs = enumerate_rs(s, cap);
  const auto poset = pair_poset(s.universe(), rs);
  const auto cls = classify(poset);
  rep.complete = cls.is_lattice;

  struct Hash {
    std::size_t operator()(RoughPair p) const { return std::hash<std::uint64_t>{}(p.lo.bits() * 0x9e3779b97f4a7c15ULL ^ p.hi.bits()); }
  };
  std::unordered_set<RoughPair, Hash> members(rs.begin(), rs.end());
  rep.closed_under_product_ops = true;
  for (std::size_t i = 0; i < rs.size() && rep.closed_under_product_ops; ++i) {
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      if (!members.count(product_meet(s, rs[i], rs[j])) || !members.count(product_join(s, rs[i], rs[j]))) {
        rep.closed_under_product_ops = false;
        break;
      }
    }
  }

  const auto& u = s.universe();
  if (cls.join_failure) {
    rep.witness = std::pair{rs[cls.join_failure->first], rs[cls.join_failure->second]};
    rep.reason = format_pair(u, rep.witness->first) + " and " + format_pair(u, rep.witness->second) +
                 " have no least upper bound";
  } else if (cls.meet_failure) {
    rep.witness = std::pair{rs[cls.meet_failure->first], rs[cls.meet_failure->second]};
    rep.reason = format_pair(u, rep.witness->first) + " and " + format_pair(u, rep.witness->second) +
                 " have no greatest lower bound";
  } else {
    rep.reason = "every pair has a join and a meet";
  }
  if (rep.complete != rep.closed_under_product_ops) {
    rep.reason += "; closure under product operations disagrees";
  }
  return rep;
}

}  // namespace rough
