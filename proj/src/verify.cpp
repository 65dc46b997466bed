#include "rough/verify.hpp"

#include <algorithm>

#include "rough/algebra.hpp"
#include "rough/completion.hpp"
#include "rough/covering.hpp"
#include "rough/error.hpp"
#include "rough/fca.hpp"
#include "rough/meet.hpp"

namespace rough {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"galois", "ortho", "thmdc", "latticethms", "algebra", "completion"};
  return names;
}

namespace {

void add(SuiteReport& rep, std::string name, bool ok, std::string detail = {}) {
  rep.checks.push_back({std::move(name), ok, std::move(detail)});
}

SuiteReport galois_suite(const ApproximationSpace& s, std::size_t cap) {
  SuiteReport rep{"galois", {}};
  require_within_cap(s.size(), cap, "galois suite");
  const auto g = verify_galois_characterization(s);
  add(rep, "upper of a singleton contains it", g.reflexive_clause, g.witness.value_or(""));
  add(rep, "singleton uppers are symmetric", g.symmetric_clause, g.witness.value_or(""));
  add(rep, "X^↑ ⊆ Y iff X ⊆ Y^↓", g.adjunction, std::to_string(g.pairs_checked) + " pairs");

  bool dual = true;
  bool idempotent = true;
  std::string witness;
  for_each_subset(s.full(), [&](Subset x) {
    if (s.lower(x) != s.complement(s.upper(s.complement(x))) && dual) {
      dual = false;
      witness = s.universe().format(x);
    }
    if (s.closure_updown(s.closure_updown(x)) != s.closure_updown(x) ||
        s.interior_downup(s.interior_downup(x)) != s.interior_downup(x)) {
      idempotent = false;
    }
  });
  add(rep, "X^↓ = X^c↑c", dual, witness);
  add(rep, "closure and interior are idempotent", idempotent);
  return rep;
}

SuiteReport ortho_suite(const ApproximationSpace& s, std::size_t cap) {
  SuiteReport rep{"ortho", {}};
  const auto down = enumerate_down_family(s, cap);
  const auto up = enumerate_up_family(s, cap);
  const auto dp = down.poset();
  const auto upp = up.poset();

  auto check_family = [&](const SubsetFamily& f, const FinitePoset& p, bool is_down) {
    bool ok = classify(p).is_lattice;
    std::string witness;
    for (auto a : f.members) {
      const Subset o = is_down ? s.ortho_down(a) : s.ortho_up(a);
      const Subset oo = is_down ? s.ortho_down(o) : s.ortho_up(o);
      const Subset meet = is_down ? a & o : s.interior_downup(a & o);
      const Subset join = is_down ? s.closure_updown(a | o) : a | o;
      if (!f.contains(o) || oo != a || !meet.empty() || join != s.full()) {
        ok = false;
        witness = s.universe().format(a);
        break;
      }
      for (auto b : f.members) {
        const Subset ob = is_down ? s.ortho_down(b) : s.ortho_up(b);
        if (a.subset_of(b) && !ob.subset_of(o)) {
          ok = false;
          witness = s.universe().format(a) + ", " + s.universe().format(b);
        }
      }
    }
    return std::pair{ok, witness};
  };
  auto [down_ok, down_w] = check_family(down, dp, true);
  add(rep, "℘(U)^↓ is an ortholattice under ^⊤", down_ok, down_w);
  auto [up_ok, up_w] = check_family(up, upp, false);
  add(rep, "℘(U)^↑ is an ortholattice under ^⊥", up_ok, up_w);

  add(rep, "℘(U)^↓ ≅ ℘(U)^↑", find_isomorphism(dp, upp).has_value());
  add(rep, "℘(U)^↓ is self-dual", find_isomorphism(dp, dp.dual()).has_value());
  add(rep, "℘(U)^↑ is self-dual", find_isomorphism(upp, upp.dual()).has_value());

  const auto ctx = Context::bridge(s.relation());
  const auto cs = concepts(ctx, cap);
  bool extents_match = cs.size() == down.size();
  bool swap_ok = true;
  for (std::size_t i = 0; i < cs.size() && extents_match; ++i) {
    extents_match = cs[i].extent == down.members[i] && cs[i].intent == s.ortho_down(cs[i].extent);
    swap_ok = swap_ok && ctx.derive_objects(cs[i].intent) == cs[i].extent &&
              ctx.derive_attributes(cs[i].extent) == cs[i].intent;
  }
  add(rep, "bridge concepts are (A, A^⊤) for A ∈ ℘(U)^↓", extents_match);
  add(rep, "swapping extent and intent yields a concept", swap_ok);
  return rep;
}

SuiteReport thmdc_suite(const ApproximationSpace& s, std::size_t cap) {
  SuiteReport rep{"thmdc", {}};
  const auto ch = irredundant_covering_characterization(s.relation());
  const std::string clauses = std::string("a=") + (ch.a ? "1" : "0") + " b=" + (ch.b ? "1" : "0") +
                              " c=" + (ch.c ? "1" : "0") + " d=" + (ch.d ? "1" : "0");
  add(rep, "four characterization clauses agree", ch.all_agree(), clauses);

  const bool dagger = condition_dagger(Context::bridge(s.relation()));
  add(rep, "(†) on the bridge context agrees with (‡)", dagger == ch.a);

  const auto rs = enumerate_rs(s, cap);
  const auto cls = classify(pair_poset(s.universe(), rs));
  add(rep, "clauses hold iff RS is a distributive lattice", ch.d == (cls.is_lattice && cls.is_distributive));

  const auto down_cls = classify(enumerate_down_family(s, cap).poset());
  add(rep, "clauses hold iff ℘(U)^↓ is distributive", ch.d == down_cls.is_distributive);

  const auto bl = blocks(s.relation());
  bool remark = true;
  for (std::size_t x = 0; x < s.size(); ++x) {
    const Subset rx = s.neighborhood(x);
    bool square = true;
    for (auto y : rx) square = square && rx.subset_of(s.neighborhood(y));
    if (square && !bl.contains(rx)) remark = false;
  }
  add(rep, "R(x)² ⊆ R implies R(x) is a block", remark);
  add(rep, "blocks induce the relation",
      induced_tolerance(Covering(s.universe(), bl.members)) == s.relation());
  if (ch.certificate) {
    add(rep, "certificate is irredundant and induces the relation",
        is_irredundant(*ch.certificate) && induced_tolerance(*ch.certificate) == s.relation());
    const auto cert = representative_certificate(*ch.certificate, s.relation());
    add(rep, "every certificate member is some R(d)", cert.complete());
  }
  return rep;
}

SuiteReport latticethms_suite(const ApproximationSpace& s, std::size_t cap) {
  SuiteReport rep{"latticethms", {}};
  const auto cond = satisfies_condition_c(s.relation());
  const bool r3 = r3_equivalence_everywhere(s.relation(), cap);
  add(rep, "(C) iff (R_X)³ is an equivalence for every X", cond.holds == r3);

  const auto complete = rs_is_complete_lattice(s, cap);
  add(rep, "lattice decision agrees with closure under product operations",
      complete.complete == complete.closed_under_product_ops, complete.reason);
  if (cond.holds) add(rep, "(C) implies RS is a complete lattice", complete.complete, complete.reason);

  const auto ch = irredundant_covering_characterization(s.relation());
  if (ch.d) {
    const auto cls = classify(pair_poset(s.universe(), enumerate_rs(s, cap)));
    add(rep, "irredundant covering implies RS distributive", cls.is_lattice && cls.is_distributive);
  }

  const auto rs = enumerate_rs(s, cap);
  const auto image = interior_closure_image(s, rs);
  const auto rs_poset = pair_poset(s.universe(), rs);
  std::vector<RoughPair> sorted_image = canonical_pairs(image);
  bool iso = sorted_image.size() == rs.size();
  for (std::size_t i = 0; i < rs.size() && iso; ++i) {
    for (std::size_t j = 0; j < rs.size() && iso; ++j) {
      iso = pair_leq(rs[i], rs[j]) == pair_leq(image[i], image[j]);
    }
  }
  add(rep, "(X^↓, X^↑) ↦ (X^↓↑, X^↑↓) is an order-isomorphism", iso);

  if (cond.holds || ch.d) {
    // Constructive meets of every pair of rough sets against the poset meet.
    bool ok = true;
    std::string witness;
    std::vector<Subset> reps(rs.size());
    std::vector<bool> seen(rs.size(), false);
    for_each_subset(s.full(), [&](Subset x) {
      const auto idx = index_of(rs, {s.lower(x), s.upper(x)});
      if (!seen[*idx]) {
        seen[*idx] = true;
        reps[*idx] = x;
      }
    });
    for (std::size_t i = 0; i < rs.size() && ok; ++i) {
      for (std::size_t j = i; j < rs.size() && ok; ++j) {
        const auto expected = rs_poset.meet(i, j);
        try {
          const auto m = construct_meet_z(s, {reps[i], reps[j]});
          const auto got = index_of(rs, {s.lower(m.z), s.upper(m.z)});
          ok = expected && got && *expected == *got;
        } catch (const Error&) {
          ok = false;
        }
        if (!ok) witness = format_pair(s.universe(), rs[i]) + " ∧ " + format_pair(s.universe(), rs[j]);
      }
    }
    add(rep, "constructed meets equal meets in RS", ok, witness);
  }
  return rep;
}

SuiteReport algebra_suite(const ApproximationSpace& s, std::size_t cap) {
  SuiteReport rep{"algebra", {}};
  const auto irs = irs_algebra(s, cap);
  const auto k = kleene_check(irs);
  add(rep, "I(RS) satisfies K1-K3 under ∼", k.axioms_hold(), k.witness.value_or(""));

  const auto rs = enumerate_rs(s, cap);
  bool k3_coords = true;
  for (auto p : rs) {
    const RoughPair neg{s.complement(p.hi), s.complement(p.lo)};
    if (!(p.lo & neg.lo).empty() || (p.hi | neg.hi) != s.full()) k3_coords = false;
  }
  add(rep, "a ∧ ∼a has empty first part and b ∨ ∼b full second part", k3_coords);

  const auto complete = rs_is_complete_lattice(s, cap);
  if (complete.complete) {
    const auto l = rs_algebra(s, cap);
    const auto kr = kleene_check(l);
    add(rep, "RS satisfies K1-K3 under ∼", kr.axioms_hold(), kr.witness.value_or(""));
    const auto ch = irredundant_covering_characterization(s.relation());
    if (ch.d) {
      add(rep, "RS is a Heyting algebra", heyting_check(l).holds);
      add(rep, "RS is a quasi-Nelson algebra", quasi_nelson_check(l).holds);
    }
    if (s.relation().is_equivalence()) {
      const auto n = nelson_equation_check(l);
      add(rep, "RS of an equivalence satisfies the Nelson equation", n.holds, n.reason);
    }
  }
  return rep;
}

SuiteReport completion_suite(const ApproximationSpace& s, std::size_t cap) {
  SuiteReport rep{"completion", {}};
  const auto rs = enumerate_rs(s, cap);
  const auto irs = increasing_representation(s, cap);
  add(rep, "RS ⊆ I(RS)", std::all_of(rs.begin(), rs.end(), [&](RoughPair p) { return index_of(irs, p).has_value(); }));

  bool closed = true;
  for (auto a : irs) {
    for (auto b : irs) {
      if (!index_of(irs, product_meet(s, a, b)) || !index_of(irs, product_join(s, a, b))) closed = false;
    }
  }
  add(rep, "I(RS) is closed under the product operations", closed);

  const auto rs_poset = pair_poset(s.universe(), rs);
  const auto irs_poset = pair_poset(s.universe(), irs);
  const auto dm = dedekind_macneille(rs_poset);
  add(rep, "DM(RS) ≅ I(RS)", find_isomorphism(dm.lattice, irs_poset).has_value());

  std::vector<std::size_t> emb;
  for (auto p : rs) emb.push_back(*index_of(irs, p));
  const auto dens = density_check(rs_poset, irs_poset, emb);
  add(rep, "RS is join- and meet-dense in I(RS)", dens.join_dense && dens.meet_dense);

  bool generated = true;
  std::string gen_w;
  for (auto p : irs) {
    try {
      join_generators(s, p);
    } catch (const Error& e) {
      generated = false;
      gen_w = e.what();
    }
  }
  add(rep, "every element of I(RS) is the join of its rough-set generators", generated, gen_w);

  const auto drs = disjoint_rs(s, cap);
  const auto d = disjoint_representation(s, cap);
  std::vector<RoughPair> phi_rs;
  std::vector<RoughPair> phi_irs;
  for (auto p : rs) phi_rs.push_back(to_disjoint(s, p));
  for (auto p : irs) phi_irs.push_back(to_disjoint(s, p));
  add(rep, "φ(RS) = dRS", canonical_pairs(phi_rs) == drs);
  add(rep, "φ(I(RS)) = D(RS)", canonical_pairs(phi_irs) == d);

  bool commute = true;
  for (auto p : irs) {
    if (!(to_disjoint(s, de_morgan_tilde(s, p)) == de_morgan_swap(s, to_disjoint(s, p)))) commute = false;
  }
  add(rep, "φ ∘ ∼ = 𝔠 ∘ φ", commute);

  const auto fc = fc_representation(s, cap);
  bool fc_iso = fc.size() == d.size();
  if (fc_iso) {
    const auto d_poset = pair_poset(s.universe(), d, true);
    const auto fp = fc_poset(s, fc);
    std::vector<std::size_t> map;
    for (auto p : d) {
      const auto cp = disjoint_to_concepts(s, p);
      const auto it = std::find(fc.begin(), fc.end(), cp);
      if (it == fc.end()) {
        fc_iso = false;
        break;
      }
      map.push_back(static_cast<std::size_t>(it - fc.begin()));
    }
    fc_iso = fc_iso && is_order_isomorphism(d_poset, fp, map);
  }
  add(rep, "D(RS) ≅ FC(RS) via (A, B) ↦ ((A, A^⊤), (B, B^⊤))", fc_iso);

  bool core_ok = true;
  const Subset core = s.singleton_core();
  for_each_subset(s.full(), [&](Subset x) {
    if (!core.subset_of(s.lower(x) | s.complement(s.upper(x)))) core_ok = false;
  });
  add(rep, "𝒮 ⊆ X^↓ ∪ X^↑ᶜ for every X", core_ok);

  const bool complete = rs_is_complete_lattice(s, cap).complete;
  add(rep, "RS is complete iff RS = I(RS)", complete == (rs == irs));
  return rep;
}

}  // namespace

SuiteReport run_suite(const ApproximationSpace& s, const std::string& name, std::size_t cap) {
  if (name == "galois") return galois_suite(s, cap);
  if (name == "ortho") return ortho_suite(s, cap);
  if (name == "thmdc") return thmdc_suite(s, cap);
  if (name == "latticethms") return latticethms_suite(s, cap);
  if (name == "algebra") return algebra_suite(s, cap);
  if (name == "completion") return completion_suite(s, cap);
  throw Error(ErrorKind::InvalidArgument, "unknown suite " + name);
}

}  // namespace rough
