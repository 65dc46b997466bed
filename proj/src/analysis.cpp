#include "rough/analysis.hpp"

#include "rough/completion.hpp"
#include "rough/fca.hpp"
#include "rough/meet.hpp"

namespace rough {

namespace {

Json relation_summary(const Relation& r) {
  Json j;
  j["universe"] = r.universe().labels();
  j["size"] = r.size();
  j["edges"] = r.edge_count();
  j["reflexive"] = r.is_reflexive();
  j["symmetric"] = r.is_symmetric();
  j["transitive"] = r.is_transitive();
  j["tolerance"] = r.is_tolerance();
  j["equivalence"] = r.is_equivalence();
  return j;
}

}  // namespace

Json analysis_report(const ApproximationSpace& s, std::size_t cap, const Json& source) {
  const auto& u = s.universe();
  Json j;
  j["schema"] = kReportSchema;
  if (!source.is_null()) j["source"] = source;
  j["relation"] = relation_summary(s.relation());

  const auto cond = satisfies_condition_c(s.relation());
  Json cj;
  cj["holds"] = cond.holds;
  if (cond.witness) {
    Json path = Json::array();
    for (auto x : cond.witness->nodes) path.push_back(u.label(x));
    cj["witness"] = path;
  } else {
    cj["witness"] = nullptr;
  }
  j["condition_c"] = cj;

  j["blocks"] = family_json(blocks(s.relation()));
  const auto ch = irredundant_covering_characterization(s.relation());
  j["characterization"] = characterization_json(u, ch);
  j["dagger"] = condition_dagger(Context::bridge(s.relation()));

  const auto down = enumerate_down_family(s, cap);
  const auto up = enumerate_up_family(s, cap);
  j["families"]["down"] = {{"members", family_json(down)},
                           {"classification", classification_json(down.poset(), classify(down.poset()))}};
  j["families"]["up"] = {{"members", family_json(up)},
                         {"classification", classification_json(up.poset(), classify(up.poset()))}};

  const auto rs = enumerate_rs(s, cap);
  const auto rs_poset = pair_poset(u, rs);
  const auto complete = rs_is_complete_lattice(s, cap);
  j["rs"] = {{"size", rs.size()},
             {"classification", classification_json(rs_poset, classify(rs_poset))},
             {"complete_lattice", complete.complete},
             {"closed_under_product_ops", complete.closed_under_product_ops},
             {"reason", complete.reason}};

  j["singleton_core"] = subset_json(u, s.singleton_core());
  const auto irs = increasing_representation(s, cap);
  j["completion"] = {{"irs_size", irs.size()},
                     {"drs_size", disjoint_rs(s, cap).size()},
                     {"disjoint_representation_size", disjoint_representation(s, cap).size()},
                     {"fc_size", fc_representation(s, cap).size()},
                     {"rs_equals_irs", rs == irs}};

  Json alg;
  if (complete.complete) {
    const auto l = rs_algebra(s, cap);
    alg["rs"] = algebra_json(l, analyze_algebra(l));
  } else {
    alg["rs"] = nullptr;
  }
  const auto il = irs_algebra(s, cap);
  alg["irs"] = algebra_json(il, analyze_algebra(il));
  j["algebra"] = alg;
  return j;
}

}  // namespace rough
