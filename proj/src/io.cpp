#include "rough/io.hpp"

#include <fstream>
#include <sstream>

#include "rough/error.hpp"

namespace rough {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

Universe universe_from(const Json& j) {
  if (!j.is_object() || !j.contains("universe") || !j["universe"].is_array()) {
    throw Error(ErrorKind::ParseError, "expected an object with a \"universe\" array");
  }
  std::vector<std::string> labels;
  for (const auto& v : j["universe"]) {
    if (!v.is_string()) throw Error(ErrorKind::ParseError, "universe elements must be strings");
    labels.push_back(v.get<std::string>());
  }
  return Universe(std::move(labels));
}

Subset subset_from(const Universe& u, const Json& arr) {
  if (!arr.is_array()) throw Error(ErrorKind::ParseError, "expected an array of elements");
  Subset out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw Error(ErrorKind::ParseError, "elements must be strings");
    out.insert(u.index(v.get<std::string>()));
  }
  return out;
}

}  // namespace

Relation parse_relation_json(const std::string& text) {
  const Json j = parse_json(text);
  Universe u = universe_from(j);
  if (!j.contains("neighborhoods") || !j["neighborhoods"].is_object()) {
    throw Error(ErrorKind::ParseError, "expected a \"neighborhoods\" object");
  }
  std::vector<Subset> nbr(u.size());
  for (const auto& [key, val] : j["neighborhoods"].items()) nbr[u.index(key)] = subset_from(u, val);
  return Relation(std::move(u), std::move(nbr));
}

Json relation_json(const Relation& r) {
  Json j;
  j["universe"] = r.universe().labels();
  Json n = Json::object();
  for (std::size_t x = 0; x < r.size(); ++x) n[r.universe().label(x)] = subset_json(r.universe(), r.neighborhood(x));
  j["neighborhoods"] = n;
  return j;
}

Covering parse_covering_json(const std::string& text) {
  const Json j = parse_json(text);
  Universe u = universe_from(j);
  if (!j.contains("members") || !j["members"].is_array()) throw Error(ErrorKind::ParseError, "expected a \"members\" array");
  std::vector<Subset> members;
  for (const auto& m : j["members"]) members.push_back(subset_from(u, m));
  return Covering(std::move(u), std::move(members));
}

Json covering_json(const Covering& h) {
  Json j;
  j["universe"] = h.universe().labels();
  Json ms = Json::array();
  for (auto m : h.members()) ms.push_back(subset_json(h.universe(), m));
  j["members"] = ms;
  return j;
}

Json subset_json(const Universe& u, Subset s) { return u.labels_of(s); }

Json family_json(const SubsetFamily& f) {
  Json ms = Json::array();
  for (auto m : f.members) ms.push_back(subset_json(f.universe, m));
  return ms;
}

Json pair_json(const Universe& u, RoughPair p) { return Json::array({subset_json(u, p.lo), subset_json(u, p.hi)}); }

Json classification_json(const FinitePoset& p, const Classification& c) {
  Json j;
  j["size"] = p.size();
  j["is_lattice"] = c.is_lattice;
  j["is_complete"] = c.is_complete;
  j["is_distributive"] = c.is_distributive;
  j["is_modular"] = c.is_modular;
  j["is_boolean"] = c.is_boolean;
  j["is_atomistic"] = c.is_atomistic;
  auto pair_labels = [&](std::pair<std::size_t, std::size_t> w) { return Json::array({p.label(w.first), p.label(w.second)}); };
  j["join_failure"] = c.join_failure ? pair_labels(*c.join_failure) : Json(nullptr);
  j["meet_failure"] = c.meet_failure ? pair_labels(*c.meet_failure) : Json(nullptr);
  if (c.n5) {
    Json n5 = Json::array();
    for (auto i : *c.n5) n5.push_back(p.label(i));
    j["n5"] = n5;
  } else {
    j["n5"] = nullptr;
  }
  return j;
}

Json characterization_json(const Universe& u, const Characterization& ch) {
  Json j;
  j["a"] = ch.a;
  j["b"] = ch.b;
  j["c"] = ch.c;
  j["d"] = ch.d;
  if (ch.certificate) {
    Json ms = Json::array();
    for (auto m : ch.certificate->members()) ms.push_back(subset_json(u, m));
    j["certificate"] = ms;
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json algebra_json(const DeMorganLattice& l, const AlgebraReport& r) {
  Json j;
  j["size"] = l.size();
  j["kleene"] = r.kleene.is_kleene_algebra();
  j["kleene_axioms"] = {{"k1", r.kleene.k1}, {"k2", r.kleene.k2}, {"k3", r.kleene.k3}};
  j["distributive"] = r.kleene.distributive;
  j["heyting"] = r.heyting.holds;
  j["quasi_nelson"] = r.quasi_nelson.holds;
  j["nelson"] = r.nelson.holds;
  Json w = Json::object();
  if (r.kleene.witness) w["kleene"] = *r.kleene.witness;
  if (r.heyting.witness) w["heyting"] = {l.label(r.heyting.witness->first), l.label(r.heyting.witness->second)};
  if (r.quasi_nelson.witness) {
    w["quasi_nelson"] = {l.label(r.quasi_nelson.witness->first), l.label(r.quasi_nelson.witness->second)};
  }
  if (r.nelson.witness) {
    w["nelson"] = {l.label((*r.nelson.witness)[0]), l.label((*r.nelson.witness)[1]), l.label((*r.nelson.witness)[2])};
  } else if (!r.nelson.holds) {
    w["nelson"] = r.nelson.reason;
  }
  j["witnesses"] = w;
  return j;
}

Json carrier_json(const std::string& what, const Universe& u, const std::vector<RoughPair>& carrier,
                  const std::vector<RoughPair>& rs) {
  Json j;
  j["schema"] = kCarrierSchema;
  j["what"] = what;
  j["universe"] = u.labels();
  j["size"] = carrier.size();
  Json items = Json::array();
  for (auto p : carrier) {
    items.push_back({{"pair", pair_json(u, p)},
                     {"label", format_pair(u, p)},
                     {"origin", index_of(rs, p) ? "rs" : "completion"}});
  }
  j["elements"] = items;
  return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string json_to_text(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace rough
