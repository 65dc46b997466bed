#include "rough/fca.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rough/error.hpp"

namespace rough {

Context::Context(Universe objects, Universe attributes, std::vector<Subset> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
  if (rows_.size() != objects_.size()) throw Error(ErrorKind::InvalidArgument, "one incidence row per object");
  cols_.assign(attributes_.size(), Subset{});
  for (std::size_t g = 0; g < rows_.size(); ++g) {
    if (!rows_[g].subset_of(attributes_.full())) throw Error(ErrorKind::InvalidArgument, "incidence outside attributes");
    for (auto m : rows_[g]) cols_[m].insert(g);
  }
}

Context Context::bridge(const Relation& r) {
  if (!r.is_tolerance()) throw Error(ErrorKind::NotATolerance, "bridge context requires a tolerance");
  std::vector<Subset> rows;
  for (std::size_t x = 0; x < r.size(); ++x) rows.push_back(r.universe().complement(r.neighborhood(x)));
  return Context(r.universe(), r.universe(), std::move(rows));
}

Subset Context::derive_objects(Subset a) const {
  Subset out = attributes_.full();
  for (auto g : a) out &= rows_[g];
  return out;
}

Subset Context::derive_attributes(Subset b) const {
  Subset out = objects_.full();
  for (auto m : b) out &= cols_[m];
  return out;
}

std::vector<Concept> concepts(const Context& ctx, std::size_t cap) {
  std::vector<Concept> out;
  const bool by_objects = ctx.objects().size() <= ctx.attributes().size();
  const std::size_t side = by_objects ? ctx.objects().size() : ctx.attributes().size();
  require_within_cap(side, cap, "enumerating concepts");
  if (by_objects) {
    for_each_subset(ctx.objects().full(), [&](Subset a) {
      const Subset intent = ctx.derive_objects(a);
      out.push_back({ctx.derive_attributes(intent), intent});
    });
  } else {
    for_each_subset(ctx.attributes().full(), [&](Subset b) {
      const Subset extent = ctx.derive_attributes(b);
      out.push_back({extent, ctx.derive_objects(extent)});
    });
  }
  std::sort(out.begin(), out.end(), [](Concept a, Concept b) { return canonical_less(a.extent, b.extent); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FinitePoset concept_poset(const Context& ctx, const std::vector<Concept>& cs) {
  std::vector<std::string> labels;
  for (auto c : cs) labels.push_back(ctx.objects().format(c.extent));
  return FinitePoset(std::move(labels),
                     [&](std::size_t a, std::size_t b) { return cs[a].extent.subset_of(cs[b].extent); });
}

Concept weak_negation(const Context& ctx, Concept c) {
  const Subset intent = ctx.derive_objects(ctx.objects().complement(c.extent));
  return {ctx.derive_attributes(intent), intent};
}

Concept weak_opposition(const Context& ctx, Concept c) {
  const Subset extent = ctx.derive_attributes(ctx.attributes().complement(c.intent));
  return {extent, ctx.derive_objects(extent)};
}

bool condition_dagger(const Context& ctx) {
  if (!(ctx.objects() == ctx.attributes())) throw Error(ErrorKind::InvalidArgument, "condition requires a square context");
  const std::size_t n = ctx.objects().size();
  std::vector<Subset> closure(n);
  for (std::size_t k = 0; k < n; ++k) {
    closure[k] = ctx.derive_attributes(ctx.derive_objects(Subset::singleton(k)));
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t m = 0; m < n; ++m) {
      if (ctx.incident(g, m)) continue;
      bool found = false;
      for (std::size_t h = 0; h < n && !found; ++h) {
        if (ctx.incident(h, m)) continue;
        for (std::size_t nn = 0; nn < n && !found; ++nn) {
          if (ctx.incident(g, nn)) continue;
          const Subset ks = ctx.objects().complement(ctx.column(nn));
          found = std::all_of(ks.begin(), ks.end(), [&](std::size_t k) { return closure[k].contains(h); });
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

ConceptPair disjoint_to_concepts(const ApproximationSpace& s, RoughPair p) {
  return {{p.lo, s.ortho_down(p.lo)}, {p.hi, s.ortho_down(p.hi)}};
}

std::vector<ConceptPair> fc_representation(const ApproximationSpace& s, std::size_t cap) {
  const auto ctx = Context::bridge(s.relation());
  const auto cs = concepts(ctx, cap);
  const Subset core = s.singleton_core();
  std::vector<ConceptPair> out;
  for (auto alpha : cs) {
    const Concept opp = weak_opposition(ctx, alpha);
    for (auto beta : cs) {
      if (beta.extent.subset_of(opp.extent) && core.subset_of(alpha.extent | beta.extent)) {
        out.push_back({alpha, beta});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ConceptPair& a, const ConceptPair& b) {
    return pair_canonical_less({a.first.extent, a.second.extent}, {b.first.extent, b.second.extent});
  });
  return out;
}

FinitePoset fc_poset(const ApproximationSpace& s, const std::vector<ConceptPair>& fc) {
  std::vector<RoughPair> extents;
  for (const auto& p : fc) extents.push_back({p.first.extent, p.second.extent});
  return pair_poset(s.universe(), extents, true);
}

std::string to_burmeister(const Context& ctx, const std::string& name) {
  std::ostringstream out;
  out << "B\n" << name << "\n" << ctx.objects().size() << "\n" << ctx.attributes().size() << "\n\n";
  for (const auto& l : ctx.objects().labels()) out << l << "\n";
  for (const auto& l : ctx.attributes().labels()) out << l << "\n";
  for (std::size_t g = 0; g < ctx.objects().size(); ++g) {
    for (std::size_t m = 0; m < ctx.attributes().size(); ++m) out << (ctx.incident(g, m) ? 'X' : '.');
    out << "\n";
  }
  return out.str();
}

namespace {

bool parse_count(const std::string& s, std::size_t& out) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) return false;
  out = std::stoul(s);
  return true;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

Context parse_burmeister(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(trim(line));
  std::size_t i = 0;
  auto next_nonempty = [&]() -> std::string {
    while (i < lines.size() && lines[i].empty()) ++i;
    if (i == lines.size()) throw Error(ErrorKind::ParseError, "unexpected end of context");
    return lines[i++];
  };
  if (next_nonempty() != "B") throw Error(ErrorKind::ParseError, "context must start with 'B'");
  std::size_t n_obj = 0;
  std::size_t n_att = 0;
  std::string first = next_nonempty();
  if (!parse_count(first, n_obj)) {
    if (!parse_count(next_nonempty(), n_obj)) throw Error(ErrorKind::ParseError, "missing object count");
  }
  if (!parse_count(next_nonempty(), n_att)) throw Error(ErrorKind::ParseError, "missing attribute count");
  std::vector<std::string> objs;
  std::vector<std::string> atts;
  for (std::size_t k = 0; k < n_obj; ++k) objs.push_back(next_nonempty());
  for (std::size_t k = 0; k < n_att; ++k) atts.push_back(next_nonempty());
  std::vector<Subset> rows;
  for (std::size_t k = 0; k < n_obj; ++k) {
    const std::string row = next_nonempty();
    if (row.size() != n_att) throw Error(ErrorKind::ParseError, "row " + std::to_string(k + 1) + " has wrong width");
    Subset r;
    for (std::size_t m = 0; m < n_att; ++m) {
      const char c = row[m];
      if (c == 'X' || c == 'x') {
        r.insert(m);
      } else if (c != '.') {
        throw Error(ErrorKind::ParseError, std::string("unexpected mark '") + c + "'");
      }
    }
    rows.push_back(r);
  }
  return Context(Universe(objs), Universe(atts), std::move(rows));
}

}  // namespace rough
