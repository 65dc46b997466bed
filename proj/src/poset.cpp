#include "rough/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "rough/error.hpp"

namespace rough {

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bits::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Bits::subset_of(const Bits& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

std::vector<std::size_t> Bits::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t rest = words_[w]; rest != 0; rest &= rest - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(rest)));
    }
  }
  return out;
}

Bits& Bits::operator&=(const Bits& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bits& Bits::operator|=(const Bits& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::function<bool(std::size_t, std::size_t)>& leq)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  up_.assign(n, Bits(n));
  down_.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (leq(a, b)) {
        up_[a].set(b);
        down_[b].set(a);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!up_[a].test(a)) {
      throw Error(ErrorKind::InvalidArgument, "order is not reflexive at '" + labels_[a] + "'");
    }
    for (auto b : up_[a].indices()) {
      if (b != a && up_[b].test(a)) {
        throw Error(ErrorKind::InvalidArgument,
                    "order is not antisymmetric: '" + labels_[a] + "' and '" + labels_[b] + "'");
      }
      if (!up_[b].subset_of(up_[a])) {
        throw Error(ErrorKind::InvalidArgument, "order is not transitive through '" + labels_[b] + "'");
      }
    }
  }
}

std::optional<std::size_t> FinitePoset::least_of(const Bits& set) const {
  for (auto c : set.indices()) {
    if (set.subset_of(up_[c])) return c;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::greatest_of(const Bits& set) const {
  for (auto c : set.indices()) {
    if (set.subset_of(down_[c])) return c;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::join(std::size_t a, std::size_t b) const {
  return least_of(up_[a] & up_[b]);
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a, std::size_t b) const {
  return greatest_of(down_[a] & down_[b]);
}

std::optional<std::size_t> FinitePoset::join_of(const std::vector<std::size_t>& xs) const {
  Bits ub(size());
  for (std::size_t i = 0; i < size(); ++i) ub.set(i);
  for (auto x : xs) ub &= up_[x];
  return least_of(ub);
}

std::optional<std::size_t> FinitePoset::meet_of(const std::vector<std::size_t>& xs) const {
  Bits lb(size());
  for (std::size_t i = 0; i < size(); ++i) lb.set(i);
  for (auto x : xs) lb &= down_[x];
  return greatest_of(lb);
}

std::optional<std::size_t> FinitePoset::bottom() const { return join_of({}); }

std::optional<std::size_t> FinitePoset::top() const { return meet_of({}); }

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (auto b : up_[a].indices()) {
      if (b == a) continue;
      // b covers a iff nothing lies strictly between them.
      const auto between = (up_[a] & down_[b]).count();
      if (between == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> FinitePoset::atoms() const {
  std::vector<std::size_t> out;
  const auto bot = bottom();
  if (!bot) return out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (a != *bot && down_[a].count() == 2) out.push_back(a);
  }
  return out;
}

FinitePoset FinitePoset::dual() const {
  return FinitePoset(labels_, [this](std::size_t a, std::size_t b) { return leq(b, a); });
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& points) const {
  std::vector<std::string> labels;
  for (auto p : points) labels.push_back(labels_.at(p));
  return FinitePoset(std::move(labels),
                     [&](std::size_t a, std::size_t b) { return leq(points[a], points[b]); });
}

bool same_order(const FinitePoset& a, const FinitePoset& b) { return a.up_ == b.up_; }

LatticeOps::LatticeOps(const FinitePoset& p) : p_(&p), n_(p.size()) {
  const auto bot = p.bottom();
  const auto top = p.top();
  if (!bot || !top) throw Error(ErrorKind::InvalidArgument, "poset is not bounded");
  bottom_ = *bot;
  top_ = *top;
  join_.resize(n_ * n_);
  meet_.resize(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a; b < n_; ++b) {
      const auto j = p.join(a, b);
      const auto m = p.meet(a, b);
      if (!j || !m) {
        throw Error(ErrorKind::InvalidArgument,
                    "'" + p.label(a) + "' and '" + p.label(b) + "' lack a " + (j ? "meet" : "join"));
      }
      join_[a * n_ + b] = join_[b * n_ + a] = *j;
      meet_[a * n_ + b] = meet_[b * n_ + a] = *m;
    }
  }
}

namespace {

std::optional<std::array<std::size_t, 5>> first_n5(const LatticeOps& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a == c || !l.leq(a, c)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (l.poset().comparable(a, b) || l.poset().comparable(c, b)) continue;
        if (l.meet(a, b) == l.meet(c, b) && l.join(a, b) == l.join(c, b)) {
          return std::array<std::size_t, 5>{l.meet(a, b), a, c, b, l.join(a, b)};
        }
      }
    }
  }
  return std::nullopt;
}

bool has_complement(const LatticeOps& l, std::size_t a) {
  for (std::size_t b = 0; b < l.size(); ++b) {
    if (l.join(a, b) == l.top() && l.meet(a, b) == l.bottom()) return true;
  }
  return false;
}

}  // namespace

Classification classify(const FinitePoset& p) {
  Classification c;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n && !(c.join_failure && c.meet_failure); ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!c.join_failure && !p.join(a, b)) c.join_failure = {a, b};
      if (!c.meet_failure && !p.meet(a, b)) c.meet_failure = {a, b};
      if (c.join_failure && c.meet_failure) break;
    }
  }
  if (n == 0 || c.join_failure || c.meet_failure) return c;
  // A finite poset where all pairs have joins and meets is bounded when nonempty.
  c.is_lattice = true;
  c.is_complete = true;
  const LatticeOps l(p);

  c.n5 = first_n5(l);
  c.is_modular = true;
  for (std::size_t x = 0; x < n && c.is_modular; ++x) {
    for (std::size_t y = 0; y < n && c.is_modular; ++y) {
      if (!l.leq(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (l.join(x, l.meet(y, z)) != l.meet(y, l.join(x, z))) {
          c.is_modular = false;
          break;
        }
      }
    }
  }

  c.is_distributive = true;
  for (std::size_t x = 0; x < n && c.is_distributive; ++x) {
    for (std::size_t y = 0; y < n && c.is_distributive; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          c.is_distributive = false;
          c.distributivity_failure = std::array<std::size_t, 3>{x, y, z};
          break;
        }
      }
    }
  }

  bool complemented = true;
  for (std::size_t a = 0; a < n && complemented; ++a) complemented = has_complement(l, a);
  c.is_boolean = c.is_distributive && complemented;

  const auto atoms = p.atoms();
  c.is_atomistic = true;
  for (std::size_t a = 0; a < n && c.is_atomistic; ++a) {
    std::size_t j = l.bottom();
    for (auto at : atoms) {
      if (l.leq(at, a)) j = l.join(j, at);
    }
    c.is_atomistic = (j == a);
  }
  return c;
}

std::vector<std::array<std::size_t, 5>> n5_sublattices(const FinitePoset& lattice) {
  const LatticeOps l(lattice);
  std::set<std::array<std::size_t, 5>> found;
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a == c || !l.leq(a, c)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (lattice.comparable(a, b) || lattice.comparable(c, b)) continue;
        if (l.meet(a, b) == l.meet(c, b) && l.join(a, b) == l.join(c, b)) {
          std::array<std::size_t, 5> pts{l.meet(a, b), a, c, b, l.join(a, b)};
          std::sort(pts.begin(), pts.end());
          found.insert(pts);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

bool is_n5_sublattice(const FinitePoset& lattice, const std::array<std::size_t, 5>& points) {
  const LatticeOps l(lattice);
  std::set<std::size_t> pts(points.begin(), points.end());
  if (pts.size() != 5) return false;
  for (auto a : pts) {
    for (auto b : pts) {
      if (!pts.count(l.join(a, b)) || !pts.count(l.meet(a, b))) return false;
    }
  }
  const auto sub = lattice.induced({pts.begin(), pts.end()});
  std::vector<std::string> labels(5);
  const FinitePoset n5(labels, [](std::size_t x, std::size_t y) {
    // 0 = bottom, 1 < 2 on one side, 3 on the other, 4 = top.
    static const bool order[5][5] = {{1, 1, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 0, 1},
                                     {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
    return order[x][y];
  });
  return find_isomorphism(sub, n5).has_value();
}

namespace {

struct Invariant {
  std::size_t down, up, lower_covers, upper_covers;
  auto tie() const { return std::tie(down, up, lower_covers, upper_covers); }
  bool operator==(const Invariant& o) const { return tie() == o.tie(); }
  bool operator<(const Invariant& o) const { return tie() < o.tie(); }
};

std::vector<Invariant> invariants(const FinitePoset& p) {
  std::vector<Invariant> inv(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    inv[a].down = p.down_set(a).count();
    inv[a].up = p.up_set(a).count();
  }
  for (auto [lo, hi] : p.covers()) {
    ++inv[lo].upper_covers;
    ++inv[hi].lower_covers;
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const FinitePoset& p, const FinitePoset& q) : p_(p), q_(q) {
    const auto ip = invariants(p);
    const auto iq = invariants(q);
    order_.resize(p.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return ip[a].down < ip[b].down; });
    candidates_.resize(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < q.size(); ++b) {
        if (ip[a] == iq[b]) candidates_[a].push_back(b);
      }
    }
    map_.assign(p.size(), 0);
    used_.assign(q.size(), false);
  }

  bool run(std::size_t k = 0) {
    if (k == order_.size()) return true;
    const std::size_t a = order_[k];
    for (auto b : candidates_[a]) {
      if (used_[b] || !consistent(k, a, b)) continue;
      map_[a] = b;
      used_[b] = true;
      if (run(k + 1)) return true;
      used_[b] = false;
    }
    return false;
  }

  const std::vector<std::size_t>& map() const { return map_; }

 private:
  bool consistent(std::size_t k, std::size_t a, std::size_t b) const {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t c = order_[j];
      if (p_.leq(c, a) != q_.leq(map_[c], b) || p_.leq(a, c) != q_.leq(b, map_[c])) return false;
    }
    return true;
  }

  const FinitePoset& p_;
  const FinitePoset& q_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  auto ip = invariants(p);
  auto iq = invariants(q);
  std::sort(ip.begin(), ip.end());
  std::sort(iq.begin(), iq.end());
  if (!(ip == iq)) return std::nullopt;
  IsoSearch search(p, q);
  if (!search.run()) return std::nullopt;
  return search.map();
}

bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q, const std::vector<std::size_t>& map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (auto m : map) {
    if (m >= q.size() || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) != q.leq(map[a], map[b])) return false;
    }
  }
  return true;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string to_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << "  n" << i << " [label=\"" << dot_escape(p.label(i)) << "\"];\n";
  }
  for (auto [lo, hi] : p.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace rough
