#include "rough/algebra.hpp"

#include "rough/completion.hpp"
#include "rough/error.hpp"
#include "rough/fca.hpp"

namespace rough {

DeMorganLattice::DeMorganLattice(FinitePoset p, std::vector<std::size_t> negation)
    : poset_(std::make_shared<const FinitePoset>(std::move(p))), neg_(std::move(negation)) {
  ops_ = std::make_shared<const LatticeOps>(*poset_);
  if (neg_.size() != poset_->size()) throw Error(ErrorKind::InvalidArgument, "negation map has the wrong size");
  for (auto v : neg_) {
    if (v >= neg_.size()) throw Error(ErrorKind::InvalidArgument, "negation map leaves the carrier");
  }
}

KleeneReport kleene_check(const DeMorganLattice& l) {
  KleeneReport rep;
  rep.k1 = rep.k2 = rep.k3 = true;
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (l.neg(l.neg(a)) != a && rep.k1) {
      rep.k1 = false;
      if (!rep.witness) rep.witness = "K1 fails at " + l.label(a);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (rep.k2 && l.leq(a, b) != l.leq(l.neg(b), l.neg(a))) {
        rep.k2 = false;
        if (!rep.witness) rep.witness = "K2 fails at " + l.label(a) + ", " + l.label(b);
      }
      if (rep.k3 && !l.leq(l.meet(a, l.neg(a)), l.join(b, l.neg(b)))) {
        rep.k3 = false;
        if (!rep.witness) rep.witness = "K3 fails at " + l.label(a) + ", " + l.label(b);
      }
    }
  }
  rep.distributive = classify(l.poset()).is_distributive;
  return rep;
}

std::optional<std::size_t> relative_pseudocomplement(const DeMorganLattice& l, std::size_t a, std::size_t b) {
  std::vector<std::size_t> valid;
  for (std::size_t z = 0; z < l.size(); ++z) {
    if (l.leq(l.meet(z, a), b)) valid.push_back(z);
  }
  for (auto z : valid) {
    bool greatest = true;
    for (auto w : valid) {
      if (!l.leq(w, z)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return z;
  }
  return std::nullopt;
}

std::size_t pseudocomplement_join_formula(const DeMorganLattice& l, std::size_t a, std::size_t b) {
  std::size_t out = l.bottom();
  for (std::size_t z = 0; z < l.size(); ++z) {
    if (l.leq(l.meet(z, a), b)) out = l.join(out, z);
  }
  return out;
}

std::optional<std::size_t> weak_implication(const DeMorganLattice& l, std::size_t a, std::size_t b) {
  return relative_pseudocomplement(l, a, l.join(l.neg(a), b));
}

PairCheck heyting_check(const DeMorganLattice& l) {
  PairCheck out;
  for (std::size_t a = 0; a < l.size() && out.holds; ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (!relative_pseudocomplement(l, a, b)) {
        out = {false, std::pair{a, b}};
        break;
      }
    }
  }
  return out;
}

PairCheck quasi_nelson_check(const DeMorganLattice& l) {
  PairCheck out;
  for (std::size_t a = 0; a < l.size() && out.holds; ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (!weak_implication(l, a, b)) {
        out = {false, std::pair{a, b}};
        break;
      }
    }
  }
  return out;
}

NelsonCheck nelson_equation_check(const DeMorganLattice& l) {
  NelsonCheck out;
  const std::size_t n = l.size();
  std::vector<std::size_t> imp(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = weak_implication(l, a, b);
      if (!v) {
        out.reason = "weak implication " + l.label(a) + " → " + l.label(b) + " does not exist";
        return out;
      }
      imp[a * n + b] = *v;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (imp[l.meet(a, b) * n + c] != imp[a * n + imp[b * n + c]]) {
          out.witness = std::array{a, b, c};
          out.reason = "(a ∧ b) → c ≠ a → (b → c) for a = " + l.label(a) + ", b = " + l.label(b) +
                       ", c = " + l.label(c);
          return out;
        }
      }
    }
  }
  out.holds = true;
  return out;
}

AlgebraReport analyze_algebra(const DeMorganLattice& l) {
  return {kleene_check(l), heyting_check(l), quasi_nelson_check(l), nelson_equation_check(l)};
}

namespace {

DeMorganLattice pair_algebra(const ApproximationSpace& s, const std::vector<RoughPair>& carrier, bool second_dual,
                             RoughPair (*op)(const ApproximationSpace&, RoughPair)) {
  std::vector<std::size_t> neg;
  for (auto p : carrier) {
    const auto idx = index_of(carrier, op(s, p));
    if (!idx) throw Error(ErrorKind::NotInCarrier, "negation leaves the carrier at " + format_pair(s.universe(), p));
    neg.push_back(*idx);
  }
  return DeMorganLattice(pair_poset(s.universe(), carrier, second_dual), std::move(neg));
}

RoughPair tilde(const ApproximationSpace& s, RoughPair p) { return {s.complement(p.hi), s.complement(p.lo)}; }
RoughPair swap(const ApproximationSpace&, RoughPair p) { return {p.hi, p.lo}; }

}  // namespace

DeMorganLattice rs_algebra(const ApproximationSpace& s, std::size_t cap) {
  return pair_algebra(s, enumerate_rs(s, cap), false, tilde);
}

DeMorganLattice irs_algebra(const ApproximationSpace& s, std::size_t cap) {
  return pair_algebra(s, increasing_representation(s, cap), false, tilde);
}

DeMorganLattice drs_algebra(const ApproximationSpace& s, std::size_t cap) {
  return pair_algebra(s, disjoint_representation(s, cap), true, swap);
}

DeMorganLattice fc_algebra(const ApproximationSpace& s, std::size_t cap) {
  const auto fc = fc_representation(s, cap);
  std::vector<RoughPair> extents;
  for (const auto& p : fc) extents.push_back({p.first.extent, p.second.extent});
  return pair_algebra(s, extents, true, swap);
}

}  // namespace rough
