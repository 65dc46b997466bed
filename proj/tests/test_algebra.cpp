#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rough/algebra.hpp"
#include "rough/error.hpp"

using namespace rough;

namespace {

FinitePoset chain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinitePoset(labels, [](std::size_t a, std::size_t b) { return a <= b; });
}

FinitePoset cube(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) labels.push_back(std::to_string(i));
  return FinitePoset(labels, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

// Rough-set algebra computed directly on mask pairs.
struct PairAlgebra {
  oracle::Tol t;
  std::vector<oracle::Pair> rs;

  explicit PairAlgebra(oracle::Tol tol) : t(std::move(tol)), rs(oracle::rough_sets(t)) {}

  oracle::Pair neg(oracle::Pair p) const { return {~p.second & t.full(), ~p.first & t.full()}; }
  oracle::Pair join(oracle::Pair a, oracle::Pair b) const { return *oracle::lub(rs, a, b, oracle::leq); }
  oracle::Pair meet(oracle::Pair a, oracle::Pair b) const { return *oracle::glb(rs, a, b, oracle::leq); }
  std::optional<oracle::Pair> rpc(oracle::Pair a, oracle::Pair b) const {
    std::vector<oracle::Pair> zs;
    for (auto z : rs) {
      if (oracle::leq(meet(z, a), b)) zs.push_back(z);
    }
    for (auto z : zs) {
      if (std::all_of(zs.begin(), zs.end(), [&](oracle::Pair w) { return oracle::leq(w, z); })) return z;
    }
    return std::nullopt;
  }
  std::optional<oracle::Pair> imp(oracle::Pair a, oracle::Pair b) const { return rpc(a, join(neg(a), b)); }
};

std::size_t find_label(const DeMorganLattice& l, const std::string& s) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l.label(i) == s) return i;
  }
  FAIL("missing label " << s);
  return 0;
}

}  // namespace

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(DeMorganLattice(chain(2), {0}), Error);
  CHECK_THROWS_AS(DeMorganLattice(chain(2), {0, 5}), Error);
  const auto anti = FinitePoset({"x", "y"}, [](std::size_t a, std::size_t b) { return a == b; });
  CHECK_THROWS_AS(DeMorganLattice(anti, {1, 0}), Error);
}

TEST_CASE("Kleene axioms on small lattices") {
  const auto bad = kleene_check(DeMorganLattice(chain(2), {0, 1}));
  CHECK(bad.k1);
  CHECK_FALSE(bad.k2);
  CHECK(bad.witness);

  const auto three = kleene_check(DeMorganLattice(chain(3), {2, 1, 0}));
  CHECK(three.is_kleene_algebra());

  const auto b = kleene_check(DeMorganLattice(cube(2), {3, 2, 1, 0}));
  CHECK(b.is_kleene_algebra());
  // Swapping the atoms only: involutive and antitone, but K3 fails.
  const auto swap = kleene_check(DeMorganLattice(cube(2), {3, 1, 2, 0}));
  CHECK(swap.k1);
  CHECK(swap.k2);
  CHECK_FALSE(swap.k3);
}

TEST_CASE("relative pseudocomplements") {
  const DeMorganLattice c(chain(3), {2, 1, 0});
  CHECK(relative_pseudocomplement(c, 2, 1) == 1);
  CHECK(relative_pseudocomplement(c, 1, 2) == 2);
  CHECK(relative_pseudocomplement(c, 1, 0) == 0);
  CHECK(heyting_check(c).holds);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) CHECK(relative_pseudocomplement(c, a, b) == pseudocomplement_join_formula(c, a, b));
  }

  // N5: 0 < x < y < 1, 0 < z < 1; y ⇒ x has no greatest witness.
  const auto n5 = FinitePoset({"0", "x", "y", "z", "1"}, [](std::size_t a, std::size_t b) {
    if (a == b || a == 0 || b == 4) return true;
    return a == 1 && b == 2;
  });
  const DeMorganLattice nl(n5, {4, 3, 3, 1, 0});
  CHECK_FALSE(relative_pseudocomplement(nl, 2, 1));
  const auto h = heyting_check(nl);
  CHECK_FALSE(h.holds);
  CHECK(h.witness);
}

TEST_CASE("three-element tolerance: Kleene and quasi-Nelson, not Nelson") {
  const ApproximationSpace s(fixtures::three());
  const auto l = rs_algebra(s);
  CHECK(l.size() == 7);
  const auto rep = analyze_algebra(l);
  CHECK(rep.kleene.is_kleene_algebra());
  CHECK(rep.heyting.holds);
  CHECK(rep.quasi_nelson.holds);
  CHECK_FALSE(rep.nelson.holds);
  REQUIRE(rep.nelson.witness);
  const auto w = *rep.nelson.witness;
  CHECK(l.label(w[0]) == "(a,abc)");
  CHECK(l.label(w[1]) == "(c,abc)");
  CHECK(l.label(w[2]) == "(∅,∅)");

  // Independent recomputation of the failing triple on mask pairs.
  const auto t = oracle::tolerance_from_code(3, 0b101);
  const PairAlgebra pa(t);
  REQUIRE(pa.rs.size() == 7);
  const oracle::Pair a{0b001, 0b111};
  const oracle::Pair b{0b100, 0b111};
  const oracle::Pair c{0, 0};
  const auto lhs = pa.imp(pa.meet(a, b), c);
  const auto bc = pa.imp(b, c);
  REQUIRE(lhs);
  REQUIRE(bc);
  const auto rhs = pa.imp(a, *bc);
  REQUIRE(rhs);
  CHECK(*lhs != *rhs);

  const auto ab = l.meet(find_label(l, "(a,abc)"), find_label(l, "(c,abc)"));
  CHECK(l.label(ab) == "(∅,abc)");
}

TEST_CASE("weak implication matches the mask-pair oracle") {
  for (std::uint64_t code = 0; code < 8; ++code) {
    const auto t = oracle::tolerance_from_code(3, code);
    const ApproximationSpace s(oracle::to_relation(t));
    const auto l = rs_algebra(s);
    const PairAlgebra pa(t);
    REQUIRE(l.size() == pa.rs.size());
    const auto u = s.universe();
    auto to_label = [&](oracle::Pair p) {
      return format_pair(u, {Subset(std::uint64_t{p.first}), Subset(std::uint64_t{p.second})});
    };
    for (auto a : pa.rs) {
      for (auto b : pa.rs) {
        const auto got = weak_implication(l, find_label(l, to_label(a)), find_label(l, to_label(b)));
        const auto want = pa.imp(a, b);
        REQUIRE(got.has_value() == want.has_value());
        if (got) CHECK(l.label(*got) == to_label(*want));
      }
    }
  }
}

TEST_CASE("equivalence relations give Nelson algebras") {
  const auto eq = fixtures::equivalence({"a", "b", "c", "d"}, {{"a", "b"}, {"c"}, {"d"}});
  const auto rep = analyze_algebra(rs_algebra(ApproximationSpace(eq)));
  CHECK(rep.kleene.is_kleene_algebra());
  CHECK(rep.nelson.holds);
}

TEST_CASE("non-lattice RS is rejected, completions are analyzed") {
  const ApproximationSpace s(fixtures::r5());
  CHECK_THROWS_AS(rs_algebra(s), Error);
  const auto irs = irs_algebra(s);
  CHECK(irs.size() == 25);
  const auto k = kleene_check(irs);
  CHECK(k.axioms_hold());
  CHECK_FALSE(k.distributive);
  CHECK(drs_algebra(s).size() == 25);
  CHECK(kleene_check(drs_algebra(s)).axioms_hold());
  CHECK(kleene_check(fc_algebra(s)).axioms_hold());
}

TEST_CASE("irredundant covering case is Heyting") {
  const ApproximationSpace s(fixtures::simplex());
  const auto rep = analyze_algebra(rs_algebra(s));
  CHECK(rep.kleene.is_kleene_algebra());
  CHECK(rep.heyting.holds);
  CHECK(rep.quasi_nelson.holds);
}
