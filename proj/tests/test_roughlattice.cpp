#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rough/error.hpp"
#include "rough/families.hpp"
#include "rough/meet.hpp"

using namespace rough;

namespace {

FinitePoset chain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinitePoset(labels, [](std::size_t a, std::size_t b) { return a <= b; });
}

FinitePoset powerset(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) labels.push_back(std::to_string(i));
  return FinitePoset(labels, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

}  // namespace

TEST_CASE("poset construction rejects non-orders") {
  CHECK_THROWS_AS(FinitePoset({"x", "y"}, [](std::size_t, std::size_t) { return true; }), Error);
  CHECK_THROWS_AS(FinitePoset({"x"}, [](std::size_t, std::size_t) { return false; }), Error);
}

TEST_CASE("chain and Boolean classification") {
  const auto c = classify(chain(3));
  CHECK(c.is_lattice);
  CHECK(c.is_distributive);
  CHECK_FALSE(c.is_boolean);

  const auto b = classify(powerset(3));
  CHECK(b.is_lattice);
  CHECK(b.is_boolean);
  CHECK(b.is_atomistic);
  CHECK(powerset(3).atoms().size() == 3);
}

TEST_CASE("pentagon and diamond") {
  // N5: 0 < a < c < 1, 0 < b < 1.
  const std::vector<std::vector<int>> n5{{1, 1, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
  const FinitePoset p({"0", "a", "c", "b", "1"}, [&](std::size_t x, std::size_t y) { return n5[x][y] == 1; });
  const auto cls = classify(p);
  CHECK(cls.is_lattice);
  CHECK_FALSE(cls.is_modular);
  REQUIRE(cls.n5);
  CHECK(is_n5_sublattice(p, {0, 1, 2, 3, 4}));

  // M3 is modular but not distributive.
  const FinitePoset m3({"0", "x", "y", "z", "1"}, [](std::size_t a, std::size_t b) {
    return a == b || a == 0 || b == 4;
  });
  const auto mc = classify(m3);
  CHECK(mc.is_modular);
  CHECK_FALSE(mc.is_distributive);
  CHECK(mc.distributivity_failure);
}

TEST_CASE("non-lattice witness") {
  // Two incomparable elements below two incomparable elements.
  const FinitePoset bowtie({"a", "b", "c", "d"}, [](std::size_t x, std::size_t y) { return x == y || (x < 2 && y >= 2); });
  const auto cls = classify(bowtie);
  CHECK_FALSE(cls.is_lattice);
  REQUIRE(cls.join_failure);
  CHECK_FALSE(bowtie.join(cls.join_failure->first, cls.join_failure->second));
}

TEST_CASE("isomorphism search and duality") {
  const auto b = powerset(3);
  const auto iso = find_isomorphism(b, b.dual());
  REQUIRE(iso);
  CHECK(is_order_isomorphism(b, b.dual(), *iso));
  CHECK_FALSE(find_isomorphism(chain(4), powerset(2)));
  CHECK(same_order(chain(3), chain(3)));
}

TEST_CASE("covers form the transitive reduction") {
  const auto b = powerset(3);
  const auto cov = b.covers();
  CHECK(cov.size() == 12);
  for (auto [lo, hi] : cov) {
    CHECK(b.less(lo, hi));
    for (std::size_t z = 0; z < b.size(); ++z) CHECK_FALSE((b.less(lo, z) && b.less(z, hi)));
  }
  const std::string dot = to_dot(chain(2), "c");
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
}

TEST_CASE("lower approximations of the five-element path") {
  const ApproximationSpace s(fixtures::r5());
  const auto& u = s.universe();
  const auto down = enumerate_down_family(s);
  const std::vector<Subset> expected{Subset{},
                                     u.subset({"a"}),
                                     u.subset({"c"}),
                                     u.subset({"e"}),
                                     u.subset({"a", "b"}),
                                     u.subset({"a", "e"}),
                                     u.subset({"d", "e"}),
                                     u.subset({"a", "b", "c"}),
                                     u.subset({"c", "d", "e"}),
                                     u.full()};
  CHECK(down.members == expected);

  const auto cls = classify(down.poset());
  CHECK_FALSE(cls.is_modular);
  std::array<std::size_t, 5> pts{};
  const std::vector<Subset> n5{Subset{}, u.subset({"a"}), u.subset({"c"}), u.subset({"a", "b"}), u.subset({"a", "b", "c"})};
  for (std::size_t i = 0; i < 5; ++i) pts[i] = *down.index_of(n5[i]);
  std::sort(pts.begin(), pts.end());
  CHECK(is_n5_sublattice(down.poset(), pts));
  const auto all = n5_sublattices(down.poset());
  CHECK(std::find(all.begin(), all.end(), pts) != all.end());
}

TEST_CASE("families agree with oracle images") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = oracle::random_tolerance(6, rng, 0.4);
    const ApproximationSpace s(oracle::to_relation(t));
    std::set<oracle::Mask> lows;
    std::set<oracle::Mask> ups;
    for (oracle::Mask x = 0; x < 64; ++x) {
      lows.insert(oracle::lower(t, x));
      ups.insert(oracle::upper(t, x));
    }
    CHECK(enumerate_down_family(s).size() == lows.size());
    CHECK(enumerate_up_family(s).size() == ups.size());
    const auto rs = enumerate_rs(s);
    const auto ors = oracle::rough_sets(t);
    REQUIRE(rs.size() == ors.size());
    for (auto p : rs) CHECK(std::binary_search(ors.begin(), ors.end(), oracle::Pair{p.lo.bits(), p.hi.bits()}));
  }
}

TEST_CASE("identity relation gives the full power set") {
  const ApproximationSpace s(Relation::identity(Universe::lettered(4)));
  CHECK(enumerate_down_family(s).size() == 16);
  const auto rs = enumerate_rs(s);
  CHECK(rs.size() == 16);
  for (auto p : rs) CHECK(p.lo == p.hi);
  CHECK(classify(pair_poset(s.universe(), rs)).is_boolean);
}

TEST_CASE("three-element example") {
  const ApproximationSpace s(fixtures::three());
  const auto& u = s.universe();
  const auto rs = enumerate_rs(s);
  CHECK(rs.size() == 7);
  CHECK(index_of(rs, {Subset{}, u.subset({"a", "b"})}));
  CHECK(index_of(rs, {u.subset({"a"}), u.full()}));
}

TEST_CASE("rough sets of the five-element path") {
  const ApproximationSpace s(fixtures::r5());
  const auto& u = s.universe();
  const auto rs = enumerate_rs(s);
  CHECK(rs.size() == 23);
  const auto p = pair_poset(u, rs);
  const auto i1 = *index_of(rs, {u.subset({"a"}), u.subset({"a", "b", "c"})});
  const auto i2 = *index_of(rs, {Subset{}, u.subset({"a", "b", "c", "d"})});
  CHECK_FALSE(p.join(i1, i2));
  const auto j1 = *index_of(rs, {u.subset({"a", "b"}), u.subset({"a", "b", "c", "d"})});
  const auto j2 = *index_of(rs, {u.subset({"a"}), u.full()});
  CHECK_FALSE(p.meet(j1, j2));
  const auto rep = rs_is_complete_lattice(s);
  CHECK_FALSE(rep.complete);
  CHECK_FALSE(rep.closed_under_product_ops);
  CHECK(rep.witness);
}

TEST_CASE("family joins and meets") {
  const ApproximationSpace s(fixtures::r5());
  const auto& u = s.universe();
  CHECK(down_family_join(s, {u.subset({"a"}), u.subset({"c"})}) == u.subset({"a", "b", "c"}));
  CHECK(down_family_join(s, {Subset{}}) == Subset{});
  CHECK(down_family_join(s, enumerate_down_family(s).members) == u.full());
  CHECK(down_family_meet(s, {}) == u.full());
  CHECK(up_family_meet(s, {u.subset({"a", "b", "c"}), u.subset({"b", "c", "d"})}) == Subset{});
  CHECK(up_family_join(s, {u.subset({"a", "b"}), u.subset({"d", "e"})}) == u.subset({"a", "b", "d", "e"}));
  CHECK_THROWS_AS(down_family_join(s, {u.subset({"b"})}), Error);
  CHECK_THROWS_AS(up_family_meet(s, {u.subset({"a"})}), Error);
}

TEST_CASE("interior-closure image is an order-isomorphic copy") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const ApproximationSpace s(oracle::to_relation(oracle::random_tolerance(6, rng, 0.4)));
    const auto rs = enumerate_rs(s);
    const auto img = interior_closure_image(s, rs);
    CHECK(canonical_pairs(img).size() == rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = 0; j < rs.size(); ++j) CHECK(pair_leq(rs[i], rs[j]) == pair_leq(img[i], img[j]));
    }
  }
}

TEST_CASE("families are self-dual and isomorphic to each other") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const ApproximationSpace s(oracle::to_relation(oracle::random_tolerance(6, rng, 0.4)));
    const auto d = enumerate_down_family(s).poset();
    const auto u = enumerate_up_family(s).poset();
    CHECK(find_isomorphism(d, u));
    CHECK(find_isomorphism(d, d.dual()));
  }
}

TEST_CASE("construct_s postconditions and errors") {
  const ApproximationSpace s(fixtures::r5());
  const auto& u = s.universe();
  // T^↑ = Y gives the empty set.
  const Subset t = u.subset({"a"});
  CHECK(construct_s(s, s.upper(t), t).empty());

  const Subset y = s.upper(u.subset({"a", "c", "e"}));
  const Subset out = construct_s(s, y, Subset{});
  CHECK(check_s(s, y, Subset{}, out).empty());

  const ApproximationSpace iso(fixtures::from_lists({"a", "b"}, {{"a"}, {"b"}}));
  CHECK_THROWS_AS(construct_s(iso, iso.full(), Subset{}), Error);
  CHECK_THROWS_AS(construct_s(s, u.subset({"a"}), Subset{}), Error);
  CHECK_THROWS_AS(construct_s(s, u.subset({"a", "b", "c"}), u.subset({"c"})), Error);
}

TEST_CASE("construct_s on random inputs meeting the preconditions") {
  std::mt19937_64 rng(23);
  int exercised = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const ApproximationSpace s(oracle::to_relation(oracle::random_tolerance(7, rng, 0.35)));
    const Subset y = s.interior_downup(Subset(rng() & 0x7F));
    const Subset t = s.interior_downup(Subset(rng() & 0x7F) & s.lower(y));
    bool pre = t.subset_of(s.lower(y));
    for (auto x : y - s.upper(t)) pre = pre && s.neighborhood(x).size() >= 2;
    if (!pre) continue;
    ++exercised;
    const Subset out = construct_s(s, y, t);
    CHECK_MESSAGE(check_s(s, y, t, out).empty(), check_s(s, y, t, out));
  }
  CHECK(exercised > 50);
}

TEST_CASE("constructed meets match the brute-force meet") {
  SUBCASE("equivalence") {
    const ApproximationSpace s(fixtures::equivalence({"a", "b", "c", "d"}, {{"a", "b"}, {"c"}, {"d"}}));
    for_each_subset(s.full(), [&](Subset x) {
      for_each_subset(s.full(), [&](Subset y) {
        const auto m = construct_meet_z(s, {x, y});
        CHECK(s.lower(m.z) == (s.lower(x) & s.lower(y)));
        CHECK(s.upper(m.z) == (s.upper(x) & s.upper(y)));
      });
    });
  }
  SUBCASE("simplex") {
    const ApproximationSpace s(fixtures::simplex());
    const auto t = oracle::Tol{7, [&] {
      std::vector<std::vector<bool>> rel(7, std::vector<bool>(7));
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) rel[i][j] = s.relation().related(i, j);
      return rel;
    }()};
    const auto ors = oracle::rough_sets(t);
    const Subset k1 = fixtures::simplex_k('1');
    const Subset k2 = fixtures::simplex_k('2');
    const auto m = construct_meet_z(s, {k1, k2});
    const auto expect = oracle::glb(ors, {oracle::lower(t, k1.bits()), oracle::upper(t, k1.bits())},
                                    {oracle::lower(t, k2.bits()), oracle::upper(t, k2.bits())}, oracle::leq);
    REQUIRE(expect);
    CHECK(s.lower(m.z).bits() == expect->first);
    CHECK(s.upper(m.z).bits() == expect->second);
  }
  SUBCASE("three-element example, all pairs") {
    const ApproximationSpace s(fixtures::three());
    const auto rs = enumerate_rs(s);
    const auto p = pair_poset(s.universe(), rs);
    for_each_subset(s.full(), [&](Subset x) {
      for_each_subset(s.full(), [&](Subset y) {
        const auto m = construct_meet_z(s, {x, y});
        const auto i = *index_of(rs, {s.lower(x), s.upper(x)});
        const auto j = *index_of(rs, {s.lower(y), s.upper(y)});
        CHECK(index_of(rs, {s.lower(m.z), s.upper(m.z)}) == p.meet(i, j));
      });
    });
  }
}

TEST_CASE("construction failure is reported, never a wrong Z") {
  const ApproximationSpace s(fixtures::r5());
  int failures = 0;
  for_each_subset(s.full(), [&](Subset x) {
    for_each_subset(s.full(), [&](Subset y) {
      try {
        const auto m = construct_meet_z(s, {x, y});
        CHECK(s.lower(m.z) == (s.lower(x) & s.lower(y)));
        CHECK(s.upper(m.z) == s.interior_downup(s.upper(x) & s.upper(y)));
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConstructionFailed);
        ++failures;
      }
    });
  });
  CHECK(failures > 0);
}

TEST_CASE("empty family meets to the top") {
  const ApproximationSpace s(fixtures::three());
  const auto m = construct_meet_z(s, {});
  CHECK(m.z == s.full());
}
