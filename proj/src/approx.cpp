#include "rough/approx.hpp"

#include <random>

#include "rough/error.hpp"

namespace rough {

Subset lower_approximation(const Relation& r, Subset x) {
  Subset out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.neighborhood(i).subset_of(x)) out.insert(i);
  }
  return out;
}

Subset upper_approximation(const Relation& r, Subset x) {
  Subset out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.neighborhood(i).intersects(x)) out.insert(i);
  }
  return out;
}

ApproximationSpace::ApproximationSpace(Relation r) : r_(std::move(r)) {
  if (!r_.is_tolerance()) {
    throw Error(ErrorKind::NotATolerance, "approximation space requires a reflexive, symmetric relation");
  }
}

Subset ApproximationSpace::lower(Subset x) const {
  Subset out;
  const auto& nbr = r_.neighborhoods();
  for (std::size_t i = 0; i < nbr.size(); ++i) {
    if (nbr[i].subset_of(x)) out.insert(i);
  }
  return out;
}

Subset ApproximationSpace::ortho_up(Subset a) const {
  if (!in_up_family(a)) {
    throw Error(ErrorKind::NotInFamily, universe().format(a) + " is not an upper approximation");
  }
  return upper(complement(a));
}

Subset ApproximationSpace::ortho_down(Subset a) const {
  if (!in_down_family(a)) {
    throw Error(ErrorKind::NotInFamily, universe().format(a) + " is not a lower approximation");
  }
  return lower(complement(a));
}

Subset ApproximationSpace::singleton_core() const {
  Subset out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (neighborhood(x) == Subset::singleton(x)) out.insert(x);
  }
  return out;
}

GaloisReport verify_galois_characterization(const ApproximationSpace& s, std::uint64_t exhaustive_pairs,
                                            std::size_t samples, std::uint64_t seed) {
  GaloisReport rep;
  const auto& u = s.universe();
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n && rep.symmetric_clause; ++x) {
    if (!s.upper(Subset::singleton(x)).contains(x)) {
      rep.reflexive_clause = false;
      rep.witness = "x=" + u.label(x);
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (s.upper(Subset::singleton(y)).contains(x) && !s.upper(Subset::singleton(x)).contains(y)) {
        rep.symmetric_clause = false;
        rep.witness = "x=" + u.label(x) + ", y=" + u.label(y);
        break;
      }
    }
  }

  auto check = [&](Subset a, Subset b) {
    ++rep.pairs_checked;
    if (s.upper(a).subset_of(b) != a.subset_of(s.lower(b))) {
      rep.adjunction = false;
      rep.witness = "X=" + u.format(a) + ", Y=" + u.format(b);
    }
  };
  const bool exhaustive = 2 * n < 64 && (std::uint64_t{1} << (2 * n)) <= exhaustive_pairs;
  if (exhaustive) {
    const Subset all = s.full();
    for_each_subset(all, [&](Subset a) {
      if (!rep.adjunction) return;
      for_each_subset(all, [&](Subset b) {
        if (rep.adjunction) check(a, b);
      });
    });
  } else {
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = s.full().bits();
    for (std::size_t k = 0; k < samples && rep.adjunction; ++k) {
      check(Subset(rng() & mask), Subset(rng() & mask));
    }
  }
  return rep;
}

}  // namespace rough
