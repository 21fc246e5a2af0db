#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pvd/finite_ring.hpp"
#include "pvd/ideal_lattice.hpp"
#include "pvd/rng.hpp"

using namespace pvd;

namespace {

ExtPtr gf4_over_gf2() {
  return make_ext(make_prime_field(2), make_galois_field(2, 2));
}

ExtPtr gf9_over_gf3() {
  return make_ext(make_prime_field(3), make_galois_field(3, 2));
}

std::set<std::string> label_set(const FinitePoset& p) {
  return {p.labels.begin(), p.labels.end()};
}

}  // namespace

TEST_CASE("truncation ring over gf(4)/gf(2) at depth 3") {
  FiniteRing ring = make_finite_ring(gf4_over_gf2(), 3);
  REQUIRE(ring.size == 32);

  SECTION("codec round trips") {
    for (std::size_t i = 0; i < ring.size; ++i) {
      REQUIRE(ring_encode(ring, ring_decode(ring, i)) == i);
    }
  }

  SECTION("ring axioms on sampled triples") {
    Rng rng;
    std::size_t one = ring_one(ring);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t a = static_cast<std::size_t>(rng.below(ring.size));
      std::size_t b = static_cast<std::size_t>(rng.below(ring.size));
      std::size_t c = static_cast<std::size_t>(rng.below(ring.size));
      REQUIRE(ring_add(ring, a, b) == ring_add(ring, b, a));
      REQUIRE(ring_mul(ring, a, b) == ring_mul(ring, b, a));
      REQUIRE(ring_mul(ring, ring_mul(ring, a, b), c) ==
              ring_mul(ring, a, ring_mul(ring, b, c)));
      REQUIRE(ring_mul(ring, a, ring_add(ring, b, c)) ==
              ring_add(ring, ring_mul(ring, a, b), ring_mul(ring, a, c)));
      REQUIRE(ring_mul(ring, a, one) == a);
      REQUIRE(ring_add(ring, a, ring_zero(ring)) == a);
    }
  }

  SECTION("orders and units") {
    REQUIRE(ring_order(ring, ring_zero(ring)) == 3);
    REQUIRE(ring_order(ring, ring_one(ring)) == 0);
    // units are exactly the elements with a nonzero constant coefficient
    std::size_t units = 0;
    for (std::size_t a = 0; a < ring.size; ++a) {
      bool invertible = ring_is_unit(ring, a);
      RingElement x = ring_decode(ring, a);
      REQUIRE(invertible == !f_is_zero(x[0]));
      if (invertible) ++units;
    }
    REQUIRE(units == 16);
  }

  SECTION("a constant coefficient outside K is rejected") {
    RingElement bad(3, f_zero(ring.ext->F));
    bad[0] = f_gen(ring.ext->F);
    REQUIRE_THROWS_MATCHES(
        ring_encode(ring, bad), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == Errc::NotInRing; }));
  }
}

TEST_CASE("both enumeration strategies find the same ten ideals") {
  FiniteRing ring = make_finite_ring(gf4_over_gf2(), 3);

  std::vector<IdealSet> by_sums = enumerate_ideals_by_sums(ring);
  std::vector<IdealSet> by_growth = enumerate_ideals_by_growth(ring);

  std::set<IdealSet> a(by_sums.begin(), by_sums.end());
  std::set<IdealSet> b(by_growth.begin(), by_growth.end());
  REQUIRE(a == b);
  REQUIRE(a.size() == 10);

  for (const IdealSet& s : a) REQUIRE(is_ideal(ring, s));
}

TEST_CASE("brute lattice of gf(4)/gf(2) depth 3 matches the prediction") {
  ExtPtr ext = gf4_over_gf2();
  FiniteRing ring = make_finite_ring(ext, 3);
  BruteLattice brute = ideal_poset(ring, enumerate_ideals_by_growth(ring));
  IdealLattice predicted = predicted_ideal_lattice(ext, 3);

  REQUIRE(label_set(brute.poset) == label_set(predicted.poset));

  IsoResult iso = poset_isomorphic(brute.poset, predicted.poset);
  REQUIRE(iso.iso);

  // cover relations coincide edge for edge under the structural labels
  auto edge_labels = [](const FinitePoset& p) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [lo, hi] : cover_pairs(p)) {
      out.insert({p.labels[lo], p.labels[hi]});
    }
    return out;
  };
  REQUIRE(edge_labels(brute.poset) == edge_labels(predicted.poset));
  REQUIRE(cover_pairs(brute.poset).size() == 13);
}

TEST_CASE("brute lattice of gf(9)/gf(3) depth 2 matches the prediction") {
  ExtPtr ext = gf9_over_gf3();
  FiniteRing ring = make_finite_ring(ext, 2);
  REQUIRE(ring.size == 27);

  std::vector<IdealSet> ideals = enumerate_ideals_by_growth(ring);
  std::vector<IdealSet> cross = enumerate_ideals_by_sums(ring);
  REQUIRE(std::set<IdealSet>(ideals.begin(), ideals.end()) ==
          std::set<IdealSet>(cross.begin(), cross.end()));
  REQUIRE(ideals.size() == 7);

  BruteLattice brute = ideal_poset(ring, std::move(ideals));
  IdealLattice predicted = predicted_ideal_lattice(ext, 2);
  REQUIRE(label_set(brute.poset) == label_set(predicted.poset));
  REQUIRE(poset_isomorphic(brute.poset, predicted.poset).iso);
}

TEST_CASE("trivial extension gives the chain of valuation ideals") {
  ExtPtr ext = make_ext(make_prime_field(2), make_prime_field(2));
  FiniteRing ring = make_finite_ring(ext, 2);
  REQUIRE(ring.size == 4);
  std::vector<IdealSet> ideals = enumerate_ideals_by_growth(ring);
  REQUIRE(ideals.size() == 3);
  BruteLattice brute = ideal_poset(ring, std::move(ideals));
  REQUIRE(label_set(brute.poset) ==
          std::set<std::string>{"R", "<X^1>_V", "<0>"});
}

TEST_CASE("the maximal ideal is the unique prime and absorbs every proper ideal") {
  FiniteRing ring = make_finite_ring(gf4_over_gf2(), 3);
  IdealSet max = nonunit_set(ring);
  REQUIRE(is_ideal(ring, max));
  REQUIRE(ideal_label(ring, max) == "<X^1>_V");

  std::vector<IdealSet> ideals = enumerate_ideals_by_growth(ring);
  int primes = 0;
  for (const IdealSet& s : ideals) {
    if (ideal_count(s) < ring.size) {
      // every proper ideal sits inside the nonunits
      for (std::size_t v = 0; v < ring.size; ++v) {
        if (s[v]) REQUIRE(max[v]);
      }
    }
    if (is_prime_ideal(ring, s)) {
      ++primes;
      REQUIRE(ideal_label(ring, s) == "<X^1>_V");
    }
  }
  REQUIRE(primes == 1);
}

TEST_CASE("finite ring guards") {
  REQUIRE_THROWS_MATCHES(
      make_finite_ring(gf4_over_gf2(), 7), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == Errc::TooLarge; }));
  ExtPtr qq = make_ext(make_rationals(), make_rationals());
  REQUIRE_THROWS_MATCHES(
      make_finite_ring(qq, 2), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == Errc::InfiniteLattice; }));
  REQUIRE_THROWS_AS(make_finite_ring(gf4_over_gf2(), 0), Error);
}
