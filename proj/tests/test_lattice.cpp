#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pvd/ideal_lattice.hpp"

using namespace pvd;

namespace {

ExtPtr gf4_over_gf2() {
  return make_ext(make_prime_field(2), make_galois_field(2, 2));
}

ExtPtr gf9_over_gf3() {
  return make_ext(make_prime_field(3), make_galois_field(3, 2));
}

Subspace line(const ExtensionPair& ext, const FieldElement& e) {
  return make_subspace(ext, {e});
}

}  // namespace

TEST_CASE("predicted lattice over gf(4)/gf(2) at depth 3") {
  ExtPtr ext = gf4_over_gf2();
  IdealLattice L = predicted_ideal_lattice(ext, 3);

  REQUIRE(L.poset.size() == 10);

  std::set<std::string> labels(L.poset.labels.begin(), L.poset.labels.end());
  std::set<std::string> expected{"R",     "<X^1>_V", "(1,1)", "(1,a)",
                                 "(1,a+1)", "<X^2>_V", "(2,1)", "(2,a)",
                                 "(2,a+1)", "<0>"};
  REQUIRE(labels == expected);

  auto covers = cover_pairs(L.poset);
  REQUIRE(covers.size() == 13);

  // R has exactly one lower cover, the first valuation ideal.
  std::vector<std::string> under_r;
  for (auto [lo, hi] : covers) {
    if (L.poset.labels[hi] == "R") under_r.push_back(L.poset.labels[lo]);
  }
  REQUIRE(under_r == std::vector<std::string>{"<X^1>_V"});

  // Each level-1 proper node sits between the two valuation ideals.
  std::multiset<std::pair<std::string, std::string>> edge_labels;
  for (auto [lo, hi] : covers) {
    edge_labels.insert({L.poset.labels[lo], L.poset.labels[hi]});
  }
  for (std::string w : {"1", "a", "a+1"}) {
    REQUIRE(edge_labels.count({"(1," + w + ")", "<X^1>_V"}) == 1);
    REQUIRE(edge_labels.count({"<X^2>_V", "(1," + w + ")"}) == 1);
    REQUIRE(edge_labels.count({"(2," + w + ")", "<X^2>_V"}) == 1);
    REQUIRE(edge_labels.count({"<0>", "(2," + w + ")"}) == 1);
  }

  REQUIRE(is_lattice(L.poset));
  // three incomparable subspace nodes per level force an M3 sublattice
  REQUIRE_FALSE(is_distributive(L.poset));
}

TEST_CASE("node meet and join agree with the poset everywhere") {
  ExtPtr ext = gf4_over_gf2();
  IdealLattice L = predicted_ideal_lattice(ext, 3);
  int n = L.poset.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto [m, s] = l_meet_join(L, L.nodes[i], L.nodes[j]);
      REQUIRE(L.index_of(m) == poset_meet(L.poset, i, j).value());
      REQUIRE(L.index_of(s) == poset_join(L.poset, i, j).value());
    }
  }
}

TEST_CASE("gluing rule: trivially intersecting nodes meet one level down") {
  ExtPtr ext = gf4_over_gf2();
  const FieldDescriptor& F = ext->F;
  FieldElement gen = f_gen(F);
  IdealNode one = node_proper(1, line(*ext, f_one(F)));
  IdealNode a = node_proper(1, line(*ext, gen));

  IdealNode meet = node_meet(*ext, one, a);
  REQUIRE(meet == node_valuation(2));

  IdealNode join = node_join(*ext, one, a);
  REQUIRE(join == node_valuation(1));

  // meets at the bottom proper level land on the zero ideal of the truncation
  IdealLattice L = predicted_ideal_lattice(ext, 3);
  IdealNode m2 = node_meet(*ext, node_proper(2, line(*ext, f_one(F))),
                           node_proper(2, line(*ext, gen)));
  REQUIRE(m2 == node_valuation(3));
  REQUIRE(node_label(*ext, m2, L.depth) == "<0>");
}

TEST_CASE("trivial extension collapses each level to a single valuation ideal") {
  ExtPtr ext = make_ext(make_prime_field(2), make_prime_field(2));
  IdealLattice L = predicted_ideal_lattice(ext, 4);
  REQUIRE(L.poset.size() == 5);
  FinitePoset c = chain(5, [](int i) { return "c" + std::to_string(i); });
  REQUIRE(poset_isomorphic(L.poset, c).iso);
  REQUIRE(is_distributive(L.poset));
}

TEST_CASE("depth-2 predicted lattices match the subspace counts") {
  REQUIRE(predicted_ideal_lattice(gf4_over_gf2(), 2).poset.size() == 6);
  REQUIRE(predicted_ideal_lattice(gf9_over_gf3(), 2).poset.size() == 7);
  REQUIRE(predicted_ideal_lattice(
              make_ext(make_prime_field(2), make_prime_field(2)), 2)
              .poset.size() == 3);
}

TEST_CASE("fragment closure over q(r;r^3-2)/q has eight nodes") {
  ExtPtr ext = make_ext(make_rationals(),
                        make_number_field("r", {-2, 0, 0, 1}));
  const FieldDescriptor& F = ext->F;
  FieldElement r = f_gen(F);
  FieldElement r2 = f_mul(F, r, r);

  std::vector<IdealNode> gens{node_proper(1, line(*ext, f_one(F))),
                              node_proper(1, line(*ext, r)),
                              node_proper(1, line(*ext, r2))};
  IdealLattice L = sublattice_generated(ext, gens, 2);

  REQUIRE(L.poset.size() == 8);
  std::set<std::string> labels(L.poset.labels.begin(), L.poset.labels.end());
  std::set<std::string> expected{"<X^1>_V",    "(1,<1,r>)", "(1,<1,r^2>)",
                                 "(1,<r,r^2>)", "(1,1)",     "(1,r)",
                                 "(1,r^2)",    "<X^2>_V"};
  REQUIRE(labels == expected);

  // every two-dimensional node covers exactly the two lines it contains
  auto covers = cover_pairs(L.poset);
  REQUIRE(covers.size() == 12);
  std::multiset<std::pair<std::string, std::string>> edges;
  for (auto [lo, hi] : covers) {
    edges.insert({L.poset.labels[lo], L.poset.labels[hi]});
  }
  REQUIRE(edges.count({"(1,1)", "(1,<1,r>)"}) == 1);
  REQUIRE(edges.count({"(1,r)", "(1,<1,r>)"}) == 1);
  REQUIRE(edges.count({"(1,r^2)", "(1,<1,r>)"}) == 0);
  REQUIRE(edges.count({"(1,1)", "(1,<1,r^2>)"}) == 1);
  REQUIRE(edges.count({"(1,r^2)", "(1,<1,r^2>)"}) == 1);
  REQUIRE(edges.count({"(1,r)", "(1,<r,r^2>)"}) == 1);
  REQUIRE(edges.count({"(1,r^2)", "(1,<r,r^2>)"}) == 1);
  for (std::string two : {"(1,<1,r>)", "(1,<1,r^2>)", "(1,<r,r^2>)"}) {
    REQUIRE(edges.count({two, "<X^1>_V"}) == 1);
  }
  for (std::string one : {"(1,1)", "(1,r)", "(1,r^2)"}) {
    REQUIRE(edges.count({"<X^2>_V", one}) == 1);
  }

  REQUIRE(is_lattice(L.poset));
  // pairwise-independent lines make this fragment a Boolean cube
  REQUIRE(is_distributive(L.poset));
}

TEST_CASE("coplanar lines close into a diamond through the gluing rule") {
  ExtPtr ext = make_ext(make_rationals(),
                        make_number_field("r", {-2, 0, 0, 1}));
  const FieldDescriptor& F = ext->F;
  FieldElement r = f_gen(F);
  FieldElement one_plus_r = f_add(F, f_one(F), r);

  // three lines inside one plane: joins all agree, meets all fall through
  std::vector<IdealNode> gens{node_proper(1, line(*ext, f_one(F))),
                              node_proper(1, line(*ext, r)),
                              node_proper(1, line(*ext, one_plus_r))};
  IdealLattice L = sublattice_generated(ext, gens, 2);
  REQUIRE(L.poset.size() == 5);
  REQUIRE(is_lattice(L.poset));
  REQUIRE_FALSE(is_distributive(L.poset));

  FinitePoset m3 = make_poset(
      {"bot", "x", "y", "z", "top"}, [](int i, int j) {
        return i == j || i == 0 || j == 4;
      });
  REQUIRE(poset_isomorphic(L.poset, m3).iso);
}

TEST_CASE("lattice guards") {
  ExtPtr ext = gf4_over_gf2();
  ExtPtr rationals = make_ext(make_rationals(), make_rationals());

  SECTION("infinite base field refuses the full lattice") {
    ExtPtr qr = make_ext(make_rationals(),
                         make_number_field("r", {-2, 0, 0, 1}));
    REQUIRE_THROWS_MATCHES(
        predicted_ideal_lattice(qr, 2), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == Errc::InfiniteLattice; }));
    (void)rationals;
  }

  SECTION("closure that would fall through the depth bound is refused") {
    const FieldDescriptor& F = ext->F;
    std::vector<IdealNode> gens{node_proper(1, line(*ext, f_one(F))),
                                node_proper(1, line(*ext, f_gen(F)))};
    REQUIRE_THROWS_MATCHES(
        sublattice_generated(ext, gens, 1), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == Errc::DepthExceeded; }));
  }

  SECTION("foreign nodes are rejected") {
    IdealLattice L = predicted_ideal_lattice(ext, 2);
    REQUIRE_THROWS_MATCHES(
        L.index_of(node_valuation(7)), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& e) { return e.code() == Errc::NodeMismatch; }));
  }

  SECTION("malformed nodes are rejected") {
    REQUIRE_THROWS_AS(validate_node(*ext, node_proper(0, line(*ext, f_one(ext->F)))),
                      Error);
    REQUIRE_THROWS_AS(validate_node(*ext, IdealNode{1, false, full_subspace(*ext)}),
                      Error);
    REQUIRE_THROWS_AS(predicted_ideal_lattice(ext, 0), Error);
  }
}
