#include <catch2/catch_amalgamated.hpp>

#include "pvd/groups.hpp"
#include "pvd/groups_window.hpp"

using namespace pvd;

namespace {

ExtPtr gf4_over_gf2() {
  return make_ext(make_prime_field(2), make_galois_field(2, 2));
}

GroupElement lex2(int a, int b) { return ge_pair(ge_int(a), ge_int(b)); }

}  // namespace

TEST_CASE("lexicographic pairs compare by the first coordinate first") {
  GroupDescriptor G = g_lex_pair(g_int(), g_int());
  CHECK(g_compare(G, lex2(0, 5), lex2(1, -100)) == Cmp::LT);
  CHECK(g_compare(G, lex2(2, -1), lex2(2, 3)) == Cmp::LT);
  CHECK(g_compare(G, lex2(2, 3), lex2(2, 3)) == Cmp::EQ);
  CHECK(g_compare(G, lex2(3, 0), lex2(2, 99)) == Cmp::GT);
  CHECK(linearly_ordered(G));
}

TEST_CASE("trivially ordered quotient separates cosets") {
  ExtPtr ext = gf4_over_gf2();
  GroupDescriptor A = g_trivial_quotient(ext);
  const FieldDescriptor& F = ext->F;
  FieldElement a = f_gen(F);
  FieldElement b = f_add(F, a, f_one(F));

  CHECK(g_compare(A, ge_coset(a), ge_coset(a)) == Cmp::EQ);
  CHECK(g_compare(A, ge_coset(a), ge_coset(b)) == Cmp::Incomparable);
  CHECK(g_compare(A, ge_coset(f_one(F)), g_zero(A)) == Cmp::EQ);
  // a * (a+1) = 1, so the two nontrivial cosets sum to the identity coset.
  CHECK(g_eq(A, g_add(A, ge_coset(a), ge_coset(b)), g_zero(A)));
  CHECK_FALSE(is_strictly_positive(A, ge_coset(a)));
  CHECK_FALSE(linearly_ordered(A));
}

TEST_CASE("lex sum over a quotient orders by the linear head") {
  ExtPtr ext = gf4_over_gf2();
  GroupDescriptor G = g_lex_sum(g_int(), g_trivial_quotient(ext));
  FieldElement a = f_gen(ext->F);
  FieldElement one = f_one(ext->F);

  GroupElement x = ge_pair(ge_int(-1), ge_coset(a));
  GroupElement y = ge_pair(ge_int(0), ge_coset(one));
  CHECK(g_compare(G, x, y) == Cmp::LT);
  CHECK(g_compare(G, ge_pair(ge_int(0), ge_coset(a)), y) == Cmp::Incomparable);
  CHECK(is_strictly_positive(G, ge_pair(ge_int(1), ge_coset(a))));
  CHECK_FALSE(is_positive(G, ge_pair(ge_int(0), ge_coset(a))));
  CHECK_FALSE(linearly_ordered(G));
  CHECK(group_str(G) == "z o F#/K#");
}

TEST_CASE("payload validation") {
  GroupDescriptor Z = g_int();
  CHECK_THROWS_AS(g_add(Z, ge_int(1), ge_rat(Rat(1) / 2)), Error);
  ExtPtr ext = gf4_over_gf2();
  GroupDescriptor A = g_trivial_quotient(ext);
  CHECK_THROWS_AS(validate_payload(A, ge_coset(f_zero(ext->F))), Error);
  CHECK_THROWS_AS(g_lex_sum(g_int(), g_int()), Error);
  CHECK_THROWS_AS(g_lex_pair(g_int(), g_trivial_quotient(ext)), Error);
}

TEST_CASE("comparison is translation invariant on sampled triples") {
  ExtPtr ext = gf4_over_gf2();
  GroupDescriptor G = g_lex_sum(g_lex_pair(g_int(), g_int()),
                                g_trivial_quotient(ext));
  Rng rng(kDefaultSeed);
  auto sample = [&]() {
    return ge_pair(lex2(static_cast<int>(rng.range(-5, 5)),
                        static_cast<int>(rng.range(-5, 5))),
                   ge_coset(f_random_nonzero(ext->F, rng)));
  };
  for (int i = 0; i < 200; ++i) {
    GroupElement x = sample(), y = sample(), z = sample();
    CHECK(g_compare(G, x, y) ==
          g_compare(G, g_add(G, x, z), g_add(G, y, z)));
    if (is_positive(G, x) && is_positive(G, y)) {
      CHECK(is_positive(G, g_add(G, x, y)));
    }
  }
}

TEST_CASE("atoms are the minimal strictly positive elements") {
  CHECK(is_atom(g_int(), ge_int(1)));
  CHECK_FALSE(is_atom(g_int(), ge_int(2)));
  CHECK_FALSE(is_atom(g_int(), ge_int(0)));
  CHECK_FALSE(is_atom(g_rational(), ge_rat(Rat(1) / 2)));

  GroupDescriptor ZZ = g_lex_pair(g_int(), g_int());
  CHECK(is_atom(ZZ, lex2(0, 1)));
  CHECK_FALSE(is_atom(ZZ, lex2(1, 0)));
  CHECK_FALSE(is_atom(ZZ, lex2(0, 2)));
  CHECK_FALSE(is_atom(ZZ, lex2(1, -5)));

  ExtPtr ext = gf4_over_gf2();
  GroupDescriptor G = g_lex_sum(g_int(), g_trivial_quotient(ext));
  FieldElement a = f_gen(ext->F);
  CHECK(is_atom(G, ge_pair(ge_int(1), ge_coset(a))));
  CHECK(is_atom(G, ge_pair(ge_int(1), ge_coset(f_one(ext->F)))));
  CHECK_FALSE(is_atom(G, ge_pair(ge_int(2), ge_coset(a))));
  CHECK_FALSE(is_atom(G, ge_pair(ge_int(0), ge_coset(a))));
}

TEST_CASE("positive cone atomicity per kind") {
  CHECK(positive_cone_atomicity(g_int()).atomic);
  AtomicityReport rq = positive_cone_atomicity(g_rational());
  CHECK_FALSE(rq.atomic);
  CHECK(rq.why == NonAtomicKind::NoAtoms);

  GroupDescriptor ZZ = g_lex_pair(g_int(), g_int());
  AtomicityReport rzz = positive_cone_atomicity(ZZ);
  CHECK_FALSE(rzz.atomic);
  CHECK(rzz.why == NonAtomicKind::UnreachableWitness);
  REQUIRE(rzz.witness.has_value());
  CHECK(g_eq(ZZ, *rzz.witness, lex2(1, 0)));
  CHECK(is_strictly_positive(ZZ, *rzz.witness));

  ExtPtr ext = gf4_over_gf2();
  CHECK(positive_cone_atomicity(g_lex_sum(g_int(), g_trivial_quotient(ext))).atomic);
  AtomicityReport rqs =
      positive_cone_atomicity(g_lex_sum(g_rational(), g_trivial_quotient(ext)));
  CHECK_FALSE(rqs.atomic);
  CHECK(rqs.why == NonAtomicKind::NoAtoms);

  GroupDescriptor big =
      g_lex_sum(g_lex_pair(g_int(), g_int()), g_trivial_quotient(ext));
  AtomicityReport rbig = positive_cone_atomicity(big);
  CHECK_FALSE(rbig.atomic);
  REQUIRE(rbig.witness.has_value());
  CHECK(is_strictly_positive(big, *rbig.witness));

  // The witness really is unreachable: sums of up to 8 window atoms all sit
  // over first coordinate (0, k), never over (1, 0).
  std::vector<GroupElement> atoms = atoms_in_window(big, 3);
  CHECK_FALSE(atoms.empty());
  for (const GroupElement& s : bounded_atom_sums(big, atoms, 8)) {
    CHECK_FALSE(g_eq(big, s, *rbig.witness));
  }
}

TEST_CASE("window verdicts for subgroups of the integers") {
  WindowCheckResult full = convex_directed_window_check(g_int(), {ge_int(1)}, 6);
  CHECK(full.verdict == WindowVerdict::ConvexDirected);

  WindowCheckResult even = convex_directed_window_check(g_int(), {ge_int(2)}, 6);
  CHECK(even.verdict == WindowVerdict::FailsConvex);
  REQUIRE(even.witness.has_value());
  CHECK(even.witness->as_int() % 2 != 0);

  WindowCheckResult dense = convex_directed_window_check(g_rational(), {ge_rat(1)}, 4);
  CHECK(dense.verdict == WindowVerdict::FailsConvex);
}

TEST_CASE("window verdicts over the lex sum") {
  ExtPtr ext = gf4_over_gf2();
  GroupDescriptor G = g_lex_sum(g_int(), g_trivial_quotient(ext));
  FieldElement a = f_gen(ext->F);
  FieldElement one = f_one(ext->F);

  // The coset axis alone is a subgroup that is not directed.
  WindowCheckResult axis =
      convex_directed_window_check(G, {ge_pair(ge_int(0), ge_coset(a))}, 4);
  CHECK(axis.verdict == WindowVerdict::FailsDirected);
  CHECK(axis.subgroup_closed);
  REQUIRE(axis.witness.has_value());

  // The cyclic subgroup through (1, 1) misses incomparable cosets.
  WindowCheckResult diag =
      convex_directed_window_check(G, {ge_pair(ge_int(1), ge_coset(one))}, 4);
  CHECK(diag.verdict == WindowVerdict::FailsConvex);
  REQUIRE(diag.witness.has_value());
  CHECK_FALSE(ext_contains(*ext, diag.witness->as_pair()[1].as_coset()));

  // Both generators together give the whole group on the window.
  WindowCheckResult whole = convex_directed_window_check(
      G, {ge_pair(ge_int(1), ge_coset(one)), ge_pair(ge_int(0), ge_coset(a))}, 4);
  CHECK(whole.verdict == WindowVerdict::ConvexDirected);
}

TEST_CASE("window verdicts inside the lex pair") {
  GroupDescriptor ZZ = g_lex_pair(g_int(), g_int());
  // {0} x Z is convex and directed.
  WindowCheckResult second =
      convex_directed_window_check(ZZ, {lex2(0, 1)}, 3);
  CHECK(second.verdict == WindowVerdict::ConvexDirected);
  // Z x {0} is directed but not convex.
  WindowCheckResult first = convex_directed_window_check(ZZ, {lex2(1, 0)}, 3);
  CHECK(first.verdict == WindowVerdict::FailsConvex);
}

TEST_CASE("window budgets fail loudly") {
  std::vector<GroupElement> gens = {ge_int(1), ge_int(2), ge_int(3), ge_int(4)};
  CHECK_THROWS_AS(convex_directed_window_check(g_int(), gens, 12), Error);
  try {
    convex_directed_window_check(g_int(), gens, 12);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WindowExhausted);
  }
}

TEST_CASE("rational window enumeration is the expected finite set") {
  std::vector<GroupElement> w = window_elements(g_rational(), 2);
  // Norm <= 2 admits 0, +-1, +-2, +-1/2 and nothing else.
  CHECK(w.size() == 7);
}
