#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "pvd/checkers.hpp"

using namespace pvd;

namespace {

ExtPtr gf4_over_gf2() {
  return make_ext(make_prime_field(2), make_galois_field(2, 2));
}

ExtPtr cbrt2_over_q() {
  return make_ext(make_rationals(), make_number_field("r", {-2, 0, 0, 1}));
}

GroupDescriptor zxz() { return g_lex_pair(g_int(), g_int()); }

}  // namespace

TEST_CASE("classification over integer exponents") {
  CheckReport r = classify_domain(gf4_over_gf2(), g_int());
  REQUIRE(r.verdict == Verdict::Holds);
  REQUIRE(r.details["valuation"] == false);
  REQUIRE(r.details["pvd"] == true);
  REQUIRE(r.details["atomic"] == true);
  REQUIRE(r.details["hfd"] == true);
  REQUIRE(r.details["bvd"] == true);
  REQUIRE(r.details["group_of_divisibility"] == "z o F#/K#");
}

TEST_CASE("classification flips with the exponent group") {
  CheckReport rational = classify_domain(gf4_over_gf2(), g_rational());
  REQUIRE(rational.details["atomic"] == false);
  REQUIRE(rational.details["hfd"] == false);
  REQUIRE(rational.details["bvd"] == false);
  REQUIRE(rational.details["pvd"] == true);

  CheckReport pair = classify_domain(cbrt2_over_q(), zxz());
  REQUIRE(pair.details["atomic"] == false);
  REQUIRE(pair.details["bvd"] == false);
  REQUIRE(pair.details["group_of_divisibility"] == "z*z o F#/K#");
}

TEST_CASE("trivial extension is the valuation ring and keeps its exponents") {
  CheckReport r = classify_domain(
      make_ext(make_prime_field(2), make_prime_field(2)), g_int());
  REQUIRE(r.details["valuation"] == true);
  REQUIRE(r.details["group_of_divisibility"] == "z");
  REQUIRE(r.details["atomic"] == true);
}

TEST_CASE("strong primeness of the maximal ideal") {
  SECTION("integer exponents, exhaustive window plus sampled series") {
    CheckReport r = check_strongly_prime(gf4_over_gf2(), g_int(), 3, 120);
    REQUIRE(r.verdict == Verdict::HoldsWithinBounds);
    REQUIRE(r.details["window_pairs"] == 49);
    REQUIRE(r.details["cosets"] == 3);
    REQUIRE(r.samples == 120);
  }
  SECTION("lexicographic pairs") {
    CheckReport r = check_strongly_prime(gf4_over_gf2(), zxz(), 2, 40);
    REQUIRE(r.verdict == Verdict::HoldsWithinBounds);
    REQUIRE(r.details["window_pairs"] == 625);
  }
  SECTION("rational exponents use the denominator grid") {
    CheckReport r = check_strongly_prime(gf4_over_gf2(), g_rational(), 2, 40);
    REQUIRE(r.verdict == Verdict::HoldsWithinBounds);
  }
  SECTION("number field coefficients") {
    CheckReport r = check_strongly_prime(cbrt2_over_q(), g_int(), 2, 30);
    REQUIRE(r.verdict == Verdict::HoldsWithinBounds);
    REQUIRE(r.details["cosets"] == 4);
  }
}

TEST_CASE("atomicity holds exactly over integer exponents") {
  SECTION("integer exponents factor and multiply back") {
    CheckReport r = check_atomicity(gf4_over_gf2(), g_int(), 3, 8, 80);
    REQUIRE(r.verdict == Verdict::Holds);
    REQUIRE(r.samples > 0);
  }
  SECTION("rational exponents have no atoms at all") {
    CheckReport r = check_atomicity(gf4_over_gf2(), g_rational(), 3, 8, 0);
    REQUIRE(r.verdict == Verdict::FailsWith);
    bool found = false;
    for (const std::string& n : r.notes) {
      if (n.find("no atoms") != std::string::npos) found = true;
    }
    REQUIRE(found);
  }
  SECTION("lexicographic pairs leave an unreachable witness") {
    CheckReport r = check_atomicity(gf4_over_gf2(), zxz(), 2, 8, 0);
    REQUIRE(r.verdict == Verdict::FailsWith);
    REQUIRE(r.witness == "((1,0),1)");
    REQUIRE(r.details["atoms_in_window"].get<long>() > 0);
    REQUIRE(r.details["sums_tried"].get<long>() > 0);
  }
  SECTION("the witness survives over an infinite coefficient extension") {
    CheckReport r = check_atomicity(cbrt2_over_q(), zxz(), 2, 6, 0);
    REQUIRE(r.verdict == Verdict::FailsWith);
    REQUIRE(r.witness == "((1,0),1)");
  }
}

TEST_CASE("boundary map behavior against the valuation overring") {
  SECTION("proper finite extension is not boundary complete") {
    CheckReport r = check_boundary(gf4_over_gf2(), 150);
    REQUIRE(r.verdict == Verdict::HoldsWithinBounds);
    REQUIRE(r.details["complete_expected"] == false);
    REQUIRE(r.details["complete_observed"] == false);
    REQUIRE(r.details["boundary_zero_only_units_of_v"].get<long>() >= 1);
    REQUIRE(r.details["boundary_positive_in_s"].get<long>() >= 1);
  }
  SECTION("trivial extension is boundary complete") {
    CheckReport r = check_boundary(
        make_ext(make_prime_field(3), make_prime_field(3)), 150);
    REQUIRE(r.verdict == Verdict::HoldsWithinBounds);
    REQUIRE(r.details["complete_observed"] == true);
    REQUIRE(r.details["boundary_zero_only_units_of_v"] == 0);
  }
  SECTION("number field extension") {
    CheckReport r = check_boundary(cbrt2_over_q(), 60);
    REQUIRE(r.verdict == Verdict::HoldsWithinBounds);
    REQUIRE(r.details["complete_observed"] == false);
  }
}

TEST_CASE("reports render deterministically") {
  CheckReport r = classify_domain(gf4_over_gf2(), g_int());
  std::string t1 = report_text(r);
  std::string t2 = report_text(classify_domain(gf4_over_gf2(), g_int()));
  REQUIRE(t1 == t2);
  REQUIRE(t1.find("check: classify\n") == 0);
  REQUIRE(t1.find("subject: s over gf(4)/gf(2) with exponents z\n") !=
          std::string::npos);
  REQUIRE(t1.find("verdict: holds\n") != std::string::npos);

  nlohmann::json j = report_json(r);
  REQUIRE(j["check"] == "classify");
  REQUIRE(j["details"]["bvd"] == true);
  REQUIRE(j.dump() == report_json(classify_domain(gf4_over_gf2(), g_int())).dump());

  CheckReport sp = check_strongly_prime(gf4_over_gf2(), g_int(), 2, 25);
  REQUIRE(report_text(sp) ==
          report_text(check_strongly_prime(gf4_over_gf2(), g_int(), 2, 25)));
  REQUIRE(report_text(sp).find("samples: 25\n") != std::string::npos);
  REQUIRE(report_text(sp).find("seed: 1729\n") != std::string::npos);
}
