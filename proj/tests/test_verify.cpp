#include <set>

#include "doctest.h"
#include "hypseries/verify.hpp"

using namespace hypseries;
using namespace hypseries::verify;

namespace {
FieldElem rat(long n, long d = 1) { return FieldElem::rational(n, d); }
}

TEST_CASE("registry shape") {
  const auto& reg = registry();
  CHECK(reg.size() >= 40);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    CHECK(ids.insert(c.id).second);  // unique ids
    CHECK(c.run != nullptr);
  }
  for (const char* want :
       {"Pfaff", "Euler", "Kummer", "F1Q", "F2to2F1", "Qt1monom", "Qt7", "G2repr",
        "Fnsubs[m=3]", "Fnsubs[m=-4]", "Eulergen[n=-3]", "gensubsder[n=3]", "2F1(1)",
        "F1(x,1)", "2F1(-1)", "BesselClosed", "Radius", "semicubic4F3"}) {
    CAPTURE(want);
    CHECK(find_case(want) != nullptr);
  }
  const IdentityCase* ev = find_case("Fnsubs[m=3,generic]");
  REQUIRE(ev != nullptr);
  CHECK(ev->evidence_only);
  CHECK(ev->status == CaseStatus::ConjectureEvidence);
  const IdentityCase* typo = find_case("F2to2F1");
  REQUIRE(typo != nullptr);
  CHECK(typo->status == CaseStatus::CorrectedTypo);
  CHECK_FALSE(registry_hash().empty());
}

TEST_CASE("checks are deterministic in (id, seed, order)") {
  CheckReport a = check_identity("Pfaff", 99, 10);
  CheckReport b = check_identity("Pfaff", 99, 10);
  CHECK(a.params == b.params);
  CHECK(a.outcome == b.outcome);
  CHECK(a.detail == b.detail);
  CheckReport c = check_identity("Pfaff", 100, 10);
  CHECK(a.params != c.params);
}

TEST_CASE("single checks and overrides") {
  CheckReport ok = check_identity("Pfaff", 1, 12);
  CHECK(ok.outcome == Outcome::Pass);
  // an inadmissible override is reported as an error, not redrawn
  Overrides ov{{"c", rat(-1)}};
  CheckReport bad = check_identity("Pfaff", 1, 8, &ov);
  CHECK(bad.outcome == Outcome::Error);
  CHECK(bad.detail.find("InadmissibleLowerParameter") != std::string::npos);
  CHECK_THROWS_AS(check_identity("NotARealIdentity", 0, 8), Error);
}

TEST_CASE("negative controls break under one-sided perturbation") {
  for (const char* id : {"Pfaff", "F2to2F1", "Qt3", "Fnsubs[m=2]", "2F1(1)"}) {
    CAPTURE(id);
    CheckReport r = check_identity(id, 5, 10, nullptr, /*perturb=*/true);
    CHECK(r.outcome == Outcome::Fail);
  }
}

TEST_CASE("the displayed duplicate-parameter reading of F2to2F1 fails") {
  // with b1 in both slots (as printed) the two sides disagree once b1 != b2
  using namespace hypseries::specfun;
  int N = 8;
  Universe u{{"x", "y"}, N, FieldCtx::rational()};
  MultiSeries x = u_var(u, "x"), y = u_var(u, "y");
  FieldElem a = rat(7, 4), b1 = rat(1, 3), b2 = rat(2, 5);
  MultiSeries lhs = appell_f2_sum(a, b1, b1, a, a, x, y);
  MultiSeries omx = u_one(u) - x, omy = u_one(u) - y;
  MultiSeries rhs = omx.pow_field(-b1) * omy.pow_field(-b2) *
                    pfq_sum({b1, b2}, {a}, x * y * (omx * omy).inverse());
  CHECK(MultiSeries::disagree(lhs, rhs).has_value());
}

TEST_CASE("check_all filtering, evidence gating and summary") {
  auto qt = check_all(8, 3, "Qt*", false, 1);
  CHECK(qt.size() == 7);
  for (const auto& r : qt) CHECK(r.id.substr(0, 2) == "Qt");
  auto plain = check_all(8, 3, "Fnsubs*", false, 1);
  for (const auto& r : plain) CHECK(r.regime == "theorem");
  auto ev = check_all(8, 3, "Fnsubs*", true, 1);
  CHECK(ev.size() == plain.size() + 4);
  Summary s = summarize(ev);
  CHECK(s.total == static_cast<int>(plain.size()));
  CHECK(s.evidence_total == 4);
}

TEST_CASE("square-discriminant slope parameters") {
  // the worked example: m = 1/3 gives t = 9/8 and slopes {-1/2, -2}
  QuadraticSlopes q = slopes_from_parameter(rat(1, 3));
  CHECK(q.t == rat(9, 8));
  CHECK(q.s * q.s == q.t * (q.t - rat(1)));
  bool slopes_match = (q.tau_plus == rat(-1, 2) && q.tau_minus == rat(-2)) ||
                      (q.tau_plus == rat(-2) && q.tau_minus == rat(-1, 2));
  CHECK(slopes_match);
  // defining relations hold for random draws
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    QuadraticSlopes r = choose_square_discriminant_t(seed);
    CHECK(r.tau_plus + r.tau_minus == rat(2) - rat(4) * r.t);
    CHECK((r.tau_plus * r.tau_minus).is_one());
    CHECK(r.s * r.s == r.t * (r.t - rat(1)));
    CHECK_FALSE(r.tau_plus == r.tau_minus);  // degenerate slopes excluded
  }
  CHECK_THROWS_AS(slopes_from_parameter(rat(0)), Error);
  CHECK_THROWS_AS(slopes_from_parameter(rat(1)), Error);
  CHECK_THROWS_AS(slopes_from_parameter(rat(-1)), Error);
}

TEST_CASE("report JSON carries the outcome") {
  CheckReport r = check_identity("Kummer", 2, 8);
  auto j = r.to_json();
  CHECK(j["id"] == "Kummer");
  CHECK(j["outcome"] == "pass");
  CHECK(j["order"] == 8);
}
