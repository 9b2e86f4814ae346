#include <random>

#include "doctest.h"
#include "hypseries/hypop.hpp"
#include "hypseries/verify.hpp"

using namespace hypseries;

namespace {
FieldElem rat(long n, long d = 1) { return FieldElem::rational(n, d); }
}

TEST_CASE("rising factorials") {
  CHECK(pochhammer(rat(7, 3), 0).is_one());
  CHECK(pochhammer(rat(2), 3) == rat(24));
  CHECK(pochhammer(rat(-3), 5).is_zero());
  CHECK(pochhammer(rat(1, 2), 2) == rat(3, 4));
}

TEST_CASE("rising factorials with negative index") {
  CHECK(pochhammer_int(rat(5), -2) == rat(1, 12));
  CHECK(pochhammer_int(rat(7, 2), 1) == rat(7, 2));
  CHECK_THROWS_AS(pochhammer_int(rat(2), -2), Error);
  try {
    pochhammer_int(rat(2), -2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PochhammerPole);
  }
}

TEST_CASE("coefficient rescaling") {
  Universe u{{"x"}, 6, FieldCtx::rational()};
  MultiSeries f = MultiSeries::make({"x"}, 6, {{{0}, rat(1)}, {{1}, rat(1)}, {{2}, rat(1)}});
  // upper 1, lower 2: factor 1/(n+1)
  MultiSeries g = hyp_apply(f, rat(1), rat(2), "x");
  CHECK(g.coeff({0}) == rat(1));
  CHECK(g.coeff({1}) == rat(1, 2));
  CHECK(g.coeff({2}) == rat(1, 3));
  // equal parameters act as the identity
  std::mt19937_64 rng(3);
  MultiSeries r = verify::random_series(rng, u);
  CHECK(hyp_apply(r, rat(5, 7), rat(5, 7), "x") == r);
  CHECK_THROWS_AS(hyp_apply(r, rat(1), rat(-2), "x"), Error);
  CHECK_THROWS_AS(hyp_apply(r, rat(1), rat(0), "x"), Error);
  CHECK_THROWS_AS(hyp_apply(r, rat(1), rat(2), "q"), Error);
  // upper nonpositive integers are allowed and truncate the series
  MultiSeries t = hyp_apply((u_one(u) - u_var(u, "x")).inverse(), rat(-2), rat(1, 2), "x");
  CHECK(t.coeff({3}).is_zero());
  CHECK_FALSE(t.coeff({2}).is_zero());
}

TEST_CASE("Bessel-type rescaling of cos(2 sqrt x)") {
  // sum (-1)^k 4^k x^k/(2k)! with upper 1/2 becomes sum (-x)^k/((c)_k k!);
  // at k = 1 the coefficient is -1/c
  Universe u{{"x"}, 5, FieldCtx::rational()};
  MultiSeries cosr = MultiSeries::make(
      {"x"}, 5,
      {{{0}, rat(1)}, {{1}, rat(-4, 2)}, {{2}, rat(16, 24)}, {{3}, rat(-64, 720)}});
  MultiSeries g = hyp_apply(cosr, rat(1, 2), rat(5, 4), "x");
  CHECK(g.coeff({1}) == rat(-4, 5));
  CHECK(g.coeff({2}) == rat(1, 2) / (rat(5, 4) * rat(9, 4)));
}

TEST_CASE("differential-operator route") {
  Universe u{{"x"}, 8, FieldCtx::rational()};
  std::mt19937_64 rng(17);
  MultiSeries f = verify::random_series(rng, u);
  CHECK(hyp_difop_apply(f, rat(3, 2), 0, "x") == f);
  MultiSeries x2 = u_var(u, "x").pow_int(2);
  CHECK(hyp_difop_apply(x2, rat(1), 1, "x").coeff({2}) == rat(3));
  for (int n = 0; n <= 4; ++n) {
    MultiSeries g = verify::random_series(rng, u);
    REQUIRE_FALSE(MultiSeries::disagree(hyp_difop_apply(g, rat(3, 2), n, "x"),
                                        hyp_apply(g, rat(3, 2) + rat(n), rat(3, 2), "x"))
                      .has_value());
  }
  CHECK_THROWS_AS(hyp_difop_apply(f, rat(0), 2, "x"), Error);
}

TEST_CASE("elementary property suite") {
  std::mt19937_64 rng(123);
  for (const auto& prop : verify::basic_properties()) {
    CAPTURE(prop.name);
    for (int i = 0; i < 25; ++i) {
      auto res = prop.run(rng, 10);
      if (res) FAIL(prop.name << ": " << *res);
    }
  }
}
