#include <random>

#include "doctest.h"
#include "hypseries/series.hpp"
#include "hypseries/verify.hpp"

using namespace hypseries;

namespace {

FieldElem rat(long n, long d = 1) { return FieldElem::rational(n, d); }

MultiSeries mk(std::vector<std::string> vars, int order,
               std::vector<std::pair<std::vector<int>, long>> terms) {
  std::vector<std::pair<std::vector<int>, FieldElem>> t;
  for (auto& [e, c] : terms) t.emplace_back(e, rat(c));
  return MultiSeries::make(std::move(vars), order, t);
}

}  // namespace

TEST_CASE("construction and canonical form") {
  MultiSeries s = mk({"x"}, 4, {{{0}, 1}, {{1}, 1}});
  CHECK(s.text() == "1 + x");
  MultiSeries xy = MultiSeries::make({"x", "y"}, 3, {{{1, 1}, rat(1, 2)}});
  CHECK(xy.text() == "1/2*x*y");
  CHECK_THROWS_AS(mk({"x"}, 4, {{{5}, 1}}), Error);
  CHECK_THROWS_AS(MultiSeries::make({"x", "y"}, 3, {{{2, 2}, rat(1)}}), Error);
  // coefficients must share one field
  CHECK_THROWS_AS(MultiSeries::make(
                      {"x"}, 3,
                      {{{0}, rat(1)}, {{1}, FieldElem::quad(mpq_class(1), mpq_class(1), -3)}}),
                  Error);
}

TEST_CASE("ring operations truncate exactly") {
  Universe u{{"x"}, 4, FieldCtx::rational()};
  MultiSeries one = u_one(u), x = u_var(u, "x");
  CHECK(((one + x) * (one - x)).text() == "1 - x^2");
  MultiSeries a = mk({"x"}, 4, {{{0}, 1}, {{1}, 1}, {{2}, 1}});
  MultiSeries b = mk({"x"}, 4, {{{0}, -1}, {{1}, 1}});
  CHECK((a + b).text() == "2*x + x^2");

  // geometric telescoping: (sum of x^k) (1-x) leaves only 1 below the cutoff
  MultiSeries geo = u_zero(u);
  for (int k = 0; k <= 4; ++k) geo = geo + x.pow_int(k);
  CHECK((geo * (one - x)) == one);

  CHECK_THROWS_AS(x + u_var({{"y"}, 4, FieldCtx::rational()}, "y"), Error);
}

TEST_CASE("inverse") {
  Universe u{{"x"}, 6, FieldCtx::rational()};
  MultiSeries one = u_one(u), x = u_var(u, "x");
  MultiSeries inv = (one - x).inverse();
  for (int k = 0; k <= 6; ++k) CHECK(inv.coeff({k}) == rat(1));
  CHECK(one.inverse() == one);
  CHECK_THROWS_AS(x.inverse(), Error);
}

TEST_CASE("field-exponent powers of unit series") {
  Universe u{{"x"}, 4, FieldCtx::rational()};
  MultiSeries one = u_one(u), x = u_var(u, "x");
  // (1-x)^(-c) has coefficients (c)_k / k!
  MultiSeries p = (one - x).pow_field(rat(-1, 2));
  CHECK(p.coeff({0}) == rat(1));
  CHECK(p.coeff({1}) == rat(1, 2));
  CHECK(p.coeff({2}) == rat(3, 8));
  CHECK((one - x).pow_field(rat(0)) == one);
  MultiSeries sq = (one - x) * (one - x);
  CHECK(sq.pow_field(rat(1, 2)) == one - x);
  CHECK_THROWS_AS(x.pow_field(rat(1, 2)), Error);
  CHECK_THROWS_AS((one + one - x).pow_field(rat(1, 2)), Error);
}

TEST_CASE("composition") {
  Universe u{{"x"}, 8, FieldCtx::rational()};
  Universe uy{{"y"}, 8, FieldCtx::rational()};
  MultiSeries one = u_one(u), x = u_var(u, "x");
  MultiSeries oney = u_one(uy), y = u_var(uy, "y");
  // 1/(1-y) at y = x/(x-1) collapses to 1-x
  MultiSeries outer = (oney - y).inverse();
  MultiSeries target = x * (x - one).inverse();
  CHECK(outer.compose({{"y", target}}) == one - x);
  // binding to zero picks out the constant term
  MultiSeries f = mk({"y"}, 8, {{{0}, 7}, {{1}, 3}, {{2}, 5}});
  CHECK(f.compose({{"y", u_zero(u)}}) == u_const(u, rat(7)));
  CHECK_THROWS_AS(outer.compose({{"y", one}}), Error);
}

TEST_CASE("derivative and coefficient extraction") {
  Universe u{{"x"}, 5, FieldCtx::rational()};
  MultiSeries x = u_var(u, "x");
  CHECK((x * x).derivative("x").coeff({1}) == rat(2));
  MultiSeries g = MultiSeries::make({"x", "y"}, 4, {{{0, 0}, rat(1)}, {{1, 2}, rat(3)}});
  CHECK(g.coeff({1, 2}) == rat(3));
  // Euler operator eigenvalues: x d/dx x^n = n x^n
  for (int n = 1; n <= 4; ++n) {
    MultiSeries mono = x.pow_int(n);
    MultiSeries euler = x * mono.derivative("x");
    CHECK(euler.coeff({n}) == rat(n));
  }
  CHECK_THROWS_AS(x.derivative("z"), Error);
}

TEST_CASE("reliable order bookkeeping") {
  Universe u{{"x"}, 6, FieldCtx::rational()};
  MultiSeries x = u_var(u, "x");
  MultiSeries f = (u_one(u) - x).inverse();
  MultiSeries df = f.derivative("x");
  CHECK(df.reliable_order() == 5);
  // multiplying by x recovers the top order (valuation-aware rule)
  CHECK((x * df).reliable_order() == 6);
  // comparisons stop at the common reliable order
  MultiSeries g = df.with_reliable(3);
  MultiSeries h = df + x.pow_int(5);  // differs only at degree 5
  CHECK_FALSE(MultiSeries::disagree(g, h.with_reliable(3)).has_value());
  CHECK(MultiSeries::disagree(df, h).has_value());
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 rng(2024);
  Universe u{{"x"}, 8, FieldCtx::rational()};
  for (int i = 0; i < 1000; ++i) {
    MultiSeries a = verify::random_series(rng, u);
    MultiSeries b = verify::random_series(rng, u);
    MultiSeries c = verify::random_series(rng, u);
    REQUIRE((a + b) * c == a * c + b * c);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("power addition law on random unit series") {
  std::mt19937_64 rng(5);
  Universe u{{"x"}, 8, FieldCtx::rational()};
  for (int i = 0; i < 100; ++i) {
    MultiSeries a = verify::random_series(rng, u);
    a = a - u_const(u, a.constant_term()) + u_one(u);  // force constant term 1
    FieldElem p = verify::random_rational(rng, 9), q = verify::random_rational(rng, 9);
    REQUIRE(a.pow_field(p) * a.pow_field(q) == a.pow_field(p + q));
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(6);
  Universe u{{"x"}, 8, FieldCtx::rational()};
  for (int i = 0; i < 60; ++i) {
    MultiSeries f = verify::random_series(rng, u);
    MultiSeries g = verify::random_series(rng, u);
    MultiSeries h = verify::random_series(rng, u);
    g = g - u_const(u, g.constant_term());
    h = h - u_const(u, h.constant_term());
    MultiSeries lhs = f.compose({{"x", g}}).compose({{"x", h}});
    MultiSeries rhs = f.compose({{"x", g.compose({{"x", h}})}});
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("inverse is two-sided whenever defined") {
  std::mt19937_64 rng(8);
  Universe u{{"x", "y"}, 6, FieldCtx::rational()};
  for (int i = 0; i < 40; ++i) {
    MultiSeries a = verify::random_series(rng, u);
    if (a.constant_term().is_zero()) a = a + u_one(u);
    REQUIRE(a.inverse() * a == u_one(u));
  }
}

TEST_CASE("compositional reversion") {
  std::mt19937_64 rng(9);
  Universe u{{"x"}, 10, FieldCtx::rational()};
  for (int i = 0; i < 20; ++i) {
    MultiSeries y = verify::random_series(rng, u, 5);
    y = y - u_const(u, y.constant_term());
    std::vector<int> lin{1};
    if (y.coeff(lin).is_zero()) y = y + u_var(u, "x");
    MultiSeries g = y.reversion("u");
    CHECK(g.compose({{"u", y}}) == u_var(u, "x"));
  }
}

TEST_CASE("JSON form round-trips") {
  MultiSeries s = MultiSeries::make(
      {"x", "y"}, 5,
      {{{0, 0}, rat(1)}, {{1, 2}, rat(-3, 7)}, {{3, 0}, rat(22, 5)}});
  CHECK(MultiSeries::from_json(s.to_json()) == s);
  MultiSeries q = MultiSeries::make(
      {"x"}, 4, {{{1}, FieldElem::quad(mpq_class(1, 2), mpq_class(-2, 3), -3)}});
  CHECK(MultiSeries::from_json(q.to_json()) == q);
  CHECK(s.to_json()["order"] == 5);
  CHECK(s.to_json()["vars"].size() == 2);
}

TEST_CASE("point evaluation matches coefficients") {
  Universe u{{"x"}, 12, FieldCtx::rational()};
  MultiSeries f = (u_one(u) - u_var(u, "x")).inverse();
  std::complex<double> v = f.eval({{"x", {0.5, 0.0}}});
  double expect = 0.0;
  for (int k = 12; k >= 0; --k) expect = expect * 0.5 + 1.0;
  CHECK(v.real() == doctest::Approx(expect).epsilon(1e-14));
}
