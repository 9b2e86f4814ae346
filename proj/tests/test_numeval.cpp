#include <random>

#include "doctest.h"
#include "hypseries/numeval.hpp"
#include "hypseries/specfun.hpp"

using namespace hypseries;
using namespace hypseries::numeval;

TEST_CASE("Gamma values and functional equation") {
  CHECK(std::abs(gamma_complex({1.0, 0.0}) - Cplx(1.0, 0.0)) < 1e-13);
  CHECK(std::abs(gamma_complex({0.5, 0.0}) - Cplx(1.7724538509055160, 0.0)) < 1e-12);
  CHECK(std::abs(gamma_complex({5.0, 0.0}) - Cplx(24.0, 0.0)) < 1e-11);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    Cplx z(0.1 + (rng() % 400) / 10.0, ((rng() % 100) - 50) / 10.0);
    Cplx lhs = gamma_complex(z + 1.0);
    Cplx rhs = z * gamma_complex(z);
    REQUIRE(std::abs(lhs - rhs) <= 1e-11 * std::abs(lhs));
  }
  CHECK_THROWS_AS(gamma_complex({0.0, 0.0}), Error);
  CHECK_THROWS_AS(gamma_complex({-3.0, 0.0}), Error);
}

TEST_CASE("partial sums") {
  // binomial collapse: one upper equals the lower
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    double a = 0.1 + (rng() % 30) / 10.0;
    Cplx v = pfq_partial_sum({Cplx(a, 0.0), Cplx(2.0, 0.0)}, {Cplx(2.0, 0.0)},
                             Cplx(0.25, 0.0))
                 .value;
    REQUIRE(std::abs(v - std::pow(0.75, -a)) < 1e-10 * std::abs(v));
  }
  CHECK_THROWS_AS(pfq_partial_sum({{0.5, 0}, {1.5, 0}}, {{2.0, 0}}, {2.0, 0.0}, 20000, 1e-12),
                  Error);
}

TEST_CASE("unit-argument summation agrees with the Gamma ratio") {
  Cplx a(0.5, 0.0), b(1.0 / 3.0, 0.0), c(2.0, 0.0);
  Cplx lhs = pfq_at_one({a, b}, {c}).value;
  Cplx rhs = gamma_complex(c) * gamma_complex(c - a - b) /
             (gamma_complex(c - a) * gamma_complex(c - b));
  CHECK(std::abs(lhs - rhs) < 1e-8 * std::abs(rhs));
  CHECK_THROWS_AS(pfq_at_one({{3.0, 0}, {2.0, 0}}, {{1.0, 0}}), Error);
}

TEST_CASE("alternating summation at -1") {
  // 2F1(1, 1/4; 5/4; -1) has slowly decaying alternating terms
  Cplx a(1.0, 0.0), b(0.25, 0.0);
  Cplx v = pfq_at_minus_one({a, b}, {a - b + 1.0}).value;
  Cplx target = std::pow(2.0, -1.0) * gamma_complex(1.0 + a - b) * std::sqrt(3.14159265358979323846) /
                (gamma_complex(1.0 - b + a / 2.0) * gamma_complex((a + 1.0) / 2.0));
  CHECK(std::abs(v - target) < 1e-9 * std::abs(target));
}

TEST_CASE("Bessel function by its ascending series") {
  // half-integer order reduces to elementary functions
  double z = 0.9;
  Cplx j = bessel_j({0.5, 0.0}, {z, 0.0});
  double expect = std::sqrt(2.0 / (3.14159265358979323846 * z)) * std::sin(z);
  CHECK(std::abs(j - Cplx(expect, 0.0)) < 1e-12);
}

TEST_CASE("boundary value of the first Appell sum at the worked parameters") {
  // a = 1/3, b1 = 1/4, b2 = 1/5, c = 3, x = 0.3
  Cplx a(1.0 / 3.0, 0.0), b1(0.25, 0.0), b2(0.2, 0.0), c(3.0, 0.0), x(0.3, 0.0);
  Cplx lhs = f1_at_y1(a, b1, b2, c, x).value;
  Cplx gamma = gamma_complex(c) * gamma_complex(c - a - b2) /
               (gamma_complex(c - a) * gamma_complex(c - b2));
  Cplx rhs = gamma * pfq_partial_sum({a, b1}, {c - b2}, x).value;
  CHECK(std::abs(lhs - rhs) < 1e-7 * std::abs(rhs));
}

TEST_CASE("numeric checks gate on their tolerance") {
  NumericCheck chk;
  chk.id = "probe";
  chk.tolerance = 1e-8;
  chk.series_value = [] { return Cplx(2.0, 0.0); };
  chk.target_value = [] { return Cplx(2.0, 0.0); };
  CHECK(run_numeric_check(chk).pass);
  chk.series_value = [] { return Cplx(2.0 + 1e-3, 0.0); };  // injected perturbation
  auto out = run_numeric_check(chk);
  CHECK_FALSE(out.pass);
  CHECK(out.residual > 1e-4);
}

TEST_CASE("radius-growth proxy") {
  auto rep = radius_growth_proxy({0.5, 0.0}, {2.0, 0.0}, 500);
  CHECK(rep.pass);
  // the limit here is Gamma(2)/Gamma(1/2) = 1/sqrt(pi)
  CHECK(rep.final_rel_err < 0.01);
  auto same = radius_growth_proxy({0.75, 0.0}, {0.75, 0.0}, 200);
  CHECK(same.pass);
  CHECK(same.final_rel_err < 1e-12);
  auto growing = radius_growth_proxy({2.0, 0.0}, {0.5, 0.0}, 500);
  CHECK(growing.pass);  // growing ratio but still polynomially bounded
  auto broken = radius_growth_proxy({0.5, 0.0}, {2.0, 0.0}, 500, 0.01, {1.0, 0.0});
  CHECK_FALSE(broken.pass);
}

TEST_CASE("float evaluation of exact series matches the partial sums") {
  using namespace hypseries::specfun;
  Universe u{{"x"}, 24, FieldCtx::rational()};
  FieldElem a = FieldElem::rational(1, 2), b = FieldElem::rational(1, 3),
            c = FieldElem::rational(5, 4);
  MultiSeries f = pfq_sum({a, b}, {c}, u_var(u, "x"));
  Cplx point(0.2, 0.1);
  Cplx via_series = f.eval({{"x", point}});
  Cplx via_sum =
      pfq_partial_sum({a.to_complex(), b.to_complex()}, {c.to_complex()}, point).value;
  // both carry the same truncation budget or better
  CHECK(std::abs(via_series - via_sum) < 1e-9);
}
