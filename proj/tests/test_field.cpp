#include <cmath>
#include <random>

#include "doctest.h"
#include "hypseries/field.hpp"

using namespace hypseries;

namespace {

FieldElem rat(long n, long d) { return FieldElem::rational(n, d); }

FieldElem random_elem(std::mt19937_64& rng, bool quad) {
  auto num = [&]() { return static_cast<long>(rng() % 19) - 9; };
  auto den = [&]() { return 1 + static_cast<long>(rng() % 9); };
  if (!quad) return FieldElem::rational(num(), den());
  return FieldElem::quad(mpq_class(num(), den()), mpq_class(num(), den()), -3);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK(rat(6, 4) == rat(3, 2));
  CHECK(rat(6, 4).str() == "3/2");
  CHECK(rat(2, -4).str() == "-1/2");  // positive denominator
  CHECK((rat(1, 2) * rat(2, 1)).is_one());
  CHECK_THROWS_AS(rat(1, 2) / rat(0, 1), Error);
  try {
    rat(1, 2) / rat(0, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
  CHECK_THROWS_AS(FieldElem::rational(1, 0), Error);
}

TEST_CASE("quadratic extension arithmetic") {
  // conjugate pair with sum 3 and product 3 lives in Q(sqrt(-3))
  FieldElem z = FieldElem::quad(mpq_class(3, 2), mpq_class(1, 2), -3);
  CHECK(z + z.conj() == FieldElem::from_long(3).coerced(FieldCtx::quad(-3)));
  CHECK(z * z.conj() == FieldElem::from_long(3).coerced(FieldCtx::quad(-3)));

  // the imaginary unit is a fourth root of unity
  FieldElem i = FieldElem::quad(mpq_class(0), mpq_class(1), -1);
  CHECK((i * i * i * i).is_one());
  CHECK(i * i == FieldElem::from_long(-1).coerced(FieldCtx::quad(-1)));

  CHECK_THROWS_AS(FieldElem::quad(mpq_class(1), mpq_class(1), 4), Error);
  CHECK_THROWS_AS(FieldElem::quad(mpq_class(1), mpq_class(1), 12), Error);
  CHECK_THROWS_AS(FieldElem::quad(mpq_class(1), mpq_class(1), 0), Error);

  // distinct discriminants never mix
  FieldElem w = FieldElem::quad(mpq_class(1), mpq_class(1), 5);
  CHECK_THROWS_AS(z * w, Error);
  CHECK_THROWS_AS(z + rat(1, 2), Error);  // implicit mixing is rejected too
  CHECK(z + rat(1, 2).coerced(z.ctx()) == FieldElem::quad(mpq_class(2), mpq_class(1, 2), -3));

  // division via the conjugate
  FieldElem inv = FieldElem::one(z.ctx()) / z;
  CHECK((z * inv).is_one());
}

TEST_CASE("lower-parameter gate") {
  CHECK_FALSE(is_nonpositive_int_shifted(rat(5, 4)));
  CHECK(is_nonpositive_int_shifted(rat(-2, 1)));
  CHECK(is_nonpositive_int_shifted(rat(0, 1)));
  CHECK_FALSE(is_nonpositive_int_shifted(rat(1, 1)));
  CHECK_FALSE(is_nonpositive_int_shifted(rat(-1, 2)));
  CHECK(is_nonpositive_int_shifted(FieldElem::quad(mpq_class(-3), mpq_class(0), -3)));
  CHECK_FALSE(is_nonpositive_int_shifted(FieldElem::quad(mpq_class(-3), mpq_class(1), -3)));
}

TEST_CASE("float realization") {
  CHECK(to_float_complex(rat(1, 2)).to_complex() == std::complex<double>(0.5, 0.0));
  FieldElem z = FieldElem::quad(mpq_class(3, 2), mpq_class(1, 2), -3);
  std::complex<double> fz = to_float_complex(z).to_complex();
  CHECK(fz.real() == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(fz.imag() == doctest::Approx(0.8660254037844386).epsilon(1e-14));
  FieldElem f = FieldElem::floating({1.25, -2.0});
  CHECK(to_float_complex(f) == f);
}

TEST_CASE("text form round-trips") {
  for (const char* text : {"5/6", "-3/4", "7", "0"}) {
    CHECK(FieldElem::parse(text) == FieldElem::parse(FieldElem::parse(text).str()));
  }
  FieldElem z = FieldElem::quad(mpq_class(3, 2), mpq_class(-1, 2), -3);
  CHECK(FieldElem::parse(z.str()) == z);
  CHECK(FieldElem::parse("3/2+1/2*sqrt(-3)") ==
        FieldElem::quad(mpq_class(3, 2), mpq_class(1, 2), -3));
  CHECK(FieldElem::parse("sqrt(-1)") == FieldElem::quad(mpq_class(0), mpq_class(1), -1));
  FieldElem f = FieldElem::floating({1.5, 0.25});
  CHECK(FieldElem::parse(f.str()) == f);
  CHECK(FieldElem::parse("1.5-2j").to_complex() == std::complex<double>(1.5, -2.0));
  CHECK_THROWS_AS(FieldElem::parse("abc"), Error);
}

TEST_CASE("field axioms hold exactly on random triples") {
  std::mt19937_64 rng(42);
  for (bool quad : {false, true}) {
    for (int i = 0; i < 1000; ++i) {
      FieldElem a = random_elem(rng, quad);
      FieldElem b = random_elem(rng, quad);
      FieldElem c = random_elem(rng, quad);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + (-a) == FieldElem::zero(a.ctx()));
      if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
  }
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    FieldElem a = random_elem(rng, true);
    FieldElem b = random_elem(rng, true);
    REQUIRE(a.conj().conj() == a);
    REQUIRE((a + b).conj() == a.conj() + b.conj());
    REQUIRE((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("float realization is a homomorphism to machine precision") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    FieldElem a = random_elem(rng, true);
    FieldElem b = random_elem(rng, true);
    std::complex<double> sum = (a + b).to_complex();
    std::complex<double> prod = (a * b).to_complex();
    double scale = std::max(1.0, std::abs(sum));
    REQUIRE(std::abs(sum - (a.to_complex() + b.to_complex())) <= 1e-12 * scale);
    scale = std::max(1.0, std::abs(prod));
    REQUIRE(std::abs(prod - a.to_complex() * b.to_complex()) <= 1e-12 * scale);
  }
}
