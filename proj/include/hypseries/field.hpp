#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace hypseries {

enum class Errc {
  DivisionByZero,
  MixedDiscriminant,
  MixedRepresentation,
  ZeroDenominator,
  NonSquarefreeDiscriminant,
  ExponentOverflow,
  MixedField,
  VariableMismatch,
  ZeroConstantTerm,
  NonUnitConstantTerm,
  NonzeroConstantTerm,
  UnknownVariable,
  PochhammerPole,
  InadmissibleLowerParameter,
  InadmissibleParameter,
  NonInvertibleAtom,
  ZeroM,
  RegimeViolation,
  BadInnerSeries,
  UnknownIdentity,
  AdmissibleDrawExhausted,
  PoleProximity,
  NoConvergenceDetected,
  ParseError,
  UsageError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

enum class FieldTag : std::uint8_t { Rational, QuadExt, FloatComplex };

/// Which concrete coefficient field a computation runs in. QuadExt carries
/// the square-free discriminant d of the adjoined root.
struct FieldCtx {
  FieldTag tag{FieldTag::Rational};
  long d{0};

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;
  std::string str() const;

  static FieldCtx rational() { return {FieldTag::Rational, 0}; }
  static FieldCtx quad(long d) { return {FieldTag::QuadExt, d}; }
  static FieldCtx floating() { return {FieldTag::FloatComplex, 0}; }
};

/// Least common context of two operands. Rational embeds into any QuadExt;
/// distinct discriminants or exact/float mixes are errors.
FieldCtx join(const FieldCtx& a, const FieldCtx& b);

/// Exact (or double-complex) scalar: a rational p/q in canonical form, an
/// element r + s*sqrt(d) of a quadratic extension, or a complex double.
class FieldElem {
 public:
  struct Quad {
    mpq_class r, s;
    long d;
  };

  FieldElem() : v_(mpq_class(0)) {}

  static FieldElem from_long(long n) { return FieldElem(mpq_class(n)); }
  static FieldElem rational(const mpz_class& num, const mpz_class& den);
  static FieldElem rational(long num, long den);
  static FieldElem quad(const mpq_class& r, const mpq_class& s, long d);
  static FieldElem floating(std::complex<double> z) { return FieldElem(z); }
  static FieldElem zero(const FieldCtx& ctx);
  static FieldElem one(const FieldCtx& ctx);

  FieldTag tag() const noexcept { return static_cast<FieldTag>(v_.index()); }
  FieldCtx ctx() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem conj() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_integer() const;
  std::optional<long> integer_value() const;

  const mpq_class& rat() const;
  const Quad& quadext() const;
  std::complex<double> to_complex() const;

  /// Embed into a wider (or equal) context; exact values never silently
  /// become floats and distinct discriminants never mix.
  FieldElem coerced(const FieldCtx& target) const;

  std::string str() const;
  static FieldElem parse(std::string_view text);

 private:
  explicit FieldElem(mpq_class q) : v_(std::move(q)) {}
  explicit FieldElem(Quad q) : v_(std::move(q)) {}
  explicit FieldElem(std::complex<double> z) : v_(z) {}

  std::variant<mpq_class, Quad, std::complex<double>> v_;
};

inline FieldElem operator+(long a, const FieldElem& b) { return FieldElem::from_long(a) + b; }
inline FieldElem operator-(long a, const FieldElem& b) { return FieldElem::from_long(a) - b; }
inline FieldElem operator*(long a, const FieldElem& b) { return FieldElem::from_long(a) * b; }
inline FieldElem operator+(const FieldElem& a, long b) { return a + FieldElem::from_long(b); }
inline FieldElem operator-(const FieldElem& a, long b) { return a - FieldElem::from_long(b); }
inline FieldElem operator*(const FieldElem& a, long b) { return a * FieldElem::from_long(b); }
inline FieldElem operator/(const FieldElem& a, long b) { return a / FieldElem::from_long(b); }

/// True iff the lower-parameter gate fails, i.e. c is an integer <= 0 (so
/// some rising factorial (c)_n with n >= 1 would vanish).
bool is_nonpositive_int_shifted(const FieldElem& c);

/// Nearest double-complex realization, sqrt(d) taken as the principal root.
FieldElem to_float_complex(const FieldElem& x);

}  // namespace hypseries
