#include "hypseries/field.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace hypseries {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedDiscriminant: return "MixedDiscriminant";
    case Errc::MixedRepresentation: return "MixedRepresentation";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NonSquarefreeDiscriminant: return "NonSquarefreeDiscriminant";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::MixedField: return "MixedField";
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::PochhammerPole: return "PochhammerPole";
    case Errc::InadmissibleLowerParameter: return "InadmissibleLowerParameter";
    case Errc::InadmissibleParameter: return "InadmissibleParameter";
    case Errc::NonInvertibleAtom: return "NonInvertibleAtom";
    case Errc::ZeroM: return "ZeroM";
    case Errc::RegimeViolation: return "RegimeViolation";
    case Errc::BadInnerSeries: return "BadInnerSeries";
    case Errc::UnknownIdentity: return "UnknownIdentity";
    case Errc::AdmissibleDrawExhausted: return "AdmissibleDrawExhausted";
    case Errc::PoleProximity: return "PoleProximity";
    case Errc::NoConvergenceDetected: return "NoConvergenceDetected";
    case Errc::ParseError: return "ParseError";
    case Errc::UsageError: return "UsageError";
  }
  return "Error";
}

std::string FieldCtx::str() const {
  switch (tag) {
    case FieldTag::Rational: return "Q";
    case FieldTag::QuadExt: return "Q(sqrt(" + std::to_string(d) + "))";
    case FieldTag::FloatComplex: return "C(double)";
  }
  return "?";
}

FieldCtx join(const FieldCtx& a, const FieldCtx& b) {
  if (a == b) return a;
  if (a.tag == FieldTag::FloatComplex || b.tag == FieldTag::FloatComplex)
    fail(Errc::MixedField, "cannot mix exact and floating coefficients implicitly");
  if (a.tag == FieldTag::Rational) return b;
  if (b.tag == FieldTag::Rational) return a;
  fail(Errc::MixedDiscriminant,
       "cannot mix sqrt(" + std::to_string(a.d) + ") with sqrt(" + std::to_string(b.d) + ")");
}

namespace {

bool squarefree(long d) {
  if (d == 0 || d == 1) return false;
  long n = d < 0 ? -d : d;
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

mpq_class canonical(mpz_class num, mpz_class den) {
  if (den == 0) fail(Errc::ZeroDenominator, "rational with zero denominator");
  mpq_class q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

}  // namespace

FieldElem FieldElem::rational(const mpz_class& num, const mpz_class& den) {
  return FieldElem(canonical(num, den));
}

FieldElem FieldElem::rational(long num, long den) {
  return FieldElem(canonical(mpz_class(num), mpz_class(den)));
}

FieldElem FieldElem::quad(const mpq_class& r, const mpq_class& s, long d) {
  if (!squarefree(d))
    fail(Errc::NonSquarefreeDiscriminant, "discriminant " + std::to_string(d) + " not square-free");
  mpq_class rc = r, sc = s;
  rc.canonicalize();
  sc.canonicalize();
  return FieldElem(Quad{std::move(rc), std::move(sc), d});
}

FieldElem FieldElem::zero(const FieldCtx& ctx) {
  switch (ctx.tag) {
    case FieldTag::Rational: return FieldElem(mpq_class(0));
    case FieldTag::QuadExt: return FieldElem(Quad{mpq_class(0), mpq_class(0), ctx.d});
    case FieldTag::FloatComplex: return FieldElem(std::complex<double>(0.0, 0.0));
  }
  return FieldElem();
}

FieldElem FieldElem::one(const FieldCtx& ctx) {
  switch (ctx.tag) {
    case FieldTag::Rational: return FieldElem(mpq_class(1));
    case FieldTag::QuadExt: return FieldElem(Quad{mpq_class(1), mpq_class(0), ctx.d});
    case FieldTag::FloatComplex: return FieldElem(std::complex<double>(1.0, 0.0));
  }
  return FieldElem();
}

FieldCtx FieldElem::ctx() const {
  switch (tag()) {
    case FieldTag::Rational: return FieldCtx::rational();
    case FieldTag::QuadExt: return FieldCtx::quad(std::get<Quad>(v_).d);
    case FieldTag::FloatComplex: return FieldCtx::floating();
  }
  return {};
}

namespace {

[[noreturn]] void mixed(const FieldElem& a, const FieldElem& b) {
  if (a.tag() == b.tag() && a.tag() == FieldTag::QuadExt)
    fail(Errc::MixedDiscriminant, "operands live in distinct quadratic extensions");
  fail(Errc::MixedRepresentation,
       "operands have distinct representations (" + a.ctx().str() + " vs " + b.ctx().str() + ")");
}

}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (tag() != o.tag()) mixed(*this, o);
  switch (tag()) {
    case FieldTag::Rational:
      return FieldElem(mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      const Quad& b = std::get<Quad>(o.v_);
      if (a.d != b.d) mixed(*this, o);
      return FieldElem(Quad{mpq_class(a.r + b.r), mpq_class(a.s + b.s), a.d});
    }
    case FieldTag::FloatComplex:
      return FieldElem(std::get<std::complex<double>>(v_) + std::get<std::complex<double>>(o.v_));
  }
  return {};
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  if (tag() != o.tag()) mixed(*this, o);
  switch (tag()) {
    case FieldTag::Rational:
      return FieldElem(mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      const Quad& b = std::get<Quad>(o.v_);
      if (a.d != b.d) mixed(*this, o);
      mpq_class r = a.r * b.r + a.s * b.s * b.d;
      mpq_class s = a.r * b.s + a.s * b.r;
      return FieldElem(Quad{std::move(r), std::move(s), a.d});
    }
    case FieldTag::FloatComplex:
      return FieldElem(std::get<std::complex<double>>(v_) * std::get<std::complex<double>>(o.v_));
  }
  return {};
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  if (tag() != o.tag()) mixed(*this, o);
  switch (tag()) {
    case FieldTag::Rational: {
      const mpq_class& b = std::get<mpq_class>(o.v_);
      if (b == 0) fail(Errc::DivisionByZero, "rational division by zero");
      return FieldElem(mpq_class(std::get<mpq_class>(v_) / b));
    }
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      const Quad& b = std::get<Quad>(o.v_);
      if (a.d != b.d) mixed(*this, o);
      // 1/(r+s*sqrt(d)) = (r-s*sqrt(d))/(r^2-s^2 d); the norm vanishes only at 0
      // because d is square-free (so never a square).
      mpq_class norm = b.r * b.r - b.s * b.s * b.d;
      if (norm == 0) fail(Errc::DivisionByZero, "division by zero in quadratic extension");
      mpq_class r = (a.r * b.r - a.s * b.s * b.d) / norm;
      mpq_class s = (a.s * b.r - a.r * b.s) / norm;
      return FieldElem(Quad{std::move(r), std::move(s), a.d});
    }
    case FieldTag::FloatComplex:
      return FieldElem(std::get<std::complex<double>>(v_) / std::get<std::complex<double>>(o.v_));
  }
  return {};
}

FieldElem FieldElem::operator-() const {
  switch (tag()) {
    case FieldTag::Rational: return FieldElem(mpq_class(-std::get<mpq_class>(v_)));
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      return FieldElem(Quad{mpq_class(-a.r), mpq_class(-a.s), a.d});
    }
    case FieldTag::FloatComplex: return FieldElem(-std::get<std::complex<double>>(v_));
  }
  return {};
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (tag() == FieldTag::Rational && o.tag() == FieldTag::Rational) {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    return *this;
  }
  *this = *this + o;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  *this = *this - o;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (tag() == FieldTag::Rational && o.tag() == FieldTag::Rational) {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    return *this;
  }
  *this = *this * o;
  return *this;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (tag() != o.tag()) return false;
  switch (tag()) {
    case FieldTag::Rational: return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      const Quad& b = std::get<Quad>(o.v_);
      return a.d == b.d && a.r == b.r && a.s == b.s;
    }
    case FieldTag::FloatComplex:
      return std::get<std::complex<double>>(v_) == std::get<std::complex<double>>(o.v_);
  }
  return false;
}

FieldElem FieldElem::conj() const {
  switch (tag()) {
    case FieldTag::Rational: return *this;
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      return FieldElem(Quad{a.r, mpq_class(-a.s), a.d});
    }
    case FieldTag::FloatComplex: return FieldElem(std::conj(std::get<std::complex<double>>(v_)));
  }
  return {};
}

bool FieldElem::is_zero() const {
  switch (tag()) {
    case FieldTag::Rational: return std::get<mpq_class>(v_) == 0;
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      return a.r == 0 && a.s == 0;
    }
    case FieldTag::FloatComplex: return std::get<std::complex<double>>(v_) == 0.0;
  }
  return false;
}

bool FieldElem::is_one() const {
  switch (tag()) {
    case FieldTag::Rational: return std::get<mpq_class>(v_) == 1;
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      return a.r == 1 && a.s == 0;
    }
    case FieldTag::FloatComplex:
      return std::get<std::complex<double>>(v_) == std::complex<double>(1.0, 0.0);
  }
  return false;
}

bool FieldElem::is_integer() const {
  switch (tag()) {
    case FieldTag::Rational: return std::get<mpq_class>(v_).get_den() == 1;
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      return a.s == 0 && a.r.get_den() == 1;
    }
    case FieldTag::FloatComplex: {
      std::complex<double> z = std::get<std::complex<double>>(v_);
      return std::abs(z.imag()) < 1e-12 && std::abs(z.real() - std::round(z.real())) < 1e-12;
    }
  }
  return false;
}

std::optional<long> FieldElem::integer_value() const {
  if (!is_integer()) return std::nullopt;
  switch (tag()) {
    case FieldTag::Rational: {
      const mpz_class& n = std::get<mpq_class>(v_).get_num();
      if (!n.fits_slong_p()) return std::nullopt;
      return n.get_si();
    }
    case FieldTag::QuadExt: {
      const mpz_class& n = std::get<Quad>(v_).r.get_num();
      if (!n.fits_slong_p()) return std::nullopt;
      return n.get_si();
    }
    case FieldTag::FloatComplex:
      return static_cast<long>(std::llround(std::get<std::complex<double>>(v_).real()));
  }
  return std::nullopt;
}

const mpq_class& FieldElem::rat() const {
  if (tag() != FieldTag::Rational)
    fail(Errc::MixedRepresentation, "value is not a plain rational");
  return std::get<mpq_class>(v_);
}

const FieldElem::Quad& FieldElem::quadext() const {
  if (tag() != FieldTag::QuadExt)
    fail(Errc::MixedRepresentation, "value is not a quadratic-extension element");
  return std::get<Quad>(v_);
}

std::complex<double> FieldElem::to_complex() const {
  switch (tag()) {
    case FieldTag::Rational: return {std::get<mpq_class>(v_).get_d(), 0.0};
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      double root_abs = std::sqrt(std::abs(static_cast<double>(a.d)));
      std::complex<double> root =
          a.d >= 0 ? std::complex<double>(root_abs, 0.0) : std::complex<double>(0.0, root_abs);
      return std::complex<double>(a.r.get_d(), 0.0) + a.s.get_d() * root;
    }
    case FieldTag::FloatComplex: return std::get<std::complex<double>>(v_);
  }
  return {};
}

FieldElem FieldElem::coerced(const FieldCtx& target) const {
  FieldCtx own = ctx();
  if (own == target) return *this;
  if (target.tag == FieldTag::FloatComplex) return FieldElem(to_complex());
  if (own.tag == FieldTag::Rational && target.tag == FieldTag::QuadExt)
    return FieldElem(Quad{std::get<mpq_class>(v_), mpq_class(0), target.d});
  if (own.tag == FieldTag::QuadExt && target.tag == FieldTag::QuadExt)
    fail(Errc::MixedDiscriminant, "cannot move between distinct quadratic extensions");
  fail(Errc::MixedRepresentation, "cannot embed " + own.str() + " into " + target.str());
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

std::string double_str(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

std::string FieldElem::str() const {
  switch (tag()) {
    case FieldTag::Rational: return rat_str(std::get<mpq_class>(v_));
    case FieldTag::QuadExt: {
      const Quad& a = std::get<Quad>(v_);
      std::string out = rat_str(a.r);
      if (a.s >= 0)
        out += " + " + rat_str(a.s);
      else
        out += " - " + rat_str(mpq_class(-a.s));
      out += "*sqrt(" + std::to_string(a.d) + ")";
      return out;
    }
    case FieldTag::FloatComplex: {
      std::complex<double> z = std::get<std::complex<double>>(v_);
      std::string out = double_str(z.real());
      out += (z.imag() < 0 || std::signbit(z.imag())) ? "-" : "+";
      out += double_str(std::abs(z.imag())) + "j";
      return out;
    }
  }
  return "?";
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

mpq_class parse_rat(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s);
      return mpq_class(n);
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    return canonical(num, den);
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "bad rational literal '" + s + "'");
  }
}

// Splits "1.5-0.25j" style literals into real and imaginary parts.
FieldElem parse_float_complex(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty float literal");
  std::string body = s;
  bool has_j = body.back() == 'j' || body.back() == 'i';
  if (has_j) body.pop_back();
  // find the sign that separates the two components (not leading, not an
  // exponent sign)
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < body.size(); ++i) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') split = i;
  }
  try {
    if (!has_j) return FieldElem::floating({std::stod(body), 0.0});
    if (split == std::string::npos) {
      if (body.empty() || body == "+") return FieldElem::floating({0.0, 1.0});
      if (body == "-") return FieldElem::floating({0.0, -1.0});
      return FieldElem::floating({0.0, std::stod(body)});
    }
    double re = std::stod(body.substr(0, split));
    std::string imtext = body.substr(split);
    double im = (imtext == "+") ? 1.0 : (imtext == "-") ? -1.0 : std::stod(imtext);
    return FieldElem::floating({re, im});
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad float literal '" + s + "'");
  }
}

}  // namespace

FieldElem FieldElem::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) fail(Errc::ParseError, "empty field literal");
  auto sq = s.find("sqrt(");
  if (sq != std::string::npos) {
    auto close = s.find(')', sq);
    if (close == std::string::npos) fail(Errc::ParseError, "unterminated sqrt in '" + s + "'");
    long d = 0;
    try {
      d = std::stol(s.substr(sq + 5, close - sq - 5));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad discriminant in '" + s + "'");
    }
    // forms: [r {+|-}] [s*]sqrt(d)
    std::string head = s.substr(0, sq);
    mpq_class scoef(1);
    if (!head.empty() && head.back() == '*') {
      head.pop_back();
      std::size_t split = std::string::npos;
      for (std::size_t i = 1; i < head.size(); ++i)
        if (head[i] == '+' || head[i] == '-') split = i;
      if (split == std::string::npos) {
        scoef = parse_rat(head);
        head.clear();
      } else {
        scoef = parse_rat(head.substr(split));
        head = head.substr(0, split);
      }
    } else if (!head.empty()) {
      // bare "sqrt(d)" with optional sign / leading rational "r+" or "r-"
      char last = head.back();
      if (last == '+' || last == '-') {
        scoef = (last == '-') ? mpq_class(-1) : mpq_class(1);
        head.pop_back();
      } else {
        fail(Errc::ParseError, "bad quadratic literal '" + s + "'");
      }
    }
    mpq_class rcoef = head.empty() ? mpq_class(0) : parse_rat(head);
    return FieldElem::quad(rcoef, scoef, d);
  }
  bool floaty = s.find('.') != std::string::npos || s.back() == 'j' || s.back() == 'i';
  if (!floaty && (s.find('e') != std::string::npos || s.find('E') != std::string::npos))
    floaty = true;
  if (floaty) return parse_float_complex(s);
  return FieldElem(parse_rat(s));
}

bool is_nonpositive_int_shifted(const FieldElem& c) {
  switch (c.tag()) {
    case FieldTag::Rational: {
      const mpq_class& q = c.rat();
      return q.get_den() == 1 && q.get_num() <= 0;
    }
    case FieldTag::QuadExt: {
      const FieldElem::Quad& a = c.quadext();
      return a.s == 0 && a.r.get_den() == 1 && a.r.get_num() <= 0;
    }
    case FieldTag::FloatComplex: {
      std::complex<double> z = c.to_complex();
      if (std::abs(z.imag()) > 1e-12) return false;
      double r = std::round(z.real());
      return r <= 0.0 && std::abs(z.real() - r) < 1e-12;
    }
  }
  return false;
}

FieldElem to_float_complex(const FieldElem& x) { return FieldElem::floating(x.to_complex()); }

}  // namespace hypseries
