#include "hypseries/verify.hpp"

#include <algorithm>
#include <sstream>

namespace hypseries::verify {

const char* kind_name(CaseKind k) {
  switch (k) {
    case CaseKind::SeriesIdentity: return "series-identity";
    case CaseKind::OperatorIdentity: return "operator-identity";
    case CaseKind::NumericIdentity: return "numeric-identity";
  }
  return "?";
}

const char* status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Expected: return "pass";
    case CaseStatus::ConjectureEvidence: return "conjecture-evidence";
    case CaseStatus::CorrectedTypo: return "corrected-typo";
  }
  return "?";
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Error: return "error";
  }
  return "?";
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["params"] = params;
  j["order"] = order;
  j["outcome"] = outcome_name(outcome);
  j["regime"] = regime;
  if (!detail.empty()) j["detail"] = detail;
  if (residual != 0.0) j["residual"] = residual;
  j["wall_ms"] = wall_ms;
  return j;
}

nlohmann::json Summary::to_json() const {
  nlohmann::json j;
  j["total"] = total;
  j["pass"] = pass;
  j["fail"] = fail;
  j["error"] = error;
  j["evidence_total"] = evidence_total;
  j["evidence_pass"] = evidence_pass;
  j["evidence_fail"] = evidence_fail;
  return j;
}

// ---------------------------------------------------------------------------
// Random draws

FieldElem random_rational(std::mt19937_64& rng, long bound) {
  long num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  long den = 1 + static_cast<long>(rng() % bound);
  return FieldElem::rational(num, den);
}

FieldElem random_noninteger(std::mt19937_64& rng, long bound) {
  for (int i = 0; i < 256; ++i) {
    FieldElem v = random_rational(rng, bound);
    if (!v.is_integer()) return v;
  }
  return FieldElem::rational(1, 2);
}

MultiSeries random_series(std::mt19937_64& rng, const Universe& u, long bound) {
  std::vector<std::pair<std::vector<int>, FieldElem>> terms;
  auto tab = ExpTable::get(static_cast<int>(u.vars.size()), u.order);
  for (int i = 0; i < tab->size(); ++i) {
    const ExpVec& e = tab->exp(i);
    FieldElem c = random_rational(rng, bound);
    if (c.is_zero()) continue;
    terms.emplace_back(std::vector<int>(e.begin(), e.begin() + u.vars.size()),
                       c.coerced(join(u.ctx, c.ctx())));
  }
  if (terms.empty())
    terms.emplace_back(std::vector<int>(u.vars.size(), 0), FieldElem::one(u.ctx));
  return MultiSeries::make(u.vars, u.order, terms).promoted(u.ctx);
}

ParamDraw::ParamDraw(std::uint64_t seed, const Overrides* overrides)
    : rng_(seed), overrides_(overrides) {}

std::optional<FieldElem> ParamDraw::look(const std::string& name) {
  if (!overrides_) return std::nullopt;
  auto it = overrides_->find(name);
  if (it == overrides_->end()) return std::nullopt;
  return it->second;
}

void ParamDraw::record(const std::string& name, const FieldElem& v) {
  taken_.emplace_back(name, v.str());
}

FieldElem ParamDraw::rat(const std::string& name, long bound) {
  if (auto v = look(name)) {
    record(name, *v);
    return *v;
  }
  FieldElem v = random_rational(rng_, bound);
  record(name, v);
  return v;
}

FieldElem ParamDraw::nonint(const std::string& name, long bound) {
  if (auto v = look(name)) {
    record(name, *v);
    return *v;
  }
  FieldElem v = random_noninteger(rng_, bound);
  record(name, v);
  return v;
}

FieldElem ParamDraw::positive_nonint(const std::string& name, long bound) {
  if (auto v = look(name)) {
    record(name, *v);
    return *v;
  }
  for (int i = 0; i < 1024; ++i) {
    FieldElem v = random_noninteger(rng_, bound);
    if (v.rat() > 0) {
      record(name, v);
      return v;
    }
  }
  FieldElem v = FieldElem::rational(1, 2);
  record(name, v);
  return v;
}

long ParamDraw::integer(const std::string& name, long lo, long hi) {
  if (auto v = look(name)) {
    record(name, *v);
    auto n = v->integer_value();
    if (!n) fail(Errc::UsageError, "override " + name + " must be an integer");
    return *n;
  }
  long v = lo + static_cast<long>(rng_() % static_cast<unsigned long>(hi - lo + 1));
  record(name, FieldElem::from_long(v));
  return v;
}

FieldElem ParamDraw::fixed(const std::string& name, const FieldElem& value) {
  if (auto v = look(name)) {
    record(name, *v);
    return *v;
  }
  record(name, value);
  return value;
}

std::string ParamDraw::taken() const {
  std::string out;
  for (const auto& [name, text] : taken_) {
    if (!out.empty()) out += ", ";
    out += name + "=" + text;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Registry-facing helpers

const IdentityCase* find_case(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

std::string registry_hash() {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& c : registry()) {
    mix(c.id);
    mix(kind_name(c.kind));
    mix(status_name(c.status));
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

CheckReport check_identity(const std::string& id, std::uint64_t seed, int order,
                           const Overrides* overrides, bool perturb) {
  const IdentityCase* c = find_case(id);
  if (!c) fail(Errc::UnknownIdentity, "no registered identity named " + id);
  return c->run(seed, order, perturb, overrides);
}

namespace {

bool glob_match(const std::string& pattern, const std::string& text) {
  if (pattern.empty()) return true;
  // simple '*' wildcard matcher
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace

std::vector<CheckReport> check_all(int order, std::uint64_t seed, const std::string& filter,
                                   bool evidence, int draws, bool perturb) {
  std::vector<CheckReport> out;
  for (const auto& c : registry()) {
    if (c.evidence_only && !evidence) continue;
    if (!filter.empty() && !glob_match(filter, c.id)) continue;
    int n = std::min(draws, c.max_draws);
    for (int i = 0; i < n; ++i) out.push_back(c.run(seed + i, order, perturb, nullptr));
  }
  return out;
}

Summary summarize(const std::vector<CheckReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    bool ev = r.regime == "evidence";
    if (ev) {
      ++s.evidence_total;
      if (r.outcome == Outcome::Pass)
        ++s.evidence_pass;
      else
        ++s.evidence_fail;
      continue;
    }
    ++s.total;
    switch (r.outcome) {
      case Outcome::Pass: ++s.pass; break;
      case Outcome::Fail: ++s.fail; break;
      case Outcome::Error: ++s.error; break;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Quadratic-transform slope parameters

QuadraticSlopes slopes_from_parameter(const FieldElem& m) {
  FieldElem one = FieldElem::from_long(1);
  FieldElem m2 = m * m;
  if (m.is_zero() || m2 == one)
    fail(Errc::InadmissibleParameter, "slope parameter must avoid 0 and +-1");
  FieldElem denom = one - m2;
  QuadraticSlopes q;
  q.t = one / denom;
  q.s = m / denom;
  FieldElem two = FieldElem::from_long(2);
  q.tau_plus = one - two * q.t + two * q.s;
  q.tau_minus = one - two * q.t - two * q.s;
  return q;
}

QuadraticSlopes choose_square_discriminant_t(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 256; ++i) {
    long p = 1 + static_cast<long>(rng() % 9);
    long q = 1 + static_cast<long>(rng() % 9);
    FieldElem m = FieldElem::rational(p, q);
    if (m.is_zero()) continue;
    FieldElem one = FieldElem::from_long(1);
    if (m == one || m == -one) continue;
    return slopes_from_parameter(m);
  }
  return slopes_from_parameter(FieldElem::rational(1, 3));
}

// ---------------------------------------------------------------------------
// Elementary property suite

namespace {

using PropFn = std::function<std::optional<std::string>(std::mt19937_64&, int)>;

std::optional<std::string> agree_or_report(const MultiSeries& a, const MultiSeries& b,
                                           const std::string& what) {
  auto m = MultiSeries::disagree(a, b);
  if (!m) return std::nullopt;
  return what + ": " + m->str();
}

Universe ux(int order) { return Universe{{"x"}, order, FieldCtx::rational()}; }

}  // namespace

const std::vector<PropertyCase>& basic_properties() {
  static const std::vector<PropertyCase> props = [] {
    std::vector<PropertyCase> v;
    auto add = [&](const std::string& name, PropFn fn) { v.push_back({name, std::move(fn)}); };

    add("linearity", [](std::mt19937_64& rng, int N) -> std::optional<std::string> {
      Universe u = ux(N);
      MultiSeries f = random_series(rng, u), g = random_series(rng, u);
      FieldElem al = random_rational(rng, 9), be = random_rational(rng, 9);
      FieldElem a = random_rational(rng), c = random_noninteger(rng);
      MultiSeries lhs = hyp_apply(f.scaled(al) + g.scaled(be), a, c, "x");
      MultiSeries rhs = hyp_apply(f, a, c, "x").scaled(al) + hyp_apply(g, a, c, "x").scaled(be);
      return agree_or_report(lhs, rhs, "linearity");
    });

    add("commutativity", [](std::mt19937_64& rng, int N) -> std::optional<std::string> {
      Universe u = ux(N);
      MultiSeries f = random_series(rng, u);
      FieldElem a = random_rational(rng), c = random_noninteger(rng);
      FieldElem b = random_rational(rng), d = random_noninteger(rng);
      MultiSeries lhs = hyp_apply(hyp_apply(f, b, d, "x"), a, c, "x");
      MultiSeries rhs = hyp_apply(hyp_apply(f, a, c, "x"), b, d, "x");
      return agree_or_report(lhs, rhs, "commutation");
    });

    add("parameter-exchange", [](std::mt19937_64& rng, int N) -> std::optional<std::string> {
      Universe u = ux(N);
      MultiSeries f = random_series(rng, u);
      FieldElem a = random_rational(rng), c = random_noninteger(rng);
      FieldElem b = random_rational(rng), d = random_noninteger(rng);
      MultiSeries lhs = hyp_apply(hyp_apply(f, b, d, "x"), a, c, "x");
      MultiSeries rhs = hyp_apply(hyp_apply(f, b, c, "x"), a, d, "x");
      return agree_or_report(lhs, rhs, "parameter exchange");
    });

    add("inverse", [](std::mt19937_64& rng, int N) -> std::optional<std::string> {
      Universe u = ux(N);
      MultiSeries f = random_series(rng, u);
      FieldElem a = random_noninteger(rng), c = random_noninteger(rng);
      MultiSeries roundtrip = hyp_apply(hyp_apply(f, a, c, "x"), c, a, "x");
      return agree_or_report(roundtrip, f, "inverse");
    });

    add("shift", [](std::mt19937_64& rng, int N) -> std::optional<std::string> {
      Universe u = ux(N);
      MultiSeries f = random_series(rng, u);
      FieldElem a = random_rational(rng), c = random_noninteger(rng);
      int n = static_cast<int>(rng() % 5);
      FieldElem nf = FieldElem::from_long(n);
      MultiSeries lhs = hyp_apply(f.shifted_by_var("x", n), a, c, "x");
      FieldElem factor = pochhammer(a, n) / pochhammer(c, n);
      MultiSeries rhs =
          hyp_apply(f, a + nf, c + nf, "x").shifted_by_var("x", n).scaled(factor);
      return agree_or_report(lhs, rhs, "shift");
    });

    add("dual-shift", [](std::mt19937_64& rng, int N) -> std::optional<std::string> {
      Universe u = ux(N);
      MultiSeries f = random_series(rng, u);
      FieldElem a = random_rational(rng), c = random_noninteger(rng);
      int n = 1 + static_cast<int>(rng() % 3);
      FieldElem nf = FieldElem::from_long(n);
      MultiSeries lhs = hyp_apply(f, a, c, "x");
      for (int i = 0; i < n; ++i) lhs = lhs.derivative("x");
      MultiSeries df = f;
      for (int i = 0; i < n; ++i) df = df.derivative("x");
      FieldElem factor = pochhammer(a, n) / pochhammer(c, n);
      MultiSeries rhs = hyp_apply(df, a + nf, c + nf, "x").scaled(factor);
      return agree_or_report(lhs, rhs, "dual shift");
    });

    add("argument-scaling", [](std::mt19937_64& rng, int N) -> std::optional<std::string> {
      Universe u = ux(N);
      MultiSeries f = random_series(rng, u);
      FieldElem a = random_rational(rng), c = random_noninteger(rng);
      FieldElem al = random_noninteger(rng, 9);
      MultiSeries scaled_x = u_var(u, "x").scaled(al);
      MultiSeries lhs = hyp_apply(f, a, c, "x").compose({{"x", scaled_x}});
      MultiSeries rhs = hyp_apply(f.compose({{"x", scaled_x}}), a, c, "x");
      return agree_or_report(lhs, rhs, "argument scaling");
    });

    for (int n = 2; n <= 4; ++n) {
      add("argument-power[" + std::to_string(n) + "]",
          [n](std::mt19937_64& rng, int N) -> std::optional<std::string> {
            Universe uxv = ux(N), uyv{{"y"}, N, FieldCtx::rational()};
            FieldElem a = random_rational(rng), c = random_noninteger(rng);
            FieldElem nf = FieldElem::from_long(n);
            OperatorIdentity oi;
            oi.lhs = OpChain{uxv, {HypAtom{a, c, "x"}}};
            OpChain rhs{uyv, {}};
            for (int j = 0; j < n; ++j) {
              FieldElem jf = FieldElem::from_long(j);
              rhs.atoms.push_back(HypAtom{(a + jf) / nf, (c + jf) / nf, "y"});
            }
            oi.rhs = rhs;
            oi.rhs_var = "y";
            oi.subst = u_var(uxv, "x").pow_int(n);
            validate_chain(oi.rhs);
            std::vector<MultiSeries> fns = monomial_testfns(uyv, "y", 4);
            fns.push_back(random_series(rng, uyv));
            auto res = check_operator_identity(oi, fns);
            if (res.pass) return std::nullopt;
            return "argument power n=" + std::to_string(n) + ": " + res.detail;
          });
    }

    add("contiguous", [](std::mt19937_64& rng, int N) -> std::optional<std::string> {
      Universe u = ux(N);
      MultiSeries f = random_series(rng, u);
      FieldElem a = random_rational(rng), c = random_noninteger(rng);
      FieldElem one = FieldElem::from_long(1);
      MultiSeries lhs = hyp_apply(f, a, c, "x").scaled(c) -
                        hyp_apply(f, a + one, c + one, "x").scaled(a) +
                        hyp_apply(f, a, c + one, "x").scaled(a - c);
      return agree_or_report(lhs, u_zero(u), "contiguous relation");
    });

    add("per-partes", [](std::mt19937_64& rng, int N) -> std::optional<std::string> {
      Universe u = ux(N);
      MultiSeries f = random_series(rng, u);
      FieldElem a = random_noninteger(rng);
      FieldElem one = FieldElem::from_long(1);
      FieldElem half = FieldElem::rational(1, 2);
      MultiSeries g1 = hyp_apply(f, -a, one - a, "x");
      MultiSeries lhs = hyp_apply(g1, a, a + one, "x");
      MultiSeries rhs = hyp_apply(f, a, a + one, "x").scaled(half) + g1.scaled(half);
      return agree_or_report(lhs, rhs, "per partes");
    });

    add("difop-route", [](std::mt19937_64& rng, int N) -> std::optional<std::string> {
      Universe u = ux(N);
      MultiSeries f = random_series(rng, u);
      FieldElem a = random_noninteger(rng);
      int n = static_cast<int>(rng() % 5);
      MultiSeries lhs = hyp_difop_apply(f, a, n, "x");
      MultiSeries rhs = hyp_apply(f, a + FieldElem::from_long(n), a, "x");
      return agree_or_report(lhs, rhs, "differential-operator route");
    });

    add("poch-splitting", [](std::mt19937_64& rng, int) -> std::optional<std::string> {
      FieldElem a = random_rational(rng);
      for (int n = 1; n <= 4; ++n) {
        FieldElem nf = FieldElem::from_long(n);
        for (int k = 0; k <= 6; ++k) {
          FieldElem lhs = pochhammer(a, n * k);
          FieldElem rhs = FieldElem::from_long(1);
          for (int j = 0; j < n; ++j)
            rhs *= pochhammer((a + FieldElem::from_long(j)) / nf, k);
          for (int i = 0; i < n * k; ++i) rhs *= nf;
          if (lhs != rhs)
            return "rising-factorial splitting fails at a=" + a.str() +
                   ", n=" + std::to_string(n) + ", k=" + std::to_string(k);
        }
      }
      return std::nullopt;
    });

    add("poch-index-addition", [](std::mt19937_64& rng, int) -> std::optional<std::string> {
      FieldElem a = random_noninteger(rng);
      for (int trial = 0; trial < 8; ++trial) {
        long m = static_cast<long>(rng() % 13) - 6;
        long n = static_cast<long>(rng() % 13) - 6;
        FieldElem lhs = pochhammer_int(a, m + n);
        FieldElem rhs = pochhammer_int(a, m) * pochhammer_int(a + FieldElem::from_long(m), n);
        if (lhs != rhs)
          return "index addition fails at a=" + a.str() + ", m=" + std::to_string(m) +
                 ", n=" + std::to_string(n);
      }
      return std::nullopt;
    });

    return v;
  }();
  return props;
}

}  // namespace hypseries::verify
