#include "hypseries/opexpr.hpp"

#include <algorithm>

namespace hypseries {

namespace {

std::string short_text(const MultiSeries& s) {
  std::string t = s.text();
  if (t.size() > 48) {
    t.resize(48);
    t += "...";
  }
  return t;
}

}  // namespace

MultiSeries atom_apply(const OpAtom& atom, const MultiSeries& f) {
  if (const auto* h = std::get_if<HypAtom>(&atom)) {
    return hyp_apply(f, h->upper, h->lower, h->var);
  }
  if (const auto* p = std::get_if<MulPowAtom>(&atom)) {
    return f * p->base.pow_field(p->exponent);
  }
  if (const auto* m = std::get_if<MulSeriesAtom>(&atom)) {
    return f * m->g;
  }
  const auto& s = std::get<SubstAtom>(atom);
  return f.compose({{s.var, s.target}});
}

OpAtom atom_invert(const OpAtom& atom) {
  if (const auto* h = std::get_if<HypAtom>(&atom)) {
    return HypAtom{h->lower, h->upper, h->var};
  }
  if (const auto* p = std::get_if<MulPowAtom>(&atom)) {
    return MulPowAtom{p->base, -p->exponent};
  }
  if (const auto* m = std::get_if<MulSeriesAtom>(&atom)) {
    if (m->g.constant_term().is_zero())
      fail(Errc::NonInvertibleAtom, "series factor has zero constant term");
    return MulSeriesAtom{m->g.inverse()};
  }
  const auto& s = std::get<SubstAtom>(atom);
  if (!s.inverse_target)
    fail(Errc::NonInvertibleAtom, "substitution without a recorded inverse");
  return SubstAtom{s.var, *s.inverse_target, s.target};
}

std::string atom_str(const OpAtom& atom) {
  if (const auto* h = std::get_if<HypAtom>(&atom)) {
    return "H[" + h->upper.str() + "," + h->lower.str() + ";" + h->var + "]";
  }
  if (const auto* p = std::get_if<MulPowAtom>(&atom)) {
    return "(" + short_text(p->base) + ")^(" + p->exponent.str() + ")";
  }
  if (const auto* m = std::get_if<MulSeriesAtom>(&atom)) {
    return "mul(" + short_text(m->g) + ")";
  }
  const auto& s = std::get<SubstAtom>(atom);
  return "subst(" + s.var + " -> " + short_text(s.target) + ")";
}

MultiSeries chain_eval(const OpChain& chain, const MultiSeries& f) {
  if (f.vars() != chain.universe.vars || f.order() != chain.universe.order)
    fail(Errc::VariableMismatch, "operand does not live in the chain universe");
  MultiSeries g = f;
  for (auto it = chain.atoms.rbegin(); it != chain.atoms.rend(); ++it) g = atom_apply(*it, g);
  return g;
}

OpChain chain_invert(const OpChain& chain) {
  OpChain out{chain.universe, {}};
  out.atoms.reserve(chain.atoms.size());
  for (auto it = chain.atoms.rbegin(); it != chain.atoms.rend(); ++it)
    out.atoms.push_back(atom_invert(*it));
  return out;
}

std::string chain_str(const OpChain& chain) {
  if (chain.atoms.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < chain.atoms.size(); ++i) {
    if (i) out += " ∘ ";
    out += atom_str(chain.atoms[i]);
  }
  return out;
}

nlohmann::json chain_to_json(const OpChain& chain) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& atom : chain.atoms) {
    nlohmann::json a;
    if (const auto* h = std::get_if<HypAtom>(&atom)) {
      a["type"] = "hyp";
      a["upper"] = h->upper.str();
      a["lower"] = h->lower.str();
      a["var"] = h->var;
    } else if (const auto* p = std::get_if<MulPowAtom>(&atom)) {
      a["type"] = "mulpow";
      a["base"] = p->base.to_json();
      a["exponent"] = p->exponent.str();
    } else if (const auto* m = std::get_if<MulSeriesAtom>(&atom)) {
      a["type"] = "mulseries";
      a["series"] = m->g.to_json();
    } else {
      const auto& s = std::get<SubstAtom>(atom);
      a["type"] = "subst";
      a["var"] = s.var;
      a["target"] = s.target.to_json();
      if (s.inverse_target) a["inverse_target"] = s.inverse_target->to_json();
    }
    atoms.push_back(std::move(a));
  }
  nlohmann::json j;
  j["vars"] = chain.universe.vars;
  j["order"] = chain.universe.order;
  j["field"] = chain.universe.ctx.str();
  j["atoms"] = std::move(atoms);
  return j;
}

OpChain chain_from_json(const nlohmann::json& j) {
  OpChain chain;
  chain.universe.vars = j.at("vars").get<std::vector<std::string>>();
  chain.universe.order = j.at("order").get<int>();
  for (const auto& a : j.at("atoms")) {
    std::string type = a.at("type").get<std::string>();
    if (type == "hyp") {
      chain.atoms.push_back(HypAtom{FieldElem::parse(a.at("upper").get<std::string>()),
                                    FieldElem::parse(a.at("lower").get<std::string>()),
                                    a.at("var").get<std::string>()});
    } else if (type == "mulpow") {
      chain.atoms.push_back(MulPowAtom{MultiSeries::from_json(a.at("base")),
                                       FieldElem::parse(a.at("exponent").get<std::string>())});
    } else if (type == "mulseries") {
      chain.atoms.push_back(MulSeriesAtom{MultiSeries::from_json(a.at("series"))});
    } else if (type == "subst") {
      SubstAtom s{a.at("var").get<std::string>(), MultiSeries::from_json(a.at("target")), {}};
      if (a.contains("inverse_target"))
        s.inverse_target = MultiSeries::from_json(a.at("inverse_target"));
      chain.atoms.push_back(std::move(s));
    } else {
      fail(Errc::ParseError, "unknown atom type " + type);
    }
  }
  if (!chain.atoms.empty()) {
    // infer field from the first series payload, else rational
    for (const auto& atom : chain.atoms) {
      if (const auto* p = std::get_if<MulPowAtom>(&atom)) {
        chain.universe.ctx = p->base.field();
        break;
      }
      if (const auto* m = std::get_if<MulSeriesAtom>(&atom)) {
        chain.universe.ctx = m->g.field();
        break;
      }
    }
  }
  return chain;
}

void validate_chain(const OpChain& chain) {
  for (const auto& atom : chain.atoms) {
    if (const auto* h = std::get_if<HypAtom>(&atom)) {
      if (is_nonpositive_int_shifted(h->lower))
        fail(Errc::InadmissibleLowerParameter,
             "operator atom has lower parameter " + h->lower.str());
      bool found = std::find(chain.universe.vars.begin(), chain.universe.vars.end(), h->var) !=
                   chain.universe.vars.end();
      if (!found) fail(Errc::UnknownVariable, "atom variable " + h->var + " not in universe");
    } else if (const auto* p = std::get_if<MulPowAtom>(&atom)) {
      if (!p->base.constant_term().is_one())
        fail(Errc::NonUnitConstantTerm, "power base must have constant term 1");
    } else if (const auto* s = std::get_if<SubstAtom>(&atom)) {
      if (!s->target.constant_term().is_zero())
        fail(Errc::NonzeroConstantTerm, "substitution target must vanish at the origin");
    }
  }
}

OpChain chain_product(const Universe& u, const std::function<std::vector<OpAtom>(long)>& segment,
                      long m) {
  OpChain out{u, {}};
  if (m >= 1) {
    for (long j = 1; j <= m; ++j) {
      auto seg = segment(j);
      out.atoms.insert(out.atoms.end(), seg.begin(), seg.end());
    }
  } else if (m <= -1) {
    for (long j = 1; j <= -m; ++j) {
      auto seg = segment(1 - j);
      for (auto it = seg.rbegin(); it != seg.rend(); ++it)
        out.atoms.push_back(atom_invert(*it));
    }
  }
  return out;
}

std::vector<MultiSeries> monomial_testfns(const Universe& u, const std::string& var, int kmax) {
  std::vector<MultiSeries> out;
  out.push_back(u_one(u));
  MultiSeries x = u_var(u, var);
  MultiSeries p = x;
  for (int k = 1; k <= kmax; ++k) {
    out.push_back(p);
    if (k < kmax) p = p * x;
  }
  return out;
}

OpCheckResult check_operator_identity(const OperatorIdentity& oi,
                                      const std::vector<MultiSeries>& testfns) {
  for (std::size_t i = 0; i < testfns.size(); ++i) {
    const MultiSeries& h = testfns[i];
    MultiSeries hx = h.compose({{oi.rhs_var, oi.subst}});
    MultiSeries lhs_val = chain_eval(oi.lhs, hx);
    MultiSeries rhs_val = chain_eval(oi.rhs, h).compose({{oi.rhs_var, oi.subst}});
    auto mism = MultiSeries::disagree(lhs_val, rhs_val);
    if (mism) {
      return {false, "test function #" + std::to_string(i) + " (" + short_text(h) + "): " +
                         mism->str()};
    }
  }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Named rewrites

namespace {

MultiSeries one_minus(const MultiSeries& v) {
  return MultiSeries::constant(v.vars(), v.order(), FieldElem::one(v.field())) - v;
}

}  // namespace

OperatorIdentity pfaff_rewrite(const FieldElem& a, const FieldElem& c, int order,
                               const FieldCtx& ctx) {
  Universe ux{{"x"}, order, ctx};
  Universe uy{{"y"}, order, ctx};
  MultiSeries y = u_var(uy, "y");
  MultiSeries omy = one_minus(y);
  OperatorIdentity oi;
  oi.lhs = OpChain{ux, {HypAtom{a, c, "x"}}};
  oi.rhs = OpChain{uy, {MulPowAtom{omy, a}, HypAtom{a, c, "y"}, MulPowAtom{omy, -c}}};
  oi.rhs_var = "y";
  MultiSeries x = u_var(ux, "x");
  oi.subst = x * (x - u_one(ux)).inverse();  // x/(x-1)
  validate_chain(oi.lhs);
  validate_chain(oi.rhs);
  return oi;
}

OperatorIdentity euler_rewrite(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                               int order, const FieldCtx& ctx) {
  Universe ux{{"x"}, order, ctx};
  MultiSeries omx = one_minus(u_var(ux, "x"));
  OperatorIdentity oi;
  oi.lhs = OpChain{ux, {MulPowAtom{omx, a + b - c}, HypAtom{a, c, "x"}, MulPowAtom{omx, -b}}};
  oi.rhs = OpChain{ux, {HypAtom{c - b, c, "x"}, MulPowAtom{omx, -(c - a)}, HypAtom{a, c - b, "x"}}};
  oi.rhs_var = "x";
  oi.subst = u_var(ux, "x");
  validate_chain(oi.lhs);
  validate_chain(oi.rhs);
  return oi;
}

OperatorIdentity eulergen_rewrite(const SeqFn& a_seq, const SeqFn& c_seq, long n, bool reversed,
                                  int order, const FieldCtx& ctx) {
  Universe ux{{"x"}, order, ctx};
  MultiSeries omx = one_minus(u_var(ux, "x"));
  auto atilde = [&](long j) {
    FieldElem v = a_seq(0);
    if (j > 0)
      for (long k = 1; k <= j; ++k) v += c_seq(k);
    else
      for (long k = 1; k <= -j; ++k) v -= c_seq(1 - k);
    return v;
  };
  auto ctilde = [&](long j) { return c_seq(j) + c_seq(j - 1) - a_seq(j - 1) + a_seq(j - 2); };

  auto plain_seg = [&](long j) -> std::vector<OpAtom> {
    return {MulPowAtom{omx, c_seq(j)}, HypAtom{a_seq(j), a_seq(j - 1), "x"}};
  };
  auto tilde_seg = [&](long j) -> std::vector<OpAtom> {
    return {MulPowAtom{omx, ctilde(j)}, HypAtom{atilde(j), atilde(j - 1), "x"}};
  };

  OpChain plain = chain_product(ux, plain_seg, n);
  OpChain tilde = chain_product(ux, tilde_seg, n);

  OperatorIdentity oi;
  oi.rhs_var = "x";
  oi.subst = u_var(ux, "x");
  if (!reversed) {
    oi.lhs = plain;
    OpChain rhs{ux, {MulPowAtom{omx, c_seq(1) - ctilde(1)}}};
    rhs.atoms.insert(rhs.atoms.end(), tilde.atoms.begin(), tilde.atoms.end());
    rhs.atoms.push_back(MulPowAtom{omx, a_seq(n - 1) - atilde(n - 1)});
    rhs.atoms.push_back(HypAtom{a_seq(n), atilde(n), "x"});
    oi.rhs = rhs;
  } else {
    oi.lhs = tilde;
    OpChain rhs{ux, {MulPowAtom{omx, ctilde(1) - c_seq(1)}}};
    rhs.atoms.insert(rhs.atoms.end(), plain.atoms.begin(), plain.atoms.end());
    rhs.atoms.push_back(HypAtom{atilde(n), a_seq(n), "x"});
    rhs.atoms.push_back(MulPowAtom{omx, atilde(n - 1) - a_seq(n - 1)});
    oi.rhs = rhs;
  }
  validate_chain(oi.lhs);
  validate_chain(oi.rhs);
  return oi;
}

OperatorIdentity eulergenm_rewrite(const SeqFn& a_seq, const FieldElem& alpha, long n, long m,
                                   int order, const FieldCtx& ctx) {
  Universe ux{{"x"}, order, ctx};
  MultiSeries omx = one_minus(u_var(ux, "x"));
  auto c_seq = [&](long j) { return a_seq(j) - a_seq(j - 1) + alpha; };
  FieldElem malpha = alpha * FieldElem::from_long(m);
  FieldElem nf = FieldElem::from_long(n);

  auto lhs_seg = [&](long j) -> std::vector<OpAtom> {
    return {MulPowAtom{omx, c_seq(j)}, HypAtom{a_seq(j), a_seq(j - 1), "x"}};
  };
  auto mid_seg = [&](long j) -> std::vector<OpAtom> {
    FieldElem ju = FieldElem::from_long(j), jl = FieldElem::from_long(j - 1);
    return {MulPowAtom{omx, c_seq(j) + malpha},
            HypAtom{a_seq(j) + malpha * ju, a_seq(j - 1) + malpha * jl, "x"}};
  };
  auto tail_seg = [&](long k) -> std::vector<OpAtom> {
    FieldElem up = a_seq(n) + FieldElem::from_long(m - k) * alpha * nf;
    FieldElem lo = a_seq(n) + FieldElem::from_long(m + 1 - k) * alpha * nf;
    return {MulPowAtom{omx, -alpha * (nf - FieldElem::from_long(1))}, HypAtom{up, lo, "x"}};
  };

  OperatorIdentity oi;
  oi.rhs_var = "x";
  oi.subst = u_var(ux, "x");
  oi.lhs = chain_product(ux, lhs_seg, n);
  OpChain rhs{ux, {MulPowAtom{omx, -malpha}}};
  OpChain mid = chain_product(ux, mid_seg, n);
  OpChain tail = chain_product(ux, tail_seg, m);
  rhs.atoms.insert(rhs.atoms.end(), mid.atoms.begin(), mid.atoms.end());
  rhs.atoms.insert(rhs.atoms.end(), tail.atoms.begin(), tail.atoms.end());
  oi.rhs = rhs;
  validate_chain(oi.lhs);
  validate_chain(oi.rhs);
  return oi;
}

OperatorIdentity theorem_main_chains(long m, const FieldElem& a, const FieldElem& c, int order,
                                     const FieldCtx& ctx, bool evidence_mode) {
  if (m == 0) fail(Errc::ZeroM, "change of variable degenerates at m = 0");
  bool integer_diff = (a - c).is_integer();
  if (!(m == 1 || m == -1 || m == 2 || m == -2 || integer_diff) && !evidence_mode)
    fail(Errc::RegimeViolation,
         "|m| >= 3 with non-integer a-c is only checkable as conjecture evidence");

  Universe ux{{"x"}, order, ctx};
  Universe uy{{"y"}, order, ctx};
  FieldElem mf = FieldElem::from_long(m);
  FieldElem delta = (a - c) / mf;
  MultiSeries omy = one_minus(u_var(uy, "y"));
  // m*x/y as a series in y: x = 1-(1-y)^(1/m), so the unit normalization is
  // exact and no fractional monomial ever appears.
  MultiSeries xy = u_one(uy) - omy.pow_field(FieldElem::rational(1, m));
  MultiSeries u = xy.scaled(mf).divided_by_var("y", 1);

  FieldElem inner_exp = (a - c - FieldElem::from_long(1)) / mf;
  auto seg = [&](long j) -> std::vector<OpAtom> {
    FieldElem ju = FieldElem::from_long(j), jl = FieldElem::from_long(j - 1);
    return {MulPowAtom{omy, inner_exp}, HypAtom{c + delta * ju, c + delta * jl, "y"}};
  };

  OperatorIdentity oi;
  oi.lhs = OpChain{ux, {HypAtom{a, c, "x"}}};
  OpChain rhs{uy, {MulPowAtom{u, FieldElem::from_long(1) - c},
                   MulPowAtom{omy, FieldElem::from_long(1) + (c - a) / mf}}};
  OpChain prod = chain_product(uy, seg, m);
  rhs.atoms.insert(rhs.atoms.end(), prod.atoms.begin(), prod.atoms.end());
  rhs.atoms.push_back(MulPowAtom{u, a - FieldElem::from_long(1)});
  oi.rhs = rhs;
  oi.rhs_var = "y";
  MultiSeries omx = one_minus(u_var(ux, "x"));
  oi.subst = u_one(ux) - omx.pow_int(m);  // 1-(1-x)^m, negative m via inversion
  validate_chain(oi.lhs);
  validate_chain(oi.rhs);
  return oi;
}

OperatorIdentity gensubs_chains(const MultiSeries& y, const FieldElem& a, long n) {
  if (y.vars().size() != 1) fail(Errc::BadInnerSeries, "inner series must be univariate");
  if (!y.constant_term().is_zero()) fail(Errc::BadInnerSeries, "inner series must vanish at 0");
  const std::string xvar = y.vars()[0];
  std::string yvar = (xvar == "y") ? "u" : "y";
  int order = y.order();
  FieldCtx ctx = y.field();
  std::vector<int> lin{1};
  FieldElem y1 = y.coeff(lin);
  if (y1.is_zero()) fail(Errc::BadInnerSeries, "inner series needs nonzero linear coefficient");

  Universe ux{{xvar}, order, ctx};
  Universe uy{{yvar}, order, ctx};
  MultiSeries xy = y.reversion(yvar);
  // x/y = y1^{-1} * v with v a unit series; the scalar parts of the two
  // outer powers combine to the integer power y1^{-n}.
  MultiSeries v = xy.divided_by_var(yvar, 1).scaled(y1);
  FieldElem scalar = FieldElem::one(ctx);
  {
    FieldElem base = FieldElem::one(ctx) / y1;
    long k = n >= 0 ? n : -n;
    for (long i = 0; i < k; ++i) scalar *= base;
    if (n < 0) scalar = FieldElem::one(ctx) / scalar;
  }
  MultiSeries yprime = y.derivative(xvar).compose({{xvar, xy}});

  auto seg = [&](long j) -> std::vector<OpAtom> {
    FieldElem ju = FieldElem::from_long(j);
    return {MulSeriesAtom{yprime}, HypAtom{a + ju, a + ju - FieldElem::from_long(1), yvar}};
  };

  OperatorIdentity oi;
  oi.lhs = OpChain{ux, {HypAtom{a + FieldElem::from_long(n), a, xvar}}};
  OpChain rhs{uy, {MulSeriesAtom{u_const(uy, scalar)},
                   MulPowAtom{v, FieldElem::from_long(1) - a}}};
  OpChain prod = chain_product(uy, seg, n);
  rhs.atoms.insert(rhs.atoms.end(), prod.atoms.begin(), prod.atoms.end());
  rhs.atoms.push_back(MulPowAtom{v, a + FieldElem::from_long(n) - FieldElem::from_long(1)});
  oi.rhs = rhs;
  oi.rhs_var = yvar;
  oi.subst = y;
  validate_chain(oi.lhs);
  validate_chain(oi.rhs);
  return oi;
}

}  // namespace hypseries
