#include "hypseries/hypop.hpp"

namespace hypseries {

FieldElem pochhammer(const FieldElem& a, int n) {
  FieldElem acc = FieldElem::one(a.ctx());
  FieldElem term = a;
  for (int k = 0; k < n; ++k) {
    acc *= term;
    if (acc.is_zero()) return acc;
    term += FieldElem::one(a.ctx());
  }
  return acc;
}

FieldElem pochhammer_int(const FieldElem& a, long m) {
  if (m >= 0) return pochhammer(a, static_cast<int>(m));
  long k = -m;
  FieldElem den = pochhammer(a - FieldElem::from_long(k), static_cast<int>(k));
  if (den.is_zero())
    fail(Errc::PochhammerPole, "(" + a.str() + ")_" + std::to_string(m) + " has a zero factor");
  return FieldElem::one(a.ctx()) / den;
}

std::vector<FieldElem> poch_ratio_table(const FieldElem& a, const FieldElem& c, int order,
                                        const FieldCtx& ctx) {
  FieldElem ua = a.coerced(ctx);
  FieldElem uc = c.coerced(ctx);
  std::vector<FieldElem> r;
  r.reserve(order + 1);
  r.push_back(FieldElem::one(ctx));
  for (int n = 1; n <= order; ++n) {
    FieldElem num = ua + FieldElem::from_long(n - 1).coerced(ctx);
    FieldElem den = uc + FieldElem::from_long(n - 1).coerced(ctx);
    r.push_back(r.back() * num / den);
  }
  return r;
}

MultiSeries hyp_apply(const MultiSeries& f, const HypParams& p) {
  return hyp_apply(f, p.a, p.c, p.var);
}

MultiSeries hyp_apply(const MultiSeries& f, const FieldElem& upper, const FieldElem& lower,
                      const std::string& var) {
  if (is_nonpositive_int_shifted(lower))
    fail(Errc::InadmissibleLowerParameter, "lower parameter " + lower.str() + " hits a pole");
  if (f.var_index(var) < 0) fail(Errc::UnknownVariable, "variable " + var + " not in universe");
  FieldCtx ctx = join(join(f.field(), upper.ctx()), lower.ctx());
  MultiSeries g = f.promoted(ctx);
  std::vector<FieldElem> ratio = poch_ratio_table(upper, lower, f.order(), ctx);
  return g.scale_var_degree(var, ratio);
}

MultiSeries hyp_difop_apply(const MultiSeries& f, const FieldElem& a, int n,
                            const std::string& var) {
  if (n < 0) fail(Errc::PochhammerPole, "operator power must be nonnegative");
  if (f.var_index(var) < 0) fail(Errc::UnknownVariable, "variable " + var + " not in universe");
  MultiSeries g = f;
  MultiSeries x = MultiSeries::variable(f.vars(), f.order(), var, f.field());
  for (int j = 0; j < n; ++j) {
    FieldElem shift = a + FieldElem::from_long(j);
    if (shift.is_zero())
      fail(Errc::PochhammerPole, "(" + a.str() + ")_" + std::to_string(n) + " vanishes");
    // (a+j + x d/dx) g / (a+j)
    MultiSeries euler = x * g.derivative(var);
    g = (g.scaled(shift) + euler).scaled(FieldElem::one(shift.ctx()) / shift);
  }
  return g;
}

}  // namespace hypseries
