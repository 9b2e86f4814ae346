#include "hypseries/specfun.hpp"

#include <algorithm>

namespace hypseries::specfun {

namespace {

void require_zero_const(const MultiSeries& s, const char* what) {
  if (!s.constant_term().is_zero())
    fail(Errc::NonzeroConstantTerm, std::string(what) + " needs a zero constant term");
}

void require_admissible(const FieldElem& c, const char* what) {
  if (is_nonpositive_int_shifted(c))
    fail(Errc::InadmissibleLowerParameter, std::string(what) + ": lower parameter " + c.str());
}

/// sum_k coef(k) arg^k, stopping once powers fall below the cutoff.
MultiSeries single_sum(const MultiSeries& arg, const std::function<FieldElem(int)>& coef) {
  require_zero_const(arg, "series kernel argument");
  MultiSeries result = MultiSeries::constant(arg.vars(), arg.order(), FieldElem::one(arg.field()));
  result = result.scaled(coef(0));
  result = result.with_reliable(arg.reliable_order() < arg.order() ? arg.reliable_order()
                                                                   : arg.order());
  MultiSeries p = arg;
  for (int k = 1; k <= arg.order(); ++k) {
    if (p.is_zero()) break;
    result.add_scaled(p, coef(k));
    if (k < arg.order()) p = p * arg;
  }
  return result;
}

/// sum_{j,k} coef(j,k) X^j Y^k over the truncated grid.
MultiSeries double_sum(const MultiSeries& X, const MultiSeries& Y,
                       const std::function<FieldElem(int, int)>& coef) {
  require_zero_const(X, "double-sum argument");
  require_zero_const(Y, "double-sum argument");
  FieldCtx ctx = join(X.field(), Y.field());
  MultiSeries result = MultiSeries::zero(X.vars(), X.order(), ctx);
  MultiSeries one = MultiSeries::constant(X.vars(), X.order(), FieldElem::one(ctx));
  MultiSeries Xp = one;
  for (int j = 0; j <= X.order(); ++j) {
    if (Xp.is_zero()) break;
    MultiSeries P = Xp;
    for (int k = 0; k <= X.order(); ++k) {
      if (P.is_zero()) break;
      result.add_scaled(P, coef(j, k));
      if (k < X.order()) P = P * Y;
    }
    if (j < X.order()) Xp = Xp * X;
  }
  int rel = std::min(X.reliable_order(), Y.reliable_order());
  return result.with_reliable(std::min(rel, result.reliable_order()));
}

std::vector<FieldElem> poch_table(const FieldElem& a, int n) {
  std::vector<FieldElem> t;
  t.reserve(n + 1);
  t.push_back(FieldElem::one(a.ctx()));
  FieldElem term = a;
  for (int k = 1; k <= n; ++k) {
    t.push_back(t.back() * term);
    term += FieldElem::one(a.ctx());
  }
  return t;
}

std::vector<FieldElem> inv_factorial_table(int n) {
  std::vector<FieldElem> t;
  t.reserve(n + 1);
  t.push_back(FieldElem::from_long(1));
  for (int k = 1; k <= n; ++k) t.push_back(t.back() / FieldElem::from_long(k));
  return t;
}

FieldElem int_pow(const FieldElem& b, int e) {
  FieldElem acc = FieldElem::one(b.ctx());
  for (int i = 0; i < e; ++i) acc *= b;
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Kernels

MultiSeries exp_series(const MultiSeries& arg) {
  auto fact = inv_factorial_table(arg.order());
  return single_sum(arg, [&](int k) { return fact[k]; });
}

MultiSeries cosh2sqrt(const MultiSeries& arg) {
  auto fact = inv_factorial_table(2 * arg.order());
  return single_sum(arg,
                    [&](int k) { return int_pow(FieldElem::from_long(4), k) * fact[2 * k]; });
}

MultiSeries cos2sqrt(const MultiSeries& arg) {
  auto fact = inv_factorial_table(2 * arg.order());
  return single_sum(arg, [&](int k) {
    FieldElem v = int_pow(FieldElem::from_long(4), k) * fact[2 * k];
    return (k % 2) ? -v : v;
  });
}

MultiSeries fn_kernel(int n, const MultiSeries& arg) {
  if (n < 1) fail(Errc::InadmissibleParameter, "kernel index must be positive");
  auto fact = inv_factorial_table(n * arg.order());
  FieldElem nf = FieldElem::from_long(n);
  return single_sum(arg, [&](int k) { return int_pow(nf, n * k) * fact[n * k]; });
}

MultiSeries arctan_ratio(const MultiSeries& arg) {
  return single_sum(arg, [&](int k) {
    FieldElem v = FieldElem::rational(1, 2 * k + 1);
    return (k % 2) ? -v : v;
  });
}

MultiSeries binom_pow(const MultiSeries& s, const FieldElem& lambda, const FieldElem& b) {
  require_zero_const(s, "binomial power argument");
  MultiSeries one = MultiSeries::constant(s.vars(), s.order(), FieldElem::one(s.field()));
  return (one - s.scaled(lambda)).pow_field(-b);
}

MultiSeries f4_kernel(const MultiSeries& t, const MultiSeries& x, const MultiSeries& y) {
  MultiSeries s = t * (x + y);
  MultiSeries d = t * (x - y);
  MultiSeries one = MultiSeries::constant(t.vars(), t.order(), FieldElem::one(t.field()));
  MultiSeries denom = one - s.scaled(FieldElem::from_long(2)) + d * d;
  return (one - s) * denom.inverse();
}

MultiSeries h4_kernel(const FieldElem& a, const MultiSeries& x, const MultiSeries& y) {
  MultiSeries one = MultiSeries::constant(x.vars(), x.order(), FieldElem::one(x.field()));
  MultiSeries base = (one - y) * (one - y) - x.scaled(FieldElem::from_long(4));
  return base.pow_field(-(a / FieldElem::from_long(2)));
}

MultiSeries f3_arg(const MultiSeries& t, const MultiSeries& x, const MultiSeries& y) {
  return t * t * x * y - t * x - t * y;
}

// ---------------------------------------------------------------------------
// Direct sums

MultiSeries pfq_sum(const std::vector<FieldElem>& upper, const std::vector<FieldElem>& lower,
                    const MultiSeries& arg) {
  for (const auto& c : lower) require_admissible(c, "pFq");
  int N = arg.order();
  std::vector<std::vector<FieldElem>> up, lo;
  for (const auto& a : upper) up.push_back(poch_table(a, N));
  for (const auto& c : lower) lo.push_back(poch_table(c, N));
  auto fact = inv_factorial_table(N);
  return single_sum(arg, [&](int k) {
    FieldElem v = fact[k];
    for (const auto& t : up) v *= t[k];
    for (const auto& t : lo) v = v / t[k];
    return v;
  });
}

MultiSeries appell_f1_sum(const FieldElem& a, const FieldElem& c, const FieldElem& b1,
                          const FieldElem& b2, const MultiSeries& X, const MultiSeries& Y) {
  require_admissible(c, "first Appell sum");
  int N = X.order();
  auto pa = poch_table(a, N), pc = poch_table(c, N), p1 = poch_table(b1, N),
       p2 = poch_table(b2, N);
  auto fact = inv_factorial_table(N);
  return double_sum(X, Y, [&](int j, int k) {
    return pa[j + k] / pc[j + k] * p1[j] * p2[k] * fact[j] * fact[k];
  });
}

MultiSeries appell_f2_sum(const FieldElem& a, const FieldElem& b1, const FieldElem& b2,
                          const FieldElem& c1, const FieldElem& c2, const MultiSeries& X,
                          const MultiSeries& Y) {
  require_admissible(c1, "second Appell sum");
  require_admissible(c2, "second Appell sum");
  int N = X.order();
  auto pa = poch_table(a, N), p1 = poch_table(b1, N), p2 = poch_table(b2, N),
       q1 = poch_table(c1, N), q2 = poch_table(c2, N);
  auto fact = inv_factorial_table(N);
  return double_sum(X, Y, [&](int j, int k) {
    return pa[j + k] * p1[j] * p2[k] / (q1[j] * q2[k]) * fact[j] * fact[k];
  });
}

MultiSeries appell_f3_sum(const FieldElem& a1, const FieldElem& b1, const FieldElem& a2,
                          const FieldElem& b2, const FieldElem& c, const MultiSeries& X,
                          const MultiSeries& Y) {
  require_admissible(c, "third Appell sum");
  int N = X.order();
  auto pa1 = poch_table(a1, N), pb1 = poch_table(b1, N), pa2 = poch_table(a2, N),
       pb2 = poch_table(b2, N), pc = poch_table(c, N);
  auto fact = inv_factorial_table(N);
  return double_sum(X, Y, [&](int j, int k) {
    return pa1[j] * pb1[j] * pa2[k] * pb2[k] / pc[j + k] * fact[j] * fact[k];
  });
}

MultiSeries appell_f4_sum(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                          const FieldElem& d, const MultiSeries& X, const MultiSeries& Y) {
  require_admissible(c, "fourth Appell sum");
  require_admissible(d, "fourth Appell sum");
  int N = X.order();
  auto pa = poch_table(a, N), pb = poch_table(b, N), pc = poch_table(c, N),
       pd = poch_table(d, N);
  auto fact = inv_factorial_table(N);
  return double_sum(X, Y, [&](int j, int k) {
    return pa[j + k] * pb[j + k] / (pc[j] * pd[k]) * fact[j] * fact[k];
  });
}

MultiSeries horn_g1_sum(const FieldElem& a, const FieldElem& b1, const FieldElem& b2,
                        const MultiSeries& X, const MultiSeries& Y) {
  int N = X.order();
  auto pa = poch_table(a, N);
  auto fact = inv_factorial_table(N);
  return double_sum(X, Y, [&](int j, int k) {
    return pa[j + k] * pochhammer_int(b1, j - k) * pochhammer_int(b2, k - j) * fact[j] * fact[k];
  });
}

MultiSeries horn_g2_sum(const FieldElem& a, const FieldElem& c, const FieldElem& b1,
                        const FieldElem& b2, const MultiSeries& X, const MultiSeries& Y) {
  int N = X.order();
  auto p1 = poch_table(b1, N), p2 = poch_table(b2, N);
  auto fact = inv_factorial_table(N);
  return double_sum(X, Y, [&](int j, int k) {
    return pochhammer_int(a, j - k) * pochhammer_int(c, k - j) * p1[j] * p2[k] * fact[j] *
           fact[k];
  });
}

MultiSeries horn_g3_sum(const FieldElem& a, const FieldElem& c, const MultiSeries& X,
                        const MultiSeries& Y) {
  auto fact = inv_factorial_table(X.order());
  return double_sum(X, Y, [&](int j, int k) {
    return pochhammer_int(a, 2 * j - k) * pochhammer_int(c, 2 * k - j) * fact[j] * fact[k];
  });
}

MultiSeries humbert_h4_sum(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                           const FieldElem& d, const MultiSeries& X, const MultiSeries& Y) {
  require_admissible(c, "H4 sum");
  require_admissible(d, "H4 sum");
  int N = X.order();
  auto pa = poch_table(a, 2 * N), pb = poch_table(b, N), pc = poch_table(c, N),
       pd = poch_table(d, N);
  auto fact = inv_factorial_table(N);
  return double_sum(X, Y, [&](int j, int k) {
    return pa[2 * j + k] * pb[k] / (pc[j] * pd[k]) * fact[j] * fact[k];
  });
}

MultiSeries phi1_sum(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                     const MultiSeries& X, const MultiSeries& Y) {
  require_admissible(c, "Phi1 sum");
  int N = X.order();
  auto pa = poch_table(a, N), pb = poch_table(b, N), pc = poch_table(c, N);
  auto fact = inv_factorial_table(N);
  return double_sum(X, Y, [&](int j, int k) {
    return pa[j + k] * pb[j] / pc[j + k] * fact[j] * fact[k];
  });
}

MultiSeries phi2_sum(const FieldElem& b1, const FieldElem& b2, const FieldElem& c,
                     const MultiSeries& X, const MultiSeries& Y) {
  require_admissible(c, "Phi2 sum");
  int N = X.order();
  auto p1 = poch_table(b1, N), p2 = poch_table(b2, N), pc = poch_table(c, N);
  auto fact = inv_factorial_table(N);
  return double_sum(X, Y, [&](int j, int k) {
    return p1[j] * p2[k] / pc[j + k] * fact[j] * fact[k];
  });
}

MultiSeries phi3_sum(const FieldElem& b, const FieldElem& c, const MultiSeries& X,
                     const MultiSeries& Y) {
  require_admissible(c, "Phi3 sum");
  int N = X.order();
  auto pb = poch_table(b, N), pc = poch_table(c, N);
  auto fact = inv_factorial_table(N);
  return double_sum(X, Y,
                    [&](int j, int k) { return pb[j] / pc[j + k] * fact[j] * fact[k]; });
}

MultiSeries f1_multi_sum(const FieldElem& a, const FieldElem& c,
                         const std::vector<FieldElem>& bs, const std::vector<FieldElem>& slopes,
                         const MultiSeries& T) {
  if (bs.size() != slopes.size() || bs.empty() || bs.size() > 4)
    fail(Errc::InadmissibleParameter, "slope and exponent lists must match (1..4 entries)");
  require_admissible(c, "multivariate first Appell sum");
  int N = T.order();
  FieldCtx ctx = T.field();
  for (const auto& s : slopes) ctx = join(ctx, s.ctx());
  auto pa = poch_table(a, N), pc = poch_table(c, N);
  auto fact = inv_factorial_table(N);
  std::size_t n = bs.size();
  std::vector<std::vector<FieldElem>> pb, sp;
  for (std::size_t i = 0; i < n; ++i) {
    pb.push_back(poch_table(bs[i], N));
    std::vector<FieldElem> powers;
    powers.push_back(FieldElem::one(ctx));
    FieldElem si = slopes[i].coerced(ctx);
    for (int k = 1; k <= N; ++k) powers.push_back(powers.back() * si);
    sp.push_back(std::move(powers));
  }
  // inner[k] = sum over compositions j_1+...+j_n = k of
  //            prod_i (b_i)_{j_i} s_i^{j_i} / j_i!
  std::vector<FieldElem> inner(N + 1, FieldElem::zero(ctx));
  std::function<void(std::size_t, int, const FieldElem&)> rec =
      [&](std::size_t i, int used, const FieldElem& partial) {
        if (i + 1 == n) {
          for (int j = used; j <= N; ++j) {
            FieldElem term = partial * (pb[i][j - used] * fact[j - used]).coerced(ctx) *
                             sp[i][j - used];
            inner[j] += term;
          }
          return;
        }
        for (int j = used; j <= N; ++j) {
          FieldElem term = partial * (pb[i][j - used] * fact[j - used]).coerced(ctx) *
                           sp[i][j - used];
          rec(i + 1, j, term);
        }
      };
  rec(0, 0, FieldElem::one(ctx));
  return single_sum(T, [&](int k) { return inner[k] * (pa[k] / pc[k]).coerced(ctx); });
}

MultiSeries f1_multi_rep(const FieldElem& a, const FieldElem& c,
                         const std::vector<FieldElem>& bs, const std::vector<FieldElem>& slopes,
                         const Universe& u, const std::string& tvar) {
  if (bs.size() != slopes.size() || bs.empty())
    fail(Errc::InadmissibleParameter, "slope and exponent lists must match");
  MultiSeries t = u_var(u, tvar);
  FieldCtx ctx = u.ctx;
  for (const auto& s : slopes) ctx = join(ctx, s.ctx());
  MultiSeries prod = MultiSeries::constant(u.vars, u.order, FieldElem::one(ctx));
  for (std::size_t i = 0; i < bs.size(); ++i) prod = prod * binom_pow(t, slopes[i], bs[i]);
  return hyp_apply(prod, a, c, tvar);
}

// ---------------------------------------------------------------------------
// Dispatch

namespace {

const std::pair<const char*, KernelId> kKernels[] = {
    {"exp", KernelId::Exp},           {"coshsqrt", KernelId::CoshSqrt},
    {"cossqrt", KernelId::CosSqrt},   {"fn", KernelId::Fn},
    {"binompow", KernelId::BinomPow}, {"arctanratio", KernelId::ArctanRatio},
    {"f4kernel", KernelId::F4Kernel}, {"h4kernel", KernelId::H4Kernel},
    {"f3arg", KernelId::F3Arg},
};

const std::pair<const char*, FamilyId> kFamilies[] = {
    {"pfq", FamilyId::PFQ},
    {"appell_f1", FamilyId::AppellF1},
    {"appell_f2", FamilyId::AppellF2},
    {"appell_f3", FamilyId::AppellF3},
    {"appell_f4", FamilyId::AppellF4},
    {"f1multi", FamilyId::F1Multi},
    {"horn_g1", FamilyId::HornG1},
    {"horn_g2", FamilyId::HornG2},
    {"horn_g3", FamilyId::HornG3},
    {"humbert_h4", FamilyId::HumbertH4},
    {"phi1", FamilyId::Phi1},
    {"phi2", FamilyId::Phi2},
    {"phi3", FamilyId::Phi3},
};

const FieldElem& pick(const std::vector<FieldElem>& v, std::size_t i, const char* what) {
  if (i >= v.size()) fail(Errc::UsageError, std::string("missing parameter: ") + what);
  return v[i];
}

}  // namespace

std::optional<KernelId> kernel_by_name(const std::string& name) {
  for (const auto& [n, id] : kKernels)
    if (name == n) return id;
  return std::nullopt;
}

std::optional<FamilyId> family_by_name(const std::string& name) {
  for (const auto& [n, id] : kFamilies)
    if (name == n) return id;
  return std::nullopt;
}

const char* kernel_name(KernelId id) {
  for (const auto& [n, i] : kKernels)
    if (i == id) return n;
  return "?";
}

const char* family_name(FamilyId id) {
  for (const auto& [n, i] : kFamilies)
    if (i == id) return n;
  return "?";
}

std::vector<std::string> kernel_names() {
  std::vector<std::string> out;
  for (const auto& [n, i] : kKernels) out.push_back(n);
  return out;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [n, i] : kFamilies) out.push_back(n);
  return out;
}

MultiSeries kernel_series(KernelId id, const FamilyParams& p, const Universe& u) {
  MultiSeries x0 = u_var(u, u.vars.at(0));
  switch (id) {
    case KernelId::Exp: return exp_series(x0);
    case KernelId::CoshSqrt: return cosh2sqrt(x0);
    case KernelId::CosSqrt: return cos2sqrt(x0);
    case KernelId::Fn: return fn_kernel(p.n, x0);
    case KernelId::ArctanRatio: return arctan_ratio(x0);
    case KernelId::BinomPow: {
      FieldElem lambda = p.slopes.empty() ? FieldElem::from_long(1) : p.slopes[0];
      return binom_pow(x0, lambda, pick(p.bs, 0, "b"));
    }
    case KernelId::F4Kernel: {
      if (u.vars.size() < 3) fail(Errc::UsageError, "f4kernel needs three variables");
      return f4_kernel(x0, u_var(u, u.vars[1]), u_var(u, u.vars[2]));
    }
    case KernelId::H4Kernel: {
      if (u.vars.size() < 2) fail(Errc::UsageError, "h4kernel needs two variables");
      return h4_kernel(pick(p.upper, 0, "a"), x0, u_var(u, u.vars[1]));
    }
    case KernelId::F3Arg: {
      if (u.vars.size() < 3) fail(Errc::UsageError, "f3arg needs three variables");
      return f3_arg(x0, u_var(u, u.vars[1]), u_var(u, u.vars[2]));
    }
  }
  fail(Errc::UsageError, "unknown kernel");
}

MultiSeries family_series(FamilyId id, const FamilyParams& p, const Universe& u) {
  auto var = [&](std::size_t i) {
    if (i >= u.vars.size()) fail(Errc::UsageError, "family needs more variables");
    return u_var(u, u.vars[i]);
  };
  switch (id) {
    case FamilyId::PFQ: return pfq_sum(p.upper, p.lower, var(0));
    case FamilyId::AppellF1:
      return appell_f1_sum(pick(p.upper, 0, "a"), pick(p.lower, 0, "c"), pick(p.bs, 0, "b1"),
                           pick(p.bs, 1, "b2"), var(0), var(1));
    case FamilyId::AppellF2:
      return appell_f2_sum(pick(p.upper, 0, "a"), pick(p.bs, 0, "b1"), pick(p.bs, 1, "b2"),
                           pick(p.lower, 0, "c1"), pick(p.lower, 1, "c2"), var(0), var(1));
    case FamilyId::AppellF3:
      return appell_f3_sum(pick(p.upper, 0, "a1"), pick(p.bs, 0, "b1"), pick(p.upper, 1, "a2"),
                           pick(p.bs, 1, "b2"), pick(p.lower, 0, "c"), var(0), var(1));
    case FamilyId::AppellF4:
      return appell_f4_sum(pick(p.upper, 0, "a"), pick(p.upper, 1, "b"), pick(p.lower, 0, "c"),
                           pick(p.lower, 1, "d"), var(0), var(1));
    case FamilyId::F1Multi:
      return f1_multi_sum(pick(p.upper, 0, "a"), pick(p.lower, 0, "c"), p.bs, p.slopes, var(0));
    case FamilyId::HornG1:
      return horn_g1_sum(pick(p.upper, 0, "a"), pick(p.bs, 0, "b1"), pick(p.bs, 1, "b2"), var(0),
                         var(1));
    case FamilyId::HornG2:
      return horn_g2_sum(pick(p.upper, 0, "a"), pick(p.upper, 1, "c"), pick(p.bs, 0, "b1"),
                         pick(p.bs, 1, "b2"), var(0), var(1));
    case FamilyId::HornG3:
      return horn_g3_sum(pick(p.upper, 0, "a"), pick(p.upper, 1, "c"), var(0), var(1));
    case FamilyId::HumbertH4:
      return humbert_h4_sum(pick(p.upper, 0, "a"), pick(p.bs, 0, "b"), pick(p.lower, 0, "c"),
                            pick(p.lower, 1, "d"), var(0), var(1));
    case FamilyId::Phi1:
      return phi1_sum(pick(p.upper, 0, "a"), pick(p.bs, 0, "b"), pick(p.lower, 0, "c"), var(0),
                      var(1));
    case FamilyId::Phi2:
      return phi2_sum(pick(p.bs, 0, "b1"), pick(p.bs, 1, "b2"), pick(p.lower, 0, "c"), var(0),
                      var(1));
    case FamilyId::Phi3:
      return phi3_sum(pick(p.bs, 0, "b"), pick(p.lower, 0, "c"), var(0), var(1));
  }
  fail(Errc::UsageError, "unknown family");
}

MultiSeries rep_series(FamilyId id, const FamilyParams& p, const Universe& u) {
  auto var = [&](std::size_t i) {
    if (i >= u.vars.size()) fail(Errc::UsageError, "representation needs more variables");
    return u_var(u, u.vars[i]);
  };
  auto vname = [&](std::size_t i) { return u.vars.at(i); };
  FieldElem one = FieldElem::from_long(1);
  FieldElem half = FieldElem::rational(1, 2);
  switch (id) {
    case FamilyId::PFQ: {
      std::size_t np = p.upper.size(), nq = p.lower.size();
      if (nq + 1 == np) {
        MultiSeries g = binom_pow(var(0), one, p.upper.back());
        for (std::size_t i = 0; i < nq; ++i) g = hyp_apply(g, p.upper[i], p.lower[i], vname(0));
        return g;
      }
      if (nq >= np) {
        int n = static_cast<int>(nq - np) + 1;
        MultiSeries g = fn_kernel(n, var(0));
        std::vector<FieldElem> uppers;
        for (int j = 1; j <= n - 1; ++j) uppers.push_back(FieldElem::rational(j, n));
        for (const auto& a : p.upper) uppers.push_back(a);
        for (std::size_t i = 0; i < nq; ++i) g = hyp_apply(g, uppers[i], p.lower[i], vname(0));
        return g;
      }
      fail(Errc::InadmissibleParameter, "no representation for p > q+1");
    }
    case FamilyId::AppellF1: {
      if (u.vars.size() < 3) fail(Errc::UsageError, "representation needs (t,x,y)");
      FieldElem a = pick(p.upper, 0, "a"), c = pick(p.lower, 0, "c");
      MultiSeries g = binom_pow(var(0) * var(1), one, pick(p.bs, 0, "b1")) *
                      binom_pow(var(0) * var(2), one, pick(p.bs, 1, "b2"));
      return hyp_apply(g, a, c, vname(0));
    }
    case FamilyId::AppellF2: {
      FieldElem a = pick(p.upper, 0, "a");
      MultiSeries g = binom_pow(var(0) + var(1), one, a);
      g = hyp_apply(g, pick(p.bs, 1, "b2"), pick(p.lower, 1, "c2"), vname(1));
      return hyp_apply(g, pick(p.bs, 0, "b1"), pick(p.lower, 0, "c1"), vname(0));
    }
    case FamilyId::AppellF3: {
      if (u.vars.size() < 3) fail(Errc::UsageError, "representation needs (t,x,y)");
      MultiSeries g = arctan_ratio(f3_arg(var(0), var(1), var(2)));
      g = hyp_apply(g, FieldElem::rational(3, 2), pick(p.lower, 0, "c"), vname(0));
      g = hyp_apply(g, pick(p.bs, 1, "b2"), half, vname(2));
      g = hyp_apply(g, pick(p.upper, 1, "a2"), one, vname(2));
      g = hyp_apply(g, pick(p.bs, 0, "b1"), half, vname(1));
      g = hyp_apply(g, pick(p.upper, 0, "a1"), one, vname(1));
      return g;
    }
    case FamilyId::AppellF4: {
      if (u.vars.size() < 3) fail(Errc::UsageError, "representation needs (t,x,y)");
      MultiSeries g = f4_kernel(var(0), var(1), var(2));
      g = hyp_apply(g, pick(p.upper, 0, "a"), one, vname(0));
      g = hyp_apply(g, pick(p.upper, 1, "b"), half, vname(0));
      g = hyp_apply(g, half, pick(p.lower, 1, "d"), vname(2));
      g = hyp_apply(g, half, pick(p.lower, 0, "c"), vname(1));
      return g;
    }
    case FamilyId::F1Multi:
      return f1_multi_rep(pick(p.upper, 0, "a"), pick(p.lower, 0, "c"), p.bs, p.slopes, u,
                          vname(0));
    case FamilyId::HornG1: {
      FieldElem a = pick(p.upper, 0, "a"), b1 = pick(p.bs, 0, "b1"), b2 = pick(p.bs, 1, "b2");
      MultiSeries base = u_one(u) + var(0) + var(1);
      MultiSeries inv = base.inverse();
      return base.pow_field(-a) *
             appell_f4_sum(a, one - b1 - b2, one - b1, one - b2, var(1) * inv, var(0) * inv);
    }
    case FamilyId::HornG2: {
      FieldElem a = pick(p.upper, 0, "a"), c = pick(p.upper, 1, "c");
      MultiSeries g = (u_one(u) + var(1)).pow_field(-c) * (u_one(u) + var(0)).pow_field(-a) *
                      (u_one(u) - var(0) * var(1)).pow_field(c + a - one);
      g = hyp_apply(g, pick(p.bs, 1, "b2"), one - a, vname(1));
      return hyp_apply(g, pick(p.bs, 0, "b1"), one - c, vname(0));
    }
    case FamilyId::HornG3: fail(Errc::InadmissibleParameter, "no representation available");
    case FamilyId::HumbertH4: {
      FieldElem a = pick(p.upper, 0, "a");
      MultiSeries g = h4_kernel(a, var(0), var(1));
      g = hyp_apply(g, (a + one) / FieldElem::from_long(2), pick(p.lower, 0, "c"), vname(0));
      return hyp_apply(g, pick(p.bs, 0, "b"), pick(p.lower, 1, "d"), vname(1));
    }
    case FamilyId::Phi1: {
      if (u.vars.size() < 3) fail(Errc::UsageError, "representation needs (t,x,y)");
      MultiSeries g = exp_series(var(0) * var(1)) * binom_pow(var(0) * var(2), one, pick(p.bs, 0, "b"));
      return hyp_apply(g, pick(p.upper, 0, "a"), pick(p.lower, 0, "c"), vname(0));
    }
    case FamilyId::Phi2: {
      if (u.vars.size() < 3) fail(Errc::UsageError, "representation needs (t,x,y)");
      FieldElem c = pick(p.lower, 0, "c"), b1 = pick(p.bs, 0, "b1"), b2 = pick(p.bs, 1, "b2");
      MultiSeries g = exp_series(var(0) * (var(1) - var(2)));
      g = hyp_apply(g, b1, c - b2, vname(1));
      g = hyp_apply(g, c - b2, c, vname(0));
      return exp_series(var(0) * var(2)) * g;
    }
    case FamilyId::Phi3: {
      if (u.vars.size() < 3) fail(Errc::UsageError, "representation needs (t,x,y)");
      FieldElem c = pick(p.lower, 0, "c"), b = pick(p.bs, 0, "b");
      MultiSeries g = cosh2sqrt(var(0) * var(2)) * exp_series(-(var(0) * var(1)));
      g = hyp_apply(g, half, c - b, vname(2));
      g = hyp_apply(g, c - b, c, vname(0));
      return exp_series(var(0) * var(1)) * g;
    }
  }
  fail(Errc::UsageError, "unknown family");
}

}  // namespace hypseries::specfun
