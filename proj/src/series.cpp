#include "hypseries/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hypseries {

// ---------------------------------------------------------------------------
// ExpTable

namespace {

std::mutex g_table_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const ExpTable>>& table_cache() {
  static std::map<std::pair<int, int>, std::shared_ptr<const ExpTable>> cache;
  return cache;
}

void gen_exps(int nvars, int deg, int pos, ExpVec& cur, std::vector<ExpVec>& out) {
  if (pos == nvars - 1) {
    cur[pos] = static_cast<std::uint8_t>(deg);
    out.push_back(cur);
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur[pos] = static_cast<std::uint8_t>(e);
    gen_exps(nvars, deg - e, pos + 1, cur, out);
  }
}

}  // namespace

ExpTable::ExpTable(int nvars, int order) : nvars_(nvars), order_(order) {
  ExpVec cur{};
  for (int deg = 0; deg <= order; ++deg) gen_exps(nvars, deg, 0, cur, exps_);
  long radix = order + 1;
  long span = 1;
  for (int i = 0; i < nvars; ++i) span *= radix;
  key2idx_.assign(static_cast<std::size_t>(span), -1);
  deg_.resize(exps_.size());
  key_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int d = 0;
    long k = 0;
    for (int v = 0; v < nvars; ++v) {
      d += exps_[i][v];
      k = k * radix + exps_[i][v];
    }
    deg_[i] = d;
    key_[i] = k;
    key2idx_[k] = static_cast<std::int32_t>(i);
  }
}

std::shared_ptr<const ExpTable> ExpTable::get(int nvars, int order) {
  if (nvars < 1 || nvars > kMaxVars)
    fail(Errc::VariableMismatch, "between 1 and 4 variables supported");
  if (order < 0 || order > kMaxOrder)
    fail(Errc::ExponentOverflow, "truncation order out of range");
  double span = std::pow(static_cast<double>(order + 1), nvars);
  if (span > 2.0e7) fail(Errc::ExponentOverflow, "series universe too large");
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto& cache = table_cache();
  auto it = cache.find({nvars, order});
  if (it != cache.end()) return it->second;
  auto tab = std::shared_ptr<const ExpTable>(new ExpTable(nvars, order));
  cache[{nvars, order}] = tab;
  return tab;
}

int ExpTable::index_of(const ExpVec& e) const {
  long radix = order_ + 1;
  long k = 0;
  int d = 0;
  for (int v = 0; v < nvars_; ++v) {
    if (e[v] > order_) return -1;
    d += e[v];
    k = k * radix + e[v];
  }
  if (d > order_) return -1;
  return key2idx_[k];
}

// ---------------------------------------------------------------------------
// MultiSeries basics

MultiSeries::MultiSeries(std::vector<std::string> vars, int order, FieldCtx ctx)
    : vars_(std::move(vars)), order_(order), reliable_(order), ctx_(ctx) {
  if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxVars)
    fail(Errc::VariableMismatch, "between 1 and 4 variables supported");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) fail(Errc::VariableMismatch, "duplicate variable " + vars_[i]);
  tab_ = ExpTable::get(static_cast<int>(vars_.size()), order);
  c_.assign(tab_->size(), FieldElem::zero(ctx_));
  nz_.assign(tab_->size(), 0);
}

void MultiSeries::refresh_zero_flags() {
  for (std::size_t i = 0; i < c_.size(); ++i) nz_[i] = c_[i].is_zero() ? 0 : 1;
}

MultiSeries MultiSeries::zero(std::vector<std::string> vars, int order, FieldCtx ctx) {
  return MultiSeries(std::move(vars), order, ctx);
}

MultiSeries MultiSeries::constant(std::vector<std::string> vars, int order,
                                  const FieldElem& value) {
  MultiSeries s(std::move(vars), order, value.ctx());
  s.c_[0] = value;
  s.nz_[0] = value.is_zero() ? 0 : 1;
  return s;
}

MultiSeries MultiSeries::variable(std::vector<std::string> vars, int order,
                                  const std::string& name, FieldCtx ctx) {
  MultiSeries s(std::move(vars), order, ctx);
  int vi = s.var_index(name);
  if (vi < 0) fail(Errc::UnknownVariable, "variable " + name + " not in universe");
  if (order < 1) fail(Errc::ExponentOverflow, "order too small for a variable monomial");
  ExpVec e{};
  e[vi] = 1;
  int idx = s.tab_->index_of(e);
  s.c_[idx] = FieldElem::one(ctx);
  s.nz_[idx] = 1;
  return s;
}

MultiSeries MultiSeries::make(std::vector<std::string> vars, int order,
                              const std::vector<std::pair<std::vector<int>, FieldElem>>& terms) {
  FieldCtx ctx{};
  bool first = true;
  for (const auto& [e, coef] : terms) {
    if (coef.is_zero()) continue;
    if (first) {
      ctx = coef.ctx();
      first = false;
    } else if (!(coef.ctx() == ctx)) {
      fail(Errc::MixedField, "series coefficients must share one field");
    }
  }
  MultiSeries s(std::move(vars), order, ctx);
  for (const auto& [e, coef] : terms) {
    if (e.size() != s.vars_.size())
      fail(Errc::VariableMismatch, "exponent vector length does not match variables");
    ExpVec ev{};
    int deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] > order) fail(Errc::ExponentOverflow, "exponent out of range");
      ev[i] = static_cast<std::uint8_t>(e[i]);
      deg += e[i];
    }
    if (deg > order) fail(Errc::ExponentOverflow, "total degree beyond cutoff");
    if (!coef.is_zero()) s.c_[s.tab_->index_of(ev)] += coef;
  }
  s.refresh_zero_flags();
  return s;
}

int MultiSeries::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

MultiSeries MultiSeries::with_reliable(int r) const {
  MultiSeries s = *this;
  s.reliable_ = std::min(r, order_);
  if (s.reliable_ < -1) s.reliable_ = -1;
  return s;
}

MultiSeries MultiSeries::promoted(const FieldCtx& target) const {
  if (ctx_ == target) return *this;
  MultiSeries s(vars_, order_, target);
  s.reliable_ = reliable_;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (nz_[i]) {
      s.c_[i] = c_[i].coerced(target);
      s.nz_[i] = 1;
    }
  return s;
}

FieldElem MultiSeries::coeff(const std::vector<int>& exps) const {
  if (exps.size() != vars_.size())
    fail(Errc::VariableMismatch, "exponent vector length does not match variables");
  ExpVec ev{};
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > order_) fail(Errc::ExponentOverflow, "exponent out of range");
    ev[i] = static_cast<std::uint8_t>(exps[i]);
  }
  return coeff_at(ev);
}

FieldElem MultiSeries::coeff_at(const ExpVec& e) const {
  int idx = tab_->index_of(e);
  if (idx < 0) fail(Errc::ExponentOverflow, "exponent beyond cutoff");
  return c_[idx];
}

int MultiSeries::valuation() const {
  for (int i = 0; i < tab_->size(); ++i) {
    if (tab_->degree(i) > reliable_) break;
    if (nz_[i]) return tab_->degree(i);
  }
  return reliable_ + 1;
}

bool MultiSeries::is_zero() const {
  for (std::size_t i = 0; i < nz_.size(); ++i)
    if (nz_[i]) return false;
  return true;
}

void MultiSeries::ensure_compatible(const MultiSeries& other) const {
  if (vars_ != other.vars_ || order_ != other.order_)
    fail(Errc::VariableMismatch, "series live in different universes");
}

// ---------------------------------------------------------------------------
// Arithmetic

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  a.ensure_compatible(b);
  FieldCtx j = join(a.ctx_, b.ctx_);
  if (!(a.ctx_ == j)) return a.promoted(j) + b;
  if (!(b.ctx_ == j)) return a + b.promoted(j);
  MultiSeries r(a.vars_, a.order_, j);
  r.reliable_ = std::min(a.reliable_, b.reliable_);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (a.nz_[i] && b.nz_[i])
      r.c_[i] = a.c_[i] + b.c_[i];
    else if (a.nz_[i])
      r.c_[i] = a.c_[i];
    else if (b.nz_[i])
      r.c_[i] = b.c_[i];
  }
  r.refresh_zero_flags();
  return r;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }

MultiSeries MultiSeries::operator-() const {
  MultiSeries r = *this;
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    if (r.nz_[i]) r.c_[i] = -r.c_[i];
  return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  a.ensure_compatible(b);
  FieldCtx j = join(a.ctx_, b.ctx_);
  if (!(a.ctx_ == j)) return a.promoted(j) * b;
  if (!(b.ctx_ == j)) return a * b.promoted(j);
  const ExpTable& tab = *a.tab_;
  MultiSeries r(a.vars_, a.order_, j);
  int va = a.valuation(), vb = b.valuation();
  long rel = std::min<long>({static_cast<long>(a.reliable_) + vb,
                             static_cast<long>(b.reliable_) + va,
                             static_cast<long>(a.order_)});
  r.reliable_ = static_cast<int>(std::max<long>(rel, -1));
  std::vector<int> an, bn;
  for (int i = 0; i < tab.size(); ++i)
    if (a.nz_[i]) an.push_back(i);
  for (int i = 0; i < tab.size(); ++i)
    if (b.nz_[i]) bn.push_back(i);
  for (int i : an) {
    const FieldElem& ca = a.c_[i];
    for (int k : bn) {
      int idx = tab.product_index(i, k);
      if (idx < 0) break;  // b indices are degree-sorted, the rest only grow
      r.c_[idx] += ca * b.c_[k];
    }
  }
  r.refresh_zero_flags();
  return r;
}

MultiSeries MultiSeries::scaled(const FieldElem& k) const {
  FieldCtx j = join(ctx_, k.ctx());
  if (!(ctx_ == j)) return promoted(j).scaled(k);
  FieldElem kk = k.coerced(j);
  if (kk.is_zero()) {
    MultiSeries r(vars_, order_, j);
    r.reliable_ = reliable_;
    return r;
  }
  MultiSeries r = *this;
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    if (r.nz_[i]) r.c_[i] *= kk;
  return r;
}

void MultiSeries::add_scaled(const MultiSeries& b, const FieldElem& k) {
  ensure_compatible(b);
  FieldCtx j = join(join(ctx_, b.ctx_), k.ctx());
  if (!(ctx_ == j)) *this = promoted(j);
  FieldElem kk = k.coerced(j);
  if (kk.is_zero()) {
    reliable_ = std::min(reliable_, b.reliable_);
    return;
  }
  const MultiSeries& bb = (b.ctx_ == j) ? b : b.promoted(j);
  reliable_ = std::min(reliable_, bb.reliable_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (bb.nz_[i]) {
      c_[i] += bb.c_[i] * kk;
      nz_[i] = c_[i].is_zero() ? 0 : 1;
    }
}

MultiSeries MultiSeries::scale_var_degree(const std::string& var,
                                          const std::vector<FieldElem>& factor) const {
  int vi = var_index(var);
  if (vi < 0) fail(Errc::UnknownVariable, "variable " + var + " not in universe");
  if (static_cast<int>(factor.size()) < order_ + 1)
    fail(Errc::ExponentOverflow, "factor table shorter than series order");
  MultiSeries r = *this;
  for (int i = 0; i < tab_->size(); ++i) {
    if (!r.nz_[i]) continue;
    r.c_[i] *= factor[tab_->exp(i)[vi]];
    r.nz_[i] = r.c_[i].is_zero() ? 0 : 1;
  }
  return r;
}

MultiSeries MultiSeries::shifted_by_var(const std::string& var, int power) const {
  int vi = var_index(var);
  if (vi < 0) fail(Errc::UnknownVariable, "variable " + var + " not in universe");
  if (power == 0) return *this;
  MultiSeries r(vars_, order_, ctx_);
  r.reliable_ = std::min(reliable_ + power, order_);
  for (int i = 0; i < tab_->size(); ++i) {
    if (!nz_[i]) continue;
    ExpVec e = tab_->exp(i);
    int ne = e[vi] + power;
    if (ne > order_) continue;
    e[vi] = static_cast<std::uint8_t>(ne);
    int idx = tab_->index_of(e);
    if (idx < 0) continue;
    r.c_[idx] = c_[i];
    r.nz_[idx] = 1;
  }
  return r;
}

MultiSeries MultiSeries::divided_by_var(const std::string& var, int power) const {
  int vi = var_index(var);
  if (vi < 0) fail(Errc::UnknownVariable, "variable " + var + " not in universe");
  if (power == 0) return *this;
  MultiSeries r(vars_, order_, ctx_);
  r.reliable_ = std::max(reliable_ - power, -1);
  for (int i = 0; i < tab_->size(); ++i) {
    if (!nz_[i]) continue;
    ExpVec e = tab_->exp(i);
    if (e[vi] < power) {
      if (tab_->degree(i) <= reliable_)
        fail(Errc::BadInnerSeries, "series not divisible by " + var + "^" + std::to_string(power));
      continue;
    }
    e[vi] = static_cast<std::uint8_t>(e[vi] - power);
    r.c_[tab_->index_of(e)] = c_[i];
  }
  r.refresh_zero_flags();
  return r;
}

MultiSeries MultiSeries::inverse() const {
  if (!nz_[0]) fail(Errc::ZeroConstantTerm, "series with zero constant term has no inverse");
  const ExpTable& tab = *tab_;
  MultiSeries r(vars_, order_, ctx_);
  r.reliable_ = reliable_;
  FieldElem inv0 = FieldElem::one(ctx_) / c_[0];
  r.c_[0] = inv0;
  r.nz_[0] = 1;
  std::vector<int> an;  // positive-degree support of *this
  for (int i = 1; i < tab.size(); ++i)
    if (nz_[i]) an.push_back(i);
  for (int idx = 1; idx < tab.size(); ++idx) {
    const ExpVec& e = tab.exp(idx);
    FieldElem acc = FieldElem::zero(ctx_);
    for (int j : an) {
      if (tab.degree(j) > tab.degree(idx)) break;
      const ExpVec& f = tab.exp(j);
      ExpVec g{};
      bool ok = true;
      for (std::size_t v = 0; v < vars_.size(); ++v) {
        if (f[v] > e[v]) {
          ok = false;
          break;
        }
        g[v] = static_cast<std::uint8_t>(e[v] - f[v]);
      }
      if (!ok) continue;
      int gi = tab.index_of(g);
      if (r.nz_[gi]) acc += c_[j] * r.c_[gi];
    }
    if (!acc.is_zero()) {
      r.c_[idx] = -(acc * inv0);
      r.nz_[idx] = 1;
    }
  }
  return r;
}

MultiSeries MultiSeries::pow_field(const FieldElem& alpha) const {
  FieldCtx j = join(ctx_, alpha.ctx());
  if (!(ctx_ == j)) return promoted(j).pow_field(alpha);
  if (!c_[0].is_one())
    fail(Errc::NonUnitConstantTerm, "field powers need a series with constant term 1");
  FieldElem al = alpha.coerced(j);
  MultiSeries result = MultiSeries::constant(vars_, order_, FieldElem::one(j));
  result.reliable_ = reliable_;
  MultiSeries base = *this - result;  // valuation >= 1
  if (base.is_zero()) return result;
  MultiSeries term = base;
  FieldElem binom = al;  // binom(alpha, k) built incrementally
  for (int k = 1; k <= order_; ++k) {
    if (term.is_zero()) break;
    result.add_scaled(term, binom);
    binom = binom * (al - FieldElem::from_long(k).coerced(j)) /
            FieldElem::from_long(k + 1).coerced(j);
    if (binom.is_zero()) break;
    if (k < order_) term = term * base;
  }
  result.reliable_ = reliable_;
  return result;
}

MultiSeries MultiSeries::pow_int(long e) const {
  if (e < 0) return inverse().pow_int(-e);
  MultiSeries acc = MultiSeries::constant(vars_, order_, FieldElem::one(ctx_));
  acc.reliable_ = reliable_;
  MultiSeries base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

MultiSeries MultiSeries::derivative(const std::string& var) const {
  int vi = var_index(var);
  if (vi < 0) fail(Errc::UnknownVariable, "variable " + var + " not in universe");
  MultiSeries r(vars_, order_, ctx_);
  r.reliable_ = std::max(reliable_ - 1, -1);
  for (int i = 0; i < tab_->size(); ++i) {
    if (!nz_[i]) continue;
    ExpVec e = tab_->exp(i);
    if (e[vi] == 0) continue;
    int n = e[vi];
    e[vi] = static_cast<std::uint8_t>(n - 1);
    int idx = tab_->index_of(e);
    r.c_[idx] = c_[i] * FieldElem::from_long(n);
    r.nz_[idx] = r.c_[idx].is_zero() ? 0 : 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Composition

namespace {

struct ComposeEntry {
  ExpVec e;
  const FieldElem* coef;
};

struct ComposeWalker {
  const std::vector<MultiSeries>* binds;
  MultiSeries* result;
  int nvars;

  void walk(int level, const std::vector<ComposeEntry>& entries, std::size_t begin,
            std::size_t end, const MultiSeries& partial) {
    if (level == nvars) {
      result->add_scaled(partial, *entries[begin].coef);
      return;
    }
    const MultiSeries& g = (*binds)[level];
    MultiSeries pw;  // g^e, built incrementally
    int laste = 0;
    std::size_t i = begin;
    while (i < end) {
      int e = entries[i].e[level];
      std::size_t k = i;
      while (k < end && entries[k].e[level] == e) ++k;
      if (e > 0) {
        if (!pw.valid()) {
          pw = g;
          laste = 1;
        }
        for (; laste < e; ++laste) pw = pw * g;
        if (pw.is_zero()) return;  // higher powers vanish too (valuation >= 1)
        walk(level + 1, entries, i, k, partial * pw);
      } else {
        walk(level + 1, entries, i, k, partial);
      }
      i = k;
    }
  }
};

}  // namespace

MultiSeries MultiSeries::compose(const std::map<std::string, MultiSeries>& bindings) const {
  if (bindings.empty()) fail(Errc::VariableMismatch, "composition needs at least one binding");
  const MultiSeries& proto = bindings.begin()->second;
  std::vector<std::string> ivars = proto.vars();
  int iorder = proto.order();
  FieldCtx ictx = ctx_;
  int irel = reliable_;
  for (const auto& [name, g] : bindings) {
    if (g.vars() != ivars || g.order() != iorder)
      fail(Errc::VariableMismatch, "inner series live in different universes");
    ictx = join(ictx, g.field());
    if (!g.constant_term().is_zero())
      fail(Errc::NonzeroConstantTerm, "inner series for " + name + " has nonzero constant term");
    irel = std::min(irel, g.reliable_order());
  }
  std::vector<MultiSeries> binds;
  for (const auto& v : vars_) {
    auto it = bindings.find(v);
    if (it != bindings.end()) {
      binds.push_back(it->second.promoted(ictx));
    } else {
      // unbound outer variables must exist in the inner universe
      bool found = std::find(ivars.begin(), ivars.end(), v) != ivars.end();
      if (!found)
        fail(Errc::VariableMismatch, "outer variable " + v + " unbound and absent from universe");
      binds.push_back(MultiSeries::variable(ivars, iorder, v, ictx));
    }
  }
  MultiSeries result(ivars, iorder, ictx);
  std::vector<ComposeEntry> entries;
  for (int i = 0; i < tab_->size(); ++i)
    if (nz_[i]) entries.push_back({tab_->exp(i), &c_[i]});
  std::sort(entries.begin(), entries.end(),
            [](const ComposeEntry& a, const ComposeEntry& b) { return a.e < b.e; });
  if (!entries.empty()) {
    MultiSeries unit = MultiSeries::constant(ivars, iorder, FieldElem::one(ictx));
    ComposeWalker w{&binds, &result, static_cast<int>(vars_.size())};
    w.walk(0, entries, 0, entries.size(), unit);
  }
  result.reliable_ = std::min(result.reliable_, irel);
  return result;
}

// ---------------------------------------------------------------------------
// Comparison and output

std::string MultiSeries::Mismatch::str() const {
  std::string out = "coefficient at (";
  for (std::size_t i = 0; i < exps.size(); ++i)
    out += (i ? "," : "") + std::to_string(exps[i]);
  out += "): " + lhs.str() + " vs " + rhs.str() +
         " (compared through total degree " + std::to_string(compared_order) + ")";
  return out;
}

std::optional<MultiSeries::Mismatch> MultiSeries::disagree(const MultiSeries& a,
                                                           const MultiSeries& b) {
  a.ensure_compatible(b);
  FieldCtx j = join(a.ctx_, b.ctx_);
  if (!(a.ctx_ == j)) return disagree(a.promoted(j), b);
  if (!(b.ctx_ == j)) return disagree(a, b.promoted(j));
  int depth = std::min(a.reliable_, b.reliable_);
  for (int i = 0; i < a.tab_->size(); ++i) {
    if (a.tab_->degree(i) > depth) break;
    if (!a.nz_[i] && !b.nz_[i]) continue;
    if (a.c_[i] == b.c_[i]) continue;
    const ExpVec& e = a.tab_->exp(i);
    Mismatch m;
    m.exps.assign(e.begin(), e.begin() + a.vars_.size());
    m.lhs = a.c_[i];
    m.rhs = b.c_[i];
    m.compared_order = depth;
    return m;
  }
  return std::nullopt;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  if (a.vars_ != b.vars_ || a.order_ != b.order_) return false;
  for (int i = 0; i < a.tab_->size(); ++i) {
    if (!a.nz_[i] && !b.nz_[i]) continue;
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

std::string MultiSeries::text() const {
  std::string out;
  bool firstterm = true;
  for (int i = 0; i < tab_->size(); ++i) {
    if (!nz_[i]) continue;
    const ExpVec& e = tab_->exp(i);
    std::string mono;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    std::string coef;
    bool negative = false;
    if (ctx_.tag == FieldTag::Rational) {
      mpq_class q = c_[i].rat();
      if (q < 0) {
        negative = true;
        q = -q;
      }
      coef = q.get_str();
      if (coef == "1" && !mono.empty()) coef.clear();
    } else {
      coef = "(" + c_[i].str() + ")";
    }
    std::string piece = coef;
    if (!mono.empty()) {
      if (!piece.empty()) piece += "*";
      piece += mono;
    }
    if (piece.empty()) piece = "1";
    if (firstterm) {
      out += negative ? "-" + piece : piece;
      firstterm = false;
    } else {
      out += negative ? " - " + piece : " + " + piece;
    }
  }
  if (out.empty()) out = "0";
  return out;
}

nlohmann::json MultiSeries::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (int i = 0; i < tab_->size(); ++i) {
    if (!nz_[i]) continue;
    nlohmann::json t;
    const ExpVec& e = tab_->exp(i);
    t["exp"] = std::vector<int>(e.begin(), e.begin() + vars_.size());
    t["coeff"] = c_[i].str();
    terms.push_back(std::move(t));
  }
  nlohmann::json j;
  j["vars"] = vars_;
  j["order"] = order_;
  j["terms"] = std::move(terms);
  if (reliable_ != order_) j["reliable"] = reliable_;
  return j;
}

MultiSeries MultiSeries::from_json(const nlohmann::json& j) {
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  int order = j.at("order").get<int>();
  std::vector<std::pair<std::vector<int>, FieldElem>> terms;
  for (const auto& t : j.at("terms")) {
    terms.emplace_back(t.at("exp").get<std::vector<int>>(),
                       FieldElem::parse(t.at("coeff").get<std::string>()));
  }
  MultiSeries s = make(std::move(vars), order, terms);
  if (j.contains("reliable")) s.reliable_ = j.at("reliable").get<int>();
  return s;
}

MultiSeries MultiSeries::reversion(const std::string& out_var) const {
  if (vars_.size() != 1) fail(Errc::BadInnerSeries, "reversion needs a univariate series");
  if (nz_[0]) fail(Errc::NonzeroConstantTerm, "reversion needs zero constant term");
  ExpVec lin{};
  lin[0] = 1;
  FieldElem y1 = coeff_at(lin);
  if (y1.is_zero()) fail(Errc::BadInnerSeries, "reversion needs invertible linear coefficient");
  // Solve g(y(x)) = x degree by degree: the degree-k defect is cancelled by
  // the coefficient g_k, since y(x)^k = y1^k x^k + higher.
  Universe uy{{out_var}, order_, ctx_};
  MultiSeries g = u_var(uy, out_var).scaled(FieldElem::one(ctx_) / y1);
  MultiSeries x_id = MultiSeries::variable(vars_, order_, vars_[0], ctx_);
  for (int k = 2; k <= order_; ++k) {
    MultiSeries h = g.compose({{out_var, *this}}) - x_id;
    std::vector<int> ev{k};
    FieldElem defect = h.coeff(ev);
    if (defect.is_zero()) continue;
    FieldElem y1k = FieldElem::one(ctx_);
    for (int i = 0; i < k; ++i) y1k *= y1;
    MultiSeries mono = u_var(uy, out_var).pow_int(k).scaled(-(defect / y1k));
    g = g + mono;
  }
  g = g.with_reliable(std::min(reliable_, order_));
  return g;
}

std::complex<double> MultiSeries::eval(
    const std::map<std::string, std::complex<double>>& point) const {
  std::vector<std::complex<double>> vals;
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) fail(Errc::UnknownVariable, "no value given for " + v);
    vals.push_back(it->second);
  }
  std::complex<double> acc(0.0, 0.0);
  for (int i = 0; i < tab_->size(); ++i) {
    if (!nz_[i]) continue;
    std::complex<double> term = c_[i].to_complex();
    const ExpVec& e = tab_->exp(i);
    for (std::size_t v = 0; v < vars_.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term *= vals[v];
    acc += term;
  }
  return acc;
}

}  // namespace hypseries
