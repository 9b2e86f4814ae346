#pragma once

#include <string>
#include <vector>

#include "hypseries/series.hpp"

namespace hypseries {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
FieldElem pochhammer(const FieldElem& a, int n);

/// (a)_m for any integer m, with (a)_{-k} := 1/(a-k)_k. Throws
/// PochhammerPole when the negative-index denominator vanishes.
FieldElem pochhammer_int(const FieldElem& a, long m);

/// Parameter pair of the coefficient-rescaling operator in one variable:
/// the coefficient at var-degree n picks up the factor (a)_n/(c)_n.
struct HypParams {
  FieldElem a;  // upper
  FieldElem c;  // lower; must not be a nonpositive integer
  std::string var;
};

/// Table of ratios (a)_n/(c)_n for n = 0..order, built incrementally.
std::vector<FieldElem> poch_ratio_table(const FieldElem& a, const FieldElem& c, int order,
                                        const FieldCtx& ctx);

MultiSeries hyp_apply(const MultiSeries& f, const HypParams& p);
MultiSeries hyp_apply(const MultiSeries& f, const FieldElem& upper, const FieldElem& lower,
                      const std::string& var);

/// Independent route for integer parameter offsets: applies the operator as
/// the product of Euler-operator factors (a+j + x d/dx)/(a+j), j = 0..n-1.
/// Must agree with hyp_apply(f, a+n, a, var).
MultiSeries hyp_difop_apply(const MultiSeries& f, const FieldElem& a, int n,
                            const std::string& var);

}  // namespace hypseries
