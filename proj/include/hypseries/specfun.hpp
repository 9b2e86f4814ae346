#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypseries/hypop.hpp"
#include "hypseries/series.hpp"

namespace hypseries::specfun {

// --- kernels ----------------------------------------------------------------
// Every kernel takes a prepared argument series with zero constant term and
// returns its exact truncated expansion.

MultiSeries exp_series(const MultiSeries& arg);
MultiSeries cosh2sqrt(const MultiSeries& arg);  // sum 4^k arg^k/(2k)!
MultiSeries cos2sqrt(const MultiSeries& arg);   // sum (-4)^k arg^k/(2k)!
MultiSeries fn_kernel(int n, const MultiSeries& arg);  // sum n^{nk} arg^k/(nk)!
MultiSeries arctan_ratio(const MultiSeries& arg);      // sum (-1)^k arg^k/(2k+1)

/// (1 - lambda*s)^(-b) for a zero-constant-term series s.
MultiSeries binom_pow(const MultiSeries& s, const FieldElem& lambda, const FieldElem& b);

MultiSeries f4_kernel(const MultiSeries& t, const MultiSeries& x, const MultiSeries& y);
MultiSeries h4_kernel(const FieldElem& a, const MultiSeries& x, const MultiSeries& y);
MultiSeries f3_arg(const MultiSeries& t, const MultiSeries& x, const MultiSeries& y);

// --- direct multiple sums (the oracle route) ---------------------------------

/// Generalized hypergeometric sum with the given upper/lower parameter lists
/// at a zero-constant-term argument series.
MultiSeries pfq_sum(const std::vector<FieldElem>& upper, const std::vector<FieldElem>& lower,
                    const MultiSeries& arg);

MultiSeries appell_f1_sum(const FieldElem& a, const FieldElem& c, const FieldElem& b1,
                          const FieldElem& b2, const MultiSeries& X, const MultiSeries& Y);
MultiSeries appell_f2_sum(const FieldElem& a, const FieldElem& b1, const FieldElem& b2,
                          const FieldElem& c1, const FieldElem& c2, const MultiSeries& X,
                          const MultiSeries& Y);
MultiSeries appell_f3_sum(const FieldElem& a1, const FieldElem& b1, const FieldElem& a2,
                          const FieldElem& b2, const FieldElem& c, const MultiSeries& X,
                          const MultiSeries& Y);
MultiSeries appell_f4_sum(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                          const FieldElem& d, const MultiSeries& X, const MultiSeries& Y);
MultiSeries horn_g1_sum(const FieldElem& a, const FieldElem& b1, const FieldElem& b2,
                        const MultiSeries& X, const MultiSeries& Y);
MultiSeries horn_g2_sum(const FieldElem& a, const FieldElem& c, const FieldElem& b1,
                        const FieldElem& b2, const MultiSeries& X, const MultiSeries& Y);
MultiSeries horn_g3_sum(const FieldElem& a, const FieldElem& c, const MultiSeries& X,
                        const MultiSeries& Y);
MultiSeries humbert_h4_sum(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                           const FieldElem& d, const MultiSeries& X, const MultiSeries& Y);
MultiSeries phi1_sum(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                     const MultiSeries& X, const MultiSeries& Y);
MultiSeries phi2_sum(const FieldElem& b1, const FieldElem& b2, const FieldElem& c,
                     const MultiSeries& X, const MultiSeries& Y);
MultiSeries phi3_sum(const FieldElem& b, const FieldElem& c, const MultiSeries& X,
                     const MultiSeries& Y);

/// Multivariate analogue of the first Appell sum, as a univariate series in
/// `T` with the arguments folded in as slopes (possibly in an extension
/// field): sum_k T^k (a)_k/(c)_k sum_{|j|=k} prod_i (b_i)_{j_i} s_i^{j_i}/j_i!.
MultiSeries f1_multi_sum(const FieldElem& a, const FieldElem& c,
                         const std::vector<FieldElem>& bs, const std::vector<FieldElem>& slopes,
                         const MultiSeries& T);

/// The claim route for the same function: H[a,c](t) prod_i (1-s_i t)^(-b_i).
MultiSeries f1_multi_rep(const FieldElem& a, const FieldElem& c,
                         const std::vector<FieldElem>& bs, const std::vector<FieldElem>& slopes,
                         const Universe& u, const std::string& tvar);

// --- name-indexed dispatch (CLI surface) --------------------------------------

enum class KernelId { Exp, CoshSqrt, CosSqrt, Fn, BinomPow, ArctanRatio, F4Kernel, H4Kernel, F3Arg };
enum class FamilyId {
  PFQ,
  AppellF1,
  AppellF2,
  AppellF3,
  AppellF4,
  F1Multi,
  HornG1,
  HornG2,
  HornG3,
  HumbertH4,
  Phi1,
  Phi2,
  Phi3,
};

std::optional<KernelId> kernel_by_name(const std::string& name);
std::optional<FamilyId> family_by_name(const std::string& name);
const char* kernel_name(KernelId id);
const char* family_name(FamilyId id);
std::vector<std::string> kernel_names();
std::vector<std::string> family_names();

struct FamilyParams {
  std::vector<FieldElem> upper;
  std::vector<FieldElem> lower;
  std::vector<FieldElem> bs;
  std::vector<FieldElem> slopes;
  int n = 1;
};

/// Kernel expansion with standard variable roles taken from the universe.
MultiSeries kernel_series(KernelId id, const FamilyParams& p, const Universe& u);

/// Direct-sum expansion of a family at its standard variable arguments.
MultiSeries family_series(FamilyId id, const FamilyParams& p, const Universe& u);

/// Expansion of the same function through its operator representation;
/// coefficientwise equal to family_series at matching arguments.
MultiSeries rep_series(FamilyId id, const FamilyParams& p, const Universe& u);

}  // namespace hypseries::specfun
