#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hypseries/field.hpp"

namespace hypseries::numeval {

using Cplx = std::complex<double>;

/// Lanczos approximation with reflection; relative error around 1e-13 away
/// from the poles. Throws PoleProximity within 1e-12 of a nonpositive
/// integer.
Cplx gamma_complex(Cplx z);

struct SumResult {
  Cplx value{};
  int terms_used = 0;
  std::string stop;  // which criterion ended the sum
};

/// Partial sum of the generalized hypergeometric series at x. Stops when
/// three consecutive terms are below stop_rel relative to the running sum
/// (guarding against alternating-term false stops), or throws
/// NoConvergenceDetected when max_terms is reached with growing terms.
SumResult pfq_partial_sum(const std::vector<Cplx>& upper, const std::vector<Cplx>& lower, Cplx x,
                          int max_terms = 2000000, double stop_rel = 1e-12);

/// Sum at the unit-circle point x = 1, where terms decay like k^(-1-s) with
/// s = Re(sum(lower) - sum(upper)); requires s > 0. Uses the algebraic tail
/// estimate t_k * k/s both as stop criterion and as a final correction.
SumResult pfq_at_one(const std::vector<Cplx>& upper, const std::vector<Cplx>& lower,
                     double rel_tol = 1e-9, long max_terms = 25000000);

/// Alternating sum at x = -1 accelerated by iterated averaging of the tail
/// partial sums.
SumResult pfq_at_minus_one(const std::vector<Cplx>& upper, const std::vector<Cplx>& lower,
                           int direct_terms = 4000, int levels = 48);

/// First Appell function at (x, 1): geometric outer sum over the first
/// index, unit-point inner sums over the second.
SumResult f1_at_y1(Cplx a, Cplx b1, Cplx b2, Cplx c, Cplx x, double rel_tol = 1e-9);

/// Bessel function of the first kind by its ascending series, each term with
/// its own Gamma evaluation.
Cplx bessel_j(Cplx nu, Cplx z);

struct NumericCheck {
  std::string id;
  std::function<Cplx()> series_value;
  std::function<Cplx()> target_value;
  double tolerance = 1e-8;
  std::string stop_criterion;
};

struct NumericOutcome {
  double residual = 0.0;
  bool pass = false;
  std::string detail;
};

NumericOutcome run_numeric_check(const NumericCheck& c);

struct RadiusReport {
  bool pass = false;
  double final_rel_err = 0.0;
  std::string detail;
};

/// Checks that n^(c-a) (a)_n/(c)_n approaches Gamma(c)/Gamma(a) with a
/// decreasing error trend, and that |(a)_n/(c)_n| stays below a polynomial
/// envelope fitted on the first half of the range. `limit_a_shift` moves the
/// `a` used in the limit only (negative-control hook).
RadiusReport radius_growth_proxy(Cplx a, Cplx c, int n_max, double final_tol = 0.01,
                                 Cplx limit_a_shift = Cplx(0.0, 0.0));

}  // namespace hypseries::numeval
