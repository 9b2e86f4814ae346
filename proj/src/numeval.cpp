#include "hypseries/numeval.hpp"

#include <cmath>

namespace hypseries::numeval {

namespace {

constexpr double kPi = 3.14159265358979323846;

const double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,      -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7,
};

Cplx gamma_positive(Cplx z) {
  // Lanczos, valid for Re(z) > 0.5
  z -= 1.0;
  Cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Cplx t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

Cplx gamma_complex(Cplx z) {
  if (std::abs(z.imag()) < 1e-12) {
    double r = std::round(z.real());
    if (r <= 0.0 && std::abs(z.real() - r) < 1e-12)
      fail(Errc::PoleProximity, "Gamma evaluated too close to a pole");
  }
  if (z.real() < 0.5) {
    // reflection
    return kPi / (std::sin(kPi * z) * gamma_positive(1.0 - z));
  }
  return gamma_positive(z);
}

SumResult pfq_partial_sum(const std::vector<Cplx>& upper, const std::vector<Cplx>& lower, Cplx x,
                          int max_terms, double stop_rel) {
  Cplx term(1.0, 0.0);
  Cplx sum(1.0, 0.0);
  int small_streak = 0;
  double last_mag = 1.0;
  bool growing = false;
  for (int k = 0; k < max_terms; ++k) {
    Cplx ratio = x / static_cast<double>(k + 1);
    for (const auto& a : upper) ratio *= a + static_cast<double>(k);
    for (const auto& c : lower) ratio /= c + static_cast<double>(k);
    term *= ratio;
    sum += term;
    double mag = std::abs(term);
    double rel = mag / std::max(std::abs(sum), 1e-300);
    small_streak = rel < stop_rel ? small_streak + 1 : 0;
    if (small_streak >= 3) return {sum, k + 1, "three consecutive small terms"};
    growing = mag > last_mag;
    last_mag = mag;
  }
  fail(Errc::NoConvergenceDetected, growing ? "series terms still growing at max_terms"
                                            : "series did not reach the stop criterion");
}

SumResult pfq_at_one(const std::vector<Cplx>& upper, const std::vector<Cplx>& lower,
                     double rel_tol, long max_terms) {
  double s = 0.0;
  for (const auto& c : lower) s += c.real();
  for (const auto& a : upper) s -= a.real();
  if (s <= 0.0)
    fail(Errc::NoConvergenceDetected, "unit-argument sum needs positive parameter excess");
  Cplx term(1.0, 0.0);
  Cplx sum(1.0, 0.0);
  for (long k = 0; k < max_terms; ++k) {
    Cplx ratio = 1.0 / static_cast<double>(k + 1);
    for (const auto& a : upper) ratio *= a + static_cast<double>(k);
    for (const auto& c : lower) ratio /= c + static_cast<double>(k);
    term *= ratio;
    sum += term;
    double tail = std::abs(term) * static_cast<double>(k + 1) / s;
    if (k > 32 && tail < 0.5 * rel_tol * std::abs(sum)) {
      // algebraic tail correction: remaining terms behave like t_k (j/k)^(-1-s)
      sum += term * (static_cast<double>(k + 1) / s);
      return {sum, static_cast<int>(k + 1), "algebraic tail estimate below tolerance"};
    }
  }
  fail(Errc::NoConvergenceDetected, "unit-argument sum too slow for requested tolerance");
}

SumResult pfq_at_minus_one(const std::vector<Cplx>& upper, const std::vector<Cplx>& lower,
                           int direct_terms, int levels) {
  Cplx term(1.0, 0.0);
  Cplx sum(1.0, 0.0);
  for (int k = 0; k < direct_terms; ++k) {
    Cplx ratio = -1.0 / static_cast<double>(k + 1);
    for (const auto& a : upper) ratio *= a + static_cast<double>(k);
    for (const auto& c : lower) ratio /= c + static_cast<double>(k);
    term *= ratio;
    sum += term;
  }
  // iterated averaging of the next partial sums
  std::vector<Cplx> row;
  Cplx s = sum;
  int k = direct_terms;
  for (int i = 0; i <= levels; ++i) {
    Cplx ratio = -1.0 / static_cast<double>(k + 1);
    for (const auto& a : upper) ratio *= a + static_cast<double>(k);
    for (const auto& c : lower) ratio /= c + static_cast<double>(k);
    term *= ratio;
    s += term;
    row.push_back(s);
    ++k;
  }
  while (row.size() > 1) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
  }
  return {row[0], k, "iterated averaging of alternating tail"};
}

SumResult f1_at_y1(Cplx a, Cplx b1, Cplx b2, Cplx c, Cplx x, double rel_tol) {
  if ((c - a - b2).real() <= 0.0)
    fail(Errc::NoConvergenceDetected, "unit-argument direction diverges");
  Cplx outer(1.0, 0.0);
  Cplx sum(0.0, 0.0);
  int terms = 0;
  for (int j = 0; j < 4000; ++j) {
    SumResult inner = pfq_at_one({a + static_cast<double>(j), b2},
                                 {c + static_cast<double>(j)}, rel_tol * 0.1);
    Cplx contrib = outer * inner.value;
    sum += contrib;
    terms += inner.terms_used + 1;
    if (j > 8 && std::abs(contrib) < rel_tol * 0.1 * std::abs(sum))
      return {sum, terms, "geometric outer decay + inner tail estimates"};
    outer *= (a + static_cast<double>(j)) * (b1 + static_cast<double>(j)) /
             ((c + static_cast<double>(j)) * static_cast<double>(j + 1)) * x;
  }
  fail(Errc::NoConvergenceDetected, "outer sum did not decay");
}

Cplx bessel_j(Cplx nu, Cplx z) {
  Cplx half = 0.5 * z;
  Cplx lead = std::exp(nu * std::log(half));
  Cplx sum(0.0, 0.0);
  Cplx zz = -half * half;
  Cplx power(1.0, 0.0);
  double factorial = 1.0;
  for (int k = 0; k < 200; ++k) {
    Cplx term = power / (factorial * gamma_complex(nu + static_cast<double>(k + 1)));
    sum += term;
    if (k > 4 && std::abs(term) < 1e-18 * std::abs(sum)) break;
    power *= zz;
    factorial *= static_cast<double>(k + 1);
  }
  return lead * sum;
}

NumericOutcome run_numeric_check(const NumericCheck& c) {
  NumericOutcome out;
  Cplx lhs = c.series_value();
  Cplx rhs = c.target_value();
  double scale = std::max(std::abs(rhs), 1e-300);
  out.residual = std::abs(lhs - rhs) / scale;
  out.pass = out.residual <= c.tolerance;
  out.detail = "value " + std::to_string(lhs.real()) +
               (lhs.imag() >= 0 ? "+" : "") + std::to_string(lhs.imag()) + "j vs " +
               std::to_string(rhs.real()) + (rhs.imag() >= 0 ? "+" : "") +
               std::to_string(rhs.imag()) + "j, residual " + std::to_string(out.residual) +
               " (" + c.stop_criterion + ")";
  return out;
}

RadiusReport radius_growth_proxy(Cplx a, Cplx c, int n_max, double final_tol,
                                 Cplx limit_a_shift) {
  RadiusReport rep;
  Cplx limit = gamma_complex(c) / gamma_complex(a + limit_a_shift);
  double p = std::abs((c - a).real()) + 1.0;
  std::vector<double> ratio_abs(n_max + 1, 0.0);
  std::vector<Cplx> scaled(n_max + 1);
  Cplx ratio(1.0, 0.0);
  ratio_abs[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    ratio *= (a + static_cast<double>(n - 1)) / (c + static_cast<double>(n - 1));
    ratio_abs[n] = std::abs(ratio);
    scaled[n] = std::pow(static_cast<double>(n), c - a) * ratio;
  }
  // error trend over the back half
  int half = n_max / 2;
  std::vector<int> checkpoints{half, (5 * n_max) / 8, (3 * n_max) / 4, (7 * n_max) / 8, n_max};
  double prev = std::abs(scaled[checkpoints[0]] - limit);
  bool trend_ok = true;
  for (std::size_t i = 1; i < checkpoints.size(); ++i) {
    double err = std::abs(scaled[checkpoints[i]] - limit);
    if (err > prev * 1.05 + 1e-15) trend_ok = false;
    prev = err;
  }
  rep.final_rel_err = std::abs(scaled[n_max] - limit) / std::abs(limit);
  // polynomial envelope fitted on the first half, verified on the second
  double envelope = 0.0;
  for (int n = 1; n <= half; ++n)
    envelope = std::max(envelope, ratio_abs[n] / std::pow(static_cast<double>(n), p));
  bool bound_ok = true;
  for (int n = half + 1; n <= n_max; ++n) {
    if (ratio_abs[n] > envelope * std::pow(static_cast<double>(n), p) * (1.0 + 1e-12)) {
      bound_ok = false;
      break;
    }
  }
  rep.pass = trend_ok && bound_ok && rep.final_rel_err <= final_tol;
  rep.detail = "limit residual " + std::to_string(rep.final_rel_err) +
               (trend_ok ? ", trend decreasing" : ", TREND NOT DECREASING") +
               (bound_ok ? ", polynomial envelope holds" : ", ENVELOPE VIOLATED");
  return rep;
}

}  // namespace hypseries::numeval
