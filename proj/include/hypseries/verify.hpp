#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypseries/numeval.hpp"
#include "hypseries/opexpr.hpp"
#include "hypseries/specfun.hpp"

namespace hypseries::verify {

enum class CaseKind { SeriesIdentity, OperatorIdentity, NumericIdentity };
enum class CaseStatus { Expected, ConjectureEvidence, CorrectedTypo };
enum class Outcome { Pass, Fail, Error };

const char* kind_name(CaseKind k);
const char* status_name(CaseStatus s);
const char* outcome_name(Outcome o);

struct CheckReport {
  std::string id;
  std::string params;
  int order = 0;
  Outcome outcome = Outcome::Error;
  std::string detail;
  std::string regime = "theorem";  // "theorem" | "evidence"
  double residual = 0.0;           // numeric checks only
  double wall_ms = 0.0;
  nlohmann::json to_json() const;
};

using Overrides = std::map<std::string, FieldElem>;

/// Deterministic parameter source: draws are reproducible from the seed and
/// recorded by name; explicit overrides short-circuit the drawing (and
/// disable redraws, so inadmissible overrides surface as errors).
class ParamDraw {
 public:
  explicit ParamDraw(std::uint64_t seed, const Overrides* overrides = nullptr);

  /// Random reduced rational with |numerator|, denominator <= bound.
  FieldElem rat(const std::string& name, long bound = 20);
  /// Same, but never an integer (reduced denominator >= 2).
  FieldElem nonint(const std::string& name, long bound = 20);
  /// Same, but positive.
  FieldElem positive_nonint(const std::string& name, long bound = 20);
  long integer(const std::string& name, long lo, long hi);
  /// Record a fixed value (still overridable by name).
  FieldElem fixed(const std::string& name, const FieldElem& value);

  bool has_overrides() const { return overrides_ != nullptr && !overrides_->empty(); }
  std::mt19937_64& rng() { return rng_; }
  std::string taken() const;

 private:
  std::optional<FieldElem> look(const std::string& name);
  void record(const std::string& name, const FieldElem& v);
  std::mt19937_64 rng_;
  const Overrides* overrides_;
  std::vector<std::pair<std::string, std::string>> taken_;
};

struct IdentityCase {
  std::string id;
  CaseKind kind = CaseKind::SeriesIdentity;
  std::string field_req = "Q";
  CaseStatus status = CaseStatus::Expected;
  std::string note;
  bool evidence_only = false;
  int max_draws = 3;
  std::function<CheckReport(std::uint64_t seed, int order, bool perturb,
                            const Overrides* overrides)>
      run;
};

/// All registered identity cases in stable order.
const std::vector<IdentityCase>& registry();
const IdentityCase* find_case(const std::string& id);
std::string registry_hash();

CheckReport check_identity(const std::string& id, std::uint64_t seed, int order,
                           const Overrides* overrides = nullptr, bool perturb = false);

std::vector<CheckReport> check_all(int order, std::uint64_t seed, const std::string& filter = "",
                                   bool evidence = false, int draws = 3, bool perturb = false);

struct Summary {
  int total = 0, pass = 0, fail = 0, error = 0;
  int evidence_total = 0, evidence_pass = 0, evidence_fail = 0;
  nlohmann::json to_json() const;
};
Summary summarize(const std::vector<CheckReport>& reports);

/// Rational t with t(t-1) an exact rational square, plus the two slopes
/// solving tau+ + tau- = 2-4t, tau+ * tau- = 1. Derived from the conic
/// parametrization t = 1/(1-m^2), s = m/(1-m^2).
struct QuadraticSlopes {
  FieldElem t, s, tau_plus, tau_minus;
};
QuadraticSlopes choose_square_discriminant_t(std::uint64_t seed);
QuadraticSlopes slopes_from_parameter(const FieldElem& m);

/// Random dense series with small rational coefficients.
MultiSeries random_series(std::mt19937_64& rng, const Universe& u, long bound = 9);
FieldElem random_rational(std::mt19937_64& rng, long bound = 20);
FieldElem random_noninteger(std::mt19937_64& rng, long bound = 20);

/// The elementary-property suite (operator linearity, commutation, shifts,
/// power laws, the differential-operator route, the rising-factorial
/// splitting law, ...). Each case runs one random draw and reports the
/// first violated equality, if any.
struct PropertyCase {
  std::string name;
  std::function<std::optional<std::string>(std::mt19937_64& rng, int order)> run;
};
const std::vector<PropertyCase>& basic_properties();

}  // namespace hypseries::verify
