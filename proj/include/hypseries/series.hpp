#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hypseries/field.hpp"
#include "json.hpp"

namespace hypseries {

constexpr int kMaxVars = 4;
constexpr int kMaxOrder = 64;

using ExpVec = std::array<std::uint8_t, kMaxVars>;

/// Shared index table for all exponent vectors of <= nvars variables with
/// total degree <= order, in graded lexicographic order. Cached per
/// (nvars, order) pair; lookup is a mixed-radix key into a flat array.
class ExpTable {
 public:
  static std::shared_ptr<const ExpTable> get(int nvars, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(exps_.size()); }
  const ExpVec& exp(int idx) const { return exps_[idx]; }
  int degree(int idx) const { return deg_[idx]; }
  long key(int idx) const { return key_[idx]; }
  int index_by_key(long k) const { return key2idx_[k]; }

  /// Index of the product monomial, or -1 when the total degree overflows.
  int product_index(int i, int j) const {
    if (deg_[i] + deg_[j] > order_) return -1;
    return key2idx_[key_[i] + key_[j]];
  }

  int index_of(const ExpVec& e) const;  // -1 if out of range

 private:
  ExpTable(int nvars, int order);
  int nvars_, order_;
  std::vector<ExpVec> exps_;
  std::vector<int> deg_;
  std::vector<long> key_;
  std::vector<std::int32_t> key2idx_;
};

/// Dense multivariate power series truncated at a total-degree cutoff, with
/// exact coefficients in a single field context. Alongside the cutoff each
/// series tracks a "reliable order": coefficients above it may have been
/// contaminated by truncation (e.g. by differentiation) and are excluded
/// from comparisons.
class MultiSeries {
 public:
  MultiSeries() = default;

  static MultiSeries zero(std::vector<std::string> vars, int order, FieldCtx ctx = {});
  static MultiSeries constant(std::vector<std::string> vars, int order, const FieldElem& value);
  static MultiSeries variable(std::vector<std::string> vars, int order, const std::string& name,
                              FieldCtx ctx = {});
  static MultiSeries make(std::vector<std::string> vars, int order,
                          const std::vector<std::pair<std::vector<int>, FieldElem>>& terms);

  const std::vector<std::string>& vars() const { return vars_; }
  int order() const { return order_; }
  int reliable_order() const { return reliable_; }
  const FieldCtx& field() const { return ctx_; }
  bool valid() const { return tab_ != nullptr; }

  MultiSeries with_reliable(int r) const;
  MultiSeries promoted(const FieldCtx& target) const;

  FieldElem coeff(const std::vector<int>& exps) const;
  FieldElem coeff_at(const ExpVec& e) const;
  const FieldElem& coeff_index(int idx) const { return c_[idx]; }
  FieldElem constant_term() const { return c_.empty() ? FieldElem() : c_[0]; }

  /// Smallest total degree with a nonzero stored coefficient (a lower bound
  /// for the true valuation); reliable_order()+1 when none exists.
  int valuation() const;
  bool is_zero() const;

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  MultiSeries operator-() const;

  MultiSeries scaled(const FieldElem& k) const;
  MultiSeries shifted_by_var(const std::string& var, int power) const;  // multiply by var^power
  MultiSeries divided_by_var(const std::string& var, int power) const; // requires exact divisibility
  MultiSeries inverse() const;
  MultiSeries pow_field(const FieldElem& alpha) const;
  MultiSeries pow_int(long e) const;
  MultiSeries derivative(const std::string& var) const;
  MultiSeries compose(const std::map<std::string, MultiSeries>& bindings) const;

  /// a += b * k without temporaries.
  void add_scaled(const MultiSeries& b, const FieldElem& k);

  /// Multiply the coefficient at var-degree n by factor[n] (factor must
  /// cover degrees 0..order). Reliable order is preserved.
  MultiSeries scale_var_degree(const std::string& var,
                               const std::vector<FieldElem>& factor) const;

  struct Mismatch {
    std::vector<int> exps;
    FieldElem lhs, rhs;
    int compared_order;
    std::string str() const;
  };
  /// First differing coefficient up to the common reliable order, if any.
  static std::optional<Mismatch> disagree(const MultiSeries& a, const MultiSeries& b);

  /// Structural equality: same universe, same cutoff, identical coefficients.
  friend bool operator==(const MultiSeries& a, const MultiSeries& b);

  std::string text() const;
  nlohmann::json to_json() const;
  static MultiSeries from_json(const nlohmann::json& j);

  std::complex<double> eval(const std::map<std::string, std::complex<double>>& point) const;

  int var_index(const std::string& name) const;  // -1 if absent
  const ExpTable& table() const { return *tab_; }

  /// Compositional inverse of a univariate series with zero constant term
  /// and invertible linear coefficient, expressed in `out_var`.
  MultiSeries reversion(const std::string& out_var) const;

 private:
  MultiSeries(std::vector<std::string> vars, int order, FieldCtx ctx);
  void ensure_compatible(const MultiSeries& other) const;
  void refresh_zero_flags();

  std::vector<std::string> vars_;
  int order_ = 0;
  int reliable_ = 0;
  FieldCtx ctx_{};
  std::shared_ptr<const ExpTable> tab_;
  std::vector<FieldElem> c_;
  std::vector<std::uint8_t> nz_;  // nonzero flags, kept in sync with c_
};

/// Variable list + cutoff + coefficient field: the space a computation
/// happens in.
struct Universe {
  std::vector<std::string> vars;
  int order = 0;
  FieldCtx ctx{};
};

inline MultiSeries u_zero(const Universe& u) { return MultiSeries::zero(u.vars, u.order, u.ctx); }
inline MultiSeries u_one(const Universe& u) {
  return MultiSeries::constant(u.vars, u.order, FieldElem::one(u.ctx));
}
inline MultiSeries u_const(const Universe& u, const FieldElem& k) {
  return MultiSeries::constant(u.vars, u.order, k.coerced(join(u.ctx, k.ctx())));
}
inline MultiSeries u_var(const Universe& u, const std::string& name) {
  return MultiSeries::variable(u.vars, u.order, name, u.ctx);
}

}  // namespace hypseries
