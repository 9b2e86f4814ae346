#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypseries/hypop.hpp"
#include "hypseries/series.hpp"

namespace hypseries {

/// Multiplication by base^exponent, with a unit-constant-term base so the
/// power is a plain Taylor series for any field exponent.
struct MulPowAtom {
  MultiSeries base;
  FieldElem exponent;
};

/// Multiplication by a fixed series; invertible iff the constant term is.
struct MulSeriesAtom {
  MultiSeries g;
};

/// Argument substitution var -> target applied to everything to the right;
/// invertible only when an explicit inverse substitution is recorded.
struct SubstAtom {
  std::string var;
  MultiSeries target;
  std::optional<MultiSeries> inverse_target;
};

struct HypAtom {
  FieldElem upper, lower;
  std::string var;
};

using OpAtom = std::variant<HypAtom, MulPowAtom, MulSeriesAtom, SubstAtom>;

/// Ordered product of operator atoms; the leftmost atom is applied last.
struct OpChain {
  Universe universe;
  std::vector<OpAtom> atoms;
};

MultiSeries atom_apply(const OpAtom& atom, const MultiSeries& f);
OpAtom atom_invert(const OpAtom& atom);
std::string atom_str(const OpAtom& atom);

MultiSeries chain_eval(const OpChain& chain, const MultiSeries& f);
OpChain chain_invert(const OpChain& chain);
std::string chain_str(const OpChain& chain);
nlohmann::json chain_to_json(const OpChain& chain);
OpChain chain_from_json(const nlohmann::json& j);

/// Throws if any atom violates its evaluability contract (pole in a lower
/// parameter, non-unit power base, substitution with constant term).
void validate_chain(const OpChain& chain);

/// Ordered product over j = 1..m of the atom segments produced by `segment`.
/// m = 0 gives the identity chain; negative m gives the product of inverted
/// segments at indices 1-j, per the usual convention for operator products
/// with negative counts.
OpChain chain_product(const Universe& u, const std::function<std::vector<OpAtom>(long)>& segment,
                      long m);

/// An operator identity lhs(x-side) = rhs(y-side) together with the change
/// of variable y = subst(x) connecting the two sides. Same-variable
/// identities use the identity substitution.
struct OperatorIdentity {
  OpChain lhs;
  OpChain rhs;
  std::string rhs_var;
  MultiSeries subst;  // series in the lhs universe
};

struct OpCheckResult {
  bool pass = false;
  std::string detail;  // first mismatch if any
};

/// Checks chain_eval(lhs, h(subst)) == chain_eval(rhs, h)(subst) for every
/// test function h given in the rhs universe.
OpCheckResult check_operator_identity(const OperatorIdentity& oi,
                                      const std::vector<MultiSeries>& testfns);

/// Convenience: monomials var^0..var^kmax in the rhs universe.
std::vector<MultiSeries> monomial_testfns(const Universe& u, const std::string& var, int kmax);

// --- named rewrites ---------------------------------------------------------

/// Conjugation transporting the operator across y = x/(x-1):
/// lhs H[a,c](x), rhs (1-y)^a H[a,c](y) (1-y)^(-c).
OperatorIdentity pfaff_rewrite(const FieldElem& a, const FieldElem& c, int order,
                               const FieldCtx& ctx);

/// (1-x)^(a+b-c) H[a,c] (1-x)^(-b)  =  H[c-b,c] (1-x)^(-(c-a)) H[a,c-b].
OperatorIdentity euler_rewrite(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                               int order, const FieldCtx& ctx);

using SeqFn = std::function<FieldElem(long)>;

/// Chain form of the iterated product rewrite: prod_j (1-x)^(c_j) H[a_j,a_{j-1}]
/// re-expressed through the accumulated sequences. `reversed` swaps the two
/// sides (the inverse statement).
OperatorIdentity eulergen_rewrite(const SeqFn& a_seq, const SeqFn& c_seq, long n, bool reversed,
                                  int order, const FieldCtx& ctx);

/// m-fold iterate of the product rewrite for c_j = a_j - a_{j-1} + alpha.
OperatorIdentity eulergenm_rewrite(const SeqFn& a_seq, const FieldElem& alpha, long n, long m,
                                   int order, const FieldCtx& ctx);

/// Change of variable y = 1-(1-x)^m. Proved for |m| <= 2 (any a, c) and for
/// integer a-c (any m != 0); other parameter choices require evidence mode.
OperatorIdentity theorem_main_chains(long m, const FieldElem& a, const FieldElem& c, int order,
                                     const FieldCtx& ctx, bool evidence_mode);

/// Change of variable for a generic inner series y (y(0)=0, y'(0) != 0),
/// valid when the two parameters differ by the integer n.
OperatorIdentity gensubs_chains(const MultiSeries& y, const FieldElem& a, long n);

}  // namespace hypseries
