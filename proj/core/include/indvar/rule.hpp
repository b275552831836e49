#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "indvar/certificate.hpp"
#include "indvar/polynomial.hpp"

namespace indvar {

class GeneratorRule;

/// Integer index expression over named symbols (the level symbol "k" and
/// comprehension binders).
class IntExpr {
 public:
  using Env = std::map<std::string, long>;

  static IntExpr constant(long v);
  static IntExpr symbol(std::string name);
  static IntExpr add(IntExpr a, IntExpr b);
  static IntExpr sub(IntExpr a, IntExpr b);
  static IntExpr mul(IntExpr a, IntExpr b);
  static IntExpr neg(IntExpr a);

  long eval(const Env& env) const;
  std::string str() const;

 private:
  enum class Op { Const, Sym, Add, Sub, Mul, Neg };
  Op op_ = Op::Const;
  long value_ = 0;
  std::string sym_;
  std::vector<IntExpr> kids_;
};

/// Identity of a product factor that can be reasoned about without
/// expansion: a level of a generator rule, or an explicit polynomial.
struct FactorKey {
  const GeneratorRule* rule = nullptr;
  int level = 0;
  std::shared_ptr<const Polynomial> poly;

  static FactorKey of_rule(const GeneratorRule* r, int level);
  static FactorKey of_poly(Polynomial p);

  bool is_rule() const { return rule != nullptr; }
  bool same(const FactorKey& o) const;
  const Polynomial& expand() const;
  std::string label() const;
};

/// c * prod factors^e kept unexpanded. Squaring recursions double the term
/// count per level, so structural facts (restriction laws, membership of one
/// product in the radical of another) are derived on this form whenever
/// possible; expansion is the fallback.
struct FactoredForm {
  mpq_class scale = 1;
  std::vector<std::pair<FactorKey, int>> factors;

  static FactoredForm zero();
  static FactoredForm constant(const mpq_class& c);
  static FactoredForm of_poly(Polynomial p);
  static FactoredForm of_rule(const GeneratorRule* r, int level);

  bool is_zero() const { return scale == 0; }
  bool is_constant() const { return factors.empty(); }
  FactoredForm times(const FactoredForm& o) const;
  FactoredForm power(int e) const;
  void normalize();

  Polynomial expand() const;
  Coefficient value_at(const std::vector<Coefficient>& point) const;
  std::optional<int> degree() const;
  std::string label() const;
};

/// True when membership of `candidate` in the radical of the ideal generated
/// by `target_gens` follows structurally: some target generator's factors
/// all occur among the candidate's factors (so the candidate vanishes on
/// each piece of that generator's zero set, which contains the variety).
bool factored_in_radical(const FactoredForm& candidate,
                         const std::vector<FactoredForm>& target_gens);

/// Expression defining level k+1 of a generator sequence from earlier levels
/// of the same sequence, ambient variables with index expressions, and the
/// level index as a scalar.
class PolyExpr {
 public:
  using Env = IntExpr::Env;

  static PolyExpr constant(mpq_class c);
  static PolyExpr index_scalar(IntExpr e);  // integer expression as a constant
  static PolyExpr var(IntExpr index);
  static PolyExpr self(IntExpr level);
  static PolyExpr rule(std::shared_ptr<const GeneratorRule> r, IntExpr level);
  static PolyExpr add(PolyExpr a, PolyExpr b);
  static PolyExpr sub(PolyExpr a, PolyExpr b);
  static PolyExpr mul(PolyExpr a, PolyExpr b);
  static PolyExpr neg(PolyExpr a);
  static PolyExpr pow(PolyExpr base, int e);

  /// Expand to a polynomial; `self` resolves levels of the owning rule,
  /// `image` maps ambient variables (identity when empty).
  Polynomial expand(const Env& env, const GeneratorRule* self,
                    const std::map<VarIndex, Polynomial>* image = nullptr) const;

  /// Numeric evaluation at a rational point.
  Coefficient value(const Env& env, const GeneratorRule* self,
                    const std::vector<Coefficient>& point) const;

  /// Interpret as a product without expanding rule references; nullopt when
  /// the expression is an honest sum.
  std::optional<FactoredForm> factored(const Env& env, const GeneratorRule* self) const;

  /// As `factored`, but with ambient variables x_i, i > keep, replaced by 0
  /// first (sums collapsing to one side stay products).
  std::optional<FactoredForm> factored_restricted(const Env& env,
                                                  const GeneratorRule* self,
                                                  int keep) const;

  /// Largest ambient variable index that can occur (conservative bound).
  VarIndex max_var_bound(const Env& env, const GeneratorRule* self) const;

  /// Exact total degree when derivable without expansion (sums of distinct
  /// degrees, products, powers); nullopt when cancellation could interfere.
  std::optional<int> exact_degree(const Env& env, const GeneratorRule* self) const;

  /// Decompose as A + c*x_v with A free of x_v, for the symbolic graph
  /// criterion. Returns (v, c) for the first eligible term.
  struct LinearPart {
    VarIndex var;
    mpq_class coeff;
  };
  std::optional<LinearPart> linear_new_variable(const Env& env,
                                                const GeneratorRule* self) const;

  std::string str() const;

 private:
  enum class Op { Const, Scalar, Var, Self, Rule, Add, Sub, Mul, Neg, Pow };
  Op op_ = Op::Const;
  mpq_class const_ = 0;
  IntExpr index_;
  std::shared_ptr<const GeneratorRule> rule_;
  int pow_ = 0;
  std::vector<PolyExpr> kids_;

  bool has_rule_ref() const;
  std::optional<FactoredForm> factored_rec(const Env& env, const GeneratorRule* self,
                                           int keep, bool restricting) const;
  void flatten_sum(std::vector<std::pair<PolyExpr, int>>& terms, int sign) const;
};

/// A recursively defined generator sequence: explicit base levels plus an
/// optional step expression building level k+1. Supports the recursion
/// shapes used by the level rules (squaring, affine combinations, additive
/// extension) and fully explicit listings.
class GeneratorRule {
 public:
  GeneratorRule(std::string name, std::map<int, Polynomial> base_levels,
                std::optional<PolyExpr> step);

  static std::shared_ptr<GeneratorRule> make(std::string name,
                                             std::map<int, Polynomial> base_levels,
                                             std::optional<PolyExpr> step);

  const std::string& name() const { return name_; }
  int first_level() const { return first_level_; }
  bool has_step() const { return step_.has_value(); }
  const std::optional<PolyExpr>& step() const { return step_; }

  /// Expanded polynomial at a level (memoized). May be very large for
  /// squaring recursions at deep levels; prefer the symbolic queries.
  const Polynomial& at(int level) const;

  /// Numeric value at a rational point, computed through the recursion
  /// without expanding.
  Coefficient value_at(int level, const std::vector<Coefficient>& point) const;

  /// Compose with a substitution of the ambient variables (e.g. a curve),
  /// evaluated through the recursion.
  Polynomial composed(int level, const std::map<VarIndex, Polynomial>& image) const;

  std::optional<int> exact_degree(int level) const;
  VarIndex max_var_bound(int level) const;

  /// The restriction of level `level` to the first `keep` coordinates, as a
  /// product of rule levels <= keep and small explicit polynomials; nullopt
  /// when the restriction is an honest sum.
  std::optional<FactoredForm> restricted(int level, int keep) const;

  /// Graph criterion certificate derived from the recursion shape when
  /// possible (no expansion), otherwise from the expanded polynomial.
  Certificate graph_irreducible_at(int level) const;

  /// The linear "new variable" of the step at this level, when the step has
  /// shape A + c*x_v (used for point sampling on graph hypersurfaces).
  std::optional<PolyExpr::LinearPart> step_linear_variable(int level) const;

 private:
  void check_level(int level) const;

  std::string name_;
  std::map<int, Polynomial> base_;
  std::optional<PolyExpr> step_;
  int first_level_ = 1;
  int last_explicit_ = 0;

  mutable std::mutex mu_;
  mutable std::map<int, Polynomial> memo_;
};

}  // namespace indvar
