#include "indvar/rule.hpp"

#include <algorithm>
#include <stdexcept>

#include "indvar/errors.hpp"

namespace indvar {

// ---------------------------------------------------------------- IntExpr

IntExpr IntExpr::constant(long v) {
  IntExpr e;
  e.op_ = Op::Const;
  e.value_ = v;
  return e;
}

IntExpr IntExpr::symbol(std::string name) {
  IntExpr e;
  e.op_ = Op::Sym;
  e.sym_ = std::move(name);
  return e;
}

IntExpr IntExpr::add(IntExpr a, IntExpr b) {
  IntExpr e;
  e.op_ = Op::Add;
  e.kids_ = {std::move(a), std::move(b)};
  return e;
}

IntExpr IntExpr::sub(IntExpr a, IntExpr b) {
  IntExpr e;
  e.op_ = Op::Sub;
  e.kids_ = {std::move(a), std::move(b)};
  return e;
}

IntExpr IntExpr::mul(IntExpr a, IntExpr b) {
  IntExpr e;
  e.op_ = Op::Mul;
  e.kids_ = {std::move(a), std::move(b)};
  return e;
}

IntExpr IntExpr::neg(IntExpr a) {
  IntExpr e;
  e.op_ = Op::Neg;
  e.kids_ = {std::move(a)};
  return e;
}

long IntExpr::eval(const Env& env) const {
  switch (op_) {
    case Op::Const:
      return value_;
    case Op::Sym: {
      auto it = env.find(sym_);
      if (it == env.end())
        throw RuleError("unbound index symbol '" + sym_ + "'");
      return it->second;
    }
    case Op::Add:
      return kids_[0].eval(env) + kids_[1].eval(env);
    case Op::Sub:
      return kids_[0].eval(env) - kids_[1].eval(env);
    case Op::Mul:
      return kids_[0].eval(env) * kids_[1].eval(env);
    case Op::Neg:
      return -kids_[0].eval(env);
  }
  return 0;
}

std::string IntExpr::str() const {
  switch (op_) {
    case Op::Const:
      return std::to_string(value_);
    case Op::Sym:
      return sym_;
    case Op::Add:
      return "(" + kids_[0].str() + "+" + kids_[1].str() + ")";
    case Op::Sub:
      return "(" + kids_[0].str() + "-" + kids_[1].str() + ")";
    case Op::Mul:
      return "(" + kids_[0].str() + "*" + kids_[1].str() + ")";
    case Op::Neg:
      return "(-" + kids_[0].str() + ")";
  }
  return "?";
}

// --------------------------------------------------------------- FactorKey

FactorKey FactorKey::of_rule(const GeneratorRule* r, int level) {
  FactorKey k;
  k.rule = r;
  k.level = level;
  return k;
}

FactorKey FactorKey::of_poly(Polynomial p) {
  FactorKey k;
  k.poly = std::make_shared<const Polynomial>(std::move(p));
  return k;
}

bool FactorKey::same(const FactorKey& o) const {
  if (is_rule() != o.is_rule()) return false;
  if (is_rule()) return rule == o.rule && level == o.level;
  return *poly == *o.poly;
}

const Polynomial& FactorKey::expand() const {
  if (is_rule()) return rule->at(level);
  return *poly;
}

std::string FactorKey::label() const {
  if (is_rule()) return rule->name() + "[" + std::to_string(level) + "]";
  return poly->preview();
}

// ------------------------------------------------------------ FactoredForm

FactoredForm FactoredForm::zero() {
  FactoredForm f;
  f.scale = 0;
  return f;
}

FactoredForm FactoredForm::constant(const mpq_class& c) {
  FactoredForm f;
  f.scale = c;
  return f;
}

FactoredForm FactoredForm::of_poly(Polynomial p) {
  if (p.is_zero()) return zero();
  if (p.is_constant()) return constant(p.constant_coefficient().rational_value());
  FactoredForm f;
  f.factors.emplace_back(FactorKey::of_poly(std::move(p)), 1);
  return f;
}

FactoredForm FactoredForm::of_rule(const GeneratorRule* r, int level) {
  FactoredForm f;
  f.factors.emplace_back(FactorKey::of_rule(r, level), 1);
  return f;
}

FactoredForm FactoredForm::times(const FactoredForm& o) const {
  FactoredForm f;
  f.scale = scale * o.scale;
  if (f.scale == 0) return zero();
  f.factors = factors;
  f.factors.insert(f.factors.end(), o.factors.begin(), o.factors.end());
  f.normalize();
  return f;
}

FactoredForm FactoredForm::power(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a factored form");
  if (e == 0) return constant(1);
  FactoredForm f(*this);
  mpq_class s = 1;
  for (int i = 0; i < e; ++i) s *= scale;
  f.scale = s;
  if (f.scale == 0) return zero();
  for (auto& [k, m] : f.factors) m *= e;
  return f;
}

void FactoredForm::normalize() {
  if (scale == 0) {
    factors.clear();
    return;
  }
  std::vector<std::pair<FactorKey, int>> merged;
  for (auto& [k, e] : factors) {
    if (e == 0) continue;
    if (!k.is_rule() && k.poly->is_constant()) {
      mpq_class c = k.poly->constant_coefficient().rational_value();
      for (int i = 0; i < e; ++i) scale *= c;
      if (scale == 0) {
        factors.clear();
        return;
      }
      continue;
    }
    bool found = false;
    for (auto& [mk, me] : merged)
      if (mk.same(k)) {
        me += e;
        found = true;
        break;
      }
    if (!found) merged.emplace_back(k, e);
  }
  factors = std::move(merged);
}

Polynomial FactoredForm::expand() const {
  Polynomial p = Polynomial::constant(Coefficient::rational(scale));
  for (const auto& [k, e] : factors) p *= k.expand().pow(e);
  return p;
}

Coefficient FactoredForm::value_at(const std::vector<Coefficient>& point) const {
  Coefficient v = Coefficient::rational(scale);
  for (const auto& [k, e] : factors) {
    Coefficient f = k.is_rule() ? k.rule->value_at(k.level, point)
                                : k.poly->evaluate(point);
    for (int i = 0; i < e; ++i) v *= f;
    if (v.is_zero()) return v;
  }
  return v;
}

std::optional<int> FactoredForm::degree() const {
  if (scale == 0) return kDegreeOfZero;
  int d = 0;
  for (const auto& [k, e] : factors) {
    std::optional<int> fd;
    if (k.is_rule())
      fd = k.rule->exact_degree(k.level);
    else
      fd = k.poly->total_degree();
    if (!fd) return std::nullopt;
    d += e * *fd;
  }
  return d;
}

std::string FactoredForm::label() const {
  if (is_zero()) return "0";
  std::string s;
  if (scale != 1 || factors.empty()) s = scale.get_str();
  for (const auto& [k, e] : factors) {
    if (!s.empty()) s += "*";
    s += "(" + k.label() + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool factored_in_radical(const FactoredForm& candidate,
                         const std::vector<FactoredForm>& target_gens) {
  if (candidate.is_zero()) return true;
  for (const auto& g : target_gens) {
    if (g.is_zero()) continue;
    bool all_found = true;
    for (const auto& [gk, ge] : g.factors) {
      bool found = false;
      for (const auto& [ck, ce] : candidate.factors)
        if (ck.same(gk)) {
          found = true;
          break;
        }
      if (!found) {
        all_found = false;
        break;
      }
    }
    if (all_found) return true;
  }
  return false;
}

// ---------------------------------------------------------------- PolyExpr

PolyExpr PolyExpr::constant(mpq_class c) {
  PolyExpr e;
  e.op_ = Op::Const;
  c.canonicalize();
  e.const_ = std::move(c);
  return e;
}

PolyExpr PolyExpr::index_scalar(IntExpr ie) {
  PolyExpr e;
  e.op_ = Op::Scalar;
  e.index_ = std::move(ie);
  return e;
}

PolyExpr PolyExpr::var(IntExpr index) {
  PolyExpr e;
  e.op_ = Op::Var;
  e.index_ = std::move(index);
  return e;
}

PolyExpr PolyExpr::self(IntExpr level) {
  PolyExpr e;
  e.op_ = Op::Self;
  e.index_ = std::move(level);
  return e;
}

PolyExpr PolyExpr::rule(std::shared_ptr<const GeneratorRule> r, IntExpr level) {
  PolyExpr e;
  e.op_ = Op::Rule;
  e.rule_ = std::move(r);
  e.index_ = std::move(level);
  return e;
}

PolyExpr PolyExpr::add(PolyExpr a, PolyExpr b) {
  PolyExpr e;
  e.op_ = Op::Add;
  e.kids_ = {std::move(a), std::move(b)};
  return e;
}

PolyExpr PolyExpr::sub(PolyExpr a, PolyExpr b) {
  PolyExpr e;
  e.op_ = Op::Sub;
  e.kids_ = {std::move(a), std::move(b)};
  return e;
}

PolyExpr PolyExpr::mul(PolyExpr a, PolyExpr b) {
  PolyExpr e;
  e.op_ = Op::Mul;
  e.kids_ = {std::move(a), std::move(b)};
  return e;
}

PolyExpr PolyExpr::neg(PolyExpr a) {
  PolyExpr e;
  e.op_ = Op::Neg;
  e.kids_ = {std::move(a)};
  return e;
}

PolyExpr PolyExpr::pow(PolyExpr base, int p) {
  if (p < 0) throw std::invalid_argument("negative exponent in rule expression");
  PolyExpr e;
  e.op_ = Op::Pow;
  e.pow_ = p;
  e.kids_ = {std::move(base)};
  return e;
}

namespace {

VarIndex checked_var_index(long v) {
  if (v < 1 || v >= kFirstAuxVar)
    throw RuleError("variable index out of range: " + std::to_string(v));
  return static_cast<VarIndex>(v);
}

}  // namespace

Polynomial PolyExpr::expand(const Env& env, const GeneratorRule* self,
                            const std::map<VarIndex, Polynomial>* image) const {
  switch (op_) {
    case Op::Const:
      return Polynomial::constant(Coefficient::rational(const_));
    case Op::Scalar:
      return Polynomial::constant(Coefficient::rational(index_.eval(env)));
    case Op::Var: {
      VarIndex v = checked_var_index(index_.eval(env));
      if (!image) return Polynomial::variable(v);
      auto it = image->find(v);
      return it == image->end() ? Polynomial() : it->second;
    }
    case Op::Self: {
      if (!self) throw RuleError("self-reference outside a rule");
      long lvl = index_.eval(env);
      if (!image) return self->at(static_cast<int>(lvl));
      return self->composed(static_cast<int>(lvl), *image);
    }
    case Op::Rule: {
      long lvl = index_.eval(env);
      if (!image) return rule_->at(static_cast<int>(lvl));
      return rule_->composed(static_cast<int>(lvl), *image);
    }
    case Op::Add:
      return kids_[0].expand(env, self, image) + kids_[1].expand(env, self, image);
    case Op::Sub:
      return kids_[0].expand(env, self, image) - kids_[1].expand(env, self, image);
    case Op::Mul:
      return kids_[0].expand(env, self, image) * kids_[1].expand(env, self, image);
    case Op::Neg:
      return -kids_[0].expand(env, self, image);
    case Op::Pow:
      return kids_[0].expand(env, self, image).pow(pow_);
  }
  return {};
}

Coefficient PolyExpr::value(const Env& env, const GeneratorRule* self,
                            const std::vector<Coefficient>& point) const {
  switch (op_) {
    case Op::Const:
      return Coefficient::rational(const_);
    case Op::Scalar:
      return Coefficient::rational(index_.eval(env));
    case Op::Var: {
      VarIndex v = checked_var_index(index_.eval(env));
      if (v > static_cast<VarIndex>(point.size())) return Coefficient();
      return point[static_cast<std::size_t>(v - 1)];
    }
    case Op::Self:
      if (!self) throw RuleError("self-reference outside a rule");
      return self->value_at(static_cast<int>(index_.eval(env)), point);
    case Op::Rule:
      return rule_->value_at(static_cast<int>(index_.eval(env)), point);
    case Op::Add:
      return kids_[0].value(env, self, point) + kids_[1].value(env, self, point);
    case Op::Sub:
      return kids_[0].value(env, self, point) - kids_[1].value(env, self, point);
    case Op::Mul:
      return kids_[0].value(env, self, point) * kids_[1].value(env, self, point);
    case Op::Neg:
      return -kids_[0].value(env, self, point);
    case Op::Pow: {
      Coefficient b = kids_[0].value(env, self, point);
      Coefficient r = Coefficient::rational(1);
      for (int i = 0; i < pow_; ++i) r *= b;
      return r;
    }
  }
  return {};
}

std::optional<FactoredForm> PolyExpr::factored(const Env& env,
                                               const GeneratorRule* self) const {
  return factored_rec(env, self, 0, false);
}

std::optional<FactoredForm> PolyExpr::factored_restricted(const Env& env,
                                                          const GeneratorRule* self,
                                                          int keep) const {
  return factored_rec(env, self, keep, true);
}

bool PolyExpr::has_rule_ref() const {
  if (op_ == Op::Self || op_ == Op::Rule) return true;
  for (const auto& k : kids_)
    if (k.has_rule_ref()) return true;
  return false;
}

std::optional<FactoredForm> PolyExpr::factored_rec(const Env& env,
                                                   const GeneratorRule* self,
                                                   int keep, bool restricting) const {
  // Subtrees free of rule references are small: expand them outright.
  if (!has_rule_ref()) {
    Polynomial p = expand(env, self);
    if (restricting) p = p.restrict_to_level(keep);
    return FactoredForm::of_poly(std::move(p));
  }
  switch (op_) {
    case Op::Const:
      return FactoredForm::constant(const_);
    case Op::Scalar:
      return FactoredForm::constant(mpq_class(index_.eval(env)));
    case Op::Var: {
      VarIndex v = checked_var_index(index_.eval(env));
      if (restricting && v > keep) return FactoredForm::zero();
      return FactoredForm::of_poly(Polynomial::variable(v));
    }
    case Op::Self: {
      if (!self) throw RuleError("self-reference outside a rule");
      int lvl = static_cast<int>(index_.eval(env));
      if (!restricting) return FactoredForm::of_rule(self, lvl);
      return self->restricted(lvl, keep);
    }
    case Op::Rule: {
      int lvl = static_cast<int>(index_.eval(env));
      if (!restricting) return FactoredForm::of_rule(rule_.get(), lvl);
      return rule_->restricted(lvl, keep);
    }
    case Op::Neg: {
      auto f = kids_[0].factored_rec(env, self, keep, restricting);
      if (!f) return std::nullopt;
      return f->times(FactoredForm::constant(-1));
    }
    case Op::Pow: {
      auto f = kids_[0].factored_rec(env, self, keep, restricting);
      if (!f) return std::nullopt;
      return f->power(pow_);
    }
    case Op::Mul: {
      auto a = kids_[0].factored_rec(env, self, keep, restricting);
      if (!a) return std::nullopt;
      if (a->is_zero()) return a;
      auto b = kids_[1].factored_rec(env, self, keep, restricting);
      if (!b) return std::nullopt;
      return a->times(*b);
    }
    case Op::Add:
    case Op::Sub: {
      auto a = kids_[0].factored_rec(env, self, keep, restricting);
      auto b = kids_[1].factored_rec(env, self, keep, restricting);
      if (!a || !b) return std::nullopt;
      if (op_ == Op::Sub && b) *b = b->times(FactoredForm::constant(-1));
      if (a->is_zero()) return b;
      if (b->is_zero()) return a;
      if (a->is_constant() && b->is_constant())
        return FactoredForm::constant(a->scale + b->scale);
      return std::nullopt;  // an honest sum: not a product
    }
  }
  return std::nullopt;
}

VarIndex PolyExpr::max_var_bound(const Env& env, const GeneratorRule* self) const {
  switch (op_) {
    case Op::Const:
    case Op::Scalar:
      return 0;
    case Op::Var:
      return checked_var_index(index_.eval(env));
    case Op::Self:
      if (!self) throw RuleError("self-reference outside a rule");
      return self->max_var_bound(static_cast<int>(index_.eval(env)));
    case Op::Rule:
      return rule_->max_var_bound(static_cast<int>(index_.eval(env)));
    case Op::Neg:
    case Op::Pow:
      return kids_[0].max_var_bound(env, self);
    default: {
      VarIndex a = kids_[0].max_var_bound(env, self);
      VarIndex b = kids_[1].max_var_bound(env, self);
      return std::max(a, b);
    }
  }
}

std::optional<int> PolyExpr::exact_degree(const Env& env,
                                          const GeneratorRule* self) const {
  switch (op_) {
    case Op::Const:
      return const_ == 0 ? kDegreeOfZero : 0;
    case Op::Scalar:
      return index_.eval(env) == 0 ? kDegreeOfZero : 0;
    case Op::Var:
      return 1;
    case Op::Self:
      if (!self) throw RuleError("self-reference outside a rule");
      return self->exact_degree(static_cast<int>(index_.eval(env)));
    case Op::Rule:
      return rule_->exact_degree(static_cast<int>(index_.eval(env)));
    case Op::Neg:
      return kids_[0].exact_degree(env, self);
    case Op::Pow: {
      auto d = kids_[0].exact_degree(env, self);
      if (!d) return std::nullopt;
      if (*d == kDegreeOfZero) return pow_ == 0 ? 0 : kDegreeOfZero;
      return pow_ * *d;
    }
    case Op::Mul: {
      auto a = kids_[0].exact_degree(env, self);
      auto b = kids_[1].exact_degree(env, self);
      if (!a || !b) return std::nullopt;
      if (*a == kDegreeOfZero || *b == kDegreeOfZero) return kDegreeOfZero;
      return *a + *b;
    }
    case Op::Add:
    case Op::Sub: {
      auto a = kids_[0].exact_degree(env, self);
      auto b = kids_[1].exact_degree(env, self);
      if (!a || !b) return std::nullopt;
      if (*a == kDegreeOfZero) return b;
      if (*b == kDegreeOfZero) return a;
      if (*a != *b) return std::max(*a, *b);
      return std::nullopt;  // equal degrees may cancel
    }
  }
  return std::nullopt;
}

void PolyExpr::flatten_sum(std::vector<std::pair<PolyExpr, int>>& terms, int sign) const {
  switch (op_) {
    case Op::Add:
      kids_[0].flatten_sum(terms, sign);
      kids_[1].flatten_sum(terms, sign);
      return;
    case Op::Sub:
      kids_[0].flatten_sum(terms, sign);
      kids_[1].flatten_sum(terms, -sign);
      return;
    case Op::Neg:
      kids_[0].flatten_sum(terms, -sign);
      return;
    default:
      terms.emplace_back(*this, sign);
  }
}

std::optional<PolyExpr::LinearPart> PolyExpr::linear_new_variable(
    const Env& env, const GeneratorRule* self) const {
  std::vector<std::pair<PolyExpr, int>> terms;
  flatten_sum(terms, 1);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [t, sign] = terms[i];
    // Term shapes: x[e], const * x[e].
    mpq_class coeff = sign;
    const PolyExpr* core = &t;
    if (core->op_ == Op::Mul) {
      if (core->kids_[0].op_ == Op::Const) {
        coeff *= core->kids_[0].const_;
        core = &core->kids_[1];
      } else if (core->kids_[1].op_ == Op::Const) {
        coeff *= core->kids_[1].const_;
        core = &core->kids_[0];
      }
    }
    if (core->op_ != Op::Var || coeff == 0) continue;
    VarIndex v = checked_var_index(core->index_.eval(env));
    // Every other term must be provably free of x_v.
    bool clean = true;
    for (std::size_t j = 0; j < terms.size() && clean; ++j) {
      if (j == i) continue;
      if (terms[j].first.max_var_bound(env, self) >= v) clean = false;
    }
    if (clean) return LinearPart{v, coeff};
  }
  return std::nullopt;
}

std::string PolyExpr::str() const {
  switch (op_) {
    case Op::Const:
      return const_.get_str();
    case Op::Scalar:
      return index_.str();
    case Op::Var:
      return "x[" + index_.str() + "]";
    case Op::Self:
      return "self[" + index_.str() + "]";
    case Op::Rule:
      return rule_->name() + "[" + index_.str() + "]";
    case Op::Add:
      return "(" + kids_[0].str() + " + " + kids_[1].str() + ")";
    case Op::Sub:
      return "(" + kids_[0].str() + " - " + kids_[1].str() + ")";
    case Op::Mul:
      return "(" + kids_[0].str() + " * " + kids_[1].str() + ")";
    case Op::Neg:
      return "(-" + kids_[0].str() + ")";
    case Op::Pow:
      return kids_[0].str() + "^" + std::to_string(pow_);
  }
  return "?";
}

// ----------------------------------------------------------- GeneratorRule

GeneratorRule::GeneratorRule(std::string name, std::map<int, Polynomial> base_levels,
                             std::optional<PolyExpr> step)
    : name_(std::move(name)), base_(std::move(base_levels)), step_(std::move(step)) {
  if (base_.empty()) throw RuleError("rule '" + name_ + "' has no base level");
  first_level_ = base_.begin()->first;
  last_explicit_ = base_.rbegin()->first;
  if (first_level_ < 1) throw RuleError("levels are indexed from 1");
}

std::shared_ptr<GeneratorRule> GeneratorRule::make(std::string name,
                                                   std::map<int, Polynomial> base_levels,
                                                   std::optional<PolyExpr> step) {
  return std::make_shared<GeneratorRule>(std::move(name), std::move(base_levels),
                                         std::move(step));
}

void GeneratorRule::check_level(int level) const {
  if (level < first_level_)
    throw RuleError("rule '" + name_ + "' undefined below level " +
                    std::to_string(first_level_));
  if (!step_ && level > last_explicit_)
    throw RuleError("rule '" + name_ + "' has no step and no level " +
                    std::to_string(level));
}

const Polynomial& GeneratorRule::at(int level) const {
  check_level(level);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = base_.find(level);
    if (it != base_.end()) return it->second;
    auto mt = memo_.find(level);
    if (mt != memo_.end()) return mt->second;
  }
  PolyExpr::Env env{{"k", level - 1}};
  Polynomial value = step_->expand(env, this);
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(level, std::move(value)).first->second;
}

Coefficient GeneratorRule::value_at(int level,
                                    const std::vector<Coefficient>& point) const {
  check_level(level);
  auto it = base_.find(level);
  if (it != base_.end()) return it->second.evaluate(point);
  PolyExpr::Env env{{"k", level - 1}};
  return step_->value(env, this, point);
}

Polynomial GeneratorRule::composed(int level,
                                   const std::map<VarIndex, Polynomial>& image) const {
  check_level(level);
  auto it = base_.find(level);
  if (it != base_.end()) return it->second.substitute(image);
  PolyExpr::Env env{{"k", level - 1}};
  return step_->expand(env, this, &image);
}

std::optional<int> GeneratorRule::exact_degree(int level) const {
  check_level(level);
  auto it = base_.find(level);
  if (it != base_.end()) return it->second.total_degree();
  PolyExpr::Env env{{"k", level - 1}};
  return step_->exact_degree(env, this);
}

VarIndex GeneratorRule::max_var_bound(int level) const {
  check_level(level);
  auto it = base_.find(level);
  if (it != base_.end()) return it->second.max_var();
  PolyExpr::Env env{{"k", level - 1}};
  return step_->max_var_bound(env, this);
}

std::optional<FactoredForm> GeneratorRule::restricted(int level, int keep) const {
  check_level(level);
  if (level <= last_explicit_ || !step_) {
    const Polynomial& p = at(level);
    if (p.max_var() <= keep) return FactoredForm::of_rule(this, level);
    return FactoredForm::of_poly(p.restrict_to_level(keep));
  }
  if (max_var_bound(level) <= keep) return FactoredForm::of_rule(this, level);
  PolyExpr::Env env{{"k", level - 1}};
  return step_->factored_restricted(env, this, keep);
}

Certificate GeneratorRule::graph_irreducible_at(int level) const {
  check_level(level);
  if (step_ && level > last_explicit_) {
    PolyExpr::Env env{{"k", level - 1}};
    auto lin = step_->linear_new_variable(env, this);
    if (lin) {
      Certificate c = Certificate::make(Verdict::CertifiedTrue, 0);
      c.note("variable " + var_name(lin->var) +
             " occurs linearly with constant coefficient " + lin->coeff.get_str() +
             " in the level rule; the quotient is a polynomial ring, so (" +
             name_ + "[" + std::to_string(level) + "]) is prime");
      return c;
    }
  }
  return graph_irreducible(at(level));
}

std::optional<PolyExpr::LinearPart> GeneratorRule::step_linear_variable(int level) const {
  check_level(level);
  if (step_ && level > last_explicit_) {
    PolyExpr::Env env{{"k", level - 1}};
    return step_->linear_new_variable(env, this);
  }
  return std::nullopt;
}

}  // namespace indvar
